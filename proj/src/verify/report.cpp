#include "irrat/verify/report.hpp"

#include <algorithm>
#include <sstream>

namespace irrat {

using json = nlohmann::ordered_json;

std::string to_string(RowKind kind) {
  switch (kind) {
    case RowKind::Pair: return "pair";
    case RowKind::PowerForm: return "power-form";
    case RowKind::Trig: return "trig";
  }
  return "pair";
}

RowKind parse_row_kind(const std::string& text) {
  if (text == "pair") return RowKind::Pair;
  if (text == "power-form") return RowKind::PowerForm;
  if (text == "trig") return RowKind::Trig;
  throw Error(ErrorKind::ParseError, "unknown row kind '" + text + "'");
}

json to_json(const Certificate& cert) {
  json rows = json::array();
  for (const auto& r : cert.rows) {
    json row;
    row["n"] = r.n;
    switch (cert.kind) {
      case RowKind::Pair:
        row["p"] = r.p.get_str();
        row["q"] = r.q.get_str();
        break;
      case RowKind::PowerForm: {
        json coeffs = json::array();
        for (const auto& d : r.coeffs) coeffs.push_back(d.get_str());
        row["coeffs"] = std::move(coeffs);
        break;
      }
      case RowKind::Trig:
        row["a"] = r.trig.a.get_str();
        row["b"] = r.trig.b.get_str();
        row["c"] = r.trig.c.get_str();
        row["d"] = r.trig.d.get_str();
        break;
    }
    row["residual_lo"] = to_fraction_string(r.residual.lo());
    row["residual_hi"] = to_fraction_string(r.residual.hi());
    row["bound"] = to_fraction_string(r.bound);
    row["nonzero_ok"] = r.nonzero_ok;
    row["bound_ok"] = r.bound_ok;
    rows.push_back(std::move(row));
  }
  json out;
  out["constant"] = cert.constant;
  out["family"] = cert.family;
  out["row_kind"] = to_string(cert.kind);
  out["rows"] = std::move(rows);
  out["verdict"] = cert.verdict.to_string();
  out["metadata"] = cert.metadata;
  return out;
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate cert;
    cert.constant = j.at("constant").get<std::string>();
    cert.family = j.at("family").get<std::string>();
    cert.kind = parse_row_kind(j.value("row_kind", std::string("pair")));
    for (const auto& row : j.at("rows")) {
      CertificateRow r;
      r.n = row.at("n").get<unsigned long>();
      switch (cert.kind) {
        case RowKind::Pair:
          r.p = parse_integer(row.at("p").get<std::string>());
          r.q = parse_integer(row.at("q").get<std::string>());
          break;
        case RowKind::PowerForm:
          for (const auto& d : row.at("coeffs")) r.coeffs.push_back(parse_integer(d.get<std::string>()));
          break;
        case RowKind::Trig:
          r.trig = {parse_integer(row.at("a").get<std::string>()), parse_integer(row.at("b").get<std::string>()),
                    parse_integer(row.at("c").get<std::string>()), parse_integer(row.at("d").get<std::string>())};
          break;
      }
      r.residual = Enclosure(parse_rational(row.at("residual_lo").get<std::string>()),
                             parse_rational(row.at("residual_hi").get<std::string>()));
      r.bound = parse_rational(row.at("bound").get<std::string>());
      r.nonzero_ok = row.at("nonzero_ok").get<bool>();
      r.bound_ok = row.at("bound_ok").get<bool>();
      cert.rows.push_back(std::move(r));
    }
    cert.verdict = Verdict::parse(j.at("verdict").get<std::string>());
    if (j.contains("metadata")) {
      cert.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate JSON: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<Integer>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].get_str();
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv(const Certificate& cert) {
  std::ostringstream out;
  switch (cert.kind) {
    case RowKind::Pair: out << "n,p,q"; break;
    case RowKind::PowerForm: out << "n,coeffs"; break;
    case RowKind::Trig: out << "n,a,b,c,d"; break;
  }
  out << ",residual_lo,residual_hi,bound,nonzero_ok,bound_ok\n";
  for (const auto& r : cert.rows) {
    out << r.n << ',';
    switch (cert.kind) {
      case RowKind::Pair: out << r.p.get_str() << ',' << r.q.get_str(); break;
      case RowKind::PowerForm: out << join(r.coeffs, ';'); break;
      case RowKind::Trig:
        out << r.trig.a.get_str() << ',' << r.trig.b.get_str() << ',' << r.trig.c.get_str() << ','
            << r.trig.d.get_str();
        break;
    }
    out << ',' << to_fraction_string(r.residual.lo()) << ',' << to_fraction_string(r.residual.hi()) << ','
        << to_fraction_string(r.bound) << ',' << flag(r.nonzero_ok) << ',' << flag(r.bound_ok) << '\n';
  }
  return out.str();
}

std::string to_table(const Certificate& cert) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n"};
  switch (cert.kind) {
    case RowKind::Pair: header.insert(header.end(), {"p", "q"}); break;
    case RowKind::PowerForm: header.push_back("coeffs"); break;
    case RowKind::Trig: header.insert(header.end(), {"a", "c", "d"}); break;
  }
  header.insert(header.end(), {"residual ~", "bound ~", "nonzero", "bound ok"});
  cells.push_back(header);
  for (const auto& r : cert.rows) {
    std::vector<std::string> line{std::to_string(r.n)};
    switch (cert.kind) {
      case RowKind::Pair: line.insert(line.end(), {r.p.get_str(), r.q.get_str()}); break;
      case RowKind::PowerForm: line.push_back("(" + join(r.coeffs, ',') + ")"); break;
      case RowKind::Trig: line.insert(line.end(), {r.trig.a.get_str(), r.trig.c.get_str(), r.trig.d.get_str()}); break;
    }
    line.push_back(to_decimal(r.residual.midpoint(), 12));
    line.push_back(to_decimal(r.bound, 12));
    line.push_back(r.nonzero_ok ? "yes" : "NO");
    line.push_back(r.bound_ok ? "yes" : "NO");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  }
  std::ostringstream out;
  out << "constant: " << cert.constant << "\nfamily:   " << cert.family << "\n\n";
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out << "  ";
      out << std::string(widths[i] - line[i].size(), ' ') << line[i];
    }
    out << '\n';
  }
  out << "\nverdict: " << cert.verdict.to_string() << '\n';
  return out.str();
}

}  // namespace irrat
