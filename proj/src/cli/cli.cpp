#include "irrat/cli/cli.hpp"

#include "irrat/algebraic/algebraic.hpp"
#include "irrat/dirichlet/dirichlet.hpp"
#include "irrat/verify/report.hpp"
#include "irrat/verify/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace irrat::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFooter =
    "Consequences with no sequence to build (documented only):\n"
    "  * if r > 0 is rational and r != 1 then ln(r) is irrational (e^(p/q) is irrational);\n"
    "  * pi is irrational: sin(pi) = 0 and cos(pi) = -1 are both rational, which the\n"
    "    trig-angle certificate forbids for a rational angle in (0, pi];\n"
    "  * arcsin(1/sqrt(26)) is irrational: sin and cos of twice it are 5/13 and 12/13.\n"
    "Environment: IRRATCERT_MAX_REFINE overrides the refinement budget (default 1000000).";

struct RunConfig {
  std::string format = "table";
  std::string output;
};

// Writes to --output when given, otherwise to the report stream.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open --output file '" + cfg.output + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::pair<Rational, Rational> parse_bracket(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "--bracket needs 'lo,hi'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

struct CertArgs {
  std::string family;
  std::string m, a, k, r, x, poly, bracket, width;
  unsigned long n_max = 10;
  bool seed_doc = false;
  bool serial = false;
};

Family build_family(const CertArgs& args) {
  auto kind = parse_family_kind(args.family);
  if (!kind) throw Error(ErrorKind::InvalidArgument, "--family: unknown family '" + args.family + "'");
  auto need = [&](const std::string& value, const char* flag) -> const std::string& {
    if (value.empty()) {
      throw Error(ErrorKind::InvalidArgument, std::string("--family ") + args.family + " requires " + flag);
    }
    return value;
  };
  switch (*kind) {
    case FamilyKind::Sqrt: return Family::sqrt(parse_integer(need(args.m, "--m")));
    case FamilyKind::Root:
      return Family::root(parse_integer(need(args.a, "--a")), parse_integer(need(args.m, "--m")));
    case FamilyKind::E: return Family::e();
    case FamilyKind::InvE: return Family::inv_e();
    case FamilyKind::ESquared: return Family::e_squared();
    case FamilyKind::ESquaredNaive: return Family::e_squared_naive();
    case FamilyKind::EPow: return Family::e_pow(parse_integer(need(args.k, "--k")));
    case FamilyKind::ERat: return Family::e_rat(parse_rational(need(args.r, "--r")));
    case FamilyKind::SinInv: return Family::sin_inv(parse_integer(need(args.m, "--m")));
    case FamilyKind::CosInv: return Family::cos_inv(parse_integer(need(args.m, "--m")));
    case FamilyKind::TrigAngle: return Family::trig_angle(parse_rational(need(args.x, "--x")));
    case FamilyKind::AlgRoot: {
      auto [lo, hi] = parse_bracket(need(args.bracket, "--bracket"));
      return Family::alg_root(parse_int_polynomial(need(args.poly, "--poly")), lo, hi);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

int run_cert(const CertArgs& args, const RunConfig& cfg, std::ostream& out) {
  if (args.seed_doc) {
    std::ostringstream doc;
    for (const auto& id : family_ids()) {
      if (!args.family.empty() && id != args.family) continue;
      Family f;
      f.kind = *parse_family_kind(id);
      doc << id << ": " << f.theorem() << "\n";
    }
    if (doc.str().empty()) throw Error(ErrorKind::InvalidArgument, "--family: unknown family '" + args.family + "'");
    emit(cfg, out, doc.str());
    return kOk;
  }
  if (args.family.empty()) throw Error(ErrorKind::InvalidArgument, "--family is required");
  Family family = build_family(args);
  CertifyOptions options;
  if (!args.width.empty()) {
    Rational w = parse_rational(args.width);
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "--width must be positive");
    options.width = w;
  }
  options.parallel = !args.serial;
  Certificate cert = certify(family, args.n_max, options);
  if (cfg.format == "json") {
    emit(cfg, out, dump(to_json(cert)));
  } else if (cfg.format == "csv") {
    emit(cfg, out, to_csv(cert));
  } else {
    emit(cfg, out, to_table(cert));
  }
  return cert.verdict.nice ? kOk : kViolated;
}

int run_pigeonhole(const std::string& constant, const std::vector<std::string>& ns, const RunConfig& cfg,
                   std::ostream& out) {
  ConstantSpec c = ConstantSpec::parse(constant);
  json rows = json::array();
  std::ostringstream table;
  table << "constant: " << c.to_string() << "\n";
  for (const auto& text : ns) {
    Integer n = parse_integer(text);
    PigeonholeResult res = pigeonhole_approximant(c, n);
    rows.push_back({{"n", res.n.get_str()},
                    {"p", res.p.get_str()},
                    {"q", res.q.get_str()},
                    {"bin", res.bin.get_str()},
                    {"k_small", res.k_small.get_str()},
                    {"k_large", res.k_large.get_str()},
                    {"residual_lo", to_fraction_string(res.residual.lo())},
                    {"residual_hi", to_fraction_string(res.residual.hi())},
                    {"limit", to_fraction_string(make_rational(1, res.n))}});
    table << "n=" << res.n << "  p=" << res.p << "  q=" << res.q << "  |q*alpha - p| ~ "
          << to_decimal(abs(res.residual.midpoint()), 12) << " < 1/" << res.n << "  (bin " << res.bin
          << ": k=" << res.k_small << "," << res.k_large << ")\n";
  }
  if (cfg.format == "json") {
    emit(cfg, out, dump({{"constant", c.to_string()}, {"rows", rows}}));
  } else if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "n,p,q,bin,k_small,k_large,residual_lo,residual_hi,limit\n";
    for (const auto& r : rows) {
      csv << r["n"].get<std::string>() << ',' << r["p"].get<std::string>() << ',' << r["q"].get<std::string>()
          << ',' << r["bin"].get<std::string>() << ',' << r["k_small"].get<std::string>() << ','
          << r["k_large"].get<std::string>() << ',' << r["residual_lo"].get<std::string>() << ','
          << r["residual_hi"].get<std::string>() << ',' << r["limit"].get<std::string>() << '\n';
    }
    emit(cfg, out, csv.str());
  } else {
    emit(cfg, out, table.str());
  }
  return kOk;
}

int run_reduce(const std::string& modulus_text, const std::string& coeffs_text, const std::string& z_text,
               unsigned long n, const RunConfig& cfg, std::ostream& out) {
  IntPolynomial modulus = parse_int_polynomial(modulus_text);
  PowerForm form;
  json j{{"modulus", to_coeff_string(modulus)}};
  if (!coeffs_text.empty()) {
    if (!z_text.empty()) throw Error(ErrorKind::InvalidArgument, "--coeffs and --z are mutually exclusive");
    auto c = parse_integer_list(coeffs_text);
    form = reduce_power_form(modulus, c);
    j["input"] = coeffs_text;
  } else if (!z_text.empty()) {
    if (n < 1) throw Error(ErrorKind::BadIndex, "--n must be >= 1");
    form = monic_certificate(modulus, parse_integer(z_text), n);
    j["input"] = "(x - " + z_text + ")^" + std::to_string(n);
  } else {
    throw Error(ErrorKind::InvalidArgument, "reduce needs --coeffs or --z with --n");
  }
  json coeffs = json::array();
  std::string plain;
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    coeffs.push_back(form.coeffs[i].get_str());
    plain += (i ? "," : "") + form.coeffs[i].get_str();
  }
  j["coeffs"] = coeffs;
  if (cfg.format == "json") {
    emit(cfg, out, dump(j));
  } else if (cfg.format == "csv") {
    emit(cfg, out, "k,d_k\n" + [&] {
      std::string s;
      for (std::size_t i = 0; i < form.coeffs.size(); ++i) s += std::to_string(i) + "," + form.coeffs[i].get_str() + "\n";
      return s;
    }());
  } else {
    emit(cfg, out, "d = (" + plain + ")\n");
  }
  return kOk;
}

int run_classify(const std::string& poly_text, const RunConfig& cfg, std::ostream& out) {
  IntPolynomial f = parse_int_polynomial(poly_text);
  auto verdicts = classify_roots(f);
  IntPolynomial g = monic_transform(f);
  json roots = json::array();
  std::ostringstream text;
  for (const auto& v : verdicts) {
    std::string bracket = v.bracket.lo == v.bracket.hi
                              ? "[" + to_string(v.bracket.lo) + "]"
                              : "(" + to_string(v.bracket.lo) + ", " + to_string(v.bracket.hi) + ")";
    std::string verdict = v.irrational() ? "irrational" : "rational " + to_string(*v.rational_value);
    text << "bracket " << bracket << ": " << verdict << "\n";
    json r{{"lo", to_fraction_string(v.bracket.lo)},
           {"hi", to_fraction_string(v.bracket.hi)},
           {"verdict", v.irrational() ? "irrational" : "rational"}};
    if (v.rational_value) r["value"] = to_fraction_string(*v.rational_value);
    roots.push_back(std::move(r));
  }
  if (cfg.format == "json") {
    emit(cfg, out, dump({{"poly", to_coeff_string(f)}, {"monic_transform", to_coeff_string(g)}, {"roots", roots}}));
  } else if (cfg.format == "csv") {
    std::string csv = "lo,hi,verdict,value\n";
    for (const auto& r : roots) {
      csv += r["lo"].get<std::string>() + "," + r["hi"].get<std::string>() + "," + r["verdict"].get<std::string>() +
             "," + (r.contains("value") ? r["value"].get<std::string>() : "") + "\n";
    }
    emit(cfg, out, csv);
  } else {
    emit(cfg, out, text.str());
  }
  return kOk;
}

int run_fracpart(const std::string& constant, const std::string& q_text, const std::string& width_text,
                 const RunConfig& cfg, std::ostream& out) {
  ConstantSpec c = ConstantSpec::parse(constant);
  Integer q = parse_integer(q_text);
  Rational width = width_text.empty() ? Rational(1, 1000000000000) : parse_rational(width_text);
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "--width must be positive");
  Enclosure e = fractional_residual(q, c, width);
  if (cfg.format == "json") {
    emit(cfg, out,
         dump({{"constant", c.to_string()}, {"q", q.get_str()}, {"lo", to_fraction_string(e.lo())},
               {"hi", to_fraction_string(e.hi())}}));
  } else if (cfg.format == "csv") {
    emit(cfg, out, "constant,q,lo,hi\n" + c.to_string() + "," + q.get_str() + "," + to_fraction_string(e.lo()) +
                       "," + to_fraction_string(e.hi()) + "\n");
  } else {
    emit(cfg, out, "{q*alpha}({q*alpha} - 1) in [" + to_decimal(e.lo(), 15) + ", " + to_decimal(e.hi(), 15) +
                       "]\n");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"irratcert: exact irrationality certificates via nice rational approximations", "irratcert"};
  app.footer(kFooter);
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--output,-o", cfg.output, "Write the report to this file");
  };

  CertArgs cert_args;
  auto* cert = app.add_subcommand("cert", "Certify an approximant family row by row");
  cert->add_option("--family", cert_args.family, "Family id: " + [] {
    std::string ids;
    for (const auto& id : family_ids()) ids += (ids.empty() ? "" : ", ") + id;
    return ids;
  }());
  cert->add_option("--m", cert_args.m, "sqrt radicand / root index / sin-inv, cos-inv denominator");
  cert->add_option("--a", cert_args.a, "root radicand");
  cert->add_option("--k", cert_args.k, "e-pow exponent");
  cert->add_option("--r", cert_args.r, "e-rat exponent p/q");
  cert->add_option("--x", cert_args.x, "trig-angle p/q in (0, pi]");
  cert->add_option("--poly", cert_args.poly, "algroot monic polynomial, ascending coefficients");
  cert->add_option("--bracket", cert_args.bracket, "algroot bracket lo,hi");
  cert->add_option("--n-max", cert_args.n_max, "Rows 1..n-max")->check(CLI::PositiveNumber);
  cert->add_option("--width", cert_args.width, "Residual enclosure width (default bound/1000)");
  cert->add_flag("--seed-doc", cert_args.seed_doc, "Print the result backing each family and exit");
  cert->add_flag("--serial", cert_args.serial, "Evaluate rows on one thread");
  add_common(cert);

  std::string ph_constant;
  std::vector<std::string> ph_n;
  auto* pigeon = app.add_subcommand("pigeonhole", "Pigeonhole approximation |q alpha - p| < 1/n with q <= n");
  pigeon->add_option("--constant", ph_constant, "Constant, e.g. sqrt:2, e, sin:1/2")->required();
  pigeon->add_option("--n", ph_n, "One or more n >= 1")->required();
  add_common(pigeon);

  std::string red_modulus, red_coeffs, red_z;
  unsigned long red_n = 0;
  auto* reduce = app.add_subcommand("reduce", "Reduce an integer power combination modulo a monic polynomial");
  reduce->add_option("--modulus", red_modulus, "Monic modulus, ascending coefficients")->required();
  reduce->add_option("--coeffs", red_coeffs, "c_0,...,c_n of sum c_k alpha^k");
  reduce->add_option("--z", red_z, "Reduce (alpha - z)^n instead");
  reduce->add_option("--n", red_n, "Exponent for --z");
  add_common(reduce);

  std::string cls_poly;
  auto* classify = app.add_subcommand("classify", "Isolate real roots and decide their rationality");
  classify->add_option("--poly", cls_poly, "Squarefree polynomial, ascending coefficients")->required();
  add_common(classify);

  std::string fp_constant, fp_q, fp_width;
  auto* fracpart = app.add_subcommand("fracpart", "Enclose {q alpha}({q alpha} - 1)");
  fracpart->add_option("--constant", fp_constant, "Constant spec")->required();
  fracpart->add_option("--q", fp_q, "Non-zero integer multiplier")->required();
  fracpart->add_option("--width", fp_width, "Enclosure width (default 1/10^12)");
  add_common(fracpart);

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "unknown subcommand '" << args[0] << "'\nRun with --help for more information.\n";
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cert->parsed()) return run_cert(cert_args, cfg, out);
    if (pigeon->parsed()) return run_pigeonhole(ph_constant, ph_n, cfg, out);
    if (reduce->parsed()) return run_reduce(red_modulus, red_coeffs, red_z, red_n, cfg, out);
    if (classify->parsed()) return run_classify(cls_poly, cfg, out);
    if (fracpart->parsed()) return run_fracpart(fp_constant, fp_q, fp_width, cfg, out);
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace irrat::cli
