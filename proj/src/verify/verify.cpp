#include "irrat/verify/verify.hpp"

#include "irrat/niven/niven.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

namespace irrat {

namespace {

std::optional<long> degree_context(const ConstantSpec& c) {
  using namespace constant;
  const auto& v = c.value();
  if (std::holds_alternative<Sqrt>(v)) return 2;
  if (auto* r = std::get_if<Root>(&v)) return static_cast<long>(r->m.get_ui());
  if (auto* g = std::get_if<AlgebraicRoot>(&v)) return g->poly.degree();
  return std::nullopt;
}

// Rows still undecided after this many halvings are reported as failing.
constexpr unsigned long kMaxRowRefinements = 4096;

struct RowPlan {
  CertificateRow row;
  std::function<Enclosure(const Rational&)> evaluate;
};

void decide(RowPlan& plan, const Rational& start_width) {
  CertificateRow& row = plan.row;
  const unsigned long limit = std::min(refinement_budget(), kMaxRowRefinements);
  Rational width = start_width;
  for (unsigned long step = 0;; ++step) {
    Enclosure e = plan.evaluate(width);
    bool zero_decided = e.excludes_zero() || e.is_point();
    bool bound_decided = e.max_abs() < row.bound || e.min_abs() >= row.bound;
    if ((zero_decided && bound_decided) || step + 1 >= limit) {
      row.residual = e;
      row.nonzero_ok = e.excludes_zero();
      row.bound_ok = e.max_abs() < row.bound;
      return;
    }
    width /= 2;
  }
}

Rational root_power_bound(const ConstantSpec& c, const Integer& z, unsigned long e) {
  Enclosure alpha = refine_until(
      Rational(1, 16), [&](const Rational& w) { return enclose(c, w); },
      [&](const Enclosure& enc) {
        if (enc.is_point()) return true;
        Rational gap = enc.lo() - z;
        return gap > 0 && enc.width() * 4 * Rational(e) <= gap;
      });
  Rational top = alpha.hi() - z;
  return pow(top, e);
}

std::string max_abs_coeff(const std::vector<CertificateRow>& rows) {
  Integer best = 0;
  for (const auto& r : rows) {
    for (const auto& d : r.coeffs) best = std::max(best, abs(d));
  }
  return best.get_str();
}

}  // namespace

Enclosure residual(const Approximant& a, const ConstantSpec& c, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "residual width must be positive");
  if (a.q == 0) return Enclosure(Rational(-a.p));
  const Rational q(a.q);
  return q * enclose(c, width / abs(q)) - Rational(a.p);
}

Enclosure power_form_residual(const PowerForm& d, const ConstantSpec& c, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "residual width must be positive");
  if (auto deg = degree_context(c); deg && static_cast<long>(d.coeffs.size()) != *deg) {
    throw Error(ErrorKind::InvalidArgument, "power form has " + std::to_string(d.coeffs.size()) +
                                                " coefficients, constant " + c.to_string() + " needs " +
                                                std::to_string(*deg));
  }
  const IntPolynomial form(d.coeffs);
  if (form.is_zero()) return Enclosure(Rational(0));
  // Lipschitz-style estimate for the first attempt: sum |d_l| l M^(l-1).
  const Rational reach = enclose(c, 1).max_abs() + 1;
  Rational slope = 1;
  for (std::size_t l = 1; l < d.coeffs.size(); ++l) {
    slope += abs(Rational(d.coeffs[l])) * Rational(static_cast<unsigned long>(l)) * pow(reach, l - 1);
  }
  return refine_until(
      width / slope, [&](const Rational& w) { return form.evaluate(enclose(c, w)); },
      [&](const Enclosure& e) { return e.width() <= width; });
}

Enclosure trig_residual(const TrigTerms& t, const Rational& x, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "residual width must be positive");
  const Rational w = width / (abs(Rational(t.c)) + abs(Rational(t.d)) + 1);
  return Rational(t.c) * enclose_cos(x, w) - Rational(t.d) * enclose_sin(x, w) - Rational(t.a);
}

Family Family::sqrt(const Integer& m) {
  ConstantSpec::sqrt(m);
  Family f;
  f.kind = FamilyKind::Sqrt;
  f.m = m;
  return f;
}

Family Family::root(const Integer& a, const Integer& m) {
  ConstantSpec::root(a, m);
  Family f;
  f.kind = FamilyKind::Root;
  f.a = a;
  f.m = m;
  return f;
}

Family Family::e() { return Family{}; }

Family Family::inv_e() {
  Family f;
  f.kind = FamilyKind::InvE;
  return f;
}

Family Family::e_squared() {
  Family f;
  f.kind = FamilyKind::ESquared;
  return f;
}

Family Family::e_squared_naive() {
  Family f;
  f.kind = FamilyKind::ESquaredNaive;
  return f;
}

Family Family::e_pow(const Integer& k) {
  ConstantSpec::e_pow(k);
  Family f;
  f.kind = FamilyKind::EPow;
  f.k = k;
  return f;
}

Family Family::e_rat(const Rational& r) {
  ConstantSpec::e_rational(r);
  Family f;
  f.kind = FamilyKind::ERat;
  f.r = r;
  return f;
}

Family Family::sin_inv(const Integer& m) {
  ConstantSpec::sin_inv(m);
  Family f;
  f.kind = FamilyKind::SinInv;
  f.m = m;
  return f;
}

Family Family::cos_inv(const Integer& m) {
  ConstantSpec::cos_inv(m);
  Family f;
  f.kind = FamilyKind::CosInv;
  f.m = m;
  return f;
}

Family Family::trig_angle(const Rational& x) {
  // Validates 0 < x <= pi with the same guard the generator uses.
  capital_f_gauss(1, x.get_num(), x.get_den());
  Family f;
  f.kind = FamilyKind::TrigAngle;
  f.r = x;
  return f;
}

Family Family::alg_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  if (!poly.is_monic()) {
    throw Error(ErrorKind::NotMonic, "algroot certificates need a monic polynomial; use classify for " +
                                         to_display_string(poly));
  }
  ConstantSpec::algebraic_root(poly, lo, hi);
  Family f;
  f.kind = FamilyKind::AlgRoot;
  f.poly = poly;
  f.lo = lo;
  f.hi = hi;
  return f;
}

std::string Family::id() const {
  switch (kind) {
    case FamilyKind::Sqrt: return "sqrt";
    case FamilyKind::Root: return "root";
    case FamilyKind::E: return "e";
    case FamilyKind::InvE: return "inv-e";
    case FamilyKind::ESquared: return "e-squared";
    case FamilyKind::ESquaredNaive: return "e-squared-naive";
    case FamilyKind::EPow: return "e-pow";
    case FamilyKind::ERat: return "e-rat";
    case FamilyKind::SinInv: return "sin-inv";
    case FamilyKind::CosInv: return "cos-inv";
    case FamilyKind::TrigAngle: return "trig-angle";
    case FamilyKind::AlgRoot: return "algroot";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view id) {
  for (auto kind : {FamilyKind::Sqrt, FamilyKind::Root, FamilyKind::E, FamilyKind::InvE, FamilyKind::ESquared,
                    FamilyKind::ESquaredNaive, FamilyKind::EPow, FamilyKind::ERat, FamilyKind::SinInv,
                    FamilyKind::CosInv, FamilyKind::TrigAngle, FamilyKind::AlgRoot}) {
    Family f;
    f.kind = kind;
    if (f.id() == id) return kind;
  }
  return std::nullopt;
}

std::vector<std::string> family_ids() {
  return {"sqrt", "root", "e", "inv-e", "e-squared", "e-squared-naive", "e-pow", "e-rat",
          "sin-inv", "cos-inv", "trig-angle", "algroot"};
}

ConstantSpec Family::constant() const {
  switch (kind) {
    case FamilyKind::Sqrt: return ConstantSpec::sqrt(m);
    case FamilyKind::Root: return ConstantSpec::root(a, m);
    case FamilyKind::E: return ConstantSpec::e();
    case FamilyKind::InvE: return ConstantSpec::inv_e();
    case FamilyKind::ESquared:
    case FamilyKind::ESquaredNaive: return ConstantSpec::e_pow(2);
    case FamilyKind::EPow: return ConstantSpec::e_pow(k);
    case FamilyKind::ERat: return ConstantSpec::e_rational(r);
    case FamilyKind::SinInv: return ConstantSpec::sin_inv(m);
    case FamilyKind::CosInv: return ConstantSpec::cos_inv(m);
    case FamilyKind::TrigAngle: return ConstantSpec::sin_of(r);
    case FamilyKind::AlgRoot: return ConstantSpec::algebraic_root(poly, lo, hi);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

std::string Family::theorem() const {
  switch (kind) {
    case FamilyKind::Sqrt:
      return "q_n sqrt(m) - p_n = (sqrt(m) - z)^(2n-1) in Z[sqrt(m)], z = floor(sqrt(m)); "
             "binomial sums give p_n, q_n";
    case FamilyKind::Root:
      return "sum_l a_{n,l} alpha^l = (alpha - z)^(mn-1) for alpha = a^(1/m); "
             "a_{n,l} = sum_k C(mn-1, mk+l) a^k (-z)^(mn-1-mk-l)";
    case FamilyKind::E:
      return "p_n = sum_{i<=n} n!/i!, q_n = n!; 1/(n+1) < q_n e - p_n < 1/n";
    case FamilyKind::InvE:
      return "p_n = sum_{i<=n} (-1)^i n!/i!, q_n = n!; |q_n/e - p_n| < 1/n";
    case FamilyKind::ESquared:
      return "p'_n = sum_{i<=2n} (2n)!/i!, q'_n = sum_{i<=2n} (-1)^i (2n)!/i!; composition of "
             "p_n/n! -> e and n!/q_n -> e; residual positive, below (e^2+1)/(2n)";
    case FamilyKind::ESquaredNaive:
      return "negative control: (p_n^2, q_n^2) from the e sequence; q_n^2 e^2 - p_n^2 >= n!/(n+1) "
             "diverges, so this is not a nice approximation of e^2";
    case FamilyKind::EPow:
      return "F_{n,k} = sum_i (-k)^(2n-i) f_n^(i) for f_n = x^n (1-x)^n / n!; "
             "0 < F(1) e^k - F(0) = int_0^1 e^(kx) k^(2n+1) f_n < e^k k^(2n+1)/n!";
    case FamilyKind::ERat:
      return "F_{n,r} = sum_i (-1)^i p^(2n-i) q^i f_n^(i) for r = p/q; "
             "F(1) e^r - F(0) = (p^(2n+1)/q) int_0^1 e^(rx) f_n -> 0";
    case FamilyKind::SinInv:
      return "q_n = m^(4n-1) (4n-1)!, p_n = truncated sine series; "
             "0 < q_n sin(1/m) - p_n < 1/(m^2 (4n)^2 - 1)";
    case FamilyKind::CosInv:
      return "q_n = m^(4n-2) (4n-2)!, p_n = truncated cosine series; "
             "0 < q_n cos(1/m) - p_n < 1/(m^2 (4n)(4n-1))";
    case FamilyKind::TrigAngle:
      return "F_n = sum_i (-1)^i (ip)^(2n-i) q^i f_n^(i), F_n(0) = a + bi, F_n(1) = c + di; "
             "0 != |c cos(p/q) - d sin(p/q) - a| <= p^(2n+1)/(n! q), so sin(p/q) or cos(p/q) is irrational";
    case FamilyKind::AlgRoot:
      return "alpha a root of a monic integer polynomial, z = floor(alpha): (alpha - z)^n reduced to "
             "sum_{k<m} d_{n,k} alpha^k lies in (0, 1) and shrinks";
  }
  return {};
}

Certificate certify(const Family& family, unsigned long n_max, const CertifyOptions& options) {
  if (n_max < 1) throw Error(ErrorKind::BadIndex, "n_max must be >= 1");
  const ConstantSpec c = family.constant();

  Certificate cert;
  cert.constant = c.to_string();
  cert.family = family.id();
  cert.metadata["theorem"] = family.theorem();

  // Shared per-family context computed once.
  Integer alg_floor;
  if (family.kind == FamilyKind::AlgRoot) alg_floor = floor_of(c);

  auto pair_plan = [&](const BoundedApproximant& b) {
    RowPlan plan;
    plan.row.n = b.approx.n;
    plan.row.p = b.approx.p;
    plan.row.q = b.approx.q;
    plan.row.bound = b.bound.bound;
    Approximant a = b.approx;
    plan.evaluate = [a, c](const Rational& w) { return residual(a, c, w); };
    return plan;
  };
  auto form_plan = [&](unsigned long n, PowerForm form, Rational bound) {
    RowPlan plan;
    plan.row.n = n;
    plan.row.coeffs = form.coeffs;
    plan.row.bound = std::move(bound);
    plan.evaluate = [form = std::move(form), c](const Rational& w) { return power_form_residual(form, c, w); };
    return plan;
  };

  auto build = [&](unsigned long n) -> RowPlan {
    switch (family.kind) {
      case FamilyKind::Sqrt: return pair_plan(sqrt_approximant(family.m, n));
      case FamilyKind::Root: {
        unsigned long m = to_ulong(family.m, "root index");
        return form_plan(n, mth_root_form(family.a, m, n), mth_root_bound(family.a, m, n));
      }
      case FamilyKind::E: return pair_plan(e_approximant(n));
      case FamilyKind::InvE: return pair_plan(inv_e_approximant(n));
      case FamilyKind::ESquared: return pair_plan(e_squared_approximant(n));
      case FamilyKind::ESquaredNaive: return pair_plan(e_squared_naive_approximant(n));
      case FamilyKind::EPow: {
        FPair f = capital_f_int(n, family.k);
        return pair_plan({{n, f.at0, f.at1}, {capital_f_int_bound(n, family.k), true}});
      }
      case FamilyKind::ERat: {
        FPair f = capital_f_rational(n, family.r);
        return pair_plan({{n, f.at0, f.at1}, {capital_f_rational_bound(n, family.r), false}});
      }
      case FamilyKind::SinInv: return pair_plan(sin_inv_m_approximant(family.m, n));
      case FamilyKind::CosInv: return pair_plan(cos_inv_m_approximant(family.m, n));
      case FamilyKind::TrigAngle: {
        auto g = capital_f_gauss(n, family.r.get_num(), family.r.get_den());
        RowPlan plan;
        plan.row.n = n;
        plan.row.trig = {g.certificate.a, g.certificate.b, g.certificate.c, g.certificate.d};
        plan.row.bound = g.certificate.bound;
        TrigTerms t = plan.row.trig;
        Rational x = family.r;
        plan.evaluate = [t, x](const Rational& w) { return trig_residual(t, x, w); };
        return plan;
      }
      case FamilyKind::AlgRoot:
        return form_plan(n, monic_certificate(family.poly, alg_floor, n), root_power_bound(c, alg_floor, n));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
  };

  auto run_row = [&](unsigned long n) {
    RowPlan plan = build(n);
    Rational start = options.width ? *options.width : Rational(plan.row.bound / 1000);
    decide(plan, start);
    return plan.row;
  };

  cert.rows.resize(n_max);
  const unsigned long workers =
      options.parallel ? std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U)) : 1U;
  if (workers <= 1 || n_max == 1) {
    for (unsigned long n = 1; n <= n_max; ++n) cert.rows[n - 1] = run_row(n);
  } else {
    for (unsigned long start = 1; start <= n_max; start += workers) {
      std::vector<std::future<CertificateRow>> batch;
      for (unsigned long n = start; n < start + workers && n <= n_max; ++n) {
        batch.push_back(std::async(std::launch::async, run_row, n));
      }
      for (unsigned long i = 0; i < batch.size(); ++i) cert.rows[start - 1 + i] = batch[i].get();
    }
  }

  switch (family.kind) {
    case FamilyKind::Sqrt:
    case FamilyKind::E:
    case FamilyKind::InvE:
    case FamilyKind::ESquared:
    case FamilyKind::ESquaredNaive:
    case FamilyKind::EPow:
    case FamilyKind::ERat:
    case FamilyKind::SinInv:
    case FamilyKind::CosInv: cert.kind = RowKind::Pair; break;
    case FamilyKind::TrigAngle:
      cert.kind = RowKind::Trig;
      cert.metadata["imaginary_parts"] = "b_n and d_n are recorded but carry no bound; unchecked";
      break;
    case FamilyKind::Root:
    case FamilyKind::AlgRoot: cert.kind = RowKind::PowerForm; break;
  }
  if (cert.kind == RowKind::PowerForm) {
    cert.metadata["max_abs_coeff"] = max_abs_coeff(cert.rows);
  }
  if (family.kind == FamilyKind::ESquared) {
    cert.metadata["bound_basis"] = "(e^2+1)/(2n) from the composition triangle inequality";
  }
  if (family.kind == FamilyKind::ESquaredNaive) {
    cert.metadata["bound_basis"] = "1/n, the rate of the e sequence being squared";
  }
  if (family.kind == FamilyKind::EPow || family.kind == FamilyKind::ERat) {
    cert.metadata["pair"] = "p = F(0), q = F(1)";
  }

  for (const auto& row : cert.rows) {
    if (!row.nonzero_ok || !row.bound_ok) {
      cert.verdict = {false, row.n};
      return cert;
    }
  }
  // Decay at desk scale: the last residual is below the first.
  if (n_max >= 2 && !(cert.rows.back().residual.max_abs() < cert.rows.front().residual.min_abs())) {
    cert.verdict = {false, cert.rows.back().n};
    cert.metadata["decay"] = "failed: last |residual| is not below the first";
    return cert;
  }
  cert.verdict = {true, 0};
  return cert;
}

Certificate certify(const Family& family, const ConstantSpec& c, unsigned long n_max,
                    const CertifyOptions& options) {
  if (family.constant().to_string() != c.to_string()) {
    throw Error(ErrorKind::InvalidArgument,
                "family " + family.id() + " approximates " + family.constant().to_string() + ", not " +
                    c.to_string());
  }
  return certify(family, n_max, options);
}

std::string Verdict::to_string() const { return nice ? "nice" : "violated:" + std::to_string(violated_row); }

Verdict Verdict::parse(const std::string& text) {
  if (text == "nice") return {true, 0};
  const std::string prefix = "violated:";
  if (text.rfind(prefix, 0) == 0) {
    return {false, to_ulong(parse_integer(text.substr(prefix.size())), "violated row")};
  }
  throw Error(ErrorKind::ParseError, "bad verdict '" + text + "'");
}

}  // namespace irrat
