#include "irrat/exactnum/constant.hpp"

#include "irrat/algebraic/roots.hpp"

#include <algorithm>

namespace irrat {

namespace {

[[noreturn]] void invalid(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_width(const Rational& w) {
  if (w <= 0) invalid(ErrorKind::InvalidArgument, "enclosure width must be positive");
}

// exp(x) for x >= 0: partial sum plus the geometric bound on the tail,
//   sum_{k>N} x^k/k! <= t_{N+1} / (1 - x/(N+2))   when N + 2 > x.
Enclosure exp_nonnegative(const Rational& x, const Rational& max_width) {
  if (x == 0) return Enclosure(Rational(1));
  Rational sum = 1;
  Rational term = 1;  // x^N / N!
  for (unsigned long n = 0;; ++n) {
    Rational next = term * x / (n + 1);  // t_{N+1}
    Rational ratio_den = Rational(n + 2);
    if (ratio_den > x) {
      Rational tail = next / (1 - x / ratio_den);
      if (tail <= max_width) return {sum, sum + tail};
    }
    sum += next;
    term = std::move(next);
  }
}

// Alternating series sum_k (-1)^k x^(2k+offset)/(2k+offset)! for x >= 0.
// Once the terms are non-increasing from the first omitted one on, the
// value lies between S_N and S_N + (first omitted signed term).
Enclosure alternating_trig(const Rational& x, unsigned long offset, const Rational& max_width) {
  Rational x2 = x * x;
  Rational term = offset == 0 ? Rational(1) : x;  // u_0
  Rational sum = term;
  for (unsigned long n = 0;; ++n) {
    unsigned long a = 2 * n + offset + 1;
    Rational next = term * x2 / (Rational(a) * (a + 1));  // u_{N+1}
    // u_{k+1}/u_k = x^2 / ((2k+offset+1)(2k+offset+2)) <= 1 for every k >= N+1.
    Rational later = Rational(a + 2) * (a + 3);
    if (x2 <= later && next <= max_width) {
      Rational other = (n % 2 == 0) ? Rational(sum - next) : Rational(sum + next);
      return {std::min(sum, other), std::max(sum, other)};
    }
    if (n % 2 == 0) {
      sum -= next;
    } else {
      sum += next;
    }
    term = std::move(next);
  }
}

}  // namespace

Enclosure enclose_exp(const Rational& x, const Rational& max_width) {
  require_positive_width(max_width);
  if (x >= 0) return exp_nonnegative(x, max_width);
  // exp(x) = 1/exp(|x|); with exp(|x|) >= 1 the reciprocal is no wider.
  return exp_nonnegative(-x, max_width).reciprocal();
}

Enclosure enclose_sin(const Rational& x, const Rational& max_width) {
  require_positive_width(max_width);
  if (x == 0) return Enclosure(Rational(0));
  Enclosure mag = alternating_trig(abs(x), 1, max_width);
  Enclosure signed_value = x < 0 ? -mag : mag;
  return signed_value.clamp(-1, 1);
}

Enclosure enclose_cos(const Rational& x, const Rational& max_width) {
  require_positive_width(max_width);
  return alternating_trig(abs(x), 0, max_width).clamp(-1, 1);
}

Enclosure enclose_root(const Integer& a, unsigned long m, const Rational& max_width) {
  require_positive_width(max_width);
  if (a < 0 || m == 0) invalid(ErrorKind::InvalidArgument, "enclose_root needs a >= 0, m >= 1");
  Integer z = integer_root(a, m);
  if (pow(z, m) == a) return Enclosure(Rational(z));
  // Bisection on x^m - a over [z, z+1]; the bracket is kept as
  // [num/2^k, (num+1)/2^k].
  Integer num = z;
  Integer scale = 1;  // 2^k
  Rational width = 1;
  while (width > max_width) {
    num *= 2;
    scale *= 2;
    width /= 2;
    Integer mid = num + 1;
    // mid/scale <= a^(1/m)  <=>  mid^m <= a * scale^m
    if (pow(mid, m) <= a * pow(scale, m)) num = mid;
  }
  return {make_rational(num, scale), make_rational(num + 1, scale)};
}

ConstantSpec ConstantSpec::sqrt(const Integer& m) {
  if (m < 0) invalid(ErrorKind::InvalidArgument, "sqrt:" + m.get_str() + " needs m >= 2");
  if (m < 2 || is_perfect_power(m, 2)) {
    invalid(ErrorKind::PerfectPower, m.get_str() + " is a perfect square");
  }
  return ConstantSpec(constant::Sqrt{m});
}

ConstantSpec ConstantSpec::root(const Integer& a, const Integer& m) {
  if (m < 2) invalid(ErrorKind::InvalidArgument, "root index must be >= 2, got " + m.get_str());
  if (a < 0) invalid(ErrorKind::InvalidArgument, "root radicand must be >= 2, got " + a.get_str());
  unsigned long mm = to_ulong(m, "root index");
  if (a < 2 || is_perfect_power(a, mm)) {
    invalid(ErrorKind::PerfectPower, a.get_str() + " is a perfect " + m.get_str() + "-th power");
  }
  return ConstantSpec(constant::Root{a, m});
}

ConstantSpec ConstantSpec::e() { return ConstantSpec(constant::E{}); }
ConstantSpec ConstantSpec::inv_e() { return ConstantSpec(constant::InvE{}); }

ConstantSpec ConstantSpec::e_pow(const Integer& k) {
  if (k == 0) invalid(ErrorKind::ZeroExponent, "e-pow exponent must be >= 1");
  if (k < 0) invalid(ErrorKind::InvalidArgument, "e-pow exponent must be >= 1, got " + k.get_str());
  return ConstantSpec(constant::EPow{k});
}

ConstantSpec ConstantSpec::e_rational(const Rational& r) {
  if (r == 0) invalid(ErrorKind::ZeroExponent, "e-rat exponent must be non-zero");
  return ConstantSpec(constant::ERational{r});
}

ConstantSpec ConstantSpec::sin_inv(const Integer& m) {
  if (m < 1) invalid(ErrorKind::InvalidArgument, "sin-inv needs m >= 1, got " + m.get_str());
  return ConstantSpec(constant::SinInv{m});
}

ConstantSpec ConstantSpec::cos_inv(const Integer& m) {
  if (m < 1) invalid(ErrorKind::InvalidArgument, "cos-inv needs m >= 1, got " + m.get_str());
  return ConstantSpec(constant::CosInv{m});
}

ConstantSpec ConstantSpec::sin_of(const Rational& x) { return ConstantSpec(constant::SinOf{x}); }
ConstantSpec ConstantSpec::cos_of(const Rational& x) { return ConstantSpec(constant::CosOf{x}); }

ConstantSpec ConstantSpec::algebraic_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  if (poly.degree() < 1) invalid(ErrorKind::InvalidArgument, "algroot needs a polynomial of degree >= 1");
  if (!(lo < hi)) invalid(ErrorKind::BracketAmbiguous, "algroot bracket needs lo < hi");
  if (poly.evaluate(lo) == 0 || poly.evaluate(hi) == 0) {
    invalid(ErrorKind::BracketAmbiguous, "algroot bracket endpoint is a root");
  }
  if (!is_squarefree(poly) || count_real_roots(poly, lo, hi) != 1) {
    invalid(ErrorKind::BracketAmbiguous, "algroot bracket does not isolate exactly one simple root");
  }
  if (sgn(poly.evaluate(lo)) == sgn(poly.evaluate(hi))) {
    invalid(ErrorKind::BracketAmbiguous, "algroot bracket has no sign change");
  }
  return ConstantSpec(constant::AlgebraicRoot{poly, lo, hi});
}

ConstantSpec ConstantSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos || arg.empty()) {
      invalid(ErrorKind::ParseError, "constant '" + std::string(text) + "' needs an argument");
    }
  };
  auto no_arg = [&] {
    if (colon != std::string_view::npos) {
      invalid(ErrorKind::ParseError, "constant '" + std::string(head) + "' takes no argument");
    }
  };
  if (head == "e") {
    no_arg();
    return e();
  }
  if (head == "inv-e") {
    no_arg();
    return inv_e();
  }
  need_arg();
  if (head == "sqrt") return sqrt(parse_integer(arg));
  if (head == "root") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) invalid(ErrorKind::ParseError, "root needs 'a,m'");
    return root(parse_integer(arg.substr(0, comma)), parse_integer(arg.substr(comma + 1)));
  }
  if (head == "e-pow") return e_pow(parse_integer(arg));
  if (head == "e-rat") return e_rational(parse_rational(arg));
  if (head == "sin-inv") return sin_inv(parse_integer(arg));
  if (head == "cos-inv") return cos_inv(parse_integer(arg));
  if (head == "sin") return sin_of(parse_rational(arg));
  if (head == "cos") return cos_of(parse_rational(arg));
  if (head == "algroot") {
    auto at = arg.find('@');
    if (at == std::string_view::npos) invalid(ErrorKind::ParseError, "algroot needs '<coeffs>@<lo>,<hi>'");
    auto bracket = arg.substr(at + 1);
    auto comma = bracket.find(',');
    if (comma == std::string_view::npos) invalid(ErrorKind::ParseError, "algroot bracket needs '<lo>,<hi>'");
    return algebraic_root(parse_int_polynomial(arg.substr(0, at)), parse_rational(bracket.substr(0, comma)),
                          parse_rational(bracket.substr(comma + 1)));
  }
  invalid(ErrorKind::ParseError, "unknown constant '" + std::string(text) + "'");
}

std::string ConstantSpec::to_string() const {
  using namespace constant;
  return std::visit(
      overloaded{
          [](const Sqrt& c) { return "sqrt:" + c.m.get_str(); },
          [](const Root& c) { return "root:" + c.a.get_str() + "," + c.m.get_str(); },
          [](const E&) { return std::string("e"); },
          [](const InvE&) { return std::string("inv-e"); },
          [](const EPow& c) { return "e-pow:" + c.k.get_str(); },
          [](const ERational& c) { return "e-rat:" + irrat::to_string(c.r); },
          [](const SinInv& c) { return "sin-inv:" + c.m.get_str(); },
          [](const CosInv& c) { return "cos-inv:" + c.m.get_str(); },
          [](const SinOf& c) { return "sin:" + irrat::to_string(c.x); },
          [](const CosOf& c) { return "cos:" + irrat::to_string(c.x); },
          [](const AlgebraicRoot& c) {
            return "algroot:" + to_coeff_string(c.poly) + "@" + irrat::to_string(c.lo) + "," +
                   irrat::to_string(c.hi);
          },
      },
      value_);
}

Enclosure enclose(const ConstantSpec& c, const Rational& max_width) {
  require_positive_width(max_width);
  using namespace constant;
  return std::visit(
      overloaded{
          [&](const Sqrt& s) { return enclose_root(s.m, 2, max_width); },
          [&](const Root& s) { return enclose_root(s.a, s.m.get_ui(), max_width); },
          [&](const E&) { return enclose_exp(1, max_width); },
          [&](const InvE&) { return enclose_exp(-1, max_width); },
          [&](const EPow& s) { return enclose_exp(Rational(s.k), max_width); },
          [&](const ERational& s) { return enclose_exp(s.r, max_width); },
          [&](const SinInv& s) { return enclose_sin(make_rational(1, s.m), max_width); },
          [&](const CosInv& s) { return enclose_cos(make_rational(1, s.m), max_width); },
          [&](const SinOf& s) { return enclose_sin(s.x, max_width); },
          [&](const CosOf& s) { return enclose_cos(s.x, max_width); },
          [&](const AlgebraicRoot& s) { return refine_root(RootBracket{s.lo, s.hi, s.poly}, max_width); },
      },
      c.value());
}

Integer floor_of(const ConstantSpec& c) {
  Enclosure e = refine_until(
      Rational(1, 4), [&](const Rational& w) { return enclose(c, w); },
      [](const Enclosure& e) { return floor(e.lo()) == floor(e.hi()); }, ErrorKind::Unresolvable);
  return floor(e.lo());
}

}  // namespace irrat
