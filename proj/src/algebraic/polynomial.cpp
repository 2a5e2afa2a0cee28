#include "irrat/algebraic/polynomial.hpp"

namespace irrat {

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den) {
  if (den.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  }
  std::vector<Rational> rem = num.coeffs();
  const long dd = den.degree();
  if (num.degree() < dd) return {RationalPolynomial(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  const Rational& lead = den.leading();
  for (long k = num.degree(); k >= dd; --k) {
    Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

bool is_squarefree(const IntPolynomial& f) {
  auto rf = to_rational(f);
  return gcd(rf, rf.derivative()).degree() <= 0;
}

IntPolynomial parse_int_polynomial(std::string_view text) {
  std::vector<Integer> coeffs = parse_integer_list(text);
  IntPolynomial p(std::move(coeffs));
  if (p.is_zero()) {
    throw Error(ErrorKind::ParseError, "zero polynomial: '" + std::string(text) + "'");
  }
  return p;
}

std::string to_coeff_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k > 0) out += ",";
    out += p.coeffs()[k].get_str();
  }
  return out;
}

std::string to_display_string(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace irrat
