#pragma once

#include "irrat/exactnum/enclosure.hpp"
#include "irrat/exactnum/number.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irrat {

/// Dense univariate polynomial with ascending coefficients. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients and
/// degree -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  template <typename Point>
  Point evaluate(const Point& x) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Point(*it);
    }
    return acc;
  }

  /// Interval Horner evaluation.
  Enclosure evaluate(const Enclosure& x) const {
    Enclosure acc{Rational(0)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Rational(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Coeff(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder of division over Q. Divisor must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den);

/// Monic gcd over Q (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

bool is_squarefree(const IntPolynomial& f);

/// Comma-separated ascending decimal coefficients, e.g. "1,1,-5,2".
IntPolynomial parse_int_polynomial(std::string_view text);
std::string to_coeff_string(const IntPolynomial& p);
/// Human-readable form, descending powers, e.g. "2x^3 - 5x^2 + x + 1".
std::string to_display_string(const IntPolynomial& p, char var = 'x');

}  // namespace irrat
