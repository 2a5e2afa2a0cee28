#pragma once

// Irrationality certificates for real algebraic numbers.
//
// A root alpha of a monic integer polynomial of degree m satisfies
// alpha^m = -(b_{m-1} alpha^{m-1} + ... + b_0), so every integer combination
// of powers of alpha collapses to a combination of 1, alpha, ..., alpha^{m-1}
// (a PowerForm). Taking z = floor(alpha) and the powers (alpha - z)^n gives
// power forms whose values lie in (0, 1) and shrink to zero, which is the
// certificate. Non-monic polynomials are handled by scaling the root by the
// leading coefficient.

#include "irrat/algebraic/polynomial.hpp"
#include "irrat/algebraic/roots.hpp"

#include <optional>
#include <vector>

namespace irrat {

/// Integer coefficients (d_0, ..., d_{m-1}) standing for sum d_k alpha^k.
struct PowerForm {
  std::vector<Integer> coeffs;

  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

/// Rewrites sum c_k alpha^k in the basis 1, ..., alpha^{m-1} by eliminating
/// the highest power one step at a time. Throws NotMonic.
PowerForm reduce_power_form(const IntPolynomial& modulus, const std::vector<Integer>& c);

/// Power form of (alpha - z)^n modulo the monic modulus.
PowerForm monic_certificate(const IntPolynomial& modulus, const Integer& z, unsigned long n);

/// g(z) = z^m + sum c_k a^{m-k-1} z^k for f = a x^m + sum c_k x^k; the
/// roots of g are a times the roots of f.
IntPolynomial monic_transform(const IntPolynomial& f);

/// All integer roots of a monic polynomial (divisors of the constant term,
/// plus 0 when the constant term vanishes), in discovery order: for each
/// divisor d >= 1 ascending, d then -d.
std::vector<Integer> integer_root_test(const IntPolynomial& g);

struct RootVerdict {
  RootBracket bracket;
  /// Set when the root is the rational z/a; empty means irrational.
  std::optional<Rational> rational_value;

  bool irrational() const { return !rational_value.has_value(); }
};

/// Isolates every real root (brackets refined to width <= 1/4) and decides
/// rationality exactly via the integer roots of the monic transform.
std::vector<RootVerdict> classify_roots(const IntPolynomial& f);

}  // namespace irrat
