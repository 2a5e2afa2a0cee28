#pragma once

// Closed-form approximant sequences p_n / q_n with 0 < |q_n alpha - p_n| -> 0,
// and the rules that derive new sequences from old ones. Every sequence is
// 1-based.

#include "irrat/algebraic/algebraic.hpp"
#include "irrat/exactnum/number.hpp"

#include <vector>

namespace irrat {

struct Approximant {
  unsigned long n = 0;
  Integer p;
  Integer q;

  friend bool operator==(const Approximant&, const Approximant&) = default;
};

/// Explicit upper bound for |q_n alpha - p_n|. strict_positive records that
/// the residual is known to be > 0 (not merely non-zero).
struct BoundedBy {
  Rational bound;
  bool strict_positive = false;
};

struct BoundedApproximant {
  Approximant approx;
  BoundedBy bound;
};

/// (sqrt(m) - z)^(2n-1) = q_n sqrt(m) - p_n with z = floor(sqrt(m)).
BoundedApproximant sqrt_approximant(const Integer& m, unsigned long n);

/// Coefficients a_{n,l} with sum_l a_{n,l} alpha^l = (alpha - z)^(mn-1),
/// alpha = a^(1/m), computed from the closed binomial sum.
PowerForm mth_root_form(const Integer& a, unsigned long m, unsigned long n);
/// Upper bound for (a^(1/m) - z)^(mn-1), from a root enclosure.
Rational mth_root_bound(const Integer& a, unsigned long m, unsigned long n);

/// p = sum_{i<=n} n!/i!, q = n!; 1/(n+1) < q e - p < 1/n.
BoundedApproximant e_approximant(unsigned long n);
/// p = sum_{i<=n} (-1)^i n!/i!, q = n!, approximating 1/e.
BoundedApproximant inv_e_approximant(unsigned long n);
/// p = sum_{i<=2n} (2n)!/i!, q = sum_{i<=2n} (-1)^i (2n)!/i!, approximating e^2.
BoundedApproximant e_squared_approximant(unsigned long n);
/// The squared e sequence (p_n^2, q_n^2). Not a nice approximation of e^2;
/// the attached bound is the 1/n rate of the e sequence it was built from.
BoundedApproximant e_squared_naive_approximant(unsigned long n);

/// Truncated sine series scaled by m^(4n-1) (4n-1)!, approximating sin(1/m).
BoundedApproximant sin_inv_m_approximant(const Integer& m, unsigned long n);
/// Truncated cosine series scaled by m^(4n-2) (4n-2)!, approximating cos(1/m).
BoundedApproximant cos_inv_m_approximant(const Integer& m, unsigned long n);

/// q_n/p_n approximates 1/alpha. Throws ZeroNumerator.
Approximant reciprocal(const Approximant& a);
std::vector<Approximant> reciprocal(const std::vector<Approximant>& seq);

/// a approximates alpha (q_n alpha - p_n -> 0), b satisfies
/// q'_n beta - q_n -> 0; returns (p_n, q'_n) for alpha*beta. Throws
/// ChainMismatch when the indices or the linking terms differ.
Approximant compose_chain(const Approximant& a, const Approximant& b);
std::vector<Approximant> compose_chain(const std::vector<Approximant>& a, const std::vector<Approximant>& b);

/// Bounded-divisor generalization: a.q = d * b.p with |d| <= cap; returns
/// (a.p, d * b.q). Throws DivisibilityViolation or CapExceeded.
Approximant scaled_compose(const Approximant& a, const Approximant& b, const Integer& d, const Rational& cap);

/// An approximant (p, q) for scale*alpha gives (p, scale*q) for alpha.
/// Throws ZeroScale.
Approximant rescale(const Approximant& a, const Integer& scale);

}  // namespace irrat
