#pragma once

// Niven polynomials f_n(x) = x^n (1-x)^n / n! and the alternating
// derivative sums built from them.
//
// For a "frequency" P and scale Q define
//   F(x) = sum_{i=0}^{2n} (-1)^i P^(2n-i) Q^i f_n^(i)(x).
// Telescoping gives d/dx [e^(P x/Q) F(x)] = (P^(2n+1)/Q) e^(P x/Q) f_n(x), so
//   F(1) e^(P/Q) - F(0) = (P^(2n+1)/Q) * integral_0^1 e^(P x/Q) f_n(x) dx,
// and every derivative of f_n at 0 and 1 is an integer. P = k, Q = 1 yields
// approximants of e^k; P = p, Q = q of e^(p/q); P = i p of cos/sin(p/q).

#include "irrat/algebraic/polynomial.hpp"
#include "irrat/exactnum/number.hpp"

namespace irrat {

struct FPair {
  Integer at0;
  Integer at1;

  friend bool operator==(const FPair&, const FPair&) = default;
};

struct GaussFPair {
  GaussianInteger at0;
  GaussianInteger at1;
};

/// Integers (a_n, c_n, d_n) from F_n(0) = a + bi, F_n(1) = c + di, whose
/// residual c cos(p/q) - d sin(p/q) - a is non-zero and bounded by
/// p^(2n+1)/(n! q).
struct TrigCertificate {
  unsigned long n = 0;
  Integer p;
  Integer q;
  Integer a;
  Integer b;
  Integer c;
  Integer d;
  Rational bound;
};

enum class Endpoint { Zero, One };

RationalPolynomial niven_poly(unsigned long n);
/// n! f_n(x) = x^n (1-x)^n as an integer polynomial.
IntPolynomial scaled_niven_poly(unsigned long n);

/// f_n^(j) at 0 or 1, always an integer.
Integer niven_derivative_at(unsigned long n, unsigned long j, Endpoint point);

FPair capital_f_int(unsigned long n, const Integer& k);
/// r = p/q in lowest terms, r != 0 (ZeroExponent otherwise).
FPair capital_f_rational(unsigned long n, const Rational& r);

struct GaussResult {
  GaussFPair values;
  TrigCertificate certificate;
};

/// Requires 0 < p/q <= pi, checked as p*100000 <= 314159*q. Angles in
/// (3.14159, 355/113] raise AngleNearPi, anything else AngleOutOfRange.
GaussResult capital_f_gauss(unsigned long n, const Integer& p, const Integer& q);

/// Upper bound e^k k^(2n+1)/n! for F_{n,k}(1) e^k - F_{n,k}(0), using an
/// upper rational bound for e^k.
Rational capital_f_int_bound(unsigned long n, const Integer& k);
/// |p|^(2n+1) max(1, e^r) / (q n!) for the rational-exponent residual.
Rational capital_f_rational_bound(unsigned long n, const Rational& r);

}  // namespace irrat
