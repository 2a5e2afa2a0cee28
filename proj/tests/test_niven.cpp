#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "irrat/exactnum/constant.hpp"
#include "irrat/niven/niven.hpp"
#include "irrat/verify/verify.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace irrat;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected irrat::Error");
  return ErrorKind::InvalidArgument;
}

Rational R(long n, long d = 1) { return make_rational(n, d); }

// F(0), F(1) for P = i p built from the oracle derivative table.
std::pair<GaussianInteger, GaussianInteger> gauss_oracle(unsigned long n, long p, long q) {
  oracle::DerivTable t = oracle::niven_derivatives(n);
  GaussianInteger f0(0), f1(0);
  for (unsigned long i = 0; i <= 2 * n; ++i) {
    // (-1)^i (i p)^(2n-i) q^i
    unsigned long e = 2 * n - i;
    Integer mag = pow(Integer(p), e) * pow(Integer(q), i);
    if (i % 2 == 1) mag = -mag;
    GaussianInteger w(0);
    switch (e % 4) {
      case 0: w = GaussianInteger(mag, 0); break;
      case 1: w = GaussianInteger(0, mag); break;
      case 2: w = GaussianInteger(-mag, 0); break;
      default: w = GaussianInteger(0, -mag); break;
    }
    f0 += w * GaussianInteger(t.at0[i]);
    f1 += w * GaussianInteger(t.at1[i]);
  }
  return {f0, f1};
}

}  // namespace

TEST_CASE("niven_poly examples") {
  CHECK(niven_poly(1) == RationalPolynomial{R(0), R(1), R(-1)});
  CHECK(niven_poly(2) == RationalPolynomial{R(0), R(0), R(1, 2), R(-1), R(1, 2)});
  RationalPolynomial f3 = niven_poly(3);
  CHECK(f3.degree() == 6);
  CHECK(f3.coeff(3) == R(1, 6));
  CHECK(kind_of([] { niven_poly(0); }) == ErrorKind::BadIndex);
}

TEST_CASE("niven_derivative_at examples") {
  CHECK(niven_derivative_at(2, 3, Endpoint::Zero) == -6);
  CHECK(niven_derivative_at(2, 1, Endpoint::Zero) == 0);
  CHECK(niven_derivative_at(2, 3, Endpoint::One) == 6);
  CHECK(niven_derivative_at(2, 5, Endpoint::Zero) == 0);
}

TEST_CASE("derivatives match the symbolic-differentiation oracle for n <= 10") {
  for (unsigned long n = 1; n <= 10; ++n) {
    oracle::DerivTable t = oracle::niven_derivatives(n);
    for (unsigned long j = 0; j <= 2 * n; ++j) {
      REQUIRE(niven_derivative_at(n, j, Endpoint::Zero) == t.at0[j]);
      REQUIRE(niven_derivative_at(n, j, Endpoint::One) == t.at1[j]);
    }
    // Also check the library's own polynomial derivative route.
    RationalPolynomial f = niven_poly(n);
    for (unsigned long j = 0; j <= 2 * n; ++j) {
      REQUIRE(f.evaluate(Rational(0)) == Rational(t.at0[j]));
      REQUIRE(f.evaluate(Rational(1)) == Rational(t.at1[j]));
      f = f.derivative();
    }
  }
}

TEST_CASE("symmetry f(x) = f(1-x) and range 0 <= f < 1/n!") {
  for (unsigned long n = 1; n <= 10; ++n) {
    RationalPolynomial f = niven_poly(n);
    // f(1 - x) via composition with 1 - x.
    RationalPolynomial reflected;
    RationalPolynomial power{R(1)};
    const RationalPolynomial one_minus_x{R(1), R(-1)};
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      reflected = reflected + f.coeffs()[k] * power;
      power = power * one_minus_x;
    }
    REQUIRE((f - reflected).is_zero());
    const Rational cap = make_rational(1, factorial(n));
    for (Rational x : {R(1, 4), R(1, 2), R(3, 4)}) {
      Rational v = f.evaluate(x);
      REQUIRE(v >= 0);
      REQUIRE(v < cap);
    }
    CHECK(scaled_niven_poly(n) == IntPolynomial(oracle::scaled_niven(n)));
  }
}

TEST_CASE("capital_f_int examples") {
  CHECK(capital_f_int(1, 1) == FPair{-3, -1});
  CHECK(capital_f_int(1, 2) == FPair{-4, 0});
  CHECK(capital_f_int(2, 2) == FPair{28, 4});
  CHECK(kind_of([] { capital_f_int(1, 0); }) == ErrorKind::InvalidArgument);

  Enclosure e = enclose_exp(1, R(1, 10000000000LL));
  Enclosure res = Rational(-1) * e + R(3);
  CHECK(res.strictly_inside(R(2817, 10000), R(2818, 10000)));

  Enclosure e2 = enclose_exp(2, R(1, 1000000));
  Enclosure r22 = Rational(4) * e2 - R(28);
  CHECK(r22.strictly_inside(R(1556, 1000), R(1557, 1000)));
}

TEST_CASE("capital_f_int matches the oracle for n <= 10, k <= 5") {
  for (unsigned long n = 1; n <= 10; ++n) {
    for (long k = 1; k <= 5; ++k) {
      auto [f0, f1] = oracle::capital_f(n, k, 1);
      FPair got = capital_f_int(n, k);
      REQUIRE(got.at0 == f0);
      REQUIRE(got.at1 == f1);
    }
  }
}

TEST_CASE("F(1) e^k - F(0) agrees with the quadrature oracle and its bound") {
  for (unsigned long n = 1; n <= 6; ++n) {
    for (long k = 1; k <= 3; ++k) {
      FPair f = capital_f_int(n, k);
      oracle::Interval ek = oracle::exp_enclosure(k);
      Rational lo = Rational(f.at1) * (f.at1 >= 0 ? ek.lo : ek.hi) - Rational(f.at0);
      Rational hi = Rational(f.at1) * (f.at1 >= 0 ? ek.hi : ek.lo) - Rational(f.at0);
      oracle::Interval integral = oracle::niven_integral(n, static_cast<unsigned long>(k));
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(lo <= integral.hi);
      REQUIRE(integral.lo <= hi);
    }
  }
  for (unsigned long n = 1; n <= 10; ++n) {
    for (long k = 1; k <= 3; ++k) {
      FPair f = capital_f_int(n, k);
      Enclosure r = Rational(f.at1) * enclose_exp(k, R(1, 1) / pow(Integer(10), 30)) - Rational(f.at0);
      REQUIRE(r.lo() > 0);
      REQUIRE(r.hi() < capital_f_int_bound(n, k));
    }
  }
}

TEST_CASE("capital_f_rational") {
  for (unsigned long n = 1; n <= 6; ++n) CHECK(capital_f_rational(n, R(1)) == capital_f_int(n, 1));
  CHECK(capital_f_rational(1, R(1, 2)) == FPair{-10, -6});
  CHECK(capital_f_rational(1, R(-1)) == FPair{-1, -3});
  CHECK(kind_of([] { capital_f_rational(1, R(0)); }) == ErrorKind::ZeroExponent);

  for (unsigned long n = 1; n <= 8; ++n) {
    for (Rational r : {R(1, 2), R(-1, 2), R(2, 3), R(-3, 2), R(5, 4)}) {
      auto [f0, f1] = oracle::capital_f(n, r.get_num(), r.get_den());
      FPair got = capital_f_rational(n, r);
      REQUIRE(got.at0 == f0);
      REQUIRE(got.at1 == f1);
      Enclosure res = Rational(got.at1) * enclose_exp(r, R(1, 1) / pow(Integer(10), 30)) - Rational(got.at0);
      REQUIRE(res.excludes_zero());
      REQUIRE(res.max_abs() < capital_f_rational_bound(n, r));
    }
  }
}

TEST_CASE("capital_f_gauss") {
  GaussResult g = capital_f_gauss(1, 1, 1);
  CHECK(g.values.at0 == GaussianInteger(-2, -1));
  CHECK(g.values.at1 == GaussianInteger(-2, 1));
  CHECK(g.certificate.bound == 1);
  Enclosure res = trig_residual({g.certificate.a, g.certificate.b, g.certificate.c, g.certificate.d}, R(1),
                                R(1, 10000000));
  CHECK(res.strictly_inside(R(7792, 100000), R(7793, 100000)));

  GaussResult half = capital_f_gauss(1, 1, 2);
  CHECK(half.certificate.bound == R(1, 2));
  Enclosure rh = trig_residual({half.certificate.a, half.certificate.b, half.certificate.c, half.certificate.d},
                               R(1, 2), R(1, 10000000));
  CHECK(rh.excludes_zero());
  CHECK(rh.max_abs() < R(1, 2));

  CHECK(kind_of([] { capital_f_gauss(1, 7, 2); }) == ErrorKind::AngleOutOfRange);
  CHECK(kind_of([] { capital_f_gauss(1, 355, 113); }) == ErrorKind::AngleNearPi);
  CHECK(kind_of([] { capital_f_gauss(1, 0, 1); }) == ErrorKind::AngleOutOfRange);
  CHECK(kind_of([] { capital_f_gauss(1, 22, 7); }) == ErrorKind::AngleOutOfRange);
  CHECK_NOTHROW(capital_f_gauss(1, 311, 99));

  for (unsigned long n = 1; n <= 8; ++n) {
    for (auto [p, q] : {std::pair{1L, 1L}, {1L, 2L}, {1L, 3L}, {3L, 1L}, {2L, 3L}}) {
      auto [o0, o1] = gauss_oracle(n, p, q);
      GaussResult got = capital_f_gauss(n, p, q);
      REQUIRE(got.values.at0 == o0);
      REQUIRE(got.values.at1 == o1);
      double x = static_cast<double>(p) / static_cast<double>(q);
      double approx = got.certificate.c.get_d() * std::cos(x) - got.certificate.d.get_d() * std::sin(x) -
                      got.certificate.a.get_d();
      Enclosure exact = trig_residual({got.certificate.a, got.certificate.b, got.certificate.c, got.certificate.d},
                                      make_rational(p, q), R(1, 1000000000));
      CHECK(std::abs(exact.midpoint().get_d() - approx) < 1e-9 * (1 + std::abs(got.certificate.c.get_d())));
    }
  }
}
