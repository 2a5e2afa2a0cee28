#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "irrat/sequences/sequences.hpp"
#include "irrat/verify/verify.hpp"
#include "oracles.hpp"

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

Approximant A(unsigned long n, long p, long q) { return {n, p, q}; }

}  // namespace

TEST_CASE("sqrt_approximant examples") {
  CHECK(sqrt_approximant(2, 2).approx == A(2, 7, 5));
  CHECK(sqrt_approximant(2, 3).approx == A(3, 41, 29));
  CHECK(sqrt_approximant(3, 1).approx == A(1, 1, 1));
  CHECK(kind_of([] { sqrt_approximant(9, 1); }) == ErrorKind::PerfectPower);
  CHECK(kind_of([] { sqrt_approximant(2, 0); }) == ErrorKind::BadIndex);
}

TEST_CASE("sqrt_approximant reproduces the Z[sqrt m] expansion exactly") {
  for (long m : {2, 3, 5, 7, 10}) {
    oracle::Z z = oracle::isqrt(m);
    for (unsigned long n = 1; n <= 12; ++n) {
      oracle::RingSqrt ring = oracle::sqrt_power(m, z, 2 * n - 1);
      auto got = sqrt_approximant(m, n);
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(got.approx.p == -ring.x);
      REQUIRE(got.approx.q == ring.y);
      // The bound really is an upper bound for the exact value.
      Enclosure r = residual(got.approx, ConstantSpec::sqrt(m), got.bound.bound / 1000);
      REQUIRE(r.hi() < got.bound.bound);
      REQUIRE(r.lo() > 0);
    }
  }
}

TEST_CASE("mth_root_form examples") {
  auto v = [](std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  CHECK(mth_root_form(2, 3, 1).coeffs == v({1, -2, 1}));
  CHECK(mth_root_form(2, 3, 2).coeffs == v({19, -5, -8}));
  CHECK(mth_root_form(2, 2, 2).coeffs == v({-7, 5}));
  CHECK(kind_of([] { mth_root_form(8, 3, 1); }) == ErrorKind::PerfectPower);
}

TEST_CASE("mth_root_form with m = 2 agrees with sqrt_approximant") {
  for (long a : {2, 3, 5, 6, 7, 8, 10, 11, 99}) {
    for (unsigned long n = 1; n <= 10; ++n) {
      auto form = mth_root_form(a, 2, n).coeffs;
      auto pair = sqrt_approximant(a, n).approx;
      REQUIRE(form.size() == 2);
      REQUIRE(form[0] == -pair.p);
      REQUIRE(form[1] == pair.q);
    }
  }
}

TEST_CASE("mth_root_form agrees with the reduction of (x - z)^(mn-1)") {
  for (long a : {2, 3, 5, 10}) {
    for (unsigned long m : {3UL, 4UL}) {
      Integer z = integer_root(a, m);
      std::vector<Integer> mod(m + 1, 0);
      mod[0] = -a;
      mod[m] = 1;
      for (unsigned long n = 1; n <= 6; ++n) {
        CHECK(mth_root_form(a, m, n) == monic_certificate(IntPolynomial(mod), z, m * n - 1));
      }
    }
  }
}

TEST_CASE("e and 1/e approximants") {
  CHECK(e_approximant(1).approx == A(1, 2, 1));
  CHECK(e_approximant(2).approx == A(2, 5, 2));
  CHECK(e_approximant(3).approx == A(3, 16, 6));
  CHECK(inv_e_approximant(1).approx == A(1, 0, 1));
  CHECK(inv_e_approximant(2).approx == A(2, 1, 2));
  CHECK(inv_e_approximant(3).approx == A(3, 2, 6));

  Enclosure r3 = residual(e_approximant(3).approx, ConstantSpec::e(), R(1, 100000));
  CHECK(r3.strictly_inside(R(1, 4), R(1, 3)));
  CHECK(r3.strictly_inside(R(30968, 100000), R(30970, 100000)));

  Enclosure ie = residual(inv_e_approximant(2).approx, ConstantSpec::inv_e(), R(1, 100000));
  CHECK(ie.max_abs() < R(1, 2));
  CHECK(ie.strictly_inside(R(-26425, 100000), R(-26423, 100000)));
}

TEST_CASE("e sandwich 1/(n+1) < q e - p < 1/n for n <= 20") {
  for (unsigned long n = 1; n <= 20; ++n) {
    Rational w = R(1, 4) / ((n + 1) * (n + 1));
    Enclosure r = residual(e_approximant(n).approx, ConstantSpec::e(), w);
    CAPTURE(n);
    REQUIRE(r.width() < w + w);
    REQUIRE(r.strictly_inside(Rational(1, n + 1), Rational(1, n)));
  }
}

TEST_CASE("e squared approximants") {
  CHECK(e_squared_approximant(1).approx == A(1, 5, 1));
  CHECK(e_squared_approximant(2).approx == A(2, 65, 9));
  CHECK(e_squared_approximant(3).approx == A(3, 1957, 265));
  Enclosure r2 = residual(e_squared_approximant(2).approx, ConstantSpec::e_pow(2), R(1, 100000));
  CHECK(r2.strictly_inside(R(15014, 10000), R(15016, 10000)));
  Enclosure r3 = residual(e_squared_approximant(3).approx, ConstantSpec::e_pow(2), R(1, 100000));
  CHECK(r3.strictly_inside(R(1099, 1000), R(1100, 1000)));

  for (unsigned long n = 1; n <= 12; ++n) {
    auto b = e_squared_approximant(n);
    Enclosure r = residual(b.approx, ConstantSpec::e_pow(2), b.bound.bound / 1000);
    REQUIRE(r.lo() > 0);
    REQUIRE(r.hi() < b.bound.bound);
  }

  CHECK(e_squared_naive_approximant(3).approx == A(3, 256, 36));
}

TEST_CASE("e squared from the chain rule") {
  for (unsigned long n = 1; n <= 8; ++n) {
    Approximant a = e_approximant(2 * n).approx;
    Approximant b = reciprocal(inv_e_approximant(2 * n).approx);
    Approximant chained = compose_chain(a, b);
    Approximant direct = e_squared_approximant(n).approx;
    CHECK(chained.p == direct.p);
    CHECK(chained.q == direct.q);
  }
}

TEST_CASE("sin and cos of 1/m approximants") {
  CHECK(sin_inv_m_approximant(1, 1).approx == A(1, 5, 6));
  CHECK(sin_inv_m_approximant(2, 1).approx == A(1, 23, 48));
  CHECK(sin_inv_m_approximant(1, 2).approx == A(2, 4241, 5040));
  CHECK(sin_inv_m_approximant(1, 1).bound.bound == R(1, 15));
  CHECK(sin_inv_m_approximant(2, 1).bound.bound == R(1, 63));

  CHECK(cos_inv_m_approximant(1, 1).approx == A(1, 1, 2));
  CHECK(cos_inv_m_approximant(2, 1).approx == A(1, 7, 8));
  CHECK(cos_inv_m_approximant(1, 2).approx == A(2, 389, 720));

  Enclosure s = residual(sin_inv_m_approximant(1, 1).approx, ConstantSpec::sin_inv(1), R(1, 100000));
  CHECK(s.strictly_inside(R(487, 10000), R(489, 10000)));
  Enclosure s2 = residual(sin_inv_m_approximant(2, 1).approx, ConstantSpec::sin_inv(2), R(1, 100000));
  CHECK(s2.strictly_inside(R(1242, 100000), R(1243, 100000)));
  Enclosure c = residual(cos_inv_m_approximant(1, 1).approx, ConstantSpec::cos_inv(1), R(1, 100000));
  CHECK(c.strictly_inside(R(806, 10000), R(807, 10000)));
  Enclosure c2 = residual(cos_inv_m_approximant(2, 1).approx, ConstantSpec::cos_inv(2), R(1, 1000000000));
  CHECK(c2.strictly_inside(R(2066, 100000), R(2067, 100000)));

  CHECK(kind_of([] { sin_inv_m_approximant(0, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { cos_inv_m_approximant(1, 0); }) == ErrorKind::BadIndex);
}

TEST_CASE("sin residual below 1/(m^2 (4n)^2 - 1), cos residual below its bound") {
  for (long m = 1; m <= 5; ++m) {
    for (unsigned long n = 1; n <= 8; ++n) {
      auto sb = sin_inv_m_approximant(m, n);
      Enclosure s = residual(sb.approx, ConstantSpec::sin_inv(m), sb.bound.bound / 1000);
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(s.lo() > 0);
      REQUIRE(s.hi() < sb.bound.bound);

      auto cb = cos_inv_m_approximant(m, n);
      Enclosure c = residual(cb.approx, ConstantSpec::cos_inv(m), cb.bound.bound / 100000);
      REQUIRE(c.lo() > 0);
      REQUIRE(c.hi() < cb.bound.bound);
    }
  }
}

TEST_CASE("transformation rules") {
  CHECK(reciprocal(A(3, 16, 6)) == A(3, 6, 16));
  CHECK(kind_of([] { reciprocal(inv_e_approximant(1).approx); }) == ErrorKind::ZeroNumerator);

  std::vector<Approximant> seq;
  for (unsigned long n = 2; n <= 10; ++n) seq.push_back(inv_e_approximant(n).approx);
  CHECK(reciprocal(reciprocal(seq)) == seq);

  // Reciprocals of 1/e approximants give e approximants with p = n!.
  for (unsigned long n = 2; n <= 10; ++n) {
    Approximant r = reciprocal(inv_e_approximant(n).approx);
    CHECK(r.p == factorial(n));
    Enclosure res = residual(r, ConstantSpec::e(), R(1, 1000000));
    CHECK(res.excludes_zero());
  }

  Approximant a = A(4, 19, 7);
  CHECK(compose_chain(a, A(4, 7, 7)) == a);
  CHECK(kind_of([&] { compose_chain(a, A(5, 7, 7)); }) == ErrorKind::ChainMismatch);
  CHECK(kind_of([&] { compose_chain(a, A(4, 8, 7)); }) == ErrorKind::ChainMismatch);
  CHECK(kind_of([&] { compose_chain(std::vector<Approximant>{a}, std::vector<Approximant>{}); }) ==
        ErrorKind::ChainMismatch);

  CHECK(scaled_compose(A(3, 5, 8), A(3, 4, 11), 2, R(2)) == A(3, 5, 22));
  CHECK(kind_of([] { scaled_compose(A(3, 5, 9), A(3, 3, 11), 3, R(2)); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { scaled_compose(A(3, 5, 9), A(3, 4, 11), 2, R(2)); }) ==
        ErrorKind::DivisibilityViolation);

  CHECK(rescale(A(1, 7, 5), 2) == A(1, 7, 10));
  CHECK(rescale(A(1, 7, 5), 1) == A(1, 7, 5));
  CHECK(kind_of([] { rescale(A(1, 7, 5), 0); }) == ErrorKind::ZeroScale);
}
