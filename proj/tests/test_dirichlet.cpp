#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "irrat/dirichlet/dirichlet.hpp"

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

std::vector<ConstantSpec> supported() {
  return {ConstantSpec::sqrt(2),      ConstantSpec::sqrt(3),
          ConstantSpec::root(2, 3),   ConstantSpec::e(),
          ConstantSpec::inv_e(),      ConstantSpec::e_pow(2),
          ConstantSpec::e_rational(R(1, 2)), ConstantSpec::sin_inv(1),
          ConstantSpec::cos_inv(2),   ConstantSpec::sin_of(R(1)),
          ConstantSpec::algebraic_root(IntPolynomial{1, 1, -5, 2}, R(2), R(5, 2))};
}

}  // namespace

TEST_CASE("pigeonhole examples") {
  auto r3 = pigeonhole_approximant(ConstantSpec::sqrt(2), 3);
  CHECK(r3.q == 3);
  CHECK(r3.p == 4);
  CHECK(r3.bin == 0);
  CHECK(r3.k_small == 0);
  CHECK(r3.k_large == 3);
  CHECK(r3.residual.max_abs() < R(1, 3));

  auto r5 = pigeonhole_approximant(ConstantSpec::sqrt(2), 5);
  CHECK(r5.q == 5);
  CHECK(r5.p == 7);

  auto e1 = pigeonhole_approximant(ConstantSpec::e(), 1);
  CHECK(e1.q == 1);
  CHECK((e1.p == 2 || e1.p == 3));
  CHECK(e1.residual.max_abs() < 1);

  CHECK(kind_of([] { pigeonhole_approximant(ConstantSpec::e(), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("pigeonhole invariants for every supported constant, n <= 200") {
  for (const auto& c : supported()) {
    for (long n : {1, 2, 3, 5, 10, 17, 50, 200}) {
      CAPTURE(c.to_string());
      CAPTURE(n);
      auto r = pigeonhole_approximant(c, n);
      REQUIRE(r.q > 0);
      REQUIRE(r.q <= n);
      REQUIRE(r.residual.max_abs() < R(1, n));
      REQUIRE(r.q == r.k_large - r.k_small);
      // Recomputing the residual independently agrees.
      Enclosure alpha = enclose(c, R(1, 1) / (pow(Integer(10), 20) * r.q));
      Enclosure check = Rational(r.q) * alpha - Rational(r.p);
      REQUIRE(check.max_abs() < R(1, n));
    }
  }
}

TEST_CASE("pigeonhole is deterministic") {
  for (const auto& c : supported()) {
    auto a = pigeonhole_approximant(c, 50);
    auto b = pigeonhole_approximant(c, 50);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
    CHECK(a.residual == b.residual);
  }
}

TEST_CASE("fractional_residual examples") {
  Enclosure six = fractional_residual(6, ConstantSpec::e());
  CHECK(six.width() <= R(1, 1000000000000LL));
  CHECK(six.strictly_inside(R(-2139, 10000), R(-2137, 10000)));

  Enclosure t24 = fractional_residual(24, ConstantSpec::e());
  // 24e = 65.2387..., so {24e} = 0.2387...
  CHECK(t24.strictly_inside(R(-1818, 10000), R(-1817, 10000)));

  Enclosure ten = fractional_residual(factorial(10), ConstantSpec::e());
  CHECK(ten.strictly_inside(R(-1, 9), R(0)));

  Enclosure neg = fractional_residual(-6, ConstantSpec::e());
  CHECK(neg.strictly_inside(R(-2139, 10000), R(-2137, 10000)));

  CHECK(kind_of([] { fractional_residual(0, ConstantSpec::e()); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("fractional_residual(n!, e) shrinks from n = 3 to n = 12") {
  Enclosure at3 = fractional_residual(factorial(3), ConstantSpec::e());
  Enclosure at12 = fractional_residual(factorial(12), ConstantSpec::e());
  CHECK(at12.max_abs() < at3.min_abs());
  for (long q = 1; q <= 40; ++q) {
    Enclosure v = fractional_residual(q, ConstantSpec::sqrt(2), R(1, 1000000));
    CHECK(v.lo() >= R(-1, 4));
    CHECK(v.hi() <= 0);
    CHECK(v.hi() < 0);
  }
}
