#pragma once

#include "irrat/algebraic/polynomial.hpp"
#include "irrat/exactnum/enclosure.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace irrat {

namespace constant {

struct Sqrt {
  Integer m;
};
struct Root {
  Integer a;
  Integer m;
};
struct E {};
struct InvE {};
struct EPow {
  Integer k;
};
struct ERational {
  Rational r;
};
struct SinInv {
  Integer m;
};
struct CosInv {
  Integer m;
};
struct SinOf {
  Rational x;
};
struct CosOf {
  Rational x;
};
struct AlgebraicRoot {
  IntPolynomial poly;
  Rational lo;
  Rational hi;
};

}  // namespace constant

/// One of the real constants the library can enclose. Build through the
/// factory functions, which validate the parameters.
class ConstantSpec {
 public:
  using Variant = std::variant<constant::Sqrt, constant::Root, constant::E, constant::InvE,
                               constant::EPow, constant::ERational, constant::SinInv,
                               constant::CosInv, constant::SinOf, constant::CosOf,
                               constant::AlgebraicRoot>;

  static ConstantSpec sqrt(const Integer& m);
  static ConstantSpec root(const Integer& a, const Integer& m);
  static ConstantSpec e();
  static ConstantSpec inv_e();
  static ConstantSpec e_pow(const Integer& k);
  static ConstantSpec e_rational(const Rational& r);
  static ConstantSpec sin_inv(const Integer& m);
  static ConstantSpec cos_inv(const Integer& m);
  static ConstantSpec sin_of(const Rational& x);
  static ConstantSpec cos_of(const Rational& x);
  /// Rejects brackets that do not hold exactly one real root of poly
  /// (BracketAmbiguous); an endpoint that is itself a root counts as
  /// ambiguous.
  static ConstantSpec algebraic_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

  /// Canonical text form: sqrt:2, root:2,3, e, inv-e, e-pow:3, e-rat:1/2,
  /// sin-inv:3, cos-inv:3, sin:22/7, cos:1, algroot:<coeffs>@<lo>,<hi>.
  static ConstantSpec parse(std::string_view text);
  std::string to_string() const;

  const Variant& value() const { return value_; }

 private:
  explicit ConstantSpec(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// Rational enclosure of the constant with width <= max_width. Nested:
/// halving max_width never widens either endpoint.
Enclosure enclose(const ConstantSpec& c, const Rational& max_width);

/// z with z <= value < z + 1.
Integer floor_of(const ConstantSpec& c);

/// Enclosure of exp(x) for rational x, width <= max_width.
Enclosure enclose_exp(const Rational& x, const Rational& max_width);
Enclosure enclose_sin(const Rational& x, const Rational& max_width);
Enclosure enclose_cos(const Rational& x, const Rational& max_width);
/// Bisection enclosure of a^(1/m); a >= 0, m >= 1.
Enclosure enclose_root(const Integer& a, unsigned long m, const Rational& max_width);

}  // namespace irrat
