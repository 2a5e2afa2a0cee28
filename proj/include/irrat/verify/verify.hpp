#pragma once

// Certification engine. A row certifies one term of a sequence: its
// residual is enclosed tightly enough that "residual != 0" and
// "|residual| < bound" are both decided by exact rational comparisons.

#include "irrat/verify/certificate.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irrat {

/// Encloses q*alpha - p with width <= width.
Enclosure residual(const Approximant& a, const ConstantSpec& c, const Rational& width);

/// Encloses sum d_l alpha^l by interval Horner evaluation, width <= width.
/// For Sqrt / Root / AlgebraicRoot constants the form length must equal the
/// degree of alpha's defining polynomial.
Enclosure power_form_residual(const PowerForm& d, const ConstantSpec& c, const Rational& width);

/// Encloses c cos(x) - d sin(x) - a, width <= width.
Enclosure trig_residual(const TrigTerms& t, const Rational& x, const Rational& width);

enum class FamilyKind {
  Sqrt,
  Root,
  E,
  InvE,
  ESquared,
  ESquaredNaive,
  EPow,
  ERat,
  SinInv,
  CosInv,
  TrigAngle,
  AlgRoot,
};

/// A generator id plus its parameters.
struct Family {
  FamilyKind kind = FamilyKind::E;
  Integer m;        // Sqrt, Root (index), SinInv, CosInv
  Integer a;        // Root radicand
  Integer k;        // EPow
  Rational r;       // ERat exponent, TrigAngle angle
  IntPolynomial poly;  // AlgRoot (monic)
  Rational lo, hi;     // AlgRoot bracket

  static Family sqrt(const Integer& m);
  static Family root(const Integer& a, const Integer& m);
  static Family e();
  static Family inv_e();
  static Family e_squared();
  static Family e_squared_naive();
  static Family e_pow(const Integer& k);
  static Family e_rat(const Rational& r);
  static Family sin_inv(const Integer& m);
  static Family cos_inv(const Integer& m);
  static Family trig_angle(const Rational& x);
  static Family alg_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

  /// CLI id: sqrt, root, e, inv-e, e-squared, e-squared-naive, e-pow, e-rat,
  /// sin-inv, cos-inv, trig-angle, algroot.
  std::string id() const;
  /// The constant this family approximates.
  ConstantSpec constant() const;
  /// Result backing the family, shown by the CLI.
  std::string theorem() const;
};

std::optional<FamilyKind> parse_family_kind(std::string_view id);
std::vector<std::string> family_ids();

struct CertifyOptions {
  /// Residual enclosure width; defaults to bound/1000 per row.
  std::optional<Rational> width;
  /// Evaluate rows on multiple threads. Output is identical either way.
  bool parallel = true;
};

Certificate certify(const Family& family, unsigned long n_max, const CertifyOptions& options = {});
/// Same, but first checks that c is the family's constant.
Certificate certify(const Family& family, const ConstantSpec& c, unsigned long n_max,
                    const CertifyOptions& options = {});

}  // namespace irrat
