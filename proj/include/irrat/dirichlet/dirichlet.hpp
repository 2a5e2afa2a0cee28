#pragma once

#include "irrat/exactnum/constant.hpp"

namespace irrat {

struct PigeonholeResult {
  Integer n;
  Integer p;
  Integer q;  // 0 < q <= n
  /// Encloses q*alpha - p; its max-abs endpoint is certified < 1/n.
  Enclosure residual;
  /// Bin index j and the two multipliers k1 < k2 whose fractional parts
  /// share the bin [j/n, (j+1)/n).
  Integer bin;
  Integer k_small;
  Integer k_large;
};

/// Pigeonhole approximation: among {k alpha} for k = 0..n two land in the
/// same bin of width 1/n. The first bin (by j) holding two points wins, and
/// within it the two smallest k. Throws PrecisionExhausted.
PigeonholeResult pigeonhole_approximant(const ConstantSpec& c, const Integer& n);

/// Enclosure of {q alpha}({q alpha} - 1), which lies in [-1/4, 0], with
/// width <= max_width.
Enclosure fractional_residual(const Integer& q, const ConstantSpec& c,
                              const Rational& max_width = Rational(1, 1000000000000));

}  // namespace irrat
