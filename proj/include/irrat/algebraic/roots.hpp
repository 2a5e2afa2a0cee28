#pragma once

#include "irrat/algebraic/polynomial.hpp"

#include <vector>

namespace irrat {

/// Open interval (lo, hi) holding exactly one real root of poly; neither
/// endpoint is a root and poly changes sign across it.
struct RootBracket {
  Rational lo;
  Rational hi;
  IntPolynomial poly;
};

/// Sturm chain f, f', -rem(f, f'), ... over Q.
std::vector<RationalPolynomial> sturm_sequence(const IntPolynomial& f);

/// Number of distinct real roots in (lo, hi). Neither endpoint may be a root.
std::size_t count_real_roots(const IntPolynomial& f, const Rational& lo, const Rational& hi);

/// Disjoint brackets, one per real root, in increasing order. Rejects
/// non-squarefree input with NotSquarefree.
std::vector<RootBracket> isolate_real_roots(const IntPolynomial& f);

/// Bisects until hi - lo <= max_width. An exactly hit rational root
/// collapses the bracket to a point enclosure (returned as lo == hi).
Enclosure refine_root(const RootBracket& bracket, const Rational& max_width);

/// Same bisection, but keeps the open-bracket invariant; stops early only on
/// an exact rational root, in which case lo == hi == root.
RootBracket narrow_bracket(const RootBracket& bracket, const Rational& max_width);

}  // namespace irrat
