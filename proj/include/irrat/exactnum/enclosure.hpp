#pragma once

#include "irrat/exactnum/number.hpp"

#include <functional>
#include <string>

namespace irrat {

/// Closed rational interval [lo, hi] certified to contain some real value.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  /// max(|lo|, |hi|): an upper bound for |value|.
  Rational max_abs() const;
  /// Lower bound for |value|; zero when the interval straddles zero.
  Rational min_abs() const;

  bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  /// True when the interval lies strictly inside (a, b).
  bool strictly_inside(const Rational& a, const Rational& b) const { return a < lo_ && hi_ < b; }

  /// Intersection with [a, b]; both must overlap.
  Enclosure clamp(const Rational& a, const Rational& b) const;

  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator-(const Enclosure& a) { return {-a.hi_, -a.lo_}; }

  friend Enclosure operator*(const Rational& s, const Enclosure& e);
  friend Enclosure operator+(const Enclosure& e, const Rational& s) { return {e.lo_ + s, e.hi_ + s}; }
  friend Enclosure operator-(const Enclosure& e, const Rational& s) { return {e.lo_ - s, e.hi_ - s}; }

  /// Interval reciprocal; the interval must exclude zero.
  Enclosure reciprocal() const;
  Enclosure pow(unsigned long exp) const;

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

std::string to_string(const Enclosure& e);

/// Refinement budget shared by every iterative routine. Reads
/// IRRATCERT_MAX_REFINE once; defaults to 1'000'000 steps.
unsigned long refinement_budget();
/// Test hook: overrides the budget for the current process (0 restores the
/// environment/default value).
void set_refinement_budget(unsigned long steps);

/// Calls `evaluate(w)` with w = start, start/2, start/4, ... until
/// `accept(result)` holds, and returns that result. Throws `on_exhaust`
/// once the refinement budget is spent.
Enclosure refine_until(const Rational& start,
                       const std::function<Enclosure(const Rational&)>& evaluate,
                       const std::function<bool(const Enclosure&)>& accept,
                       ErrorKind on_exhaust = ErrorKind::PrecisionExhausted);

}  // namespace irrat
