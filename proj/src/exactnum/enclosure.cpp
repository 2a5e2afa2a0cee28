#include "irrat/exactnum/enclosure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace irrat {

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw Error(ErrorKind::InvalidArgument, "enclosure with lo > hi");
  }
}

Rational Enclosure::max_abs() const { return std::max(abs(lo_), abs(hi_)); }

Rational Enclosure::min_abs() const {
  if (lo_ > 0) return lo_;
  if (hi_ < 0) return -hi_;
  return 0;
}

Enclosure Enclosure::clamp(const Rational& a, const Rational& b) const {
  return {std::max(lo_, a), std::min(hi_, b)};
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  Rational a = lo_ * o.lo_;
  Rational b = lo_ * o.hi_;
  Rational c = hi_ * o.lo_;
  Rational d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Enclosure operator*(const Rational& s, const Enclosure& e) {
  if (s >= 0) return {s * e.lo_, s * e.hi_};
  return {s * e.hi_, s * e.lo_};
}

Enclosure Enclosure::reciprocal() const {
  if (!excludes_zero()) {
    throw Error(ErrorKind::InvalidArgument, "reciprocal of an enclosure containing zero");
  }
  return {1 / hi_, 1 / lo_};
}

Enclosure Enclosure::pow(unsigned long exp) const {
  Rational plo = irrat::pow(lo_, exp);
  Rational phi = irrat::pow(hi_, exp);
  if (exp % 2 == 1 || lo_ >= 0) return {plo, phi};
  if (hi_ <= 0) return {phi, plo};
  return {Rational(0), std::max(plo, phi)};
}

std::string to_string(const Enclosure& e) {
  return "[" + to_string(e.lo()) + ", " + to_string(e.hi()) + "]";
}

namespace {

std::atomic<unsigned long> budget_override{0};

unsigned long env_budget() {
  static const unsigned long value = [] {
    const char* raw = std::getenv("IRRATCERT_MAX_REFINE");
    if (raw == nullptr) return 1'000'000UL;
    char* end = nullptr;
    unsigned long parsed = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) return 1'000'000UL;
    return parsed;
  }();
  return value;
}

}  // namespace

unsigned long refinement_budget() {
  unsigned long o = budget_override.load();
  return o != 0 ? o : env_budget();
}

void set_refinement_budget(unsigned long steps) { budget_override.store(steps); }

Enclosure refine_until(const Rational& start,
                       const std::function<Enclosure(const Rational&)>& evaluate,
                       const std::function<bool(const Enclosure&)>& accept,
                       ErrorKind on_exhaust) {
  Rational width = start;
  const unsigned long budget = refinement_budget();
  for (unsigned long step = 0; step < budget; ++step) {
    Enclosure result = evaluate(width);
    if (accept(result)) return result;
    width /= 2;
  }
  throw Error(on_exhaust, "refinement budget of " + std::to_string(budget) + " steps exhausted");
}

}  // namespace irrat
