#include "irrat/algebraic/roots.hpp"

#include <algorithm>

namespace irrat {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

std::size_t sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Smallest power of two strictly above every root magnitude (Cauchy bound).
Rational root_bound(const IntPolynomial& f) {
  Rational cauchy = 0;
  Rational lead = abs(Rational(f.leading()));
  for (long k = 0; k < f.degree(); ++k) {
    Rational ratio = abs(Rational(f.coeffs()[static_cast<std::size_t>(k)])) / lead;
    if (ratio > cauchy) cauchy = ratio;
  }
  cauchy += 1;
  Rational bound = 1;
  while (bound <= cauchy) bound *= 2;
  return bound;
}

}  // namespace

std::vector<RationalPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<RationalPolynomial> chain;
  chain.push_back(to_rational(f));
  chain.push_back(chain.back().derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

std::size_t count_real_roots(const IntPolynomial& f, const Rational& lo, const Rational& hi) {
  if (f.evaluate(lo) == 0 || f.evaluate(hi) == 0) {
    throw Error(ErrorKind::InvalidArgument, "count_real_roots endpoint is a root");
  }
  auto chain = sturm_sequence(f);
  std::size_t vlo = sign_variations(chain, lo);
  std::size_t vhi = sign_variations(chain, hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

std::vector<RootBracket> isolate_real_roots(const IntPolynomial& f) {
  if (f.degree() < 1) {
    throw Error(ErrorKind::InvalidArgument, "root isolation needs degree >= 1");
  }
  if (!is_squarefree(f)) {
    throw Error(ErrorKind::NotSquarefree, "polynomial " + to_display_string(f) + " has a repeated root");
  }
  auto chain = sturm_sequence(f);
  auto variations = [&](const Rational& x) { return sign_variations(chain, x); };

  std::vector<RootBracket> out;
  struct Pending {
    Rational lo, hi;
    std::size_t vlo, vhi;
  };
  Rational bound = root_bound(f);
  std::vector<Pending> stack{{-bound, bound, variations(-bound), variations(bound)}};
  unsigned long steps = 0;
  const unsigned long budget = refinement_budget();
  while (!stack.empty()) {
    if (++steps > budget) {
      throw Error(ErrorKind::PrecisionExhausted, "root isolation exceeded refinement budget");
    }
    Pending cur = stack.back();
    stack.pop_back();
    std::size_t count = cur.vlo - cur.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({cur.lo, cur.hi, f});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    if (f.evaluate(mid) != 0) {
      std::size_t vmid = variations(mid);
      stack.push_back({mid, cur.hi, vmid, cur.vhi});
      stack.push_back({cur.lo, mid, cur.vlo, vmid});
      continue;
    }
    // Exact rational root at the midpoint: carve out a small bracket around it.
    Rational delta = (cur.hi - cur.lo) / 4;
    while (true) {
      Rational a = mid - delta, b = mid + delta;
      if (f.evaluate(a) != 0 && f.evaluate(b) != 0) {
        std::size_t va = variations(a), vb = variations(b);
        if (va - vb == 1) {
          stack.push_back({b, cur.hi, vb, cur.vhi});
          out.push_back({a, b, f});
          stack.push_back({cur.lo, a, cur.vlo, va});
          break;
        }
      }
      delta /= 2;
    }
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

RootBracket narrow_bracket(const RootBracket& bracket, const Rational& max_width) {
  RootBracket b = bracket;
  int slo = sign_of(b.poly.evaluate(b.lo));
  while (b.hi - b.lo > max_width) {
    Rational mid = (b.lo + b.hi) / 2;
    int smid = sign_of(b.poly.evaluate(mid));
    if (smid == 0) {
      b.lo = mid;
      b.hi = mid;
      break;
    }
    if (smid == slo) {
      b.lo = mid;
    } else {
      b.hi = mid;
    }
  }
  return b;
}

Enclosure refine_root(const RootBracket& bracket, const Rational& max_width) {
  RootBracket b = narrow_bracket(bracket, max_width);
  return {b.lo, b.hi};
}

}  // namespace irrat
