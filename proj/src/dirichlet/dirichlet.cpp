#include "irrat/dirichlet/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace irrat {

PigeonholeResult pigeonhole_approximant(const ConstantSpec& c, const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "pigeonhole needs n >= 1");
  const unsigned long count = to_ulong(n, "pigeonhole n");

  // floors[k] = floor(n k alpha). That single integer fixes both floor(k alpha)
  // and the bin of {k alpha}. Enclosures of alpha are nested, so floors
  // resolved at a coarser width stay valid after refinement.
  std::vector<Integer> floors(count + 1);
  Rational width = Rational(1, 4) / (n * (n + 1) * n * n);
  Enclosure alpha = enclose(c, width);
  const unsigned long budget = refinement_budget();
  unsigned long steps = 0;
  for (unsigned long k = 1; k <= count;) {
    Rational scale = n * k;
    Integer lo = floor(scale * alpha.lo());
    Integer hi = floor(scale * alpha.hi());
    if (lo == hi) {
      floors[k] = lo;
      ++k;
      continue;
    }
    if (++steps > budget) {
      throw Error(ErrorKind::PrecisionExhausted, "could not resolve floor(" + std::to_string(k) + " * " +
                                                     c.to_string() + ") within the refinement budget");
    }
    width /= 2;
    alpha = enclose(c, width);
  }

  std::map<Integer, std::vector<unsigned long>> bins;
  for (unsigned long k = 0; k <= count; ++k) {
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), floors[k].get_mpz_t(), n.get_mpz_t());
    Integer j = floors[k] - whole * n;
    bins[j].push_back(k);
  }
  for (const auto& [j, ks] : bins) {
    if (ks.size() < 2) continue;
    const unsigned long k_small = ks[0];
    const unsigned long k_large = ks[1];
    auto floor_k = [&](unsigned long k) {
      Integer whole;
      mpz_fdiv_q(whole.get_mpz_t(), floors[k].get_mpz_t(), n.get_mpz_t());
      return whole;
    };
    PigeonholeResult out;
    out.n = n;
    out.q = k_large - k_small;
    out.p = floor_k(k_large) - floor_k(k_small);
    out.bin = j;
    out.k_small = k_small;
    out.k_large = k_large;
    const Rational limit = make_rational(1, n);
    out.residual = refine_until(
        limit / 4,
        [&](const Rational& w) {
          return Rational(out.q) * enclose(c, w / out.q) - Rational(out.p);
        },
        [&](const Enclosure& e) { return e.max_abs() < limit; });
    return out;
  }
  // n + 1 points in n bins always collide.
  throw Error(ErrorKind::Unresolvable, "no bin collision found");
}

Enclosure fractional_residual(const Integer& q, const ConstantSpec& c, const Rational& max_width) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "fractional_residual needs q != 0");
  if (max_width <= 0) throw Error(ErrorKind::InvalidArgument, "width must be positive");
  const Rational scale(q);
  const Rational abs_q = abs(scale);
  // t(t-1) has slope at most 1 on [0, 1], so a width-w enclosure of {q alpha}
  // gives a width-w result.
  Enclosure qa = refine_until(
      max_width,
      [&](const Rational& w) { return scale * enclose(c, w / abs_q); },
      [](const Enclosure& e) { return floor(e.lo()) == floor(e.hi()); });
  const Integer z = floor(qa.lo());
  const Rational tlo = qa.lo() - z;
  const Rational thi = qa.hi() - z;
  auto g = [](const Rational& t) { return Rational(t * (t - 1)); };
  const Rational half(1, 2);
  Rational hi = std::max(g(tlo), g(thi));
  Rational lo = (tlo <= half && half <= thi) ? Rational(-1, 4) : std::min(g(tlo), g(thi));
  return {lo, hi};
}

}  // namespace irrat
