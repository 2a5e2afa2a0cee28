#include "irrat/algebraic/algebraic.hpp"

#include <algorithm>

namespace irrat {

PowerForm reduce_power_form(const IntPolynomial& modulus, const std::vector<Integer>& c) {
  if (!modulus.is_monic()) {
    throw Error(ErrorKind::NotMonic, "modulus " + to_display_string(modulus) + " is not monic");
  }
  const long m = modulus.degree();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must have degree >= 1");
  const auto mm = static_cast<std::size_t>(m);

  std::vector<Integer> work = c;
  // alpha^top = alpha^(top-m) * alpha^m = -alpha^(top-m) * sum_{k<m} b_k alpha^k
  for (std::size_t top = work.size(); top-- > mm;) {
    Integer lead = work[top];
    if (lead == 0) continue;
    for (std::size_t k = 0; k < mm; ++k) {
      work[top - mm + k] -= modulus.coeffs()[k] * lead;
    }
    work[top] = 0;
  }
  work.resize(mm, Integer(0));
  return PowerForm{std::move(work)};
}

PowerForm monic_certificate(const IntPolynomial& modulus, const Integer& z, unsigned long n) {
  if (n < 1) throw Error(ErrorKind::BadIndex, "index must be >= 1");
  // (x - z)^n = sum_k C(n, k) x^k (-z)^(n-k)
  std::vector<Integer> c(n + 1);
  Integer neg_z = -z;
  for (unsigned long k = 0; k <= n; ++k) {
    c[k] = binomial(n, k) * pow(neg_z, n - k);
  }
  return reduce_power_form(modulus, c);
}

IntPolynomial monic_transform(const IntPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "monic_transform needs degree >= 1");
  const auto m = static_cast<unsigned long>(f.degree());
  const Integer& a = f.leading();
  std::vector<Integer> g(m + 1);
  for (unsigned long k = 0; k < m; ++k) {
    g[k] = f.coeffs()[k] * pow(a, m - k - 1);
  }
  g[m] = 1;
  return IntPolynomial(std::move(g));
}

std::vector<Integer> integer_root_test(const IntPolynomial& g) {
  if (!g.is_monic()) {
    throw Error(ErrorKind::NotMonic, "integer_root_test expects a monic polynomial");
  }
  std::vector<Integer> roots;
  const Integer c0 = g.coeff(0);
  if (c0 == 0) {
    roots.push_back(0);
    // Remaining nonzero roots are roots of g / x^j for the lowest nonzero j.
    std::size_t j = 0;
    while (g.coeff(j) == 0) ++j;
    std::vector<Integer> rest(g.coeffs().begin() + static_cast<long>(j), g.coeffs().end());
    IntPolynomial shifted(std::move(rest));
    if (shifted.degree() >= 1) {
      for (auto& r : integer_root_test(shifted)) roots.push_back(r);
    }
    return roots;
  }
  // Any integer root divides c0 (g is monic). Enumerate divisors up to sqrt.
  Integer n = abs(c0);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    Integer other = n / d;
    if (other != d) large.push_back(other);
  }
  std::vector<Integer> divisors = small;
  divisors.insert(divisors.end(), large.rbegin(), large.rend());
  for (const auto& d : divisors) {
    if (g.evaluate(d) == 0) roots.push_back(d);
    Integer neg = -d;
    if (g.evaluate(neg) == 0) roots.push_back(neg);
  }
  return roots;
}

std::vector<RootVerdict> classify_roots(const IntPolynomial& f) {
  auto brackets = isolate_real_roots(f);
  const IntPolynomial g = monic_transform(f);
  const Integer& a = f.leading();
  const Rational unit = make_rational(1, abs(a));

  std::vector<RootVerdict> out;
  for (const auto& raw : brackets) {
    RootBracket b = narrow_bracket(raw, Rational(1, 4));
    RootVerdict verdict{b, std::nullopt};
    // Narrow until a * bracket has width <= 1, so at most one integer
    // candidate for a * alpha remains.
    RootBracket fine = narrow_bracket(b, unit);
    if (fine.lo == fine.hi) {
      verdict.rational_value = fine.lo;
      verdict.bracket = b;
    } else {
      Rational slo = a * fine.lo, shi = a * fine.hi;
      if (a < 0) std::swap(slo, shi);
      for (Integer z = floor(slo) + 1; z < shi; ++z) {
        if (g.evaluate(z) == 0) {
          verdict.rational_value = make_rational(z, a);
          break;
        }
      }
    }
    out.push_back(std::move(verdict));
  }
  return out;
}

}  // namespace irrat
