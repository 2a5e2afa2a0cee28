#include "irrat/niven/niven.hpp"

#include "irrat/exactnum/constant.hpp"

#include <algorithm>

namespace irrat {

namespace {

void require_index(unsigned long n) {
  if (n < 1) throw Error(ErrorKind::BadIndex, "Niven index must be >= 1");
}

// sum_{i=0}^{2n} (-1)^i P^(2n-i) Q^i f^(i)(point); only i >= n contributes.
template <typename Ring>
Ring alternating_derivative_sum(unsigned long n, const Ring& freq, const Integer& scale, Endpoint point) {
  Ring total(0);
  for (unsigned long i = n; i <= 2 * n; ++i) {
    Integer deriv = niven_derivative_at(n, i, point);
    if (deriv == 0) continue;
    Integer coeff = deriv * pow(scale, i);
    if (i % 2 == 1) coeff = -coeff;
    total += pow(freq, 2 * n - i) * Ring(coeff);
  }
  return total;
}

}  // namespace

IntPolynomial scaled_niven_poly(unsigned long n) {
  require_index(n);
  std::vector<Integer> c(2 * n + 1, Integer(0));
  for (unsigned long i = 0; i <= n; ++i) {
    c[n + i] = binomial(n, i);
    if (i % 2 == 1) c[n + i] = -c[n + i];
  }
  return IntPolynomial(std::move(c));
}

RationalPolynomial niven_poly(unsigned long n) {
  const Rational inv_fact = make_rational(1, factorial(n));
  return inv_fact * to_rational(scaled_niven_poly(n));
}

Integer niven_derivative_at(unsigned long n, unsigned long j, Endpoint point) {
  require_index(n);
  if (j < n || j > 2 * n) return 0;
  // f = sum_i (-1)^i C(n,i) x^(n+i) / n!, so f^(j)(0) = j! (-1)^(j-n) C(n, j-n) / n!.
  Integer value = factorial(j) / factorial(n) * binomial(n, j - n);
  if ((j - n) % 2 == 1) value = -value;
  // f(x) = f(1-x) gives f^(j)(1) = (-1)^j f^(j)(0).
  if (point == Endpoint::One && j % 2 == 1) value = -value;
  return value;
}

FPair capital_f_int(unsigned long n, const Integer& k) {
  require_index(n);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "F_{n,k} needs k >= 1");
  return {alternating_derivative_sum<Integer>(n, k, 1, Endpoint::Zero),
          alternating_derivative_sum<Integer>(n, k, 1, Endpoint::One)};
}

FPair capital_f_rational(unsigned long n, const Rational& r) {
  require_index(n);
  if (r == 0) throw Error(ErrorKind::ZeroExponent, "F_{n,r} needs r != 0");
  const Integer p = r.get_num();
  const Integer q = r.get_den();
  return {alternating_derivative_sum<Integer>(n, p, q, Endpoint::Zero),
          alternating_derivative_sum<Integer>(n, p, q, Endpoint::One)};
}

GaussResult capital_f_gauss(unsigned long n, const Integer& p, const Integer& q) {
  require_index(n);
  if (p < 1 || q < 1) {
    throw Error(ErrorKind::AngleOutOfRange, "angle p/q needs p >= 1 and q >= 1");
  }
  if (p * 100000 > q * 314159) {
    if (p * 113 <= q * 355) {
      throw Error(ErrorKind::AngleNearPi,
                  "angle " + p.get_str() + "/" + q.get_str() + " is too close to pi to decide p/q <= pi");
    }
    throw Error(ErrorKind::AngleOutOfRange, "angle " + p.get_str() + "/" + q.get_str() + " exceeds pi");
  }
  const GaussianInteger freq(0, p);
  GaussFPair values{alternating_derivative_sum<GaussianInteger>(n, freq, q, Endpoint::Zero),
                    alternating_derivative_sum<GaussianInteger>(n, freq, q, Endpoint::One)};
  TrigCertificate cert;
  cert.n = n;
  cert.p = p;
  cert.q = q;
  cert.a = values.at0.re;
  cert.b = values.at0.im;
  cert.c = values.at1.re;
  cert.d = values.at1.im;
  cert.bound = make_rational(pow(p, 2 * n + 1), factorial(n) * q);
  return {values, cert};
}

Rational capital_f_int_bound(unsigned long n, const Integer& k) {
  require_index(n);
  Rational ek = enclose_exp(Rational(k), Rational(1, 1000)).hi();
  return ek * make_rational(pow(k, 2 * n + 1), factorial(n));
}

Rational capital_f_rational_bound(unsigned long n, const Rational& r) {
  require_index(n);
  if (r == 0) throw Error(ErrorKind::ZeroExponent, "F_{n,r} needs r != 0");
  Rational growth = std::max(Rational(1), enclose_exp(r, Rational(1, 1000)).hi());
  Integer p = abs(r.get_num());
  return growth * make_rational(pow(p, 2 * n + 1), r.get_den() * factorial(n));
}

}  // namespace irrat
