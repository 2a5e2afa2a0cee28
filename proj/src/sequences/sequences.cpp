#include "irrat/sequences/sequences.hpp"

#include "irrat/exactnum/constant.hpp"

namespace irrat {

namespace {

void require_index(unsigned long n) {
  if (n < 1) throw Error(ErrorKind::BadIndex, "sequence index must be >= 1");
}

unsigned long checked_root_index(const Integer& a, unsigned long m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "root index must be >= 2");
  if (a < 2 || is_perfect_power(a, m)) {
    throw Error(ErrorKind::PerfectPower, a.get_str() + " is a perfect " + std::to_string(m) + "-th power");
  }
  return m;
}

// ratios[i] = top!/i! for i = 0..top, built by one descending product.
std::vector<Integer> factorial_ratios(unsigned long top) {
  std::vector<Integer> ratios(top + 1);
  Integer acc = 1;
  for (unsigned long i = top + 1; i-- > 0;) {
    ratios[i] = acc;
    acc *= i;
  }
  return ratios;
}

Integer factorial_sum(unsigned long top, bool alternating) {
  auto ratios = factorial_ratios(top);
  Integer sum = 0;
  for (unsigned long i = 0; i <= top; ++i) {
    if (alternating && i % 2 == 1) {
      sum -= ratios[i];
    } else {
      sum += ratios[i];
    }
  }
  return sum;
}

}  // namespace

Rational mth_root_bound(const Integer& a, unsigned long m, unsigned long n) {
  require_index(n);
  checked_root_index(a, m);
  const Integer z = integer_root(a, m);
  const unsigned long e = m * n - 1;
  // Tighten until the width is small against alpha - z, so the upper bound
  // stays within a factor exp(1/4) of the true value.
  Enclosure alpha = refine_until(
      Rational(1, 16), [&](const Rational& w) { return enclose_root(a, m, w); },
      [&](const Enclosure& enc) {
        Rational gap = enc.lo() - z;
        return gap > 0 && enc.width() * 4 * Rational(e) <= gap;
      });
  return pow(Rational(alpha.hi() - z), e);
}

BoundedApproximant sqrt_approximant(const Integer& m, unsigned long n) {
  require_index(n);
  checked_root_index(m, 2);
  const Integer z = integer_root(m, 2);
  const unsigned long top = 2 * n - 1;
  Integer p = 0, q = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    p += binomial(top, 2 * k - 1) * pow(m, n - k) * pow(z, 2 * k - 1);
  }
  for (unsigned long k = 0; k + 1 <= n; ++k) {
    q += binomial(top, 2 * k) * pow(m, n - 1 - k) * pow(z, 2 * k);
  }
  return {{n, p, q}, {mth_root_bound(m, 2, n), true}};
}

PowerForm mth_root_form(const Integer& a, unsigned long m, unsigned long n) {
  require_index(n);
  checked_root_index(a, m);
  const Integer z = integer_root(a, m);
  const Integer neg_z = -z;
  const unsigned long top = m * n - 1;
  PowerForm form;
  form.coeffs.assign(m, Integer(0));
  for (unsigned long l = 0; l < m; ++l) {
    for (unsigned long k = 0; k < n; ++k) {
      unsigned long j = m * k + l;
      if (j > top) continue;
      form.coeffs[l] += binomial(top, j) * pow(a, k) * pow(neg_z, top - j);
    }
  }
  return form;
}

BoundedApproximant e_approximant(unsigned long n) {
  require_index(n);
  return {{n, factorial_sum(n, false), factorial(n)}, {Rational(1, n), true}};
}

BoundedApproximant inv_e_approximant(unsigned long n) {
  require_index(n);
  // q/e - p = n! sum_{i>n} (-1)^i / i! alternates in sign with n.
  return {{n, factorial_sum(n, true), factorial(n)}, {Rational(1, n), false}};
}

BoundedApproximant e_squared_approximant(unsigned long n) {
  require_index(n);
  // |q e^2 - p| <= e |q e - (2n)!| + |(2n)! e - p| < e^2/(2n+1) + 1/(2n),
  // rounded up to (e^2 + 1)/(2n) with an upper bound for e^2.
  Enclosure e2 = enclose_exp(2, Rational(1, 1000));
  Rational bound = (e2.hi() + 1) / Rational(2 * n);
  return {{n, factorial_sum(2 * n, false), factorial_sum(2 * n, true)}, {bound, true}};
}

BoundedApproximant e_squared_naive_approximant(unsigned long n) {
  auto base = e_approximant(n);
  Approximant sq{n, base.approx.p * base.approx.p, base.approx.q * base.approx.q};
  return {sq, {Rational(1, n), true}};
}

BoundedApproximant sin_inv_m_approximant(const Integer& m, unsigned long n) {
  require_index(n);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "sin-inv needs m >= 1");
  const unsigned long top = 4 * n - 1;
  auto ratios = factorial_ratios(top);
  Integer p = 0;
  for (unsigned long k = 0; k <= 2 * n - 1; ++k) {
    Integer term = ratios[2 * k + 1] * pow(m, 4 * n - 2 * k - 2);
    if (k % 2 == 1) {
      p -= term;
    } else {
      p += term;
    }
  }
  Integer q = pow(m, top) * ratios[0];
  Rational bound = 1 / (Rational(m * m) * Rational(16 * n * n) - 1);
  return {{n, p, q}, {bound, true}};
}

BoundedApproximant cos_inv_m_approximant(const Integer& m, unsigned long n) {
  require_index(n);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cos-inv needs m >= 1");
  const unsigned long top = 4 * n - 2;
  auto ratios = factorial_ratios(top);
  Integer p = 0;
  for (unsigned long k = 0; k <= 2 * n - 1; ++k) {
    Integer term = ratios[2 * k] * pow(m, 4 * n - 2 * k - 2);
    if (k % 2 == 1) {
      p -= term;
    } else {
      p += term;
    }
  }
  Integer q = pow(m, top) * ratios[0];
  // The omitted tail starts with +1/(m^2 (4n)(4n-1)) and alternates with
  // decreasing terms, so that first term bounds it.
  Rational bound = 1 / (Rational(m * m) * Rational(4 * n) * Rational(4 * n - 1));
  return {{n, p, q}, {bound, true}};
}

Approximant reciprocal(const Approximant& a) {
  if (a.p == 0) {
    throw Error(ErrorKind::ZeroNumerator, "term n=" + std::to_string(a.n) + " has p = 0");
  }
  return {a.n, a.q, a.p};
}

std::vector<Approximant> reciprocal(const std::vector<Approximant>& seq) {
  std::vector<Approximant> out;
  out.reserve(seq.size());
  for (const auto& a : seq) out.push_back(reciprocal(a));
  return out;
}

Approximant compose_chain(const Approximant& a, const Approximant& b) {
  if (a.n != b.n) {
    throw Error(ErrorKind::ChainMismatch,
                "index mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
  }
  if (b.p != a.q) {
    throw Error(ErrorKind::ChainMismatch, "term n=" + std::to_string(a.n) + ": linking numerator " +
                                              b.p.get_str() + " != denominator " + a.q.get_str());
  }
  return {a.n, a.p, b.q};
}

std::vector<Approximant> compose_chain(const std::vector<Approximant>& a, const std::vector<Approximant>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ChainMismatch, "sequences differ in length");
  std::vector<Approximant> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(compose_chain(a[i], b[i]));
  return out;
}

Approximant scaled_compose(const Approximant& a, const Approximant& b, const Integer& d, const Rational& cap) {
  if (a.n != b.n) throw Error(ErrorKind::ChainMismatch, "index mismatch");
  if (abs(Rational(d)) > cap) {
    throw Error(ErrorKind::CapExceeded, "|d_" + std::to_string(a.n) + "| = " + abs(d).get_str() +
                                            " exceeds cap " + to_string(cap));
  }
  if (a.q != d * b.p) {
    throw Error(ErrorKind::DivisibilityViolation,
                "term n=" + std::to_string(a.n) + ": " + a.q.get_str() + " != d * " + b.p.get_str());
  }
  return {a.n, a.p, d * b.q};
}

Approximant rescale(const Approximant& a, const Integer& scale) {
  if (scale == 0) throw Error(ErrorKind::ZeroScale, "rescale by zero");
  return {a.n, a.p, scale * a.q};
}

}  // namespace irrat
