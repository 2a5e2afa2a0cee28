#include "irrat/exactnum/number.hpp"

#include <limits>

namespace irrat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PerfectPower: return "PerfectPower";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::BracketAmbiguous: return "BracketAmbiguous";
    case ErrorKind::Unresolvable: return "Unresolvable";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ZeroNumerator: return "ZeroNumerator";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorKind::AngleNearPi: return "AngleNearPi";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer integer_root(const Integer& a, unsigned long m) {
  if (a < 0 || m == 0) {
    throw Error(ErrorKind::InvalidArgument, "integer_root needs a >= 0 and m >= 1");
  }
  Integer out;
  mpz_root(out.get_mpz_t(), a.get_mpz_t(), m);
  return out;
}

bool is_perfect_power(const Integer& a, unsigned long m) {
  return pow(integer_root(a, m), m) == a;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_decimal(text)) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

unsigned long to_ulong(const Integer& z, std::string_view what) {
  if (z < 0 || !z.fits_ulong_p()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " out of range: " + z.get_str());
  }
  return z.get_ui();
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  Integer scaled = r.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());
  bool negative = r < 0;
  std::string mag = abs(scaled).get_str();
  if (mag.size() <= static_cast<std::size_t>(digits)) {
    mag.insert(0, static_cast<std::size_t>(digits) + 1 - mag.size(), '0');
  }
  std::string out = mag.substr(0, mag.size() - digits);
  if (digits > 0) out += "." + mag.substr(mag.size() - digits);
  return negative ? "-" + out : out;
}

GaussianInteger& GaussianInteger::operator*=(const GaussianInteger& o) {
  Integer real = re * o.re - im * o.im;
  Integer imag = re * o.im + im * o.re;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

GaussianInteger pow(const GaussianInteger& base, unsigned long exp) {
  GaussianInteger result(1);
  GaussianInteger b = base;
  while (exp > 0) {
    if (exp & 1UL) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

std::string to_string(const GaussianInteger& g) {
  std::string out = g.re.get_str();
  if (g.im < 0) {
    out += " - " + Integer(-g.im).get_str() + "i";
  } else {
    out += " + " + g.im.get_str() + "i";
  }
  return out;
}

}  // namespace irrat
