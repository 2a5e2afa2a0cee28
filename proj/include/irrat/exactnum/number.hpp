#pragma once

// Exact integer / rational / Gaussian-integer arithmetic.
//
// Integer and Rational are GMP's C++ classes. gmpxx keeps mpq_class values
// canonical (reduced, positive denominator) after every arithmetic operator;
// the helpers below restore that invariant for values built from raw parts.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irrat {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  PerfectPower,
  ZeroExponent,
  BracketAmbiguous,
  Unresolvable,
  PrecisionExhausted,
  BadIndex,
  ZeroNumerator,
  ChainMismatch,
  DivisibilityViolation,
  CapExceeded,
  ZeroScale,
  NotMonic,
  NotSquarefree,
  AngleOutOfRange,
  AngleNearPi,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every module reports failures through this one exception type; kind()
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Builds num/den in lowest terms. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Rational abs(const Rational& r);
Integer abs(const Integer& z);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Floor of the m-th root of a >= 0.
Integer integer_root(const Integer& a, unsigned long m);
bool is_perfect_power(const Integer& a, unsigned long m);

/// "num/den" with den always printed (JSON wire form).
std::string to_fraction_string(const Rational& r);
/// "num" for integers, "num/den" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "n/d". Throws ParseError.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
/// Comma-separated integers, e.g. "1,-5,2".
std::vector<Integer> parse_integer_list(std::string_view text);

/// Fits the value into an unsigned long or throws InvalidArgument.
unsigned long to_ulong(const Integer& z, std::string_view what);

/// Decimal rendering with a fixed number of fractional digits (truncated
/// toward zero). Display only.
std::string to_decimal(const Rational& r, int digits);

struct GaussianInteger {
  Integer re;
  Integer im;

  GaussianInteger() = default;
  GaussianInteger(Integer real, Integer imag = 0)
      : re(std::move(real)), im(std::move(imag)) {}

  static GaussianInteger i() { return {0, 1}; }

  GaussianInteger& operator+=(const GaussianInteger& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInteger& operator*=(const GaussianInteger& o);

  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(GaussianInteger a, const GaussianInteger& b) { return a *= b; }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianInteger pow(const GaussianInteger& base, unsigned long exp);
std::string to_string(const GaussianInteger& g);

}  // namespace irrat
