#pragma once

#include "irrat/algebraic/algebraic.hpp"
#include "irrat/exactnum/constant.hpp"
#include "irrat/sequences/sequences.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace irrat {

/// What a row's integers stand for.
enum class RowKind {
  Pair,       // residual q*alpha - p
  PowerForm,  // residual sum d_l alpha^l
  Trig,       // residual c cos(x) - d sin(x) - a, with F(0) = a + bi, F(1) = c + di
};

struct TrigTerms {
  Integer a;
  Integer b;
  Integer c;
  Integer d;

  friend bool operator==(const TrigTerms&, const TrigTerms&) = default;
};

struct CertificateRow {
  unsigned long n = 0;
  Integer p;                    // Pair rows
  Integer q;                    // Pair rows
  std::vector<Integer> coeffs;  // PowerForm rows
  TrigTerms trig;               // Trig rows
  Enclosure residual;
  Rational bound;
  bool nonzero_ok = false;
  bool bound_ok = false;
};

struct Verdict {
  bool nice = false;
  unsigned long violated_row = 0;  // n of the first failing row when !nice

  std::string to_string() const;
  static Verdict parse(const std::string& text);
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Certificate {
  std::string constant;  // canonical ConstantSpec text
  std::string family;
  RowKind kind = RowKind::Pair;
  std::vector<CertificateRow> rows;
  Verdict verdict;
  /// Free-form notes: the backing theorem, observed coefficient growth,
  /// unchecked quantities.
  std::map<std::string, std::string> metadata;
};

}  // namespace irrat
