#pragma once

// Golden CLI runs: arguments, expected exit code, substrings the report or
// diagnostic must contain, and whether stdout is a JSON certificate.

#include <string>
#include <vector>

namespace golden {

struct Run {
  std::vector<std::string> args;
  int exit_code;
  std::vector<std::string> stdout_has;
  std::vector<std::string> stderr_has;
  bool certificate_json = false;
};

inline const std::vector<Run>& corpus() {
  static const std::vector<Run> runs = {
      {{"cert", "--family", "sqrt", "--m", "2", "--n-max", "10", "--format", "json"},
       0, {"\"verdict\": \"nice\"", "\"p\": \"7\"", "\"q\": \"5\""}, {}, true},
      {{"classify", "--poly", "1,1,-5,2"},
       0, {"bracket (-1/2, -1/4): irrational", "bracket (1/2, 3/4): irrational", "bracket (2, 9/4): irrational"}, {}},
      {{"cert", "--family", "e-squared-naive", "--n-max", "8"}, 2, {"verdict: violated:1"}, {}},
      {{"cert", "--family", "e-squared-naive", "--n-max", "3", "--format", "json"},
       2, {"\"verdict\": \"violated:1\"", "\"p\": \"256\""}, {}, true},
      {{"cert", "--family", "sin-inv", "--m", "1", "--n-max", "4", "--format", "json"},
       0, {"\"p\": \"5\"", "\"q\": \"6\"", "\"bound\": \"1/15\""}, {}, true},
      {{"cert", "--family", "trig-angle", "--x", "1", "--n-max", "3", "--format", "json"},
       0, {"\"a\": \"-2\"", "\"b\": \"-1\"", "\"row_kind\": \"trig\""}, {}, true},
      {{"cert", "--family", "root", "--a", "2", "--m", "3", "--n-max", "4", "--format", "json"},
       0, {"\"19\"", "\"-5\"", "\"-8\"", "\"row_kind\": \"power-form\""}, {}, true},
      {{"pigeonhole", "--constant", "sqrt:2", "--n", "3", "--n", "5"}, 0, {"p=4  q=3", "p=7  q=5"}, {}},
      {{"reduce", "--modulus", "-2,0,0,1", "--coeffs", "-1,5,-10,10,-5,1"}, 0, {"d = (19,-5,-8)"}, {}},
      {{"fracpart", "--constant", "e", "--q", "6", "--format", "json"}, 0, {"\"q\": \"6\""}, {}},
      {{"cert", "--family", "sqrt", "--m", "4"}, 1, {}, {"error[PerfectPower]"}},
      {{"cert", "--family", "bogus"}, 1, {}, {"unknown family 'bogus'"}},
      {{"cert", "--n-max", "3"}, 1, {}, {"--family is required"}},
      {{"frobnicate"}, 1, {}, {"frobnicate"}},
      {{"classify", "--poly", "1,2,1"}, 1, {}, {"error[NotSquarefree]"}},
  };
  return runs;
}

}  // namespace golden
