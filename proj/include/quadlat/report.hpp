#pragma once

// Uniform pass/fail report for every verification routine.
//
// Matrix identity checks: size = truncation N, valid_rows = jointly valid
// rows compared, witness = first offending (row, column).
//
// Polynomial-level checks reuse the shape: size = the degree bound checked,
// valid_rows = number of sub-assertions run, witness = [n, assertion index].

#include <array>
#include <optional>
#include <string>

#include "quadlat/rational.hpp"

namespace quadlat {

struct CheckReport {
  std::string kind;
  int size = 0;
  int valid_rows = 0;
  bool pass = false;
  Rational residual_max = 0;
  std::optional<std::array<int, 2>> witness;
};

}  // namespace quadlat
