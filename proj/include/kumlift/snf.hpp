#pragma once

#include "kumlift/matrix.hpp"

namespace kumlift {

/// U * source * V == D with U, V unimodular and D in Smith form
/// (d1 | d2 | ..., zeros last).
struct SnfDecomposition {
  RatMatrix source;
  RatMatrix U;
  RatMatrix D;
  RatMatrix V;

  /// Number of nonzero invariant factors.
  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

/// Smith normal form of an integer matrix. Pivot is the entry of smallest
/// absolute value, ties to the lowest row, then lowest column.
/// Throws std::invalid_argument on non-integer input.
SnfDecomposition snf(const RatMatrix& m);

}  // namespace kumlift
