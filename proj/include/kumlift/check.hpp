#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kumlift/matrix.hpp"

namespace kumlift {

/// Exact certificate attached to a negative verdict.
struct Witness {
  std::string description;
  std::vector<RatMatrix> vectors;
  std::vector<Rational> values;
};

struct Check {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }

  static Check pass() { return {}; }
  static Check fail(Witness w) { return {false, std::move(w)}; }
};

/// Standard basis column e_i of length n.
RatMatrix unit_vector(std::size_t n, std::size_t i);

}  // namespace kumlift
