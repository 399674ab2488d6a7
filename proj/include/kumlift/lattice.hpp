#pragma once

#include <optional>

#include "kumlift/matrix.hpp"
#include "kumlift/snf.hpp"

namespace kumlift {

/// L/M for lattices M ⊆ L. Generators are coset representatives in the
/// ambient rational space; generator k has order invariant_factors[k].
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::vector<RatMatrix> generators;

  Integer order() const;
  bool trivial() const { return invariant_factors.empty(); }
};

/// Integral x with M x == b, if one exists.
std::optional<RatMatrix> lattice_solve(const RatMatrix& m, const RatMatrix& b);

/// Index [L : M] of the column lattices, or nullopt when M is not inside L.
std::optional<Integer> sublattice_index(const RatMatrix& l_basis, const RatMatrix& m_basis);

/// Throws std::invalid_argument when M is not inside L.
FiniteAbelianGroup finite_quotient(const RatMatrix& l_basis, const RatMatrix& m_basis);

/// Saturated integral basis (as columns) of {x in Z^n : M x = 0}.
RatMatrix integer_kernel(const RatMatrix& m);

/// True when Z^n / (column span) is torsion-free.
bool is_saturated(const RatMatrix& basis);

/// Entrywise fractional part, values in [0, 1).
RatMatrix fractional_part(const RatMatrix& v);

}  // namespace kumlift
