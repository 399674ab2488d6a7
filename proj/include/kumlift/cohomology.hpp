#pragma once

#include <optional>
#include <vector>

#include "kumlift/torus.hpp"

namespace kumlift {

using IndexSet = std::vector<std::size_t>;

/// Exterior algebra on `generators` basis vectors; degree-m basis is the
/// m-subsets in lexicographic order.
struct ExteriorAlgebra {
  std::size_t generators = 0;
  std::vector<std::vector<IndexSet>> basis;

  std::size_t dimension(std::size_t m) const { return basis.at(m).size(); }
  std::size_t total_dimension() const;
  std::size_t index_of(const IndexSet& s) const;
};

ExteriorAlgebra exterior_algebra(std::size_t generators);

/// e_S ^ e_T = sign * e_{S u T}; sign 0 when the sets meet.
std::pair<int, IndexSet> wedge(const IndexSet& s, const IndexSet& t);

/// m-th exterior power: entry (I, J) is the minor on rows I, columns J.
RatMatrix exterior_power(const RatMatrix& m, std::size_t k);

/// Per-degree blocks. blocks[m] maps source degree m to target degree m,
/// or to top - m when reverses_degree is set.
struct GradedMap {
  std::size_t source_generators = 0;
  std::size_t target_generators = 0;
  bool reverses_degree = false;
  std::vector<RatMatrix> blocks;

  std::size_t target_degree(std::size_t m) const { return reverses_degree ? source_generators - m : m; }
};

/// f after h, degree by degree.
GradedMap compose(const GradedMap& f, const GradedMap& h);
GradedMap scale(const Rational& s, const GradedMap& f);

/// Pullback H*(target) -> H*(source), exterior powers of M^T.
GradedMap induced_pullback(const TorusHom& f);

/// Signed Poincaré duality H^m(T) -> H^{2g-m}(T^) against e_1 ^ ... ^ e_2g, with
/// sign (-1)^{m(m+1)/2}. flip_degree negates one more degree.
GradedMap poincare_phi(const ComplexTorus& t, std::optional<std::size_t> flip_degree = std::nullopt);

struct PdDiscrepancy {
  std::size_t degree;
  std::size_t row;
  std::size_t col;
  Rational lhs;
  Rational rhs;
};

struct PdSquareResult {
  bool holds = true;
  Integer degree;
  std::optional<PdDiscrepancy> witness;
};

/// deg(q) phi_A == q̂^* phi_B q^* for q: B -> A. flip_degree mutates phi_A only.
PdSquareResult check_pd_square(const TorusHom& q, std::optional<std::size_t> flip_degree = std::nullopt);

}  // namespace kumlift
