#pragma once

#include "kumlift/check.hpp"
#include "kumlift/torus.hpp"

namespace kumlift {

/// V_X = H^1(X) + H^1(dual X), in that block order.
struct MukaiSpace {
  ComplexTorus base;
  RatMatrix gram;
  RatMatrix J;

  std::size_t rank() const { return gram.rows(); }
  std::size_t half() const { return base.lattice_rank(); }
  friend bool operator==(const MukaiSpace& a, const MukaiSpace& b) {
    return a.base == b.base && a.gram == b.gram;
  }
};

/// Gram [[0,I],[I,0]], scaled by eps for level-1 bases.
/// J_V = diag(J^T, J_dual^T).
MukaiSpace mukai_space(const ComplexTorus& t, int eps = kDoubleDualSign);

/// Lattice map V_A -> V_A'. Blocks: F1 H1(A)->H1(A'), F2 H1(Â)->H1(A'),
/// F3 H1(A)->H1(Â'), F4 H1(Â)->H1(Â').
struct BlockIso {
  MukaiSpace source;
  MukaiSpace target;
  RatMatrix F;

  RatMatrix block(int k) const;
};

BlockIso make_block_iso(const MukaiSpace& source, const MukaiSpace& target, const RatMatrix& f);
BlockIso identity_iso(const MukaiSpace& v);
/// f after h.
BlockIso compose(const BlockIso& f, const BlockIso& h);
BlockIso invert(const BlockIso& f);

/// F^T Gram' F == Gram; witness is the first basis pair whose pairing changes.
Check is_isometry(const BlockIso& f);
/// F J == J' F; witness is the first failing column.
Check is_hodge(const BlockIso& f);
/// det F == 1.
Check is_special(const BlockIso& f);

/// H_1 map A x Â -> A' x Â' with blocks g1: A->A', g2: Â->A', g3: A->Â', g4: Â->Â'.
struct SymplecticMap {
  ComplexTorus source;
  ComplexTorus target;
  RatMatrix g;

  std::size_t half() const { return source.lattice_rank(); }
  RatMatrix block(int k) const;
  TorusHom hom(int k) const;
};

/// Validates shapes and complex-linearity of every block.
SymplecticMap make_block_map(const ComplexTorus& source, const ComplexTorus& target, const RatMatrix& g);
SymplecticMap assemble(const TorusHom& g1, const TorusHom& g2, const TorusHom& g3, const TorusHom& g4);
SymplecticMap compose(const SymplecticMap& f, const SymplecticMap& h);

/// [[ĝ4, -ĝ2], [-ĝ3, ĝ1]].
RatMatrix hat_inverse(const SymplecticMap& g, int eps = kDoubleDualSign);
/// g^{-1} == hat_inverse(g). Throws std::domain_error if g is singular.
Check is_symplectic_hat(const SymplecticMap& g, int eps = kDoubleDualSign);

/// Inverse transpose of the H_1 matrix, without any symplectic check.
BlockIso orlov_matrix(const SymplecticMap& g, int eps = kDoubleDualSign);
/// Throws std::invalid_argument unless g is symplectic.
BlockIso orlov_iso_of_sp(const SymplecticMap& g, int eps = kDoubleDualSign);

}  // namespace kumlift
