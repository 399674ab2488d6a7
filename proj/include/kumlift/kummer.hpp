#pragma once

#include <optional>

#include "kumlift/lift.hpp"

namespace kumlift {

/// q: N x A -> A^n, (x, a) -> incl(x) + (a, ..., a), for both A and A'.
/// ctx/ctx2 are the contexts of q and q'; n_ctx/n_ctx2 those of
/// multiplication by n on A and A'.
struct KummerContext {
  ComplexTorus a;
  ComplexTorus a2;
  int n = 2;
  TorusHom sigma;
  TorusHom sigma2;
  Subtorus kernel;
  Subtorus kernel2;
  TorusHom q;
  TorusHom q2;
  IsogenyContext ctx;
  IsogenyContext ctx2;
  IsogenyContext n_ctx;
  IsogenyContext n_ctx2;
};

/// The isogeny N x A -> A^n built from the inclusion of N and the diagonal.
TorusHom kummer_isogeny(const Subtorus& kernel, const ComplexTorus& a, int n);

/// Requires surfaces (g = 2) unless any_dimension is set.
KummerContext make_kummer_context(const ComplexTorus& a, const ComplexTorus& a2, int n, bool any_dimension = false);

/// Each block g_i becomes diag(g_i, ..., g_i).
SymplecticMap diag_embed(const SymplecticMap& g, int n);

/// g2 maps (1/n) of the lattice of Â into n times the lattice of A'.
Check kummer_criterion(const SymplecticMap& g, int n);

/// Transport of diag_embed(g) along q, q' without the equivariance stage.
LiftResult kummer_transport(const KummerContext& k, const SymplecticMap& g);

/// Equivariance under the n-torsion of the dual (lift along n_A, n_A'), then
/// transport of diag_embed(g) to V_{N x A} -> V_{N' x A'}.
LiftResult transport_and_restrict(const KummerContext& k, const SymplecticMap& g);

struct Splitting {
  BlockIso eta1;
  BlockIso eta2;
};

/// Reads V_{N x A} as V_N + V_A and returns the diagonal blocks when both
/// off-diagonal blocks vanish.
std::optional<Splitting> split(const KummerContext& k, const BlockIso& f);

/// [[g1, g2/n], [n g3, g4]]: the symplectic map whose Mukai action is the A-leg
/// of the transported map.
SymplecticMap eta2_symplectic(const SymplecticMap& g, int n);

/// The A-leg of the transported map equals orlov_iso_of_sp(g). Throws
/// std::invalid_argument when the criterion fails.
bool eta2_projection_check(const KummerContext& k, const SymplecticMap& g);

}  // namespace kumlift
