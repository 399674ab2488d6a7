#pragma once

#include <optional>

#include "kumlift/mukai.hpp"

namespace kumlift {

/// Isogeny q: B -> A with G = ker(q̂) and the rational isometry
/// iota = (q^*, (q̂^*)^{-1}): V_A -> V_B. The lift lattice is the column span of iota.
struct IsogenyContext {
  TorusHom q;
  TorusHom q_hat;
  FiniteAbelianGroup G;
  RatMatrix iota;
  MukaiSpace space_a;
  MukaiSpace space_b;

  const RatMatrix& lift_lattice() const { return iota; }
};

IsogenyContext make_context(const TorusHom& q, int eps = kDoubleDualSign);

/// gamma on V_B -> V_B' is a special Hodge isometry carrying the lift lattice of
/// ctx onto that of ctx2. Witness: a lattice vector and its non-integral coordinates.
Check in_G_SO(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& gamma);
Check in_G_SO(const IsogenyContext& ctx, const BlockIso& gamma);

struct LiftResult {
  std::optional<BlockIso> gamma;
  std::optional<Witness> witness;

  explicit operator bool() const { return gamma.has_value(); }
};

/// gamma = iota' F iota^{-1}, returned when integral.
LiftResult lift_criterion(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& f);
LiftResult lift_criterion(const IsogenyContext& ctx, const BlockIso& f);

/// iota'^{-1} gamma iota. Throws std::invalid_argument when gamma is not in G-SO.
BlockIso restrict_res(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& gamma);
BlockIso restrict_res(const IsogenyContext& ctx, const BlockIso& gamma);

/// Divisibility form of in_G_SO for multiplication by n: the F2 blocks of
/// gamma and gamma^{-1} vanish mod n^2.
Check n_context_closed_form(long n, const BlockIso& gamma);

/// Torsion translation on B, torsion twist on the dual, and a shift.
struct OrlovKernelElement {
  TorsionPoint translation;
  TorsionPoint twist;
  long shift = 0;
};

enum class KernelDirection { up, down };

/// up: (b, a, k) -> (b, q̂ a, k) for a on Â. down: (b, a, k) -> (q b, a, k).
OrlovKernelElement kernel_maps(const IsogenyContext& ctx, const OrlovKernelElement& k, KernelDirection direction);

/// Every generator t of G satisfies g2 t = 0 modulo the lattice of A'.
Check rouquier_maps_G_into_dual(const SymplecticMap& g, const FiniteAbelianGroup& group);

}  // namespace kumlift
