#include "kumlift/lift.hpp"

#include <stdexcept>

namespace kumlift {

namespace {

Check so_hodge(const BlockIso& gamma) {
  if (auto c = is_isometry(gamma); !c) return c;
  if (auto c = is_hodge(gamma); !c) return c;
  return is_special(gamma);
}

// Each column of map * from lies in the column lattice of to.
Check carries_into(const RatMatrix& map, const RatMatrix& from, const RatMatrix& to, const char* what) {
  const RatMatrix to_inv = to.inverse();
  for (std::size_t j = 0; j < from.cols(); ++j) {
    const RatMatrix v = from.col(j);
    if (lattice_solve(to, map * v)) continue;
    const RatMatrix coords = to_inv * map * v;
    return Check::fail({what, {v, map * v, coords}, {coords.denominator_lcm()}});
  }
  return Check::pass();
}

}  // namespace

IsogenyContext make_context(const TorusHom& q, int eps) {
  isogeny_degree(q);
  const TorusHom q_hat = dual_hom(q, eps);
  const RatMatrix iota = block_diag({q.M.transpose(), q_hat.M.transpose().inverse()});
  return {q, q_hat, kernel_group(q_hat), iota, mukai_space(q.target, eps), mukai_space(q.source, eps)};
}

Check in_G_SO(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& gamma) {
  if (!gamma.F.is_integral()) throw std::invalid_argument("in_G_SO: map is not integral");
  if (!(gamma.source == ctx.space_b) || !(gamma.target == ctx2.space_b))
    throw std::invalid_argument("in_G_SO: map does not act on the contexts' Mukai spaces");
  if (auto c = so_hodge(gamma); !c) return c;
  if (auto c = carries_into(gamma.F, ctx.iota, ctx2.iota, "lift lattice not carried into target lift lattice"); !c)
    return c;
  return carries_into(gamma.F.inverse(), ctx2.iota, ctx.iota, "inverse does not carry lift lattice back");
}

Check in_G_SO(const IsogenyContext& ctx, const BlockIso& gamma) { return in_G_SO(ctx, ctx, gamma); }

LiftResult lift_criterion(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& f) {
  if (!(f.source == ctx.space_a) || !(f.target == ctx2.space_a))
    throw std::invalid_argument("lift_criterion: map does not act on the contexts' Mukai spaces");
  const RatMatrix gamma = ctx2.iota * f.F * ctx.iota.inverse();
  for (std::size_t j = 0; j < gamma.cols(); ++j) {
    const RatMatrix c = gamma.col(j);
    if (!c.is_integral())
      return {std::nullopt,
              Witness{"conjugate is not integral", {unit_vector(gamma.cols(), j), c}, {c.denominator_lcm()}}};
  }
  return {BlockIso{ctx.space_b, ctx2.space_b, gamma}, std::nullopt};
}

LiftResult lift_criterion(const IsogenyContext& ctx, const BlockIso& f) { return lift_criterion(ctx, ctx, f); }

BlockIso restrict_res(const IsogenyContext& ctx, const IsogenyContext& ctx2, const BlockIso& gamma) {
  if (!in_G_SO(ctx, ctx2, gamma)) throw std::invalid_argument("restrict_res: map is not in G-SO");
  return {ctx.space_a, ctx2.space_a, ctx2.iota.inverse() * gamma.F * ctx.iota};
}

BlockIso restrict_res(const IsogenyContext& ctx, const BlockIso& gamma) { return restrict_res(ctx, ctx, gamma); }

Check n_context_closed_form(long n, const BlockIso& gamma) {
  const Integer n2 = Integer(n) * n;
  auto divisible = [&](const BlockIso& m, const char* what) -> Check {
    const RatMatrix b = m.block(2);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(i, j).get_den() != 1 || !mpz_divisible_p(b(i, j).get_num_mpz_t(), n2.get_mpz_t()))
          return Check::fail({what, {unit_vector(m.source.rank(), m.source.half() + j)}, {b(i, j)}});
    return Check::pass();
  };
  if (!gamma.F.is_integral()) return Check::fail({"map is not integral", {}, {}});
  if (auto c = divisible(gamma, "F2 block not divisible by n^2"); !c) return c;
  return divisible(invert(gamma), "inverse F2 block not divisible by n^2");
}

OrlovKernelElement kernel_maps(const IsogenyContext& ctx, const OrlovKernelElement& k, KernelDirection direction) {
  if (direction == KernelDirection::up) return {k.translation, point_image(ctx.q_hat, k.twist), k.shift};
  return {point_image(ctx.q, k.translation), k.twist, k.shift};
}

Check rouquier_maps_G_into_dual(const SymplecticMap& g, const FiniteAbelianGroup& group) {
  const RatMatrix g2 = g.block(2);
  for (const auto& t : group.generators) {
    const RatMatrix image = g2 * t;
    if (!image.is_integral()) return Check::fail({"generator not mapped into the dual factor", {t, image}, {}});
  }
  return Check::pass();
}

}  // namespace kumlift
