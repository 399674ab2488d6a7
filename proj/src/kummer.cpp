#include "kumlift/kummer.hpp"

#include <stdexcept>

namespace kumlift {

namespace {

RatMatrix repeat_diag(const RatMatrix& m, int n) { return block_diag(std::vector<RatMatrix>(n, m)); }

// Positions of V_{N x A} coordinates in the order H1(N), H1(N^), H1(A), H1(Â).
std::vector<std::size_t> product_legend(std::size_t rn, std::size_t ra) {
  std::vector<std::size_t> perm;
  const std::size_t half = rn + ra;
  for (std::size_t i = 0; i < rn; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < rn; ++i) perm.push_back(half + i);
  for (std::size_t i = 0; i < ra; ++i) perm.push_back(rn + i);
  for (std::size_t i = 0; i < ra; ++i) perm.push_back(half + rn + i);
  return perm;
}

}  // namespace

TorusHom kummer_isogeny(const Subtorus& kernel, const ComplexTorus& a, int n) {
  const RatMatrix diagonal = vstack(std::vector<RatMatrix>(n, RatMatrix::identity(a.lattice_rank())));
  return make_hom(product_torus({kernel.torus, a}), kernel.inclusion.target, hstack({kernel.inclusion.M, diagonal}));
}

KummerContext make_kummer_context(const ComplexTorus& a, const ComplexTorus& a2, int n, bool any_dimension) {
  if (n < 2) throw std::invalid_argument("make_kummer_context: n must be at least 2");
  if (a.g != a2.g) throw std::invalid_argument("make_kummer_context: dimensions differ");
  if (!any_dimension && a.g != 2) throw std::invalid_argument("make_kummer_context: surfaces (g = 2) only");
  const TorusHom sigma = summation_hom(a, n);
  const TorusHom sigma2 = summation_hom(a2, n);
  const Subtorus kernel = kernel_subtorus(sigma);
  const Subtorus kernel2 = kernel_subtorus(sigma2);
  const TorusHom q = kummer_isogeny(kernel, a, n);
  const TorusHom q2 = kummer_isogeny(kernel2, a2, n);
  const RatMatrix projection = hstack({RatMatrix::zero(a.lattice_rank(), kernel.torus.lattice_rank()),
                                       RatMatrix::identity(a.lattice_rank())});
  if (sigma.M * q.M != Rational(n) * projection) throw std::logic_error("make_kummer_context: square does not commute");
  return {a,
          a2,
          n,
          sigma,
          sigma2,
          kernel,
          kernel2,
          q,
          q2,
          make_context(q),
          make_context(q2),
          make_context(scalar_hom(a, n)),
          make_context(scalar_hom(a2, n))};
}

SymplecticMap diag_embed(const SymplecticMap& g, int n) {
  const ComplexTorus an = product_torus(std::vector<ComplexTorus>(n, g.source));
  const ComplexTorus a2n = product_torus(std::vector<ComplexTorus>(n, g.target));
  return {an, a2n,
          block2x2(repeat_diag(g.block(1), n), repeat_diag(g.block(2), n), repeat_diag(g.block(3), n),
                   repeat_diag(g.block(4), n))};
}

Check kummer_criterion(const SymplecticMap& g, int n) {
  const RatMatrix g2 = g.block(2);
  const Rational inv_n(1, n);
  for (std::size_t j = 0; j < g2.cols(); ++j) {
    const RatMatrix t = inv_n * unit_vector(g2.cols(), j);
    const RatMatrix image = g2 * t;
    if (!(inv_n * image).is_integral())
      return Check::fail({"(1/n) lattice vector not mapped into n times the lattice", {t, image}, {Rational(n)}});
  }
  return Check::pass();
}

LiftResult kummer_transport(const KummerContext& k, const SymplecticMap& g) {
  return lift_criterion(k.ctx, k.ctx2, orlov_matrix(diag_embed(g, k.n)));
}

LiftResult transport_and_restrict(const KummerContext& k, const SymplecticMap& g) {
  if (!is_symplectic_hat(g)) throw std::invalid_argument("transport_and_restrict: map is not symplectic");
  if (LiftResult equivariant = lift_criterion(k.n_ctx, k.n_ctx2, orlov_matrix(g)); !equivariant)
    return equivariant;
  return kummer_transport(k, g);
}

std::optional<Splitting> split(const KummerContext& k, const BlockIso& f) {
  const std::size_t rn = k.kernel.torus.lattice_rank(), ra = k.a.lattice_rank();
  const std::size_t rn2 = k.kernel2.torus.lattice_rank(), ra2 = k.a2.lattice_rank();
  if (f.F.cols() != 2 * (rn + ra) || f.F.rows() != 2 * (rn2 + ra2))
    throw std::invalid_argument("split: map does not act on V_{N x A}");
  const RatMatrix m = f.F.permute_rows(product_legend(rn2, ra2)).permute_cols(product_legend(rn, ra));
  if (!m.block(0, 2 * rn, 2 * rn2, 2 * ra).is_zero() || !m.block(2 * rn2, 0, 2 * ra2, 2 * rn).is_zero())
    return std::nullopt;
  return Splitting{
      {mukai_space(k.kernel.torus), mukai_space(k.kernel2.torus), m.block(0, 0, 2 * rn2, 2 * rn)},
      {mukai_space(k.a), mukai_space(k.a2), m.block(2 * rn2, 2 * rn, 2 * ra2, 2 * ra)}};
}

SymplecticMap eta2_symplectic(const SymplecticMap& g, int n) {
  const Rational nn(n);
  return {g.source, g.target,
          block2x2(g.block(1), Rational(1, n) * g.block(2), nn * g.block(3), g.block(4))};
}

bool eta2_projection_check(const KummerContext& k, const SymplecticMap& g) {
  if (!kummer_criterion(g, k.n)) throw std::invalid_argument("eta2_projection_check: criterion fails");
  const LiftResult transported = transport_and_restrict(k, g);
  if (!transported) return false;
  const auto parts = split(k, *transported.gamma);
  return parts && parts->eta2.F == orlov_iso_of_sp(g).F;
}

}  // namespace kumlift
