#include "kumlift/mukai.hpp"

#include <stdexcept>

namespace kumlift {

namespace {

RatMatrix hyperbolic(std::size_t half) {
  const RatMatrix z = RatMatrix::zero(half, half);
  const RatMatrix i = RatMatrix::identity(half);
  return block2x2(z, i, i, z);
}

RatMatrix quarter(const RatMatrix& m, std::size_t rh, std::size_t ch, int k) {
  switch (k) {
    case 1: return m.block(0, 0, rh, ch);
    case 2: return m.block(0, ch, rh, ch);
    case 3: return m.block(rh, 0, rh, ch);
    case 4: return m.block(rh, ch, rh, ch);
    default: throw std::out_of_range("block index must be 1..4");
  }
}

}  // namespace

MukaiSpace mukai_space(const ComplexTorus& t, int eps) {
  const std::size_t h = t.lattice_rank();
  const Rational s = t.dual_level == 1 ? eps : 1;
  const ComplexTorus d = dual_torus(t);
  return {t, s * hyperbolic(h), block_diag({t.J.transpose(), d.J.transpose()})};
}

RatMatrix BlockIso::block(int k) const { return quarter(F, target.half(), source.half(), k); }

BlockIso make_block_iso(const MukaiSpace& source, const MukaiSpace& target, const RatMatrix& f) {
  if (f.rows() != target.rank() || f.cols() != source.rank())
    throw std::invalid_argument("block map shape does not match Mukai spaces");
  return {source, target, f};
}

BlockIso identity_iso(const MukaiSpace& v) { return {v, v, RatMatrix::identity(v.rank())}; }

BlockIso compose(const BlockIso& f, const BlockIso& h) {
  if (!(h.target == f.source)) throw std::invalid_argument("compose: Mukai spaces do not match");
  return {h.source, f.target, f.F * h.F};
}

BlockIso invert(const BlockIso& f) { return {f.target, f.source, f.F.inverse()}; }

Check is_isometry(const BlockIso& f) {
  const RatMatrix pulled = f.F.transpose() * f.target.gram * f.F;
  const std::size_t n = f.source.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pulled(i, j) != f.source.gram(i, j))
        return Check::fail({"pairing changes", {unit_vector(n, i), unit_vector(n, j)},
                            {f.source.gram(i, j), pulled(i, j)}});
  return Check::pass();
}

Check is_hodge(const BlockIso& f) {
  const RatMatrix lhs = f.F * f.source.J;
  const RatMatrix rhs = f.target.J * f.F;
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (lhs.col(j) != rhs.col(j))
      return Check::fail({"complex structure not preserved", {unit_vector(lhs.cols(), j), lhs.col(j), rhs.col(j)}, {}});
  return Check::pass();
}

Check is_special(const BlockIso& f) {
  if (!f.F.is_square()) return Check::fail({"not square", {}, {}});
  const Rational d = f.F.determinant();
  if (d == 1) return Check::pass();
  return Check::fail({"determinant", {}, {d}});
}

RatMatrix SymplecticMap::block(int k) const { return quarter(g, target.lattice_rank(), half(), k); }

TorusHom SymplecticMap::hom(int k) const {
  const ComplexTorus sd = dual_torus(source), td = dual_torus(target);
  switch (k) {
    case 1: return {source, target, block(1)};
    case 2: return {sd, target, block(2)};
    case 3: return {source, td, block(3)};
    case 4: return {sd, td, block(4)};
    default: throw std::out_of_range("block index must be 1..4");
  }
}

SymplecticMap make_block_map(const ComplexTorus& source, const ComplexTorus& target, const RatMatrix& g) {
  const std::size_t a = source.lattice_rank(), b = target.lattice_rank();
  if (g.rows() != 2 * b || g.cols() != 2 * a) throw std::invalid_argument("block map shape does not match tori");
  SymplecticMap out{source, target, g};
  for (int k = 1; k <= 4; ++k) {
    const TorusHom h = out.hom(k);
    make_hom(h.source, h.target, h.M);
  }
  return out;
}

SymplecticMap assemble(const TorusHom& g1, const TorusHom& g2, const TorusHom& g3, const TorusHom& g4) {
  const ComplexTorus& a = g1.source;
  const ComplexTorus& a2 = g1.target;
  const ComplexTorus ad = dual_torus(a), a2d = dual_torus(a2);
  if (!(g2.source == ad && g2.target == a2 && g3.source == a && g3.target == a2d && g4.source == ad &&
        g4.target == a2d))
    throw std::invalid_argument("assemble: block types do not match A x Â -> A' x Â'");
  return make_block_map(a, a2, block2x2(g1.M, g2.M, g3.M, g4.M));
}

SymplecticMap compose(const SymplecticMap& f, const SymplecticMap& h) {
  if (!(h.target == f.source)) throw std::invalid_argument("compose: tori do not match");
  return {h.source, f.target, f.g * h.g};
}

RatMatrix hat_inverse(const SymplecticMap& g, int eps) {
  return block2x2(dual_hom(g.hom(4), eps).M, -dual_hom(g.hom(2), eps).M, -dual_hom(g.hom(3), eps).M,
                  dual_hom(g.hom(1), eps).M);
}

Check is_symplectic_hat(const SymplecticMap& g, int eps) {
  const auto inv = g.g.try_inverse();
  if (!inv) throw std::domain_error("is_symplectic_hat: assembled map is singular");
  const RatMatrix hat = hat_inverse(g, eps);
  for (std::size_t j = 0; j < hat.cols(); ++j)
    if (inv->col(j) != hat.col(j))
      return Check::fail({"inverse differs from hat-block matrix", {unit_vector(hat.cols(), j), inv->col(j), hat.col(j)}, {}});
  return Check::pass();
}

BlockIso orlov_matrix(const SymplecticMap& g, int eps) {
  return {mukai_space(g.source, eps), mukai_space(g.target, eps), g.g.inverse().transpose()};
}

BlockIso orlov_iso_of_sp(const SymplecticMap& g, int eps) {
  if (!is_symplectic_hat(g, eps)) throw std::invalid_argument("orlov_iso_of_sp: map is not symplectic");
  return orlov_matrix(g, eps);
}

}  // namespace kumlift
