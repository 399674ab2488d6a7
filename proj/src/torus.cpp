#include "kumlift/torus.hpp"

#include <stdexcept>

namespace kumlift {

namespace {

int sign_power(int eps, int exponent) { return exponent % 2 == 0 ? 1 : eps; }

}  // namespace

ComplexTorus make_torus(int g, const RatMatrix& j, std::string label) {
  if (g <= 0) throw std::invalid_argument("make_torus: dimension must be positive");
  const std::size_t r = static_cast<std::size_t>(2 * g);
  if (j.rows() != r || j.cols() != r) throw std::invalid_argument("make_torus: J must be 2g x 2g");
  if (j * j != -RatMatrix::identity(r)) throw std::invalid_argument("make_torus: J^2 != -I");
  return {g, j, std::move(label), 0};
}

ComplexTorus dual_torus(const ComplexTorus& t) {
  std::string label = t.label;
  if (label.size() > 1 && label.back() == '^' && t.dual_level == 1)
    label.pop_back();
  else
    label += '^';
  return {t.g, -t.J.transpose(), std::move(label), 1 - t.dual_level};
}

ComplexTorus product_torus(const std::vector<ComplexTorus>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_torus: no factors");
  std::vector<RatMatrix> js;
  std::string label;
  int g = 0;
  for (const auto& f : factors) {
    if (f.dual_level != factors.front().dual_level)
      throw std::invalid_argument("product_torus: mixed dual levels");
    js.push_back(f.J);
    g += f.g;
    label += (label.empty() ? "" : "x") + f.label;
  }
  return {g, block_diag(js), label, factors.front().dual_level};
}

TorusHom make_hom(const ComplexTorus& source, const ComplexTorus& target, const RatMatrix& m) {
  if (m.rows() != target.lattice_rank() || m.cols() != source.lattice_rank())
    throw std::invalid_argument("make_hom: matrix shape does not match tori");
  if (m * source.J != target.J * m)
    throw std::invalid_argument("make_hom: matrix does not commute with complex structures");
  return {source, target, m};
}

TorusHom identity_hom(const ComplexTorus& t) { return {t, t, RatMatrix::identity(t.lattice_rank())}; }

TorusHom scalar_hom(const ComplexTorus& t, long n) {
  return {t, t, Rational(n) * RatMatrix::identity(t.lattice_rank())};
}

TorusHom compose(const TorusHom& f, const TorusHom& h) {
  if (!(h.target == f.source)) throw std::invalid_argument("compose: tori do not match");
  return {h.source, f.target, f.M * h.M};
}

TorusHom dual_hom(const TorusHom& f, int eps) {
  const int s = sign_power(eps, f.source.dual_level + f.target.dual_level);
  return {dual_torus(f.target), dual_torus(f.source), Rational(s) * f.M.transpose()};
}

Integer isogeny_degree(const TorusHom& f) {
  if (!f.M.is_square() || !f.integral()) throw std::domain_error("isogeny_degree: not an integral square map");
  const Integer d = abs(f.M.determinant().get_num());
  if (d == 0) throw std::domain_error("isogeny_degree: determinant is zero");
  return d;
}

FiniteAbelianGroup kernel_group(const TorusHom& f) {
  isogeny_degree(f);
  return finite_quotient(f.M.inverse(), RatMatrix::identity(f.M.rows()));
}

TorsionPoint make_torsion_point(const ComplexTorus& t, const RatMatrix& v) {
  if (v.cols() != 1 || v.rows() != t.lattice_rank())
    throw std::invalid_argument("make_torsion_point: vector length mismatch");
  return {t, fractional_part(v), v.denominator_lcm()};
}

TorsionPoint point_preimage(const TorusHom& f, const TorsionPoint& p) {
  isogeny_degree(f);
  return make_torsion_point(f.source, f.M.inverse() * p.v);
}

TorsionPoint point_image(const TorusHom& f, const TorsionPoint& p) {
  return make_torsion_point(f.target, f.M * p.v);
}

TorusHom summation_hom(const ComplexTorus& a, int n) {
  if (n < 2) throw std::invalid_argument("summation_hom: n must be at least 2");
  const RatMatrix id = RatMatrix::identity(a.lattice_rank());
  return make_hom(product_torus(std::vector<ComplexTorus>(n, a)), a,
                  hstack(std::vector<RatMatrix>(n, id)));
}

Subtorus kernel_subtorus(const TorusHom& sigma) {
  const std::size_t r = sigma.target.lattice_rank();
  if (r == 0 || sigma.M.cols() % r != 0) throw std::invalid_argument("kernel_subtorus: not a summation map");
  const std::size_t n = sigma.M.cols() / r;
  if (n < 2) throw std::invalid_argument("kernel_subtorus: n must be at least 2");
  const RatMatrix id = RatMatrix::identity(r);
  if (sigma.M != hstack(std::vector<RatMatrix>(n, id)))
    throw std::invalid_argument("kernel_subtorus: not a summation map");

  const std::size_t cols = (n - 1) * r;
  std::vector<Rational> e(n * r * cols, Rational(0));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      e[(i * r + k) * cols + i * r + k] = 1;
      e[((n - 1) * r + k) * cols + i * r + k] = -1;
    }
  const RatMatrix u(n * r, cols, std::move(e));

  if (!(sigma.M * u).is_zero() || !is_saturated(u))
    throw std::logic_error("kernel_subtorus: basis is not a saturated kernel basis");
  const RatMatrix ut = u.transpose();
  const RatMatrix jn = (ut * u).inverse() * ut * sigma.source.J * u;
  if (u * jn != sigma.source.J * u) throw std::logic_error("kernel_subtorus: kernel is not J-stable");

  ComplexTorus nt{static_cast<int>(cols / 2), jn, "N(" + sigma.target.label + ")", sigma.source.dual_level};
  return {nt, make_hom(nt, sigma.source, u)};
}

std::vector<RatMatrix> hom_lattice_basis(const ComplexTorus& source, const ComplexTorus& target) {
  const std::size_t a = source.lattice_rank(), b = target.lattice_rank();
  // Linear map vec(X) -> vec(X J_S - J_T X), X is b x a in row-major order.
  std::vector<Rational> e(b * a * b * a, Rational(0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const std::size_t row = i * a + j;
      for (std::size_t k = 0; k < a; ++k) e[row * b * a + i * a + k] += source.J(k, j);
      for (std::size_t k = 0; k < b; ++k) e[row * b * a + k * a + j] -= target.J(i, k);
    }
  const RatMatrix op(b * a, b * a, std::move(e));
  const RatMatrix ker = integer_kernel(op);
  std::vector<RatMatrix> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<Rational> x(ker.rows());
    for (std::size_t t = 0; t < ker.rows(); ++t) x[t] = ker(t, c);
    basis.emplace_back(b, a, std::move(x));
  }
  return basis;
}

}  // namespace kumlift
