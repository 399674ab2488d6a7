#pragma once

#include <string>
#include <vector>

#include "kumlift/lattice.hpp"
#include "kumlift/matrix.hpp"

namespace kumlift {

/// Sign in the identification of the double dual lattice with the original.
inline constexpr int kDoubleDualSign = -1;

/// Complex torus on the standard lattice Z^{2g} with rational complex
/// structure J. dual_level is 1 for tori presented as duals of a level-0
/// torus; dualizing twice returns the original presentation.
struct ComplexTorus {
  int g = 0;
  RatMatrix J;
  std::string label;
  int dual_level = 0;

  std::size_t lattice_rank() const { return static_cast<std::size_t>(2 * g); }
  friend bool operator==(const ComplexTorus& a, const ComplexTorus& b) {
    return a.g == b.g && a.J == b.J && a.dual_level == b.dual_level;
  }
};

ComplexTorus make_torus(int g, const RatMatrix& j, std::string label = "X");
/// Dual torus: complex structure -J^T, dual basis coordinates.
ComplexTorus dual_torus(const ComplexTorus& t);
/// Product with block-diagonal complex structure. All factors must share a dual level.
ComplexTorus product_torus(const std::vector<ComplexTorus>& factors);

/// H_1 pushforward between lattices, commuting with complex structures.
struct TorusHom {
  ComplexTorus source;
  ComplexTorus target;
  RatMatrix M;

  bool integral() const { return M.is_integral(); }
};

/// Throws std::invalid_argument on dimension mismatch or M J_S != J_T M.
TorusHom make_hom(const ComplexTorus& source, const ComplexTorus& target, const RatMatrix& m);
TorusHom identity_hom(const ComplexTorus& t);
/// Multiplication by n.
TorusHom scalar_hom(const ComplexTorus& t, long n);
/// f after h.
TorusHom compose(const TorusHom& f, const TorusHom& h);
/// Dual homomorphism dual(target) -> dual(source). The matrix is M^T, times
/// eps once for each level-1 endpoint.
TorusHom dual_hom(const TorusHom& f, int eps = kDoubleDualSign);

/// |det M| for an integral isogeny; throws std::domain_error otherwise.
Integer isogeny_degree(const TorusHom& f);
/// M^{-1}(Z^{2g'}) / Z^{2g}, generators normalized into [0,1).
FiniteAbelianGroup kernel_group(const TorusHom& f);

struct TorsionPoint {
  ComplexTorus torus;
  RatMatrix v;
  Integer order;
};

/// Normalizes v into [0,1) and computes its order.
TorsionPoint make_torsion_point(const ComplexTorus& t, const RatMatrix& v);
/// Point b with f(b) = p, chosen as the normalized representative of M^{-1} p.
TorsionPoint point_preimage(const TorusHom& f, const TorsionPoint& p);
/// Image f(p) normalized.
TorsionPoint point_image(const TorusHom& f, const TorsionPoint& p);

/// Summation A^n -> A.
TorusHom summation_hom(const ComplexTorus& a, int n);

struct Subtorus {
  ComplexTorus torus;
  TorusHom inclusion;
};

/// Kernel N of a summation map, with basis u_i = e(slot i) - e(slot n).
Subtorus kernel_subtorus(const TorusHom& sigma);

/// Integral basis of Hom(S, T) as a lattice: X with X J_S = J_T X.
std::vector<RatMatrix> hom_lattice_basis(const ComplexTorus& source, const ComplexTorus& target);

}  // namespace kumlift
