#include "kumlift/lattice.hpp"

#include <stdexcept>

namespace kumlift {

namespace {

Rational floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

void require_full_rank(const RatMatrix& basis, const char* what) {
  if (!basis.is_square() || basis.rank() != basis.rows())
    throw std::invalid_argument(std::string(what) + ": basis is not full rank");
}

}  // namespace

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::optional<RatMatrix> lattice_solve(const RatMatrix& m, const RatMatrix& b) {
  if (b.cols() != 1 || b.rows() != m.rows()) throw std::invalid_argument("lattice_solve: dimension mismatch");
  Integer scale = m.denominator_lcm();
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b.denominator_lcm().get_mpz_t());
  const Rational s(scale);
  const SnfDecomposition dec = snf(s * m);
  const RatMatrix ub = dec.U * (s * b);
  const std::size_t k = dec.rank();
  std::vector<Rational> y(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < k) {
      const Rational yi = ub(i, 0) / dec.D(i, i);
      if (yi.get_den() != 1) return std::nullopt;
      y[i] = yi;
    } else if (sgn(ub(i, 0)) != 0) {
      return std::nullopt;
    }
  }
  return dec.V * RatMatrix::column(y);
}

std::optional<Integer> sublattice_index(const RatMatrix& l_basis, const RatMatrix& m_basis) {
  require_full_rank(l_basis, "sublattice_index");
  require_full_rank(m_basis, "sublattice_index");
  if (l_basis.rows() != m_basis.rows()) throw std::invalid_argument("sublattice_index: ambient mismatch");
  const RatMatrix c = l_basis.inverse() * m_basis;
  if (!c.is_integral()) return std::nullopt;
  return abs(c.determinant().get_num());
}

FiniteAbelianGroup finite_quotient(const RatMatrix& l_basis, const RatMatrix& m_basis) {
  require_full_rank(l_basis, "finite_quotient");
  require_full_rank(m_basis, "finite_quotient");
  if (l_basis.rows() != m_basis.rows()) throw std::invalid_argument("finite_quotient: ambient mismatch");
  const RatMatrix c = l_basis.inverse() * m_basis;
  if (!c.is_integral()) throw std::invalid_argument("finite_quotient: sublattice not contained in lattice");
  const SnfDecomposition dec = snf(c);
  const RatMatrix lift = l_basis * dec.U.inverse();
  const RatMatrix m_inv = m_basis.inverse();
  FiniteAbelianGroup out;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    const Integer d = dec.D(i, i).get_num();
    if (d < 2) continue;
    // Reduce the representative modulo M to the half-open fundamental box.
    const RatMatrix g = lift.col(i);
    out.invariant_factors.push_back(d);
    out.generators.push_back(m_basis * fractional_part(m_inv * g));
  }
  return out;
}

RatMatrix integer_kernel(const RatMatrix& m) {
  const RatMatrix scaled = Rational(m.denominator_lcm()) * m;
  const SnfDecomposition dec = snf(scaled);
  const std::size_t k = dec.rank();
  return dec.V.block(0, k, m.cols(), m.cols() - k);
}

bool is_saturated(const RatMatrix& basis) {
  if (!basis.is_integral()) return false;
  const SnfDecomposition dec = snf(basis);
  for (std::size_t i = 0; i < dec.rank(); ++i)
    if (dec.D(i, i) != 1) return false;
  return true;
}

RatMatrix fractional_part(const RatMatrix& v) {
  std::vector<Rational> e;
  e.reserve(v.entries().size());
  for (const auto& x : v.entries()) e.push_back(x - floor_of(x));
  return {v.rows(), v.cols(), std::move(e)};
}

}  // namespace kumlift
