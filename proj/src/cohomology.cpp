#include "kumlift/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace kumlift {

namespace {

void subsets_of_size(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  IndexSet cur;
  subsets_of_size(n, k, 0, cur, out);
  return out;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i)
      ++j;
    else
      out.push_back(i);
  }
  return out;
}

}  // namespace

std::size_t ExteriorAlgebra::total_dimension() const {
  std::size_t d = 0;
  for (const auto& b : basis) d += b.size();
  return d;
}

std::size_t ExteriorAlgebra::index_of(const IndexSet& s) const {
  const auto& b = basis.at(s.size());
  const auto it = std::lower_bound(b.begin(), b.end(), s);
  if (it == b.end() || *it != s) throw std::invalid_argument("index_of: not a basis subset");
  return static_cast<std::size_t>(it - b.begin());
}

ExteriorAlgebra exterior_algebra(std::size_t generators) {
  ExteriorAlgebra e{generators, {}};
  for (std::size_t m = 0; m <= generators; ++m) e.basis.push_back(subsets(generators, m));
  return e;
}

std::pair<int, IndexSet> wedge(const IndexSet& s, const IndexSet& t) {
  IndexSet merged;
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < s.size() || j < t.size()) {
    if (j == t.size() || (i < s.size() && s[i] < t[j])) {
      merged.push_back(s[i++]);
    } else if (i == s.size() || t[j] < s[i]) {
      inversions += s.size() - i;
      merged.push_back(t[j++]);
    } else {
      return {0, {}};
    }
  }
  return {inversions % 2 == 0 ? 1 : -1, merged};
}

RatMatrix exterior_power(const RatMatrix& m, std::size_t k) {
  const auto rows = subsets(m.rows(), k);
  const auto cols = subsets(m.cols(), k);
  std::vector<Rational> e;
  e.reserve(rows.size() * cols.size());
  for (const auto& r : rows)
    for (const auto& c : cols) {
      if (k == 0) {
        e.emplace_back(1);
        continue;
      }
      std::vector<Rational> minor;
      minor.reserve(k * k);
      for (std::size_t a : r)
        for (std::size_t b : c) minor.push_back(m(a, b));
      e.push_back(RatMatrix(k, k, std::move(minor)).determinant());
    }
  return {rows.size(), cols.size(), std::move(e)};
}

GradedMap compose(const GradedMap& f, const GradedMap& h) {
  if (h.target_generators != f.source_generators) throw std::invalid_argument("compose: graded maps do not match");
  GradedMap out{h.source_generators, f.target_generators, f.reverses_degree != h.reverses_degree, {}};
  for (std::size_t m = 0; m < h.blocks.size(); ++m) out.blocks.push_back(f.blocks.at(h.target_degree(m)) * h.blocks[m]);
  return out;
}

GradedMap scale(const Rational& s, const GradedMap& f) {
  GradedMap out = f;
  for (auto& b : out.blocks) b = s * b;
  return out;
}

GradedMap induced_pullback(const TorusHom& f) {
  const RatMatrix h1 = f.M.transpose();
  GradedMap out{h1.cols(), h1.rows(), false, {}};
  for (std::size_t m = 0; m <= h1.cols(); ++m) out.blocks.push_back(exterior_power(h1, m));
  return out;
}

GradedMap poincare_phi(const ComplexTorus& t, std::optional<std::size_t> flip_degree) {
  const std::size_t n = t.lattice_rank();
  const ExteriorAlgebra ext = exterior_algebra(n);
  GradedMap out{n, n, true, {}};
  for (std::size_t m = 0; m <= n; ++m) {
    RatMatrix block(ext.dimension(n - m), ext.dimension(m));
    std::vector<Rational> e(block.rows() * block.cols(), Rational(0));
    int sign = (m * (m + 1) / 2) % 2 == 0 ? 1 : -1;
    if (flip_degree && *flip_degree == m) sign = -sign;
    for (std::size_t c = 0; c < ext.dimension(m); ++c) {
      const IndexSet& s = ext.basis[m][c];
      const IndexSet rest = complement(s, n);
      e[ext.index_of(rest) * block.cols() + c] = sign * wedge(s, rest).first;
    }
    out.blocks.emplace_back(block.rows(), block.cols(), std::move(e));
  }
  return out;
}

PdSquareResult check_pd_square(const TorusHom& q, std::optional<std::size_t> flip_degree) {
  const Integer deg = isogeny_degree(q);
  const GradedMap lhs = scale(Rational(deg), poincare_phi(q.target, flip_degree));
  const GradedMap rhs =
      compose(induced_pullback(dual_hom(q)), compose(poincare_phi(q.source), induced_pullback(q)));
  for (std::size_t m = 0; m < lhs.blocks.size(); ++m) {
    const RatMatrix& a = lhs.blocks[m];
    const RatMatrix& b = rhs.blocks[m];
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j)) return {false, deg, PdDiscrepancy{m, i, j, a(i, j), b(i, j)}};
  }
  return {true, deg, std::nullopt};
}

}  // namespace kumlift
