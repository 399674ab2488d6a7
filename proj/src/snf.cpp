#include "kumlift/snf.hpp"

#include <stdexcept>
#include <utility>

namespace kumlift {

namespace {

using Grid = std::vector<std::vector<Integer>>;

Grid to_grid(const RatMatrix& m) {
  Grid g(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).get_num();
  return g;
}

Grid identity_grid(std::size_t n) {
  Grid g(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

RatMatrix from_grid(const Grid& g, std::size_t rows, std::size_t cols) {
  std::vector<Rational> e;
  e.reserve(rows * cols);
  for (const auto& row : g)
    for (const auto& x : row) e.emplace_back(x);
  return {rows, cols, std::move(e)};
}

// Row and column operations mirrored onto U and V.
struct Reducer {
  Grid a, u, v;
  std::size_t r, c;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t t = 0; t < c; ++t) a[i][t] += k * a[j][t];
    for (std::size_t t = 0; t < r; ++t) u[i][t] += k * u[j][t];
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t t = 0; t < r; ++t) a[t][i] += k * a[t][j];
    for (std::size_t t = 0; t < c; ++t) v[t][i] += k * v[t][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // Smallest nonzero |a[i][j]| with i, j >= t; row-major scan keeps ties lowest.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        Integer mag = abs(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return;
      for (;;) {
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);
        const Integer p = a[t][t];
        bool clean = true;
        Integer q;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (sgn(a[i][t]) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), p.get_mpz_t());
          add_row(i, t, -q);
          if (sgn(a[i][t]) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (sgn(a[t][j]) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), p.get_mpz_t());
          add_col(j, t, -q);
          if (sgn(a[t][j]) != 0) clean = false;
        }
        if (clean) {
          // Enforce the divisibility chain.
          bool fixed = false;
          for (std::size_t i = t + 1; i < r && !fixed; ++i)
            for (std::size_t j = t + 1; j < c; ++j)
              if (!mpz_divisible_p(a[i][j].get_mpz_t(), p.get_mpz_t())) {
                add_row(t, i, 1);
                fixed = true;
                break;
              }
          if (!fixed) break;
        }
        // Remaining nonzero entries sit in row t or column t (or the row just
        // added); pick the new smallest pivot among all of them.
        find_pivot(t, pi, pj);
      }
      if (sgn(a[t][t]) < 0) negate_row(t);
    }
  }
};

}  // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t k = 0;
  while (k < std::min(D.rows(), D.cols()) && sgn(D(k, k)) != 0) ++k;
  return k;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) d.push_back(D(k, k).get_num());
  return d;
}

SnfDecomposition snf(const RatMatrix& m) {
  if (!m.is_integral()) throw std::invalid_argument("snf: matrix has non-integer entries");
  Reducer red{to_grid(m), identity_grid(m.rows()), identity_grid(m.cols()), m.rows(), m.cols()};
  red.run();
  return {m, from_grid(red.u, m.rows(), m.rows()), from_grid(red.a, m.rows(), m.cols()),
          from_grid(red.v, m.cols(), m.cols())};
}

}  // namespace kumlift
