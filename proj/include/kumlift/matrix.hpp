#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kumlift {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical lowest-terms text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Dense matrix over Q, row-major. Values are immutable once built; every
/// operation returns a new matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix column(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  RatMatrix transpose() const;
  RatMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  RatMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  RatMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  /// Copy with one entry replaced.
  RatMatrix with(std::size_t i, std::size_t j, const Rational& value) const;
  /// Copy with the columns reordered: result column k is column perm[k].
  RatMatrix permute_cols(const std::vector<std::size_t>& perm) const;
  RatMatrix permute_rows(const std::vector<std::size_t>& perm) const;

  bool is_integral() const;
  bool is_zero() const;
  /// Least common multiple of all entry denominators.
  Integer denominator_lcm() const;

  Rational determinant() const;
  std::size_t rank() const;
  /// Throws std::domain_error when singular or non-square.
  RatMatrix inverse() const;
  std::optional<RatMatrix> try_inverse() const;

  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix hstack(const std::vector<RatMatrix>& parts);
RatMatrix vstack(const std::vector<RatMatrix>& parts);
RatMatrix block_diag(const std::vector<RatMatrix>& parts);
/// [[a, b], [c, d]] assembled from four blocks.
RatMatrix block2x2(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d);
/// Kronecker product.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

}  // namespace kumlift
