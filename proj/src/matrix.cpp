#include "kumlift/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kumlift {

namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("RatMatrix: entry count mismatch");
  for (auto& e : data_) e.canonicalize();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return {n, n, std::move(e)};
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return {r, c, std::move(e)};
}

RatMatrix RatMatrix::column(const std::vector<Rational>& entries) {
  return {entries.size(), 1, entries};
}

RatMatrix RatMatrix::transpose() const {
  std::vector<Rational> e(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
  return {cols_, rows_, std::move(e)};
}

RatMatrix RatMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::out_of_range("RatMatrix::block out of range");
  std::vector<Rational> e;
  e.reserve(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) e.push_back((*this)(row0 + i, col0 + j));
  return {nrows, ncols, std::move(e)};
}

RatMatrix RatMatrix::with(std::size_t i, std::size_t j, const Rational& value) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix::with out of range");
  std::vector<Rational> e = data_;
  e[i * cols_ + j] = value;
  return {rows_, cols_, std::move(e)};
}

RatMatrix RatMatrix::permute_cols(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_) throw std::invalid_argument("permute_cols: size mismatch");
  std::vector<Rational> e;
  e.reserve(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) e.push_back((*this)(i, perm[k]));
  return {rows_, cols_, std::move(e)};
}

RatMatrix RatMatrix::permute_rows(const std::vector<std::size_t>& perm) const {
  if (perm.size() != rows_) throw std::invalid_argument("permute_rows: size mismatch");
  std::vector<Rational> e;
  e.reserve(data_.size());
  for (std::size_t k = 0; k < rows_; ++k)
    for (std::size_t j = 0; j < cols_; ++j) e.push_back((*this)(perm[k], j));
  return {rows_, cols_, std::move(e)};
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Integer RatMatrix::denominator_lcm() const {
  Integer l = 1;
  for (const auto& x : data_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Gaussian elimination over Q; returns the echelon form and the determinant sign bookkeeping.
namespace {

struct Elimination {
  std::vector<Rational> a;
  std::size_t rank = 0;
  Rational det = 1;
};

Elimination eliminate(const RatMatrix& m) {
  Elimination out{m.entries(), 0, 1};
  auto& a = out.a;
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && sgn(a[piv * c + col]) == 0) ++piv;
    if (piv == r) {
      out.det = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a[piv * c + j], a[row * c + j]);
      out.det = -out.det;
    }
    const Rational p = a[row * c + col];
    out.det *= p;
    for (std::size_t i = row + 1; i < r; ++i) {
      if (sgn(a[i * c + col]) == 0) continue;
      const Rational f = a[i * c + col] / p;
      for (std::size_t j = col; j < c; ++j) a[i * c + j] -= f * a[row * c + j];
    }
    ++row;
  }
  out.rank = row;
  if (row < r) out.det = 0;
  return out;
}

}  // namespace

Rational RatMatrix::determinant() const {
  if (!is_square()) throw std::domain_error("determinant of non-square matrix");
  if (rows_ == 0) return 1;
  return eliminate(*this).det;
}

std::size_t RatMatrix::rank() const { return eliminate(*this).rank; }

std::optional<RatMatrix> RatMatrix::try_inverse() const {
  if (!is_square()) return std::nullopt;
  const std::size_t n = rows_;
  std::vector<Rational> a = data_;
  std::vector<Rational> inv = identity(n).data_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv * n + col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    const Rational p = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i * n + col]) == 0) continue;
      const Rational f = a[i * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[col * n + j];
        inv[i * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return RatMatrix(n, n, std::move(inv));
}

RatMatrix RatMatrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw std::domain_error("matrix is singular or non-square");
  return *std::move(inv);
}

RatMatrix RatMatrix::operator-() const {
  std::vector<Rational> e(data_.size());
  for (std::size_t k = 0; k < data_.size(); ++k) e[k] = -data_[k];
  return {rows_, cols_, std::move(e)};
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  std::vector<Rational> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.data_[k] + b.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  std::vector<Rational> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.data_[k] - b.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  std::vector<Rational> e(a.rows_ * b.cols_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.data_[i * a.cols_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b.data_[k * b.cols_ + j];
        if (sgn(y) != 0) e[i * b.cols_ + j] += x * y;
      }
    }
  return {a.rows_, b.cols_, std::move(e)};
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  std::vector<Rational> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = s * a.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << kumlift::to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix hstack(const std::vector<RatMatrix>& parts) {
  if (parts.empty()) return {};
  const std::size_t r = parts.front().rows();
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != r) throw std::invalid_argument("hstack: row mismatch");
    c += p.cols();
  }
  std::vector<Rational> e;
  e.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& p : parts)
      for (std::size_t j = 0; j < p.cols(); ++j) e.push_back(p(i, j));
  return {r, c, std::move(e)};
}

RatMatrix vstack(const std::vector<RatMatrix>& parts) {
  if (parts.empty()) return {};
  const std::size_t c = parts.front().cols();
  std::size_t r = 0;
  std::vector<Rational> e;
  for (const auto& p : parts) {
    if (p.cols() != c) throw std::invalid_argument("vstack: column mismatch");
    r += p.rows();
    e.insert(e.end(), p.entries().begin(), p.entries().end());
  }
  return {r, c, std::move(e)};
}

RatMatrix block_diag(const std::vector<RatMatrix>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  std::vector<Rational> e(r * c, Rational(0));
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) e[(r0 + i) * c + c0 + j] = p(i, j);
    r0 += p.rows();
    c0 += p.cols();
  }
  return {r, c, std::move(e)};
}

RatMatrix block2x2(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d) {
  return vstack({hstack({a, b}), hstack({c, d})});
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  std::vector<Rational> e(r * c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          e[(i * b.rows() + k) * c + j * b.cols() + l] = a(i, j) * b(k, l);
  return {r, c, std::move(e)};
}

}  // namespace kumlift
