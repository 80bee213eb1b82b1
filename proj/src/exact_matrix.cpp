#include "wtits/exact_matrix.hpp"

#include <sstream>

#include "wtits/errors.hpp"
#include "wtits/rational.hpp"

namespace wtits {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("exact arithmetic", "int64 overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("exact arithmetic", "int64 overflow");
  return r;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), e_(std::move(entries)) {
  if (e_.size() != n_ * n_) throw InvariantViolation("matrix", "entry count is not n*n");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParseError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<std::int64_t>& d) {
  ExactMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvariantViolation("matrix", "dimension mismatch in product");
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvariantViolation("matrix", "dimension mismatch in sum");
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = checked_add(e_[i], rhs.e_[i]);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::pow(unsigned k) const {
  ExactMatrix r = identity(n_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::int64_t ExactMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

std::int64_t ExactMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  if (n_ == 0) return 1;
  std::vector<std::int64_t> a = e_;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n_ + j]; };
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j)
        at(i, j) = (checked_mul(at(i, j), at(k, k)) - checked_mul(at(i, k), at(k, j))) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool ExactMatrix::is_identity() const { return *this == identity(n_); }

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  ExactMatrix t = transpose();
  if ((t * *this).is_identity()) return t;

  RationalMatrix q(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) q(i, j) = (*this)(i, j);
  const auto inv = q.inverse();
  if (!inv) return std::nullopt;
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& x = (*inv)(i, j);
      if (x.denominator() != 1) return std::nullopt;
      out(i, j) = x.numerator();
    }
  if (!(out * *this).is_identity()) return std::nullopt;
  return out;
}

bool ExactMatrix::is_signed_permutation() const {
  for (std::size_t i = 0; i < n_; ++i) {
    int row_nonzero = 0, col_nonzero = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const auto r = (*this)(i, j), c = (*this)(j, i);
      if (r != 0) {
        if (r != 1 && r != -1) return false;
        ++row_nonzero;
      }
      if (c != 0) ++col_nonzero;
    }
    if (row_nonzero != 1 || col_nonzero != 1) return false;
  }
  return true;
}

std::size_t ExactMatrixHash::operator()(const ExactMatrix& m) const {
  std::size_t h = m.dim();
  for (std::int64_t x : m.entries())
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::int64_t frobenius(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw InvariantViolation("matrix", "dimension mismatch in inner product");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    s = checked_add(s, checked_mul(a.entries()[i], b.entries()[i]));
  return s;
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace wtits
