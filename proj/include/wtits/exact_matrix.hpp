#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wtits {

/// Square integer matrix. The row-major entry tuple is the canonical key of a
/// group element: equality, ordering and hashing are all exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n, 0) {}
  ExactMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static ExactMatrix diagonal(const std::vector<std::int64_t>& d);

  std::size_t dim() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return e_; }

  /// Throws InvariantViolation on int64 overflow or dimension mismatch.
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix transpose() const;
  ExactMatrix pow(unsigned k) const;
  std::int64_t trace() const;
  std::int64_t determinant() const;
  bool is_identity() const;

  /// Inverse over the integers: transpose when orthogonal, otherwise exact
  /// rational elimination. nullopt if singular or not integral.
  std::optional<ExactMatrix> inverse() const;

  /// Exactly one nonzero entry, equal to +-1, in every row and column.
  bool is_signed_permutation() const;

  friend auto operator<=>(const ExactMatrix&, const ExactMatrix&) = default;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> e_;
};

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const;
};

/// Frobenius inner product tr(a^T b).
std::int64_t frobenius(const ExactMatrix& a, const ExactMatrix& b);

std::string to_string(const ExactMatrix& m);

}  // namespace wtits
