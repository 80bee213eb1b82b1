#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace wtits {

// Compare against Rational values or numerator(), not bare ints: boost's
// mixed int == rational recurses under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

/// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<Rational>& entries() const { return a_; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& x) const;
  RationalMatrix transpose() const;
  std::optional<RationalMatrix> inverse() const;
  bool is_identity() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

struct RationalMatrixHash {
  std::size_t operator()(const RationalMatrix& m) const;
};

/// Finds x with sum_j x_j * columns[j] == rhs. Free variables are set to
/// zero. Returns nullopt when the system is inconsistent.
std::optional<RationalVector> solve_columns(const std::vector<RationalVector>& columns,
                                            const RationalVector& rhs);

}  // namespace wtits
