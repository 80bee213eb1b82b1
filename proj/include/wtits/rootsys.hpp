#pragma once

// Restricted root systems, Weyl groups, reduced words and the
// Bruhat-Chevalley order.
//
// Simple-root indices are 1-based throughout (r_1, r_2, ...), matching the
// s1/s2 notation used for display and parsing. A Word lists reflections from
// left to right: {1, 2} is r_1 r_2.

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "wtits/rational.hpp"

namespace wtits {

using Word = std::vector<int>;
using IndexSet = std::set<int>;

/// Root data on a-coordinates. Roots are covectors; `gram` is the inner
/// product on a-coordinates used to build the reflections.
struct RootDatum {
  std::size_t dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> positive_roots;
  std::vector<int> multiplicities;
  RationalMatrix gram;

  std::size_t rank() const { return simple_roots.size(); }
};

/// Builds the positive system generated by `simple_roots` under the simple
/// reflections and validates it. Throws InvariantViolation.
RootDatum make_root_datum(std::vector<RationalVector> simple_roots, std::vector<int> multiplicities,
                          RationalMatrix gram);

/// Reflection matrix (acting on a-coordinate vectors) for a root covector.
RationalMatrix reflection_matrix(const RationalVector& root, const RationalMatrix& gram_inverse);

class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(RationalMatrix matrix, int length) : matrix_(std::move(matrix)), length_(length) {}

  const RationalMatrix& matrix() const { return matrix_; }
  int length() const { return length_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  RationalMatrix matrix_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return RationalMatrixHash{}(w.matrix()); }
};

struct RootSplit {
  std::vector<RationalVector> zero;      // alpha(H) == 0
  std::vector<RationalVector> positive;  // alpha(H) > 0
};

class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum, std::size_t max_order = 1'000'000);

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t order() const { return elements_.size(); }

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  WeylElement longest() const { return elements_.back(); }

  /// Wraps a matrix, computing its length. Throws if it does not permute the roots.
  WeylElement make(const RationalMatrix& m) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement product(const Word& word) const;

  int length(const RationalMatrix& m) const;

  /// Lexicographically smallest reduced word (smallest left descent first).
  Word reduced_word(const WeylElement& w) const;
  std::vector<Word> all_reduced_words(const WeylElement& w) const;
  bool is_reduced(const Word& word) const;
  std::optional<int> first_left_descent(const WeylElement& w) const;

  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;

  /// Positive roots split by a dominant H encoded by its vanishing simple roots.
  RootSplit split_roots_by_H(const IndexSet& theta) const;

  /// Whole group, sorted by (length, reduced word).
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t index_of(const WeylElement& w) const;

  bool is_positive_root(const RationalVector& root) const;
  /// Coordinates of a root in the simple-root basis.
  RationalVector simple_coordinates(const RationalVector& root) const;

 private:
  void check_index(int i) const;

  RootDatum datum_;
  std::vector<RationalMatrix> reflections_;
  RationalVector regular_point_;  // alpha_i(x) = 1 for every simple root
  std::set<RationalVector> roots_;
  std::vector<WeylElement> elements_;
  std::unordered_map<RationalMatrix, std::size_t, RationalMatrixHash> index_;
};

}  // namespace wtits
