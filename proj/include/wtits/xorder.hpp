#pragma once

// The extended Bruhat order on U, its Hasse diagram, and the quotient orders
// on right cosets used for Morse components and control sets.
//
// Elements are addressed by their position in TitsGroup::U().

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wtits/utits.hpp"

namespace wtits {

using Bitset = boost::dynamic_bitset<>;

/// Finite partial order on {0, ..., n-1}. `covers` holds (lower, upper)
/// pairs of the transitive reduction, sorted.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the given (lower, upper) pairs.
  /// Throws InvariantViolation if the closure is not antisymmetric.
  static Poset from_generators(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               const std::string& what);
  /// `down[b]` holds every a with a <= b. Checks reflexivity, antisymmetry
  /// and transitivity of the relation as given.
  static Poset from_relation(std::vector<Bitset> down, const std::string& what);

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  const Bitset& down_set(std::size_t b) const { return down_[b]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

 private:
  void reduce();

  std::vector<Bitset> down_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

class ExtendedBruhatOrder {
 public:
  /// Computes every down set twice (cover closure and drop-set search) and
  /// throws InvariantViolation if the two disagree anywhere.
  explicit ExtendedBruhatOrder(const TitsGroup& group);

  const TitsGroup& group() const { return group_; }

  /// Elements obtained by replacing one droppable s_i of the canonical
  /// reduced word by 1 or by s_i^2. Sorted ids, deduplicated.
  const std::vector<std::size_t>& down_covers(std::size_t u) const { return covers_[u]; }
  /// The same relative to an arbitrary reduced word of pi(u).
  std::vector<std::size_t> down_covers_for_word(std::size_t u, const Word& reduced) const;

  bool leq(std::size_t lo, std::size_t hi) const { return hasse_.leq(lo, hi); }
  const Bitset& down_set(std::size_t u) const { return hasse_.down_set(u); }
  /// Theorem-style enumeration over one reduced word: all chains of single
  /// drops keeping the word reduced, each dropped s_i replaced by 1 or s_i^2.
  Bitset down_set_by_drops(std::size_t u, const Word& reduced) const;

  const Poset& hasse() const { return hasse_; }

 private:
  const TitsGroup& group_;
  std::vector<std::vector<std::size_t>> covers_;
  Poset hasse_;
};

enum class QuotientKind { Morse, Control };

/// Right cosets S u ordered by either
///   Morse:   X <= Y  iff  every x in X lies below some y in Y
///   Control: X <= Y  iff  every y in Y lies above some x in X.
struct QuotientPoset {
  QuotientKind kind = QuotientKind::Morse;
  std::vector<std::vector<std::size_t>> members;  // sorted element ids per coset
  std::vector<std::size_t> representative;        // smallest member id
  std::vector<std::size_t> class_of;              // element id -> coset index
  Poset order;
};

QuotientPoset quotient_order(const ExtendedBruhatOrder& order, const FiniteGroupTable& subgroup, QuotientKind kind);
inline QuotientPoset morse_quotient_order(const ExtendedBruhatOrder& order, const FiniteGroupTable& u_h) {
  return quotient_order(order, u_h, QuotientKind::Morse);
}
inline QuotientPoset control_quotient_order(const ExtendedBruhatOrder& order, const FiniteGroupTable& u_s) {
  return quotient_order(order, u_s, QuotientKind::Control);
}

/// D(smaller) <= D(larger), coset indices.
struct ControlEdge {
  std::size_t smaller;
  std::size_t larger;
  friend bool operator==(const ControlEdge&, const ControlEdge&) = default;
};

/// One edge per quotient cover X < Y: D(Y) <= D(X).
std::vector<ControlEdge> control_forward_edges(const QuotientPoset& quotient);

struct ConverseLift {
  std::size_t element;                 // member of the smaller class
  Word word;                           // reduced word with lift_word(word) == element
  std::vector<std::size_t> candidates; // s^k products landing in the larger class
};

struct ConverseResult {
  std::vector<ConverseLift> lifts;
  bool applicable() const { return !lifts.empty(); }
  /// Some reduced lift has no candidate, so the hypothesis fails.
  bool refuted() const;
  std::vector<std::size_t> candidates() const;  // union over lifts, sorted
};

/// Necessary condition for D(smaller) <= D(larger): for each member of the
/// smaller class that equals s_1...s_d for a reduced word of its projection,
/// collect the products s_1^{k_1}...s_d^{k_d}, k_i in {0,1,2,3}, that lie in
/// the larger class. Every such lift must have a candidate.
ConverseResult converse_candidates(const ExtendedBruhatOrder& order, const QuotientPoset& quotient,
                                   std::size_t smaller, std::size_t larger);

enum class PairStatus { Implied, Undetermined, Unrelated };

struct PairReport {
  std::size_t a = 0, b = 0;  // coset indices, a < b
  PairStatus status = PairStatus::Undetermined;
  // For Implied: D(b) <= D(a) if b_above_a, else D(a) <= D(b).
  bool b_above_a = false;
  ConverseResult a_below_b;  // hypothesis D(a) <= D(b)
  ConverseResult b_below_a;  // hypothesis D(b) <= D(a)
  bool a_invariant = false;  // class contains an element of C
  bool b_invariant = false;
};

/// Every unordered pair of distinct cosets. Comparable pairs are Implied by
/// the forward direction. For the rest each hypothesis D(x) <= D(y) is
/// refuted when its converse candidates are empty, or when x is an invariant
/// control set (contains an element of C): those are maximal. A pair with
/// both hypotheses refuted is Unrelated, otherwise Undetermined.
std::vector<PairReport> classify_control_pairs(const ExtendedBruhatOrder& order, const QuotientPoset& quotient);

std::string to_string(PairStatus s);

}  // namespace wtits
