#pragma once

// The extended Weyl group U as an exact integer matrix group: enumeration,
// the projection onto W, the kernel C, and the subgroups and cosets the
// order computations are built on.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wtits/exact_matrix.hpp"
#include "wtits/rootsys.hpp"

namespace wtits {

/// One factor of an element expression: s_i^k or c_j^k.
struct Token {
  enum class Kind { S, C };
  Kind kind = Kind::S;
  int index = 1;
  int exponent = 1;

  friend auto operator<=>(const Token&, const Token&) = default;
};

using Expr = std::vector<Token>;

/// "1" for the empty product, otherwise e.g. "s1s2s1^2".
std::string to_string(const Expr& expr);

struct UElement {
  ExactMatrix matrix;
  std::optional<Expr> word;

  friend bool operator==(const UElement& a, const UElement& b) { return a.matrix == b.matrix; }
};

class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;
  explicit FiniteGroupTable(std::vector<UElement> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<UElement>& elements() const { return elements_; }
  const UElement& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const ExactMatrix& m) const { return index_.count(m) != 0; }
  std::optional<std::size_t> position(const ExactMatrix& m) const;
  std::vector<ExactMatrix> matrices() const;

  /// Closed under products and inverses, contains the identity.
  bool is_group() const;
  bool is_abelian() const;

 private:
  std::vector<UElement> elements_;
  std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> index_;
};

/// Smallest group containing `gens`, by breadth-first closure. Element words
/// are recorded when every generator carries one. Throws when more than
/// `bound` elements are produced.
FiniteGroupTable closure(std::size_t n, const std::vector<UElement>& gens, std::size_t bound = 1'000'000);

struct GroupPreset {
  std::string name;
  std::size_t n = 0;
  std::vector<ExactMatrix> generators;    // s_1, ..., s_r
  std::vector<ExactMatrix> c_generators;  // extra generators of C beyond the s_i^2
  RootDatum root_datum;
  std::vector<ExactMatrix> a_basis;       // basis of the Cartan subspace a
  std::vector<std::string> labels;        // display names of the generators
  bool signed_permutations = false;       // SL(n) family: elements are signed permutations
};

/// A right coset H g; `representative` is the smallest member by canonical key.
struct Coset {
  ExactMatrix representative;
  std::vector<ExactMatrix> members;
};

std::vector<Coset> right_cosets(const FiniteGroupTable& group, const FiniteGroupTable& subgroup);

struct QuotientIsomorphismReport {
  std::vector<WeylElement> w_s;  // pi(U(S)), sorted as in W
  FiniteGroupTable c_s;          // U(S) intersect C
  std::size_t u_cosets = 0;      // |U(S)\U|
  std::size_t w_cosets = 0;      // |W(S)\W|
  std::size_t c_cosets = 0;      // |C(S)\C|
  bool c_s_normal = false;
  bool identity_holds = false;   // u_cosets == w_cosets * c_cosets
};

class TitsGroup {
 public:
  /// Validates every preset invariant before enumerating U; throws
  /// InvariantViolation naming the first one that fails.
  explicit TitsGroup(GroupPreset preset, std::size_t closure_bound = 1'000'000);

  const GroupPreset& preset() const { return preset_; }
  const WeylGroup& weyl() const { return weyl_; }
  std::size_t n() const { return preset_.n; }
  std::size_t rank() const { return preset_.generators.size(); }

  /// U sorted by (length of projection, reduced word, C-part word).
  const FiniteGroupTable& U() const { return u_; }
  const FiniteGroupTable& C() const { return c_; }

  const ExactMatrix& generator(int i) const;
  const ExactMatrix& c_generator(int j) const;

  // Cached data for elements of U, addressed by position in U().
  std::size_t size() const { return u_.size(); }
  std::size_t id(const ExactMatrix& u) const;
  const ExactMatrix& matrix(std::size_t id) const { return u_[id].matrix; }
  const WeylElement& projection(std::size_t id) const { return info_[id].projection; }
  const Word& reduced_word(std::size_t id) const { return info_[id].word; }
  const ExactMatrix& c_part(std::size_t id) const { return info_[id].c; }
  const Expr& display_expr(std::size_t id) const { return info_[id].display; }
  const std::string& label(std::size_t id) const { return info_[id].label; }
  std::string label(const ExactMatrix& u) const { return label(id(u)); }

  WeylElement project_to_W(const ExactMatrix& u) const;
  ExactMatrix lift_word(const Word& word) const;
  /// (lift of the canonical reduced word of pi(u))^{-1} u; always in C.
  ExactMatrix c_part(const ExactMatrix& u) const;
  /// The same relative to a given reduced word of pi(u).
  ExactMatrix c_part(const ExactMatrix& u, const Word& reduced) const;
  ExactMatrix inverse(const ExactMatrix& u) const;
  ExactMatrix evaluate(const Expr& expr) const;
  Expr c_word(const ExactMatrix& c) const;

  FiniteGroupTable subgroup_U_H(const IndexSet& theta, const std::vector<ExactMatrix>& extra = {}) const;
  FiniteGroupTable subgroup_closure(const std::vector<ExactMatrix>& gens) const;
  QuotientIsomorphismReport check_quotient_isomorphism(const FiniteGroupTable& u_s) const;

  /// Simple roots vanishing on a diagonal H in a-coordinates.
  IndexSet theta_of(const RationalVector& h) const;

 private:
  struct ElementInfo {
    WeylElement projection;
    Word word;
    ExactMatrix c;
    Expr display;
    std::string label;
  };

  void validate_generators() const;
  void build_c_words();

  GroupPreset preset_;
  WeylGroup weyl_;
  RationalMatrix gram_inverse_;
  FiniteGroupTable u_;
  FiniteGroupTable c_;
  std::unordered_map<ExactMatrix, Expr, ExactMatrixHash> c_words_;
  std::vector<ElementInfo> info_;
  std::size_t closure_bound_;
};

}  // namespace wtits
