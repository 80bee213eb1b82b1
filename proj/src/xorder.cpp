#include "wtits/xorder.hpp"

#include <algorithm>
#include <deque>

#include "wtits/errors.hpp"

namespace wtits {

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_generators(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                             const std::string& what) {
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) down[b].set(b);
  for (const auto& [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw InvariantViolation(what, "relation refers to a missing element");
    down[hi].set(lo);
  }
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < n; ++b)
      if (down[b].test(k)) down[b] |= down[k];
  return from_relation(std::move(down), what);
}

Poset Poset::from_relation(std::vector<Bitset> down, const std::string& what) {
  const std::size_t n = down.size();
  for (std::size_t b = 0; b < n; ++b) {
    if (down[b].size() != n) throw InvariantViolation(what, "relation rows have the wrong size");
    if (!down[b].test(b)) throw InvariantViolation(what + " reflexivity", "element " + std::to_string(b));
    for (std::size_t a = down[b].find_first(); a != Bitset::npos; a = down[b].find_next(a)) {
      if (a != b && down[a].test(b))
        throw InvariantViolation(what + " antisymmetry",
                                 "elements " + std::to_string(a) + " and " + std::to_string(b) + " are mutually below");
      if (!down[a].is_subset_of(down[b]))
        throw InvariantViolation(what + " transitivity", "below " + std::to_string(b) + " but not closed under <=");
    }
  }
  Poset p;
  p.down_ = std::move(down);
  p.reduce();
  return p;
}

void Poset::reduce() {
  const std::size_t n = down_.size();
  covers_.clear();
  for (std::size_t b = 0; b < n; ++b) {
    Bitset strict = down_[b];
    strict.reset(b);
    Bitset lower(n);
    for (std::size_t c = strict.find_first(); c != Bitset::npos; c = strict.find_next(c)) {
      Bitset below_c = down_[c];
      below_c.reset(c);
      lower |= below_c;
    }
    strict -= lower;
    for (std::size_t a = strict.find_first(); a != Bitset::npos; a = strict.find_next(a)) covers_.emplace_back(a, b);
  }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (down_[b].count() == 1) out.push_back(b);
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<bool> below_other(size(), false);
  for (const auto& c : covers_) below_other[c.first] = true;
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (!below_other[b]) out.push_back(b);
  return out;
}

// ---------------------------------------------------------------------------
// ExtendedBruhatOrder

namespace {

Word without(const Word& w, std::size_t p) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != p) out.push_back(w[i]);
  return out;
}

}  // namespace

ExtendedBruhatOrder::ExtendedBruhatOrder(const TitsGroup& group) : group_(group) {
  const std::size_t n = group_.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  covers_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    covers_[u] = down_covers_for_word(u, group_.reduced_word(u));
    for (std::size_t v : covers_[u]) pairs.emplace_back(v, u);
  }
  hasse_ = Poset::from_generators(n, pairs, "extended order");
  for (std::size_t u = 0; u < n; ++u)
    if (down_set_by_drops(u, group_.reduced_word(u)) != hasse_.down_set(u))
      throw InvariantViolation("down-set routes agree",
                               "cover closure and drop search differ at " + group_.label(u));
}

std::vector<std::size_t> ExtendedBruhatOrder::down_covers_for_word(std::size_t u, const Word& reduced) const {
  const WeylGroup& w = group_.weyl();
  if (!w.is_reduced(reduced) || !(w.product(reduced) == group_.projection(u)))
    throw InvariantViolation("reduced word", "word is not a reduced word of the projection");
  const ExactMatrix c = group_.c_part(group_.matrix(u), reduced);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < reduced.size(); ++p) {
    if (!w.is_reduced(without(reduced, p))) continue;
    const ExactMatrix prefix = group_.lift_word(Word(reduced.begin(), reduced.begin() + p));
    const ExactMatrix suffix = group_.lift_word(Word(reduced.begin() + p + 1, reduced.end())) * c;
    const ExactMatrix& s = group_.generator(reduced[p]);
    out.push_back(group_.id(prefix * suffix));
    out.push_back(group_.id(prefix * s * s * suffix));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bitset ExtendedBruhatOrder::down_set_by_drops(std::size_t u, const Word& reduced) const {
  const WeylGroup& w = group_.weyl();
  if (!w.is_reduced(reduced) || !(w.product(reduced) == group_.projection(u)))
    throw InvariantViolation("reduced word", "word is not a reduced word of the projection");
  const std::size_t d = reduced.size();
  if (d >= 31) throw Unsupported("reduced words longer than 30 letters");
  const ExactMatrix c = group_.c_part(group_.matrix(u), reduced);

  auto remaining = [&](unsigned mask) {
    Word out;
    for (std::size_t i = 0; i < d; ++i)
      if (!(mask >> i & 1u)) out.push_back(reduced[i]);
    return out;
  };

  // Drop sets reachable one letter at a time with every intermediate word reduced.
  std::vector<bool> seen(std::size_t{1} << d, false);
  std::deque<unsigned> queue{0u};
  seen[0] = true;
  std::vector<unsigned> masks;
  while (!queue.empty()) {
    const unsigned mask = queue.front();
    queue.pop_front();
    masks.push_back(mask);
    for (std::size_t i = 0; i < d; ++i) {
      const unsigned next = mask | (1u << i);
      if (next == mask || seen[next] || !w.is_reduced(remaining(next))) continue;
      seen[next] = true;
      queue.push_back(next);
    }
  }

  Bitset out(group_.size());
  for (unsigned mask : masks) {
    std::vector<std::size_t> dropped;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1u) dropped.push_back(i);
    for (unsigned choice = 0; choice < (1u << dropped.size()); ++choice) {
      ExactMatrix m = ExactMatrix::identity(group_.n());
      std::size_t k = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const ExactMatrix& s = group_.generator(reduced[i]);
        if (k < dropped.size() && dropped[k] == i) {
          if (choice >> k & 1u) m = m * s * s;
          ++k;
        } else {
          m = m * s;
        }
      }
      out.set(group_.id(m * c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientPoset quotient_order(const ExtendedBruhatOrder& order, const FiniteGroupTable& subgroup, QuotientKind kind) {
  const TitsGroup& g = order.group();
  QuotientPoset q;
  q.kind = kind;
  for (const Coset& c : right_cosets(g.U(), subgroup)) {
    std::vector<std::size_t> ids;
    for (const auto& m : c.members) ids.push_back(g.id(m));
    std::sort(ids.begin(), ids.end());
    q.members.push_back(std::move(ids));
  }
  std::sort(q.members.begin(), q.members.end());
  q.class_of.assign(g.size(), 0);
  for (std::size_t k = 0; k < q.members.size(); ++k) {
    q.representative.push_back(q.members[k].front());
    for (std::size_t id : q.members[k]) q.class_of[id] = k;
  }

  const std::size_t n = q.members.size();
  auto forall_exists = [&](const std::vector<std::size_t>& all, const std::vector<std::size_t>& some, bool all_low) {
    return std::all_of(all.begin(), all.end(), [&](std::size_t x) {
      return std::any_of(some.begin(), some.end(),
                         [&](std::size_t y) { return all_low ? order.leq(x, y) : order.leq(y, x); });
    });
  };
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const bool rel = kind == QuotientKind::Morse ? forall_exists(q.members[x], q.members[y], true)
                                                   : forall_exists(q.members[y], q.members[x], false);
      if (rel) down[y].set(x);
    }
  q.order = Poset::from_relation(std::move(down),
                                 kind == QuotientKind::Morse ? "Morse quotient order" : "control quotient order");
  return q;
}

std::vector<ControlEdge> control_forward_edges(const QuotientPoset& quotient) {
  if (quotient.kind != QuotientKind::Control)
    throw InvariantViolation("control edges", "quotient was not built with the control relation");
  std::vector<ControlEdge> out;
  for (const auto& [lo, hi] : quotient.order.covers()) out.push_back({hi, lo});
  return out;
}

bool ConverseResult::refuted() const {
  return std::any_of(lifts.begin(), lifts.end(), [](const ConverseLift& l) { return l.candidates.empty(); });
}

std::vector<std::size_t> ConverseResult::candidates() const {
  std::vector<std::size_t> out;
  for (const auto& l : lifts) out.insert(out.end(), l.candidates.begin(), l.candidates.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConverseResult converse_candidates(const ExtendedBruhatOrder& order, const QuotientPoset& quotient,
                                   std::size_t smaller, std::size_t larger) {
  const TitsGroup& g = order.group();
  if (smaller >= quotient.members.size() || larger >= quotient.members.size())
    throw InvariantViolation("converse", "coset index out of range");
  ConverseResult r;
  for (std::size_t m : quotient.members[smaller]) {
    for (const Word& word : g.weyl().all_reduced_words(g.projection(m))) {
      if (g.lift_word(word) != g.matrix(m)) continue;
      ConverseLift lift{m, word, {}};
      const std::size_t d = word.size();
      std::vector<unsigned> k(d, 0);
      for (;;) {
        ExactMatrix p = ExactMatrix::identity(g.n());
        for (std::size_t i = 0; i < d; ++i) p = p * g.generator(word[i]).pow(k[i]);
        const std::size_t id = g.id(p);
        if (quotient.class_of[id] == larger) lift.candidates.push_back(id);
        std::size_t i = 0;
        while (i < d && ++k[i] == 4) k[i++] = 0;
        if (i == d) break;
      }
      std::sort(lift.candidates.begin(), lift.candidates.end());
      lift.candidates.erase(std::unique(lift.candidates.begin(), lift.candidates.end()), lift.candidates.end());
      r.lifts.push_back(std::move(lift));
    }
  }
  return r;
}

std::vector<PairReport> classify_control_pairs(const ExtendedBruhatOrder& order, const QuotientPoset& quotient) {
  const TitsGroup& g = order.group();
  const std::size_t n = quotient.members.size();
  std::vector<bool> invariant(n, false);
  for (const auto& c : g.C()) invariant[quotient.class_of[g.id(c.matrix)]] = true;

  std::vector<PairReport> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      PairReport r;
      r.a = a;
      r.b = b;
      r.a_invariant = invariant[a];
      r.b_invariant = invariant[b];
      if (quotient.order.leq(a, b) || quotient.order.leq(b, a)) {
        r.status = PairStatus::Implied;
        r.b_above_a = quotient.order.leq(a, b);
      } else {
        r.a_below_b = converse_candidates(order, quotient, a, b);
        r.b_below_a = converse_candidates(order, quotient, b, a);
        const bool ab_refuted = r.a_invariant || r.a_below_b.refuted();
        const bool ba_refuted = r.b_invariant || r.b_below_a.refuted();
        r.status = ab_refuted && ba_refuted ? PairStatus::Unrelated : PairStatus::Undetermined;
      }
      out.push_back(std::move(r));
    }
  return out;
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Implied: return "implied";
    case PairStatus::Undetermined: return "undetermined";
    case PairStatus::Unrelated: return "unrelated";
  }
  return "?";
}

}  // namespace wtits
