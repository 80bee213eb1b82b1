#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "support.hpp"
#include "wtits/cli.hpp"
#include "wtits/errors.hpp"
#include "wtits/presets.hpp"
#include "wtits/xorder.hpp"

using namespace wtits;

namespace {

struct Fixture {
  TitsGroup group;
  ExtendedBruhatOrder order;
  explicit Fixture(const std::string& name) : group(load_preset(name)), order(group) {}
};

std::set<std::pair<std::size_t, std::size_t>> covers_of(const Poset& p) {
  return {p.covers().begin(), p.covers().end()};
}

// Diagram arrows (upper -> lower) mapped to (lo, hi) id pairs.
std::set<std::pair<std::size_t, std::size_t>> diagram_covers(const TitsGroup& g, const std::vector<std::string>& nodes,
                                                              const std::vector<std::pair<int, int>>& arrows) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [hi, lo] : arrows)
    out.emplace(g.id(cli::evaluate_expr(g, nodes[lo])), g.id(cli::evaluate_expr(g, nodes[hi])));
  return out;
}

std::size_t klass(const TitsGroup& g, const QuotientPoset& q, const std::string& expr) {
  return q.class_of[g.id(cli::evaluate_expr(g, expr))];
}

}  // namespace

TEST_CASE("poset construction and validation") {
  const Poset chain = Poset::from_generators(3, {{0, 1}, {1, 2}}, "chain");
  CHECK(chain.leq(0, 2));
  CHECK_FALSE(chain.leq(2, 0));
  CHECK(chain.covers().size() == 2);
  CHECK(chain.minimal() == std::vector<std::size_t>{0});
  CHECK(chain.maximal() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(Poset::from_generators(2, {{0, 1}, {1, 0}}, "cycle"), InvariantViolation);
  CHECK_THROWS_AS(Poset::from_generators(2, {{0, 5}}, "range"), InvariantViolation);

  std::vector<Bitset> down(3, Bitset(3));
  for (std::size_t i = 0; i < 3; ++i) down[i].set(i);
  down[1].set(0);
  down[2].set(1);  // missing 0 <= 2
  CHECK_THROWS_AS(Poset::from_relation(down, "r"), InvariantViolation);
  down[2].set(0);
  CHECK(Poset::from_relation(down, "r") == chain);
  down[0].reset(0);
  CHECK_THROWS_AS(Poset::from_relation(down, "r"), InvariantViolation);
}

TEST_CASE("extended order equals the reference built from every reduced word") {
  for (const std::string name : {"sl2", "sl3", "sl4", "so24"}) {
    CAPTURE(name);
    const Fixture f(name);
    const support::ReferenceW w(support::reference_reflections(name));
    const auto leq = support::reference_extended_order(f.group, w);
    std::size_t mismatches = 0;
    for (std::size_t a = 0; a < f.group.size(); ++a)
      for (std::size_t b = 0; b < f.group.size(); ++b)
        if (static_cast<bool>(leq[a][b]) != f.order.leq(a, b)) ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("sl3 order matches the hand-entered diagram arrow for arrow") {
  const Fixture f("sl3");
  REQUIRE(f.group.size() == fixtures::sl3_nodes.size());
  std::set<std::size_t> ids;
  for (const auto& node : fixtures::sl3_nodes) ids.insert(f.group.id(cli::evaluate_expr(f.group, node)));
  CHECK(ids.size() == 24);
  CHECK(f.order.hasse().covers().size() == 64);
  CHECK(covers_of(f.order.hasse()) == diagram_covers(f.group, fixtures::sl3_nodes, fixtures::sl3_arrows));
  // Reachability in the diagram is the order.
  const auto reach = support::reachability(24, fixtures::sl3_arrows);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) {
      const auto lo = f.group.id(cli::evaluate_expr(f.group, fixtures::sl3_nodes[j]));
      const auto hi = f.group.id(cli::evaluate_expr(f.group, fixtures::sl3_nodes[i]));
      CHECK(static_cast<bool>(reach[i][j]) == f.order.leq(lo, hi));
    }
}

TEST_CASE("so24 order matches the hand-entered diagram arrow for arrow") {
  const Fixture f("so24");
  std::set<std::size_t> ids;
  for (const auto& node : fixtures::so24_nodes) ids.insert(f.group.id(cli::evaluate_expr(f.group, node)));
  CHECK(ids.size() == 16);
  CHECK(f.order.hasse().covers().size() == 36);
  CHECK(covers_of(f.order.hasse()) == diagram_covers(f.group, fixtures::so24_nodes, fixtures::so24_arrows));
}

TEST_CASE("down sets do not depend on the reduced word") {
  for (const std::string name : {"sl3", "so24", "sl4"}) {
    CAPTURE(name);
    const Fixture f(name);
    const support::ReferenceW w(support::reference_reflections(name));
    for (std::size_t u = 0; u < f.group.size(); ++u) {
      const auto words = f.group.weyl().all_reduced_words(f.group.projection(u));
      CHECK(words.size() <= 16);
      for (const Word& word : words) {
        CHECK(f.order.down_set_by_drops(u, word) == f.order.down_set(u));
        const auto covers = f.order.down_covers_for_word(u, word);
        for (std::size_t v : covers) CHECK(f.order.leq(v, u));
      }
    }
  }
}

TEST_CASE("non-reduced words are rejected") {
  const Fixture f("sl3");
  const std::size_t u = f.group.id(cli::evaluate_expr(f.group, "s1"));
  CHECK_THROWS_AS(f.order.down_set_by_drops(u, {1, 2, 2}), InvariantViolation);
  CHECK_THROWS_AS(f.order.down_covers_for_word(u, {2}), InvariantViolation);
}

TEST_CASE("structure: grading, extremes, projection, Bruhat recovery") {
  for (const std::string name : {"sl3", "so24", "sl4"}) {
    CAPTURE(name);
    const Fixture f(name);
    const TitsGroup& g = f.group;
    const WeylGroup& w = g.weyl();
    // covers drop the length of the projection by exactly one
    for (const auto& [lo, hi] : f.order.hasse().covers())
      CHECK(g.projection(lo).length() + 1 == g.projection(hi).length());
    // minimal elements are C, maximal ones lie over w0
    std::set<std::size_t> c_ids, top_ids;
    for (const auto& c : g.C()) c_ids.insert(g.id(c.matrix));
    for (std::size_t id = 0; id < g.size(); ++id)
      if (g.projection(id) == w.longest()) top_ids.insert(id);
    const auto mins = f.order.hasse().minimal(), maxs = f.order.hasse().maximal();
    CHECK(std::set<std::size_t>(mins.begin(), mins.end()) == c_ids);
    CHECK(std::set<std::size_t>(maxs.begin(), maxs.end()) == top_ids);
    // projection is monotone on all pairs
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (f.order.leq(a, b)) CHECK(w.bruhat_leq(g.projection(a), g.projection(b)));
    // lifts of reduced words recover Bruhat on W
    for (const auto& x : w.elements())
      for (const auto& y : w.elements()) {
        const auto a = g.id(g.lift_word(w.reduced_word(x))), b = g.id(g.lift_word(w.reduced_word(y)));
        CHECK(w.bruhat_leq(x, y) == f.order.leq(a, b));
      }
    // C-translates: u <= v iff uc <= vc
    for (const auto& c : g.C())
      for (const auto& [lo, hi] : f.order.hasse().covers())
        CHECK(f.order.leq(g.id(g.matrix(lo) * c.matrix), g.id(g.matrix(hi) * c.matrix)));
  }
}

TEST_CASE("Morse quotient for theta = {1} on sl3") {
  const Fixture f("sl3");
  const TitsGroup& g = f.group;
  const QuotientPoset q = morse_quotient_order(f.order, g.subgroup_U_H({1}));
  REQUIRE(q.members.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CAPTURE(fixtures::sl3_theta1_nodes[k]);
    const std::size_t cls = klass(g, q, fixtures::sl3_theta1_nodes[k]);
    std::set<std::size_t> expected;
    for (const auto& m : fixtures::sl3_theta1_members[k]) expected.insert(g.id(cli::evaluate_expr(g, m)));
    CHECK(std::set<std::size_t>(q.members[cls].begin(), q.members[cls].end()) == expected);
  }
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (const auto& [hi, lo] : fixtures::sl3_theta1_arrows)
    expected.emplace(klass(g, q, fixtures::sl3_theta1_nodes[lo]), klass(g, q, fixtures::sl3_theta1_nodes[hi]));
  CHECK(covers_of(q.order) == expected);
}

TEST_CASE("quotients at the extremes of theta") {
  const Fixture f("sl3");
  const TitsGroup& g = f.group;
  const QuotientPoset full = morse_quotient_order(f.order, g.subgroup_U_H({}));
  CHECK(full.members.size() == 24);
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b)
      CHECK(full.order.leq(full.class_of[a], full.class_of[b]) == f.order.leq(a, b));
  CHECK(morse_quotient_order(f.order, g.subgroup_U_H({1, 2})).members.size() == 1);
}

TEST_CASE("quotient relations are partial orders for every parabolic subgroup") {
  for (const std::string name : {"sl3", "so24", "sl4"}) {
    const Fixture f(name);
    const std::size_t r = f.group.rank();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      IndexSet theta;
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1u) theta.insert(static_cast<int>(i) + 1);
      const auto u_h = f.group.subgroup_U_H(theta);
      const auto m = morse_quotient_order(f.order, u_h);
      const auto c = control_quotient_order(f.order, u_h);
      CHECK(m.members.size() * u_h.size() == f.group.size());
      // Both relations live on the same cosets; from_relation already
      // rejected anything that is not a partial order.
      for (std::size_t k = 0; k < m.members.size(); ++k) CHECK(m.class_of[m.representative[k]] == k);
      CHECK(c.members == m.members);
    }
  }
}

TEST_CASE("control sets for U(S) generated by s1") {
  const Fixture f("sl3");
  const TitsGroup& g = f.group;
  const cli::ControlData d = cli::control_data(f.order, {cli::evaluate_expr(g, "s1")});
  CHECK(d.u_s.size() == 4);
  CHECK(d.iso.u_cosets == 6);
  CHECK(d.iso.w_cosets == 3);
  CHECK(d.iso.c_cosets == 2);
  CHECK(d.iso.identity_holds);
  std::set<ExactMatrix> c_s;
  for (const auto& e : d.iso.c_s) c_s.insert(e.matrix);
  CHECK(c_s == std::set<ExactMatrix>{ExactMatrix::identity(3), cli::evaluate_expr(g, "s1^2")});
  REQUIRE(d.iso.w_s.size() == 2);
  CHECK(d.iso.w_s[0] == g.weyl().identity());
  CHECK(d.iso.w_s[1] == g.weyl().simple_reflection(1));

  const QuotientPoset morse = morse_quotient_order(f.order, g.subgroup_U_H({1}));
  CHECK(d.quotient.members == morse.members);
  CHECK(d.quotient.order == morse.order);

  std::set<std::pair<std::size_t, std::size_t>> expected, got;
  for (const auto& [a, b] : fixtures::sl3_control_arrows)
    expected.emplace(klass(g, d.quotient, fixtures::sl3_control_nodes[a]),
                     klass(g, d.quotient, fixtures::sl3_control_nodes[b]));
  for (const auto& e : d.edges) got.emplace(e.smaller, e.larger);
  CHECK(got == expected);

  std::map<std::pair<std::size_t, std::size_t>, PairStatus> status;
  for (const auto& p : d.pairs) status[{p.a, p.b}] = p.status;
  for (const auto& [x, y] : fixtures::sl3_control_open) {
    auto a = klass(g, d.quotient, x), b = klass(g, d.quotient, y);
    if (a > b) std::swap(a, b);
    CHECK(status.at({a, b}) == PairStatus::Undetermined);
  }
  auto a = klass(g, d.quotient, "1"), b = klass(g, d.quotient, "s2^2");
  CHECK(status.at({std::min(a, b), std::max(a, b)}) == PairStatus::Unrelated);
  std::size_t implied = 0;
  for (const auto& p : d.pairs) implied += p.status == PairStatus::Implied;
  CHECK(implied == 12);
  CHECK(d.pairs.size() == 15);
}

TEST_CASE("converse candidates") {
  const Fixture f("sl3");
  const TitsGroup& g = f.group;
  const QuotientPoset q = control_quotient_order(f.order, g.subgroup_U_H({1}));
  const std::size_t s2 = klass(g, q, "s2"), s2s1sq = klass(g, q, "s2s1^2");
  const ConverseResult r = converse_candidates(f.order, q, s2, s2s1sq);
  CHECK(r.applicable());
  CHECK_FALSE(r.refuted());
  for (const auto& lift : r.lifts) {
    CHECK(g.lift_word(lift.word) == g.matrix(lift.element));
    CHECK(q.class_of[lift.element] == s2);
    for (std::size_t c : lift.candidates) CHECK(q.class_of[c] == s2s1sq);
  }
  CHECK(std::find(r.candidates().begin(), r.candidates().end(), g.id(cli::evaluate_expr(g, "s2^3"))) !=
        r.candidates().end());
  // The class of s2s1^2 has no element equal to the lift of one of its reduced words.
  CHECK_FALSE(converse_candidates(f.order, q, s2s1sq, s2).applicable());
  // From the identity class there is no way into the class of s2^2.
  CHECK(converse_candidates(f.order, q, klass(g, q, "1"), klass(g, q, "s2^2")).refuted());
  CHECK_THROWS_AS(converse_candidates(f.order, q, 0, 99), InvariantViolation);
  const QuotientPoset morse = morse_quotient_order(f.order, g.subgroup_U_H({1}));
  CHECK_THROWS_AS(control_forward_edges(morse), InvariantViolation);
}
