#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wtits/cli.hpp"
#include "wtits/errors.hpp"
#include "wtits/presets.hpp"

using namespace wtits;

namespace {

ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).numerator();
  return out;
}

std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InvariantViolation& e) {
    return e.invariant();
  }
  return "";
}

nlohmann::json sl2_config() {
  return nlohmann::json::parse(R"({"n": 2, "generators": [[[0, -1], [1, 0]]], "simple_roots": [[1, -1]]})");
}

}  // namespace

TEST_CASE("group orders") {
  struct Row {
    const char* name;
    std::size_t u, w, c;
  };
  for (const Row r : {Row{"sl2", 4, 2, 2}, Row{"sl3", 24, 6, 4}, Row{"sl4", 192, 24, 8}, Row{"so24", 16, 8, 2}}) {
    CAPTURE(r.name);
    const TitsGroup g(load_preset(r.name));
    CHECK(g.size() == r.u);
    CHECK(g.weyl().order() == r.w);
    CHECK(g.C().size() == r.c);
    CHECK(g.size() == g.weyl().order() * g.C().size());
  }
}

TEST_CASE("projection, kernel and c-parts against the reference projection") {
  for (const std::string name : {"sl2", "sl3", "sl4", "so24"}) {
    CAPTURE(name);
    const TitsGroup g(load_preset(name));
    std::set<ExactMatrix> kernel;
    for (std::size_t id = 0; id < g.size(); ++id) {
      const ExactMatrix& u = g.matrix(id);
      const ExactMatrix pw = support::reference_projection(g, u);
      CHECK(to_exact(g.projection(id).matrix()) == pw);
      CHECK(to_exact(g.project_to_W(u).matrix()) == pw);
      if (pw.is_identity()) kernel.insert(u);
      // u = lift(reduced word) c with c in C, for every reduced word
      for (const Word& w : g.weyl().all_reduced_words(g.projection(id))) {
        const ExactMatrix c = g.c_part(u, w);
        CHECK(g.C().contains(c));
        CHECK(support::lift(g, w) * c == u);
      }
      CHECK(g.inverse(u) * u == ExactMatrix::identity(g.n()));
      CHECK(u.determinant() == 1);
    }
    CHECK(kernel.size() == g.C().size());
    for (const auto& c : g.C()) CHECK(kernel.count(c.matrix));
    CHECK(g.C().is_abelian());
    CHECK(g.C().is_group());
    CHECK(g.U().is_group());
    for (const auto& u : g.U())
      for (const auto& c : g.C()) CHECK(g.C().contains(u.matrix * c.matrix * g.inverse(u.matrix)));
  }
}

TEST_CASE("generator relations") {
  for (const std::string name : {"sl3", "sl4", "so24"}) {
    const TitsGroup g(load_preset(name));
    for (std::size_t i = 1; i <= g.rank(); ++i) {
      const ExactMatrix& s = g.generator(static_cast<int>(i));
      CHECK(s.pow(4).is_identity());
      CHECK(g.C().contains(s * s));
      CHECK(g.project_to_W(s) == g.weyl().simple_reflection(static_cast<int>(i)));
    }
  }
  const TitsGroup so(load_preset("so24"));
  const ExactMatrix &s1 = so.generator(1), &s2 = so.generator(2);
  CHECK((s2 * s2).is_identity());
  CHECK((s1 * s2).pow(2) == (s2 * s1).pow(2));
  CHECK(s1 * s1 == ExactMatrix::diagonal({-1, -1, -1, -1, 1, 1}));
  std::set<ExactMatrix> c;
  for (const auto& e : so.C()) c.insert(e.matrix);
  CHECK(c == std::set<ExactMatrix>{ExactMatrix::identity(6), s1 * s1});
}

TEST_CASE("labels: unique, sorted by length, and parse back to the element") {
  for (const std::string name : {"sl2", "sl3", "sl4", "so24"}) {
    CAPTURE(name);
    const TitsGroup g(load_preset(name));
    std::set<std::string> seen;
    for (std::size_t id = 0; id < g.size(); ++id) {
      CHECK(seen.insert(g.label(id)).second);
      CHECK(cli::evaluate_expr(g, g.label(id)) == g.matrix(id));
      CHECK(g.evaluate(g.display_expr(id)) == g.matrix(id));
      if (id > 0) CHECK(g.projection(id - 1).length() <= g.projection(id).length());
    }
    CHECK(g.label(0) == "1");
  }
}

TEST_CASE("sl3 labels use reduced word then C-part") {
  const TitsGroup g(load_preset("sl3"));
  auto m = [&](const char* e) { return cli::evaluate_expr(g, e); };
  CHECK(g.label(m("s2 s1 s1^2 s2^2")) == "s2s1s1^2s2^2");
  CHECK(g.label(m("s1^3")) == "s1s1^2");
  CHECK(g.label(m("s1^-1")) == "s1s1^2");
  CHECK(g.label(m("s2^2 s1^2")) == "s1^2s2^2");
  CHECK(to_string(g.c_word(m("s1^2 s2^2"))) == "s1^2s2^2");
}

TEST_CASE("subgroups and the quotient cardinality identity") {
  const TitsGroup g(load_preset("sl3"));
  const auto u_h = g.subgroup_U_H({1});
  CHECK(u_h.size() == 4);
  CHECK(u_h.is_group());
  const auto iso = g.check_quotient_isomorphism(u_h);
  CHECK(iso.u_cosets == 6);
  CHECK(iso.w_cosets == 3);
  CHECK(iso.c_cosets == 2);
  CHECK(iso.c_s.size() == 2);
  CHECK(iso.w_s.size() == 2);
  CHECK(iso.c_s_normal);
  CHECK(iso.identity_holds);
  CHECK(g.subgroup_U_H({}).size() == 1);
  CHECK(g.subgroup_U_H({1, 2}).size() == 24);
  CHECK(g.subgroup_U_H({}, {g.generator(1) * g.generator(1)}).size() == 2);
  CHECK(right_cosets(g.U(), u_h).size() == 6);
  // Random subgroups: |U(S)\U| = |W(S)\W| |C(S)\C| whenever C(S) is normal.
  const TitsGroup g4(load_preset("sl4"));
  for (std::size_t a = 0; a < g4.size(); a += 7)
    for (std::size_t b = a; b < g4.size(); b += 29) {
      const auto sub = g4.subgroup_closure({g4.matrix(a), g4.matrix(b)});
      const auto r = g4.check_quotient_isomorphism(sub);
      CHECK(r.u_cosets * sub.size() == g4.size());
      if (r.c_s_normal) CHECK(r.identity_holds);
    }
}

TEST_CASE("theta from H") {
  const TitsGroup g(load_preset("sl3"));
  // roots e2 - e3 and e1 - e2
  CHECK(g.theta_of({Rational(2), Rational(-1), Rational(-1)}) == IndexSet{1});
  CHECK(g.theta_of({Rational(1), Rational(1), Rational(-2)}) == IndexSet{2});
  CHECK(g.theta_of({Rational(1), Rational(0), Rational(-1)}).empty());
  CHECK(g.theta_of({Rational(0), Rational(0), Rational(0)}) == IndexSet{1, 2});
}

TEST_CASE("lookups outside the group") {
  const TitsGroup g(load_preset("sl3"));
  CHECK_THROWS_AS(g.generator(3), ParseError);
  CHECK_THROWS_AS(g.generator(0), ParseError);
  CHECK_THROWS_AS(g.id(ExactMatrix::diagonal({2, 1, 1})), InvariantViolation);
  CHECK_THROWS_AS(g.subgroup_U_H({}, {ExactMatrix::diagonal({-1, 1, 1})}), InvariantViolation);
}

TEST_CASE("presets by name") {
  CHECK(TitsGroup(load_preset("sl5")).size() == 120 * 16);
  CHECK_THROWS_AS(load_preset("sl1"), ParseError);
  CHECK_THROWS_AS(load_preset("slx"), ParseError);
  CHECK_THROWS_AS(load_preset("su3"), ParseError);
}

TEST_CASE("config ingestion") {
  const TitsGroup g(preset_from_json(sl2_config()));
  CHECK(g.size() == 4);

  auto cfg = nlohmann::json::parse(R"({"n": 2, "generators": [[[0, -1], [1, 0]]],
      "simple_roots": [[{"num": 1, "den": 1}, {"num": -2, "den": 2}]], "multiplicities": [1], "name": "x"})");
  CHECK(TitsGroup(preset_from_json(cfg)).size() == 4);

  CHECK_THROWS_AS(preset_from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(preset_from_json(nlohmann::json::parse(R"([1])")), ParseError);
  auto bad = sl2_config();
  bad["generators"] = nlohmann::json::parse("[[[0, -1], [1]]]");
  CHECK_THROWS_AS(preset_from_json(bad), ParseError);
  bad = sl2_config();
  bad["simple_roots"] = nlohmann::json::parse(R"([[1, {"num": 1, "den": 0}]])");
  CHECK_THROWS_AS(preset_from_json(bad), ParseError);
  bad = sl2_config();
  bad["a_basis"] = "upper";
  CHECK_THROWS_AS(preset_from_json(bad), ParseError);
}

TEST_CASE("config validation names the first failing invariant") {
  auto with_gen = [](const char* gen) {
    auto c = sl2_config();
    c["generators"] = nlohmann::json::parse(gen);
    return c;
  };
  auto build = [](const nlohmann::json& c) { return [c] { TitsGroup g(preset_from_json(c)); }; };
  CHECK(invariant_of(build(with_gen("[[[0, 1], [1, 0]]]"))) == "determinant +1");
  auto shear = with_gen("[[[1, 1], [0, 1]]]");
  CHECK(invariant_of(build(shear)) == "s^4 = 1");
  shear["signed_permutations"] = true;
  CHECK(invariant_of(build(shear)) == "signed permutation");
  CHECK(invariant_of(build(with_gen("[[[1, 0], [0, 1]]]"))) == "pi(s_i) = r_i");
  auto c3 = nlohmann::json::parse(R"({"n": 3, "generators": [[[0, -1, 0], [0, 0, -1], [1, 0, 0]]],
      "simple_roots": [[1, -1, 0]]})");
  CHECK(invariant_of(build(c3)) == "s^4 = 1");
  auto two = sl2_config();
  two["generators"].push_back(two["generators"][0]);
  CHECK(invariant_of(build(two)) == "generator count");
  auto mult = sl2_config();
  mult["multiplicities"] = {2};
  CHECK(invariant_of(build(mult)) == "m_i > 1 implies s_i^2 = 1");
  auto extra_c = sl2_config();
  extra_c["c_generators"] = nlohmann::json::parse("[[[0, -1], [1, 0]]]");
  CHECK(invariant_of(build(extra_c)) == "C in kernel of pi");
  auto dependent = nlohmann::json::parse(R"({"n": 2, "generators": [[[0, -1], [1, 0]]],
      "simple_roots": [[1, -1]], "a_basis": [[[1, 0], [0, 1]], [[2, 0], [0, 2]]]})");
  // The Frobenius Gram matrix of a dependent basis is already degenerate.
  CHECK(invariant_of(build(dependent)) == "root datum");
}
