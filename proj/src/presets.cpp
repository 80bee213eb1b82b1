#include "wtits/presets.hpp"

#include <charconv>

#include "wtits/errors.hpp"

namespace wtits {

namespace {

ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  ExactMatrix m(n);
  m(i, j) = 1;
  return m;
}

RationalVector difference_root(std::size_t n, std::size_t i, std::size_t j) {
  RationalVector a(n, Rational(0));
  a[i] = 1;
  a[j] = -1;
  return a;
}

void add_diagonal_a(GroupPreset& p) {
  for (std::size_t j = 0; j < p.n; ++j) p.a_basis.push_back(unit(p.n, j, j));
}

}  // namespace

GroupPreset make_sl3() {
  GroupPreset p;
  p.name = "sl3";
  p.n = 3;
  p.generators = {ExactMatrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}),
                  ExactMatrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}})};
  // s1 rotates coordinates (2,3), s2 rotates (1,2).
  p.root_datum = make_root_datum({difference_root(3, 1, 2), difference_root(3, 0, 1)}, {1, 1},
                                 RationalMatrix::identity(3));
  add_diagonal_a(p);
  p.labels = {"s1", "s2"};
  p.signed_permutations = true;
  return p;
}

GroupPreset make_sln(std::size_t n) {
  if (n < 2) throw ParseError("sl(n) requires n >= 2");
  GroupPreset p;
  p.name = "sl" + std::to_string(n);
  p.n = n;
  std::vector<RationalVector> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ExactMatrix s = ExactMatrix::identity(n);
    s(i, i) = 0;
    s(i + 1, i + 1) = 0;
    s(i, i + 1) = -1;
    s(i + 1, i) = 1;
    p.generators.push_back(s);
    simple.push_back(difference_root(n, i, i + 1));
    p.labels.push_back("s" + std::to_string(i + 1));
  }
  p.root_datum = make_root_datum(std::move(simple), std::vector<int>(n - 1, 1), RationalMatrix::identity(n));
  add_diagonal_a(p);
  p.signed_permutations = true;
  return p;
}

GroupPreset make_so24() {
  GroupPreset p;
  p.name = "so24";
  p.n = 6;
  p.generators = {ExactMatrix::from_rows({{0, 1, 0, 0, 0, 0},
                                          {-1, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 0},
                                          {0, 0, -1, 0, 0, 0},
                                          {0, 0, 0, 0, 1, 0},
                                          {0, 0, 0, 0, 0, 1}}),
                  ExactMatrix::diagonal({1, 1, 1, -1, 1, -1})};
  // a is spanned by H1 = E13 + E31 and H2 = E24 + E42.
  p.a_basis = {unit(6, 0, 2) + unit(6, 2, 0), unit(6, 1, 3) + unit(6, 3, 1)};
  RationalMatrix gram(2);
  gram(0, 0) = 2;
  gram(1, 1) = 2;
  p.root_datum = make_root_datum({{Rational(1), Rational(-1)}, {Rational(0), Rational(1)}}, {1, 2}, gram);
  p.labels = {"s1", "s2"};
  return p;
}

GroupPreset load_preset(const std::string& name) {
  if (name == "sl3") return make_sl3();
  if (name == "so24") return make_so24();
  if (name.size() > 2 && name.compare(0, 2, "sl") == 0) {
    std::size_t n = 0;
    const char* first = name.data() + 2;
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last) return make_sln(n);
  }
  throw ParseError("unknown preset '" + name + "' (expected sl3, sl<n> or so24)");
}

namespace {

using nlohmann::json;

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    const std::int64_t den = as_int(j.at("den"), where + ".den");
    if (den == 0) throw ParseError(where + ": zero denominator");
    return Rational(as_int(j.at("num"), where + ".num"), den);
  }
  throw ParseError(where + ": expected an integer or {\"num\", \"den\"}");
}

ExactMatrix as_matrix(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
  ExactMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = as_int(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

std::vector<ExactMatrix> as_matrix_list(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of matrices");
  std::vector<ExactMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_matrix(j[k], n, where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

GroupPreset preset_from_json(const json& config) {
  if (!config.is_object()) throw ParseError("config: expected a JSON object");
  for (const char* key : {"n", "generators", "simple_roots"})
    if (!config.contains(key)) throw ParseError(std::string("config: missing key '") + key + "'");
  GroupPreset p;
  p.name = config.value("name", std::string("custom"));
  const std::int64_t n = as_int(config.at("n"), "n");
  if (n < 1) throw ParseError("n: must be positive");
  p.n = static_cast<std::size_t>(n);
  p.generators = as_matrix_list(config.at("generators"), p.n, "generators");
  if (config.contains("c_generators")) p.c_generators = as_matrix_list(config.at("c_generators"), p.n, "c_generators");

  const json a = config.value("a_basis", json("diagonal"));
  if (a.is_string()) {
    if (a.get<std::string>() != "diagonal") throw ParseError("a_basis: expected \"diagonal\" or a list of matrices");
    add_diagonal_a(p);
  } else {
    p.a_basis = as_matrix_list(a, p.n, "a_basis");
  }
  const std::size_t dim = p.a_basis.size();

  const json& roots = config.at("simple_roots");
  if (!roots.is_array()) throw ParseError("simple_roots: expected a list");
  std::vector<RationalVector> simple;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::string where = "simple_roots[" + std::to_string(i) + "]";
    if (!roots[i].is_array() || roots[i].size() != dim)
      throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates");
    RationalVector v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(as_rational(roots[i][k], where + "[" + std::to_string(k) + "]"));
    simple.push_back(std::move(v));
  }
  std::vector<int> mult(simple.size(), 1);
  if (config.contains("multiplicities")) {
    const json& m = config.at("multiplicities");
    if (!m.is_array() || m.size() != simple.size()) throw ParseError("multiplicities: one entry per simple root");
    for (std::size_t i = 0; i < m.size(); ++i)
      mult[i] = static_cast<int>(as_int(m[i], "multiplicities[" + std::to_string(i) + "]"));
  }

  RationalMatrix gram(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = 0; l < dim; ++l) gram(k, l) = frobenius(p.a_basis[k], p.a_basis[l]);
  p.root_datum = make_root_datum(std::move(simple), std::move(mult), gram);
  for (std::size_t i = 1; i <= p.generators.size(); ++i) p.labels.push_back("s" + std::to_string(i));
  p.signed_permutations = config.value("signed_permutations", false);
  return p;
}

}  // namespace wtits
