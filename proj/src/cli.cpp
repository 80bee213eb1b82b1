#include "wtits/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wtits/errors.hpp"

namespace wtits::cli {

namespace {

struct Located {
  Token token;
  std::size_t position;
};

std::vector<Located> parse_located(const std::string& text) {
  std::vector<Located> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from, const char* what) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == from) throw ParseError(std::string("expected ") + what + " at position " + std::to_string(from), from);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + j, value);
    if (ec != std::errc()) throw ParseError(std::string(what) + " out of range at position " + std::to_string(from), from);
    return std::pair{value, j};
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    if (ch == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (ch != 's' && ch != 'c')
      throw ParseError("unexpected character '" + std::string(1, ch) + "' at position " + std::to_string(i), i);
    const std::size_t start = i;
    auto [index, next] = digits(i + 1, "generator index");
    if (index < 1) throw ParseError("generator indices start at 1 (position " + std::to_string(i + 1) + ")", i + 1);
    int exponent = 1;
    i = next;
    if (i < text.size() && text[i] == '^') {
      std::size_t from = i + 1;
      const bool negative = from < text.size() && text[from] == '-';
      if (negative) ++from;
      auto [e, after] = digits(from, "exponent");
      exponent = negative ? -e : e;
      i = after;
    }
    out.push_back({Token{ch == 's' ? Token::Kind::S : Token::Kind::C, index, exponent}, start});
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> labels_of(const TitsGroup& g, const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (std::size_t id : ids) out.push_back(g.label(id));
  return out;
}

std::string weyl_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int i : w) out += "r" + std::to_string(i);
  return out;
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json matrix_json(const oracle::Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Expr parse_expr(const std::string& text) {
  Expr out;
  for (const auto& l : parse_located(text)) out.push_back(l.token);
  return out;
}

ExactMatrix evaluate_expr(const TitsGroup& group, const std::string& text) {
  for (const auto& l : parse_located(text)) {
    const bool s = l.token.kind == Token::Kind::S;
    const std::size_t limit = s ? group.rank() : group.preset().c_generators.size();
    if (static_cast<std::size_t>(l.token.index) > limit)
      throw ParseError("unknown generator " + std::string(s ? "s" : "c") + std::to_string(l.token.index) +
                           " at position " + std::to_string(l.position) + " (group has " + std::to_string(limit) +
                           (s ? " generators s_i)" : " generators c_j)"),
                       l.position);
  }
  return group.evaluate(parse_expr(text));
}

std::vector<ExactMatrix> evaluate_expr_list(const TitsGroup& group, const std::vector<std::string>& items) {
  std::vector<ExactMatrix> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(evaluate_expr(group, part));
  }
  return out;
}

IndexSet parse_index_set(const std::string& text, std::size_t rank) {
  IndexSet out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i)
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at position " + std::to_string(i), i);
    int v = 0;
    std::from_chars(text.data() + i, text.data() + j, v);
    if (v < 1 || static_cast<std::size_t>(v) > rank)
      throw ParseError("simple root index " + std::to_string(v) + " out of range 1.." + std::to_string(rank), i);
    out.insert(v);
    i = j;
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  std::size_t offset = 0;
  while (std::getline(ss, part, ',')) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry at position " + std::to_string(offset), offset);
    const std::string s = part.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw ParseError("invalid number '" + s + "' at position " + std::to_string(offset + b), offset + b);
    out.push_back(v);
    offset += part.size() + 1;
  }
  return out;
}

oracle::Matrix parse_elementary_sum(const std::string& text, std::size_t n) {
  oracle::Matrix m = oracle::Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty() || compact == "0") return m;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t end = compact.find('+', pos);
    if (end == std::string::npos) end = compact.size();
    const std::string term = compact.substr(pos, end - pos);
    const std::size_t e = term.find('e');
    if (e == std::string::npos || term.empty())
      throw ParseError("expected a term like e23 or 2*e1_3 at position " + std::to_string(pos), pos);
    double coef = 1;
    if (e > 0) {
      std::string c = term.substr(0, e);
      if (c.back() == '*') c.pop_back();
      std::size_t used = 0;
      try {
        coef = std::stod(c, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (c.empty() || used != c.size()) throw ParseError("invalid coefficient '" + c + "' at position " + std::to_string(pos), pos);
    }
    const std::string idx = term.substr(e + 1);
    int i = 0, j = 0;
    const auto underscore = idx.find('_');
    bool ok = false;
    if (underscore != std::string::npos) {
      const auto r1 = std::from_chars(idx.data(), idx.data() + underscore, i);
      const auto r2 = std::from_chars(idx.data() + underscore + 1, idx.data() + idx.size(), j);
      ok = r1.ec == std::errc() && r1.ptr == idx.data() + underscore && r2.ec == std::errc() &&
           r2.ptr == idx.data() + idx.size();
    } else if (idx.size() == 2 && std::isdigit(static_cast<unsigned char>(idx[0])) &&
               std::isdigit(static_cast<unsigned char>(idx[1]))) {
      i = idx[0] - '0';
      j = idx[1] - '0';
      ok = true;
    }
    if (!ok) throw ParseError("invalid matrix unit '" + term + "' at position " + std::to_string(pos + e), pos + e);
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
      throw ParseError("matrix unit index out of range in '" + term + "'", pos + e);
    m(i - 1, j - 1) += coef;
    pos = end + 1;
  }
  return m;
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// group

json group_json(const TitsGroup& g) {
  json j;
  j["preset"] = g.preset().name;
  j["n"] = g.n();
  j["order_U"] = g.size();
  j["order_W"] = g.weyl().order();
  j["order_C"] = g.C().size();
  json gens = json::array();
  for (std::size_t i = 0; i < g.rank(); ++i)
    gens.push_back({{"label", g.preset().labels[i]}, {"matrix", matrix_json(g.preset().generators[i])}});
  j["generators"] = gens;
  json cg = json::array();
  for (std::size_t i = 0; i < g.preset().c_generators.size(); ++i)
    cg.push_back({{"label", "c" + std::to_string(i + 1)}, {"matrix", matrix_json(g.preset().c_generators[i])}});
  j["c_generators"] = cg;
  json roots = json::array();
  for (const auto& a : g.preset().root_datum.simple_roots) {
    json r = json::array();
    for (const auto& x : a) r.push_back(rational_string(x));
    roots.push_back(r);
  }
  j["simple_roots"] = roots;
  j["multiplicities"] = g.preset().root_datum.multiplicities;
  json cs = json::array();
  for (std::size_t id = 0; id < g.size(); ++id)
    if (g.C().contains(g.matrix(id))) cs.push_back({{"word", g.label(id)}, {"matrix", matrix_json(g.matrix(id))}});
  j["C"] = cs;
  return j;
}

std::string group_text(const TitsGroup& g) {
  std::ostringstream os;
  os << "preset " << g.preset().name << " (n=" << g.n() << ")\n";
  os << "|U|=" << g.size() << " |W|=" << g.weyl().order() << " |C|=" << g.C().size() << "\n";
  for (std::size_t i = 0; i < g.rank(); ++i)
    os << g.preset().labels[i] << " = " << to_string(g.preset().generators[i]) << "  (m=" << g.preset().root_datum.multiplicities[i]
       << ")\n";
  for (std::size_t i = 0; i < g.preset().c_generators.size(); ++i)
    os << "c" << i + 1 << " = " << to_string(g.preset().c_generators[i]) << "\n";
  std::vector<std::string> cs;
  for (std::size_t id = 0; id < g.size(); ++id)
    if (g.C().contains(g.matrix(id))) cs.push_back(g.label(id));
  os << "C = {" << join(cs, ", ") << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// order

json hasse_json(const ExtendedBruhatOrder& order) {
  const TitsGroup& g = order.group();
  json elements = json::array();
  for (std::size_t id = 0; id < g.size(); ++id)
    elements.push_back({{"id", id}, {"word", g.label(id)}, {"matrix", matrix_json(g.matrix(id))}});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : order.hasse().covers()) edges.emplace_back(hi, lo);
  std::sort(edges.begin(), edges.end());
  json covers = json::array();
  for (const auto& [hi, lo] : edges) covers.push_back({hi, lo});
  return {{"preset", g.preset().name}, {"elements", elements}, {"covers", covers}};
}

std::string hasse_dot(const ExtendedBruhatOrder& order) {
  const TitsGroup& g = order.group();
  std::ostringstream os;
  os << "digraph extended_bruhat {\n  node [shape=box];\n";
  for (std::size_t id = 0; id < g.size(); ++id) os << "  n" << id << " [label=\"" << g.label(id) << "\"];\n";
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : order.hasse().covers()) edges.emplace_back(hi, lo);
  std::sort(edges.begin(), edges.end());
  for (const auto& [hi, lo] : edges) os << "  n" << hi << " -> n" << lo << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// quotients

std::string coset_name(const std::string& prefix, const TitsGroup& group, std::size_t representative) {
  const std::string& l = group.label(representative);
  return l == "1" ? prefix : prefix + " " + l;
}

json quotient_json(const ExtendedBruhatOrder& order, const QuotientPoset& q, const std::string& prefix) {
  const TitsGroup& g = order.group();
  json cosets = json::array();
  for (std::size_t k = 0; k < q.members.size(); ++k)
    cosets.push_back({{"id", k},
                      {"name", coset_name(prefix, g, q.representative[k])},
                      {"representative", g.label(q.representative[k])},
                      {"members", labels_of(g, q.members[k])}});
  json covers = json::array();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : q.order.covers()) edges.emplace_back(hi, lo);
  std::sort(edges.begin(), edges.end());
  for (const auto& [hi, lo] : edges) covers.push_back({hi, lo});
  json j = {{"kind", q.kind == QuotientKind::Morse ? "morse" : "control"}, {"cosets", cosets}, {"covers", covers}};
  if (q.kind == QuotientKind::Morse) {
    // Dynamical order of the components is the inverse: [a, b] means M(a) <= M(b).
    json dyn = json::array();
    for (const auto& [hi, lo] : edges) dyn.push_back({hi, lo});
    j["dynamical_order"] = dyn;
  }
  return j;
}

std::string quotient_dot(const ExtendedBruhatOrder& order, const QuotientPoset& q, const std::string& prefix) {
  const TitsGroup& g = order.group();
  std::ostringstream os;
  os << "digraph quotient {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < q.members.size(); ++k)
    os << "  q" << k << " [label=\"" << coset_name(prefix, g, q.representative[k]) << "\"];\n";
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : q.order.covers()) edges.emplace_back(hi, lo);
  std::sort(edges.begin(), edges.end());
  for (const auto& [hi, lo] : edges) os << "  q" << hi << " -> q" << lo << ";\n";
  os << "}\n";
  return os.str();
}

std::string morse_text(const ExtendedBruhatOrder& order, const QuotientPoset& q) {
  const TitsGroup& g = order.group();
  std::ostringstream os;
  os << q.members.size() << " cosets in U_H\\U\n";
  for (std::size_t k = 0; k < q.members.size(); ++k)
    os << coset_name("U_H", g, q.representative[k]) << " = {" << join(labels_of(g, q.members[k]), ", ") << "}\n";
  os << "order <=_H, " << q.order.covers().size() << " covers (upper -> lower):\n";
  for (const auto& [lo, hi] : q.order.covers())
    os << "  " << coset_name("U_H", g, q.representative[hi]) << " -> " << coset_name("U_H", g, q.representative[lo]) << "\n";
  os << "dynamical order of the minimal Morse components (inverse of <=_H):\n";
  for (const auto& [lo, hi] : q.order.covers())
    os << "  M(" << g.label(q.representative[hi]) << ") <= M(" << g.label(q.representative[lo]) << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// control

ControlData control_data(const ExtendedBruhatOrder& order, const std::vector<ExactMatrix>& gens) {
  const TitsGroup& g = order.group();
  ControlData d;
  d.u_s = g.subgroup_closure(gens);
  d.iso = g.check_quotient_isomorphism(d.u_s);
  d.quotient = control_quotient_order(order, d.u_s);
  d.edges = control_forward_edges(d.quotient);
  d.pairs = classify_control_pairs(order, d.quotient);
  return d;
}

namespace {

std::vector<std::string> sorted_labels(const TitsGroup& g, const FiniteGroupTable& t) {
  std::vector<std::size_t> ids;
  for (const auto& e : t) ids.push_back(g.id(e.matrix));
  std::sort(ids.begin(), ids.end());
  return labels_of(g, ids);
}

std::string dname(const TitsGroup& g, const QuotientPoset& q, std::size_t k) {
  return "D(" + g.label(q.representative[k]) + ")";
}

json converse_json(const TitsGroup& g, const ConverseResult& r) {
  json lifts = json::array();
  for (const auto& l : r.lifts)
    lifts.push_back({{"element", g.label(l.element)}, {"word", l.word}, {"candidates", labels_of(g, l.candidates)}});
  return {{"applicable", r.applicable()}, {"refuted", r.refuted()}, {"lifts", lifts}};
}

const PairReport& find_pair(const ControlData& d, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  for (const auto& p : d.pairs)
    if (p.a == a && p.b == b) return p;
  throw InvariantViolation("control pairs", "pair missing from classification");
}

std::string hypothesis_text(const TitsGroup& g, const QuotientPoset& q, std::size_t x, std::size_t y, bool invariant,
                            const ConverseResult& r) {
  std::ostringstream os;
  os << "  hypothesis " << dname(g, q, x) << " <= " << dname(g, q, y) << ": ";
  if (invariant)
    os << "refuted, " << dname(g, q, x) << " is an invariant control set";
  else if (!r.applicable())
    os << "no reduced lift in the class, converse does not apply";
  else if (r.refuted())
    os << "refuted, a reduced lift has no s^k product in " << dname(g, q, y);
  else
    os << "not refuted";
  os << "\n";
  for (const auto& l : r.lifts)
    os << "    lift " << g.label(l.element) << ": candidates {" << join(labels_of(g, l.candidates), ", ") << "}\n";
  return os.str();
}

}  // namespace

json control_json(const ExtendedBruhatOrder& order, const ControlData& d) {
  const TitsGroup& g = order.group();
  json j;
  j["U_S"] = sorted_labels(g, d.u_s);
  j["C_S"] = sorted_labels(g, d.iso.c_s);
  json ws = json::array();
  for (const auto& w : d.iso.w_s) ws.push_back(weyl_word(g.weyl().reduced_word(w)));
  j["W_S"] = ws;
  j["cardinality"] = {{"U_S_cosets", d.iso.u_cosets},
                      {"W_S_cosets", d.iso.w_cosets},
                      {"C_S_cosets", d.iso.c_cosets},
                      {"C_S_normal", d.iso.c_s_normal},
                      {"holds", d.iso.identity_holds}};
  j["quotient"] = quotient_json(order, d.quotient, "U(S)");
  json edges = json::array();
  for (const auto& e : d.edges)
    edges.push_back({{"smaller", dname(g, d.quotient, e.smaller)}, {"larger", dname(g, d.quotient, e.larger)}});
  j["forward_edges"] = edges;
  json pairs = json::array();
  for (const auto& p : d.pairs) {
    if (p.status == PairStatus::Implied) continue;
    pairs.push_back({{"a", dname(g, d.quotient, p.a)},
                     {"b", dname(g, d.quotient, p.b)},
                     {"status", to_string(p.status)},
                     {"a_invariant", p.a_invariant},
                     {"b_invariant", p.b_invariant},
                     {"a_below_b", converse_json(g, p.a_below_b)},
                     {"b_below_a", converse_json(g, p.b_below_a)}});
  }
  j["open_pairs"] = pairs;
  return j;
}

std::string control_text(const ExtendedBruhatOrder& order, const ControlData& d) {
  const TitsGroup& g = order.group();
  std::ostringstream os;
  os << "U(S) = {" << join(sorted_labels(g, d.u_s), ", ") << "}\n";
  os << "C(S) = {" << join(sorted_labels(g, d.iso.c_s), ", ") << "}" << (d.iso.c_s_normal ? " (normal in U(S))" : " (NOT normal)")
     << "\n";
  std::vector<std::string> ws;
  for (const auto& w : d.iso.w_s) ws.push_back(weyl_word(g.weyl().reduced_word(w)));
  os << "W(S) = {" << join(ws, ", ") << "}\n";
  os << "|U(S)\\U| = " << d.iso.u_cosets << ", |W(S)\\W| * |C(S)\\C| = " << d.iso.w_cosets << " * " << d.iso.c_cosets
     << (d.iso.identity_holds ? " (holds)" : " (FAILS)") << "\n";
  os << d.quotient.members.size() << " control-set classes\n";
  for (std::size_t k = 0; k < d.quotient.members.size(); ++k)
    os << dname(g, d.quotient, k) << ": " << coset_name("U(S)", g, d.quotient.representative[k]) << " = {"
       << join(labels_of(g, d.quotient.members[k]), ", ") << "}\n";
  os << "quotient order, " << d.quotient.order.covers().size() << " covers (upper -> lower):\n";
  for (const auto& [lo, hi] : d.quotient.order.covers())
    os << "  " << coset_name("U(S)", g, d.quotient.representative[hi]) << " -> "
       << coset_name("U(S)", g, d.quotient.representative[lo]) << "\n";
  os << "implied control-set order, " << d.edges.size() << " arrows (D' -> D means D' <= D):\n";
  for (const auto& e : d.edges) os << "  " << dname(g, d.quotient, e.smaller) << " -> " << dname(g, d.quotient, e.larger) << "\n";
  os << "pairs not ordered by the quotient:\n";
  for (const auto& p : d.pairs)
    if (p.status != PairStatus::Implied)
      os << "  " << dname(g, d.quotient, p.a) << ", " << dname(g, d.quotient, p.b) << ": " << to_string(p.status) << "\n";
  return os.str();
}

json control_pair_json(const ExtendedBruhatOrder& order, const ControlData& d, const ExactMatrix& lhs,
                       const ExactMatrix& rhs) {
  const TitsGroup& g = order.group();
  const std::size_t a = d.quotient.class_of[g.id(lhs)], b = d.quotient.class_of[g.id(rhs)];
  json j = {{"lhs", dname(g, d.quotient, a)}, {"rhs", dname(g, d.quotient, b)}};
  if (a == b) {
    j["status"] = "same";
    return j;
  }
  const PairReport& p = find_pair(d, a, b);
  j["status"] = to_string(p.status);
  if (p.status == PairStatus::Implied) {
    const std::size_t upper = p.b_above_a ? p.b : p.a, lower = p.b_above_a ? p.a : p.b;
    j["implied"] = dname(g, d.quotient, upper) + " <= " + dname(g, d.quotient, lower);
    return j;
  }
  const bool flipped = p.a != a;
  j["lhs_invariant"] = flipped ? p.b_invariant : p.a_invariant;
  j["rhs_invariant"] = flipped ? p.a_invariant : p.b_invariant;
  j["lhs_below_rhs"] = converse_json(g, flipped ? p.b_below_a : p.a_below_b);
  j["rhs_below_lhs"] = converse_json(g, flipped ? p.a_below_b : p.b_below_a);
  return j;
}

std::string control_pair_text(const ExtendedBruhatOrder& order, const ControlData& d, const ExactMatrix& lhs,
                              const ExactMatrix& rhs) {
  const TitsGroup& g = order.group();
  const std::size_t a = d.quotient.class_of[g.id(lhs)], b = d.quotient.class_of[g.id(rhs)];
  std::ostringstream os;
  os << dname(g, d.quotient, a) << " vs " << dname(g, d.quotient, b) << ": ";
  if (a == b) {
    os << "same control set\n";
    return os.str();
  }
  const PairReport& p = find_pair(d, a, b);
  os << to_string(p.status) << "\n";
  if (p.status == PairStatus::Implied) {
    const std::size_t upper = p.b_above_a ? p.b : p.a, lower = p.b_above_a ? p.a : p.b;
    os << "  " << dname(g, d.quotient, upper) << " <= " << dname(g, d.quotient, lower) << " from the coset order\n";
    return os.str();
  }
  os << hypothesis_text(g, d.quotient, p.a, p.b, p.a_invariant, p.a_below_b);
  os << hypothesis_text(g, d.quotient, p.b, p.a, p.b_invariant, p.b_below_a);
  return os.str();
}

// ---------------------------------------------------------------------------
// oracle reports

json schubert_json(const TitsGroup& g, const oracle::SchubertReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"lo", g.label(p.lo)},
                     {"hi", g.label(p.hi)},
                     {"combinatorial", p.combinatorial},
                     {"numerical", p.numerical},
                     {"min_distance", p.min_distance}});
  return {{"preset", g.preset().name},
          {"seed", r.seed},
          {"count", r.count},
          {"tol", r.tol},
          {"margin", r.margin},
          {"agreeing", r.agreeing},
          {"total", r.pairs.size()},
          {"min_negative_distance", r.min_negative_distance},
          {"max_positive_distance", r.max_positive_distance},
          {"margin_ok", r.margin_ok()},
          {"pairs", pairs}};
}

json morse_flow_json(const TitsGroup& g, const oracle::FlowSpec& spec, const oracle::MorseOptions& o,
                     const oracle::MorseReport& r, const oracle::QuotientMatch* match) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(labels_of(g, c));
  json edges = json::array();
  for (const auto& [a, b] : r.flow_edges) edges.push_back({a, b});
  json j = {{"H", std::vector<double>(spec.H.data(), spec.H.data() + spec.H.size())},
            {"nilpotent", matrix_json(spec.nilpotent)},
            {"time_step", spec.time_step},
            {"steps", o.steps},
            {"perturbation", o.perturbation},
            {"grid", o.grid},
            {"seed", o.seed},
            {"degenerate", r.degenerate},
            {"theta", r.theta},
            {"recurrent", labels_of(g, r.recurrent)},
            {"components", comps},
            {"flow_edges", edges},
            {"attractors", r.attractors},
            {"max_cluster_distance", r.max_cluster_distance},
            {"trajectories", r.trajectories},
            {"non_convergent", r.non_convergent},
            {"generic", {{"points", r.generic_points},
                         {"in_attractors", r.generic_in_attractors},
                         {"non_convergent", r.generic_non_convergent}}}};
  if (match)
    j["quotient"] = {{"components_are_cosets", match->components_are_cosets},
                     {"order_reversed", match->order_reversed},
                     {"coset_of_component", match->coset_of_component}};
  return j;
}

json contraction_json(const oracle::ContractionReport& r) {
  return {{"residuals", r.residuals},
          {"ratios", r.ratios},
          {"alpha", r.alpha},
          {"predicted_ratio", r.predicted_ratio},
          {"max_relative_error", r.max_relative_error}};
}

}  // namespace wtits::cli
