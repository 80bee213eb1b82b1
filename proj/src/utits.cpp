#include "wtits/utits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "wtits/errors.hpp"

namespace wtits {

std::string to_string(const Expr& expr) {
  if (expr.empty()) return "1";
  std::ostringstream os;
  for (const Token& t : expr) {
    os << (t.kind == Token::Kind::S ? 's' : 'c') << t.index;
    if (t.exponent != 1) os << '^' << t.exponent;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FiniteGroupTable

FiniteGroupTable::FiniteGroupTable(std::vector<UElement> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index_.emplace(elements_[i].matrix, i).second)
      throw InvariantViolation("group table", "duplicate element " + to_string(elements_[i].matrix));
}

std::optional<std::size_t> FiniteGroupTable::position(const ExactMatrix& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ExactMatrix> FiniteGroupTable::matrices() const {
  std::vector<ExactMatrix> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.matrix);
  return out;
}

bool FiniteGroupTable::is_group() const {
  if (elements_.empty()) return false;
  if (!contains(ExactMatrix::identity(elements_[0].matrix.dim()))) return false;
  for (const auto& a : elements_) {
    const auto inv = a.matrix.inverse();
    if (!inv || !contains(*inv)) return false;
    for (const auto& b : elements_)
      if (!contains(a.matrix * b.matrix)) return false;
  }
  return true;
}

bool FiniteGroupTable::is_abelian() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (a.matrix * b.matrix != b.matrix * a.matrix) return false;
  return true;
}

namespace {

Expr append_word(const Expr& base, const Expr& tail) {
  Expr out = base;
  for (const Token& t : tail) {
    if (!out.empty() && out.back().kind == t.kind && out.back().index == t.index)
      out.back().exponent += t.exponent;
    else
      out.push_back(t);
  }
  return out;
}

}  // namespace

FiniteGroupTable closure(std::size_t n, const std::vector<UElement>& gens, std::size_t bound) {
  const bool track = std::all_of(gens.begin(), gens.end(), [](const UElement& g) { return g.word.has_value(); });
  std::vector<UElement> found{UElement{ExactMatrix::identity(n), track ? std::optional<Expr>(Expr{}) : std::nullopt}};
  std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> seen{{found[0].matrix, 0}};
  for (const auto& g : gens)
    if (g.matrix.dim() != n) throw InvariantViolation("closure", "generator has wrong dimension");

  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& g : gens) {
      ExactMatrix m = found[k].matrix * g.matrix;
      if (seen.count(m)) continue;
      if (found.size() >= bound)
        throw InvariantViolation("closure",
                                 "group exceeds " + std::to_string(bound) + " elements; generators are likely wrong");
      seen.emplace(m, found.size());
      std::optional<Expr> w;
      if (track) w = append_word(*found[k].word, *g.word);
      found.push_back(UElement{std::move(m), std::move(w)});
    }
  return FiniteGroupTable(std::move(found));
}

std::vector<Coset> right_cosets(const FiniteGroupTable& group, const FiniteGroupTable& subgroup) {
  for (const auto& h : subgroup)
    if (!group.contains(h.matrix)) throw InvariantViolation("cosets", "subgroup is not contained in group");
  std::vector<bool> assigned(group.size(), false);
  std::vector<Coset> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (assigned[i]) continue;
    Coset c;
    for (const auto& h : subgroup) {
      ExactMatrix m = h.matrix * group[i].matrix;
      const auto pos = group.position(m);
      if (!pos) throw InvariantViolation("cosets", "group is not closed under products");
      if (!assigned[*pos]) {
        assigned[*pos] = true;
        c.members.push_back(std::move(m));
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Coset& a, const Coset& b) { return a.representative < b.representative; });
  return out;
}

// ---------------------------------------------------------------------------
// TitsGroup

namespace {

RationalMatrix gram_of(const std::vector<ExactMatrix>& basis) {
  RationalMatrix g(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = 0; l < basis.size(); ++l) g(k, l) = frobenius(basis[k], basis[l]);
  return g;
}

}  // namespace

TitsGroup::TitsGroup(GroupPreset preset, std::size_t closure_bound)
    : preset_(std::move(preset)), weyl_(preset_.root_datum), closure_bound_(closure_bound) {
  if (preset_.a_basis.size() != preset_.root_datum.dim)
    throw InvariantViolation("a-basis", "basis size differs from the root datum's coordinate dimension");
  const auto gi = gram_of(preset_.a_basis).inverse();
  if (!gi) throw InvariantViolation("a-basis", "basis matrices are linearly dependent");
  gram_inverse_ = *gi;
  if (preset_.labels.empty())
    for (std::size_t i = 1; i <= rank(); ++i) preset_.labels.push_back("s" + std::to_string(i));

  validate_generators();

  std::vector<UElement> gens;
  for (std::size_t i = 0; i < rank(); ++i)
    gens.push_back({preset_.generators[i], Expr{Token{Token::Kind::S, static_cast<int>(i) + 1, 1}}});
  for (std::size_t j = 0; j < preset_.c_generators.size(); ++j)
    gens.push_back({preset_.c_generators[j], Expr{Token{Token::Kind::C, static_cast<int>(j) + 1, 1}}});
  const FiniteGroupTable raw = closure(n(), gens, closure_bound_);

  std::vector<UElement> c_gens;
  for (std::size_t i = 0; i < rank(); ++i)
    c_gens.push_back({preset_.generators[i] * preset_.generators[i],
                      Expr{Token{Token::Kind::S, static_cast<int>(i) + 1, 2}}});
  for (std::size_t j = 0; j < preset_.c_generators.size(); ++j)
    c_gens.push_back({preset_.c_generators[j], Expr{Token{Token::Kind::C, static_cast<int>(j) + 1, 1}}});
  c_ = closure(n(), c_gens, closure_bound_);
  build_c_words();

  if (raw.size() != weyl_.order() * c_.size())
    throw InvariantViolation("|U| = |W||C|", std::to_string(raw.size()) + " != " + std::to_string(weyl_.order()) +
                                                 " * " + std::to_string(c_.size()));
  if (!c_.is_abelian()) throw InvariantViolation("C abelian", "C is not abelian");
  for (const auto& c : c_)
    if (!project_to_W(c.matrix).matrix().is_identity())
      throw InvariantViolation("C in kernel of pi", to_string(c.matrix) + " projects nontrivially");
  for (const auto& g : gens) {
    const ExactMatrix gi_m = inverse(g.matrix);
    for (const auto& c : c_)
      if (!c_.contains(g.matrix * c.matrix * gi_m)) throw InvariantViolation("C normal", "C is not normal in U");
  }

  struct Keyed {
    UElement element;
    ElementInfo info;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(raw.size());
  std::size_t kernel = 0;
  for (const auto& e : raw) {
    ElementInfo info;
    info.projection = project_to_W(e.matrix);
    if (info.projection.matrix().is_identity()) ++kernel;
    info.word = weyl_.reduced_word(info.projection);
    info.c = inverse(lift_word(info.word)) * e.matrix;
    const auto cw = c_words_.find(info.c);
    if (cw == c_words_.end())
      throw InvariantViolation("c-part in C", "c-part of " + to_string(e.matrix) + " is not in C");
    for (int i : info.word) info.display.push_back(Token{Token::Kind::S, i, 1});
    info.display.insert(info.display.end(), cw->second.begin(), cw->second.end());
    info.label = to_string(info.display);
    keyed.push_back({e, std::move(info)});
  }
  if (kernel != c_.size()) throw InvariantViolation("ker pi = C", "kernel of the projection differs from C");

  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.info.word.size() != b.info.word.size()) return a.info.word.size() < b.info.word.size();
    if (a.info.word != b.info.word) return a.info.word < b.info.word;
    if (a.info.display.size() != b.info.display.size()) return a.info.display.size() < b.info.display.size();
    return a.info.display < b.info.display;
  });
  std::vector<UElement> sorted;
  for (auto& k : keyed) {
    sorted.push_back(std::move(k.element));
    info_.push_back(std::move(k.info));
  }
  u_ = FiniteGroupTable(std::move(sorted));
}

void TitsGroup::validate_generators() const {
  const std::size_t dim = n();
  if (dim == 0) throw InvariantViolation("dimension", "n must be positive");
  if (rank() != weyl_.rank())
    throw InvariantViolation("generator count", "one generator per simple root required");
  auto check_matrix = [&](const ExactMatrix& m, const std::string& name) {
    if (m.dim() != dim) throw InvariantViolation("dimension", name + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (m.determinant() != 1) throw InvariantViolation("determinant +1", name + " has determinant " + std::to_string(m.determinant()));
    if (preset_.signed_permutations && !m.is_signed_permutation())
      throw InvariantViolation("signed permutation", name + " is not a signed permutation matrix");
  };
  for (const auto& a : preset_.a_basis)
    if (a.dim() != dim) throw InvariantViolation("dimension", "a-basis matrix has wrong dimension");

  for (std::size_t i = 0; i < rank(); ++i) {
    const std::string name = preset_.labels.at(i);
    const ExactMatrix& s = preset_.generators[i];
    check_matrix(s, name);
    if (!s.pow(4).is_identity()) throw InvariantViolation("s^4 = 1", name + "^4 is not the identity");
    const WeylElement w = project_to_W(s);  // throws if s does not normalize a
    if (!(w == weyl_.simple_reflection(static_cast<int>(i) + 1)))
      throw InvariantViolation("pi(s_i) = r_i", "projection of " + name + " is not r" + std::to_string(i + 1));
    const ExactMatrix s2 = s * s;
    if (preset_.root_datum.multiplicities[i] > 1 && !s2.is_identity())
      throw InvariantViolation("m_i > 1 implies s_i^2 = 1", name + "^2 is not the identity");
    for (std::size_t j = 0; j < preset_.c_generators.size(); ++j) {
      const ExactMatrix& c = preset_.c_generators[j];
      if (s2 * c != c * s2)
        throw InvariantViolation("C abelian", name + "^2 does not commute with c" + std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < preset_.c_generators.size(); ++j) {
    const std::string name = "c" + std::to_string(j + 1);
    check_matrix(preset_.c_generators[j], name);
    if (!project_to_W(preset_.c_generators[j]).matrix().is_identity())
      throw InvariantViolation("C in kernel of pi", name + " projects nontrivially to W");
  }
}

void TitsGroup::build_c_words() {
  // Shortlex-minimal words over {s_i^2} then {c_j}, in that order.
  std::vector<std::pair<ExactMatrix, Token>> gens;
  for (std::size_t i = 0; i < rank(); ++i) {
    ExactMatrix s2 = preset_.generators[i] * preset_.generators[i];
    if (!s2.is_identity()) gens.emplace_back(std::move(s2), Token{Token::Kind::S, static_cast<int>(i) + 1, 2});
  }
  for (std::size_t j = 0; j < preset_.c_generators.size(); ++j)
    if (!preset_.c_generators[j].is_identity())
      gens.emplace_back(preset_.c_generators[j], Token{Token::Kind::C, static_cast<int>(j) + 1, 1});

  std::deque<ExactMatrix> queue{ExactMatrix::identity(n())};
  c_words_.emplace(queue.front(), Expr{});
  while (!queue.empty()) {
    const ExactMatrix m = queue.front();
    queue.pop_front();
    const Expr base = c_words_.at(m);
    for (const auto& [g, tok] : gens) {
      ExactMatrix next = m * g;
      if (c_words_.count(next)) continue;
      Expr w = base;
      w.push_back(tok);
      c_words_.emplace(next, std::move(w));
      queue.push_back(std::move(next));
    }
  }
  if (c_words_.size() != c_.size()) throw InvariantViolation("C", "C-word enumeration disagrees with closure");
}

const ExactMatrix& TitsGroup::generator(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > rank())
    throw ParseError("generator index s" + std::to_string(i) + " out of range");
  return preset_.generators[i - 1];
}

const ExactMatrix& TitsGroup::c_generator(int j) const {
  if (j < 1 || static_cast<std::size_t>(j) > preset_.c_generators.size())
    throw ParseError("generator index c" + std::to_string(j) + " out of range");
  return preset_.c_generators[j - 1];
}

std::size_t TitsGroup::id(const ExactMatrix& u) const {
  const auto pos = u_.position(u);
  if (!pos) throw InvariantViolation("element of U", to_string(u) + " is not in U");
  return *pos;
}

ExactMatrix TitsGroup::inverse(const ExactMatrix& u) const {
  const auto inv = u.inverse();
  if (!inv) throw InvariantViolation("invertible", to_string(u) + " has no integral inverse");
  return *inv;
}

WeylElement TitsGroup::project_to_W(const ExactMatrix& u) const {
  const ExactMatrix ui = inverse(u);
  const std::size_t d = preset_.a_basis.size();
  RationalMatrix w(d);
  for (std::size_t j = 0; j < d; ++j) {
    const ExactMatrix x = u * preset_.a_basis[j] * ui;
    RationalVector b(d);
    for (std::size_t k = 0; k < d; ++k) b[k] = frobenius(preset_.a_basis[k], x);
    const RationalVector c = gram_inverse_ * b;
    // Verify x lies in the span of the basis.
    for (std::size_t p = 0; p < n(); ++p)
      for (std::size_t q = 0; q < n(); ++q) {
        Rational s(0);
        for (std::size_t k = 0; k < d; ++k) s += c[k] * preset_.a_basis[k](p, q);
        if (s != Rational(x(p, q))) throw InvariantViolation("normalizes a", to_string(u) + " does not normalize the a-space");
      }
    for (std::size_t k = 0; k < d; ++k) w(k, j) = c[k];
  }
  return weyl_.make(w);
}

ExactMatrix TitsGroup::lift_word(const Word& word) const {
  ExactMatrix m = ExactMatrix::identity(n());
  for (int i : word) m = m * generator(i);
  return m;
}

ExactMatrix TitsGroup::c_part(const ExactMatrix& u) const {
  if (const auto pos = u_.position(u)) return info_[*pos].c;
  return c_part(u, weyl_.reduced_word(project_to_W(u)));
}

ExactMatrix TitsGroup::c_part(const ExactMatrix& u, const Word& reduced) const {
  ExactMatrix c = inverse(lift_word(reduced)) * u;
  if (!c_.contains(c)) throw InvariantViolation("c-part in C", "c-part of " + to_string(u) + " is not in C");
  return c;
}

ExactMatrix TitsGroup::evaluate(const Expr& expr) const {
  ExactMatrix m = ExactMatrix::identity(n());
  for (const Token& t : expr) {
    const ExactMatrix& g = t.kind == Token::Kind::S ? generator(t.index) : c_generator(t.index);
    const ExactMatrix base = t.exponent >= 0 ? g : inverse(g);
    m = m * base.pow(static_cast<unsigned>(t.exponent >= 0 ? t.exponent : -t.exponent));
  }
  return m;
}

Expr TitsGroup::c_word(const ExactMatrix& c) const {
  const auto it = c_words_.find(c);
  if (it == c_words_.end()) throw InvariantViolation("element of C", to_string(c) + " is not in C");
  return it->second;
}

FiniteGroupTable TitsGroup::subgroup_U_H(const IndexSet& theta, const std::vector<ExactMatrix>& extra) const {
  std::vector<ExactMatrix> gens;
  for (int i : theta) gens.push_back(generator(i));
  for (const auto& e : extra) {
    if (!u_.contains(e)) throw InvariantViolation("element of U", "extra generator " + to_string(e) + " is not in U");
    gens.push_back(e);
  }
  return subgroup_closure(gens);
}

FiniteGroupTable TitsGroup::subgroup_closure(const std::vector<ExactMatrix>& gens) const {
  std::vector<UElement> tagged;
  for (const auto& g : gens) {
    const auto pos = u_.position(g);
    if (!pos) throw InvariantViolation("element of U", to_string(g) + " is not in U");
    tagged.push_back({g, info_[*pos].display});
  }
  return closure(n(), tagged, closure_bound_);
}

QuotientIsomorphismReport TitsGroup::check_quotient_isomorphism(const FiniteGroupTable& u_s) const {
  if (!u_s.is_group()) throw InvariantViolation("U(S) subgroup", "U(S) is not a group");
  QuotientIsomorphismReport r;
  std::set<std::size_t> w_ids;
  std::vector<UElement> cs;
  for (const auto& e : u_s) {
    if (!u_.contains(e.matrix)) throw InvariantViolation("U(S) subgroup", "U(S) is not contained in U");
    w_ids.insert(weyl_.index_of(projection(id(e.matrix))));
    if (c_.contains(e.matrix)) cs.push_back(e);
  }
  for (std::size_t i : w_ids) r.w_s.push_back(weyl_.elements()[i]);
  r.c_s = FiniteGroupTable(std::move(cs));
  r.c_s_normal = true;
  for (const auto& g : u_s) {
    const ExactMatrix gi = inverse(g.matrix);
    for (const auto& c : r.c_s)
      if (!r.c_s.contains(g.matrix * c.matrix * gi)) r.c_s_normal = false;
  }
  r.u_cosets = u_.size() / u_s.size();
  r.w_cosets = weyl_.order() / r.w_s.size();
  r.c_cosets = c_.size() / r.c_s.size();
  r.identity_holds = r.u_cosets == r.w_cosets * r.c_cosets && u_s.size() == r.w_s.size() * r.c_s.size();
  return r;
}

IndexSet TitsGroup::theta_of(const RationalVector& h) const {
  IndexSet theta;
  for (std::size_t i = 0; i < rank(); ++i)
    if (dot(preset_.root_datum.simple_roots[i], h).numerator() == 0) theta.insert(static_cast<int>(i) + 1);
  return theta;
}

}  // namespace wtits
