#include "wtits/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "wtits/errors.hpp"

namespace wtits {

namespace {

RationalVector transpose_apply(const RationalMatrix& m, const RationalVector& v) {
  return m.transpose() * v;
}

Rational height(const RationalVector& coords) {
  Rational h(0);
  for (const auto& c : coords) h += c;
  return h;
}

}  // namespace

RationalMatrix reflection_matrix(const RationalVector& root, const RationalMatrix& gram_inverse) {
  const RationalVector h = gram_inverse * root;  // coroot direction
  const Rational norm = dot(root, h);
  if (norm <= 0)
    throw InvariantViolation("root datum", "a root has non-positive norm under the inner product");
  const std::size_t n = root.size();
  RationalMatrix r = RationalMatrix::identity(n);
  const Rational c = Rational(2) / norm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= c * h[i] * root[j];
  return r;
}

RootDatum make_root_datum(std::vector<RationalVector> simple_roots, std::vector<int> multiplicities,
                          RationalMatrix gram) {
  if (simple_roots.empty()) throw InvariantViolation("root datum", "no simple roots");
  const std::size_t dim = gram.dim();
  for (const auto& a : simple_roots)
    if (a.size() != dim)
      throw InvariantViolation("root datum", "simple root dimension does not match a-coordinates");
  if (multiplicities.size() != simple_roots.size())
    throw InvariantViolation("root datum", "one multiplicity per simple root required");
  for (int m : multiplicities)
    if (m < 1) throw InvariantViolation("root datum", "multiplicities must be positive");
  if (gram.transpose() != gram) throw InvariantViolation("root datum", "inner product is not symmetric");
  const auto gram_inv = gram.inverse();
  if (!gram_inv) throw InvariantViolation("root datum", "inner product is degenerate");

  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    const auto c = solve_columns(simple_roots, simple_roots[i]);
    RationalVector unit(simple_roots.size(), Rational(0));
    unit[i] = 1;
    if (!c || *c != unit) throw InvariantViolation("root datum", "simple roots are linearly dependent");
  }

  std::vector<RationalMatrix> refl;
  for (const auto& a : simple_roots) refl.push_back(reflection_matrix(a, *gram_inv));

  // Orbit of the simple roots under the simple reflections (covector action).
  std::set<RationalVector> roots(simple_roots.begin(), simple_roots.end());
  std::deque<RationalVector> queue(simple_roots.begin(), simple_roots.end());
  while (!queue.empty()) {
    RationalVector b = std::move(queue.front());
    queue.pop_front();
    for (const auto& r : refl) {
      RationalVector image = transpose_apply(r, b);
      if (roots.insert(image).second) {
        if (roots.size() > 100'000)
          throw InvariantViolation("root datum", "root orbit is not finite (exceeds 100000 roots)");
        queue.push_back(std::move(image));
      }
    }
  }

  std::vector<std::pair<RationalVector, RationalVector>> positive;  // (coords, root)
  for (const auto& b : roots) {
    const auto c = solve_columns(simple_roots, b);
    if (!c) throw InvariantViolation("root datum", "a root is outside the span of the simple roots");
    const bool nonneg = std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; });
    const bool nonpos = std::all_of(c->begin(), c->end(), [](const Rational& x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw InvariantViolation("root datum",
                               "a root is neither a nonnegative nor a nonpositive combination of simple roots");
    if (nonneg) positive.emplace_back(*c, b);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    const Rational hx = height(x.first), hy = height(y.first);
    if (hx != hy) return hx < hy;
    return x.first > y.first;
  });

  RootDatum d;
  d.dim = dim;
  d.simple_roots = std::move(simple_roots);
  d.multiplicities = std::move(multiplicities);
  d.gram = std::move(gram);
  for (auto& p : positive) d.positive_roots.push_back(std::move(p.second));
  return d;
}

WeylGroup::WeylGroup(RootDatum datum, std::size_t max_order) : datum_(std::move(datum)) {
  const auto gram_inv = datum_.gram.inverse();
  if (!gram_inv) throw InvariantViolation("root datum", "inner product is degenerate");
  for (const auto& a : datum_.simple_roots) reflections_.push_back(reflection_matrix(a, *gram_inv));

  // Regular dominant point: alpha_i(x) = 1 for all i.
  std::vector<RationalVector> columns(datum_.dim, RationalVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < datum_.dim; ++j) columns[j][i] = datum_.simple_roots[i][j];
  const auto x = solve_columns(columns, RationalVector(rank(), Rational(1)));
  if (!x) throw InvariantViolation("root datum", "no regular dominant point");
  regular_point_ = *x;

  for (const auto& b : datum_.positive_roots) {
    roots_.insert(b);
    RationalVector neg = b;
    for (auto& c : neg) c = -c;
    roots_.insert(neg);
  }

  // Closure of the simple reflections.
  std::vector<RationalMatrix> found{RationalMatrix::identity(datum_.dim)};
  std::unordered_map<RationalMatrix, std::size_t, RationalMatrixHash> seen{{found[0], 0}};
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& r : reflections_) {
      RationalMatrix m = r * found[k];
      if (seen.emplace(m, found.size()).second) {
        if (found.size() >= max_order)
          throw InvariantViolation("weyl group", "closure exceeds bound " + std::to_string(max_order));
        found.push_back(std::move(m));
      }
    }

  std::vector<std::pair<Word, WeylElement>> keyed;
  for (auto& m : found) {
    WeylElement w(m, length(m));
    keyed.emplace_back(reduced_word(w), std::move(w));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& k : keyed) {
    index_.emplace(k.second.matrix(), elements_.size());
    elements_.push_back(std::move(k.second));
  }

  const int top = elements_.back().length();
  if (static_cast<std::size_t>(top) != datum_.positive_roots.size())
    throw InvariantViolation("root datum", "number of positive roots differs from length of w0");
  if (elements_.size() > 1 && elements_[elements_.size() - 2].length() == top)
    throw InvariantViolation("weyl group", "longest element is not unique");
}

void WeylGroup::check_index(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > rank())
    throw ParseError("simple root index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(rank()));
}

WeylElement WeylGroup::identity() const {
  return WeylElement(RationalMatrix::identity(datum_.dim), 0);
}

WeylElement WeylGroup::simple_reflection(int i) const {
  check_index(i);
  return WeylElement(reflections_[i - 1], 1);
}

bool WeylGroup::is_positive_root(const RationalVector& root) const {
  return dot(root, regular_point_) > 0;
}

RationalVector WeylGroup::simple_coordinates(const RationalVector& root) const {
  const auto c = solve_columns(datum_.simple_roots, root);
  if (!c) throw InvariantViolation("root datum", "vector is outside the root span");
  return *c;
}

int WeylGroup::length(const RationalMatrix& m) const {
  const RationalMatrix t = m.transpose();
  int count = 0;
  for (const auto& b : datum_.positive_roots)
    if (!is_positive_root(t * b)) ++count;
  return count;
}

WeylElement WeylGroup::make(const RationalMatrix& m) const {
  if (m.dim() != datum_.dim) throw InvariantViolation("weyl element", "dimension mismatch");
  const RationalMatrix t = m.transpose();
  for (const auto& b : roots_)
    if (!roots_.count(t * b))
      throw InvariantViolation("weyl element", "linear map does not permute the roots");
  return WeylElement(m, length(m));
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  RationalMatrix m = a.matrix() * b.matrix();
  const int l = length(m);
  return WeylElement(std::move(m), l);
}

WeylElement WeylGroup::product(const Word& word) const {
  RationalMatrix m = RationalMatrix::identity(datum_.dim);
  for (int i : word) {
    check_index(i);
    m = m * reflections_[i - 1];
  }
  const int l = length(m);
  return WeylElement(std::move(m), l);
}

std::optional<int> WeylGroup::first_left_descent(const WeylElement& w) const {
  // i is a left descent iff w^{-1}(alpha_i) is negative, i.e. alpha_i o w < 0.
  const RationalMatrix t = w.matrix().transpose();
  for (std::size_t i = 0; i < rank(); ++i)
    if (!is_positive_root(t * datum_.simple_roots[i])) return static_cast<int>(i) + 1;
  return std::nullopt;
}

Word WeylGroup::reduced_word(const WeylElement& w) const {
  Word word;
  RationalMatrix m = w.matrix();
  for (;;) {
    const auto d = first_left_descent(WeylElement(m, 0));
    if (!d) break;
    word.push_back(*d);
    m = reflections_[*d - 1] * m;
  }
  return word;
}

std::vector<Word> WeylGroup::all_reduced_words(const WeylElement& w) const {
  if (w.length() == 0) return {Word{}};
  std::vector<Word> out;
  const RationalMatrix t = w.matrix().transpose();
  for (std::size_t i = 0; i < rank(); ++i) {
    if (is_positive_root(t * datum_.simple_roots[i])) continue;
    const WeylElement rest(reflections_[i] * w.matrix(), w.length() - 1);
    for (auto& tail : all_reduced_words(rest)) {
      Word word{static_cast<int>(i) + 1};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool WeylGroup::is_reduced(const Word& word) const {
  return static_cast<std::size_t>(product(word).length()) == word.size();
}

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  // Deodhar's property Z: for a left descent s of w,
  //   sv < v  =>  (v <= w  iff  sv <= sw),   otherwise  (v <= w  iff  v <= sw).
  if (v.length() == 0) return true;
  if (v.length() > w.length()) return false;
  if (v.length() == w.length()) return v == w;
  const int s = *first_left_descent(w);
  const RationalMatrix& r = reflections_[s - 1];
  const WeylElement sw(r * w.matrix(), w.length() - 1);
  RationalMatrix svm = r * v.matrix();
  const int lsv = length(svm);
  if (lsv < v.length()) return bruhat_leq(WeylElement(std::move(svm), lsv), sw);
  return bruhat_leq(v, sw);
}

RootSplit WeylGroup::split_roots_by_H(const IndexSet& theta) const {
  for (int i : theta) check_index(i);
  RootSplit split;
  for (const auto& b : datum_.positive_roots) {
    const RationalVector c = simple_coordinates(b);
    bool in_span = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].numerator() != 0 && !theta.count(static_cast<int>(i) + 1)) in_span = false;
    (in_span ? split.zero : split.positive).push_back(b);
  }
  return split;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  const auto it = index_.find(w.matrix());
  if (it == index_.end()) throw InvariantViolation("weyl element", "not an element of W");
  return it->second;
}

}  // namespace wtits
