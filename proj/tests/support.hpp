#pragma once

// Test-side reference implementations. They share only ExactMatrix with the
// library: W is rebuilt from hand-written reflection matrices, lengths come
// from a Cayley-graph BFS, Bruhat from the subword property, and the
// extended order from drops over every reduced word followed by a DFS closure.

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "wtits/exact_matrix.hpp"
#include "wtits/utits.hpp"

namespace wtits {
inline std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << to_string(m); }
}  // namespace wtits

namespace support {

using wtits::ExactMatrix;
using Word = std::vector<int>;

// Coordinate swap (i, i+1), 1-based.
inline ExactMatrix swap_matrix(std::size_t n, int i) {
  ExactMatrix m = ExactMatrix::identity(n);
  m(i - 1, i - 1) = 0;
  m(i, i) = 0;
  m(i - 1, i) = 1;
  m(i, i - 1) = 1;
  return m;
}

// Reflections on a-coordinates for the presets: adjacent swaps for sl(n),
// where sl3 numbers its roots e2 - e3, e1 - e2; for so24 r1 swaps a1, a2 and
// r2 negates a2.
inline std::vector<ExactMatrix> reference_reflections(const std::string& preset) {
  if (preset == "so24") return {ExactMatrix::from_rows({{0, 1}, {1, 0}}), ExactMatrix::from_rows({{1, 0}, {0, -1}})};
  if (preset == "sl3") return {swap_matrix(3, 2), swap_matrix(3, 1)};
  const std::size_t n = std::stoul(preset.substr(2));
  std::vector<ExactMatrix> out;
  for (std::size_t i = 1; i < n; ++i) out.push_back(swap_matrix(n, static_cast<int>(i)));
  return out;
}

struct ReferenceW {
  std::vector<ExactMatrix> gens;
  std::map<ExactMatrix, int> length;
  std::map<ExactMatrix, Word> word;  // one reduced word per element

  explicit ReferenceW(std::vector<ExactMatrix> g) : gens(std::move(g)) {
    const ExactMatrix e = ExactMatrix::identity(gens.front().dim());
    length[e] = 0;
    word[e] = {};
    std::vector<ExactMatrix> frontier{e};
    for (int d = 1; !frontier.empty(); ++d) {
      std::vector<ExactMatrix> next;
      for (const auto& x : frontier)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const ExactMatrix y = x * gens[i];
          if (length.count(y)) continue;
          length[y] = d;
          Word w = word[x];
          w.push_back(static_cast<int>(i) + 1);
          word[y] = w;
          next.push_back(y);
        }
      frontier = std::move(next);
    }
  }

  std::size_t order() const { return length.size(); }

  ExactMatrix product(const Word& w) const {
    ExactMatrix m = ExactMatrix::identity(gens.front().dim());
    for (int i : w) m = m * gens[i - 1];
    return m;
  }
  bool reduced(const Word& w) const { return length.at(product(w)) == static_cast<int>(w.size()); }

  std::vector<Word> all_reduced_words(const ExactMatrix& x) const {
    if (length.at(x) == 0) return {Word{}};
    std::vector<Word> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ExactMatrix y = x * gens[i];
      if (length.at(y) >= length.at(x)) continue;
      for (Word w : all_reduced_words(y)) {
        w.push_back(static_cast<int>(i) + 1);
        out.push_back(w);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Subword property over one reduced word of w.
  bool bruhat_leq(const ExactMatrix& v, const ExactMatrix& w) const {
    const Word& r = word.at(w);
    for (unsigned mask = 0; mask < (1u << r.size()); ++mask) {
      Word sub;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (mask >> i & 1u) sub.push_back(r[i]);
      if (product(sub) == v) return true;
    }
    return false;
  }
};

// pi(u) in a-coordinates: column k holds the coordinates of u A_k u^T.
// The presets have orthogonal a-bases, so coefficients are Frobenius ratios.
inline ExactMatrix reference_projection(const wtits::TitsGroup& g, const ExactMatrix& u) {
  const auto& basis = g.preset().a_basis;
  const std::size_t r = basis.size();
  ExactMatrix out = ExactMatrix::identity(r);
  const ExactMatrix ut = u.transpose();
  for (std::size_t k = 0; k < r; ++k) {
    const ExactMatrix x = u * basis[k] * ut;
    for (std::size_t j = 0; j < r; ++j) {
      const auto num = wtits::frobenius(x, basis[j]);
      const auto den = wtits::frobenius(basis[j], basis[j]);
      out(j, k) = num / den;
    }
  }
  return out;
}

inline ExactMatrix lift(const wtits::TitsGroup& g, const Word& w) {
  ExactMatrix m = ExactMatrix::identity(g.n());
  for (int i : w) m = m * g.generator(i);
  return m;
}

// leq[a][b] == (a <= b) on library ids.
inline std::vector<std::vector<char>> reference_extended_order(const wtits::TitsGroup& g, const ReferenceW& w) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t v = 0; v < n; ++v) {
    const ExactMatrix& vm = g.matrix(v);
    for (const Word& word : w.all_reduced_words(reference_projection(g, vm))) {
      const ExactMatrix c = lift(g, word).transpose() * vm;  // generators are orthogonal
      for (std::size_t p = 0; p < word.size(); ++p) {
        Word rest = word;
        rest.erase(rest.begin() + static_cast<long>(p));
        if (!w.reduced(rest)) continue;
        const ExactMatrix pre = lift(g, Word(word.begin(), word.begin() + static_cast<long>(p)));
        const ExactMatrix post = lift(g, Word(word.begin() + static_cast<long>(p) + 1, word.end())) * c;
        const ExactMatrix& s = g.generator(word[p]);
        below[v].push_back(g.id(pre * post));
        below[v].push_back(g.id(pre * s * s * post));
      }
    }
  }
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> stack{v};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (leq[x][v]) continue;
      leq[x][v] = 1;
      for (std::size_t y : below[x]) stack.push_back(y);
    }
  }
  return leq;
}

// Transitive closure of a directed edge list on k nodes; reach[a][b] means a
// path from a to b (a == b included).
inline std::vector<std::vector<char>> reachability(std::size_t k, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<char>> r(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) r[i][i] = 1;
  for (const auto& [a, b] : edges) r[a][b] = 1;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (r[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (r[m][j]) r[i][j] = 1;
  return r;
}

}  // namespace support
