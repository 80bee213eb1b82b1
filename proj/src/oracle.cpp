#include "wtits/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "wtits/errors.hpp"

namespace wtits::oracle {

Matrix to_real(const ExactMatrix& m) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

FlagPoint iwasawa_K(const Matrix& g) {
  if (g.rows() != g.cols()) throw InvariantViolation("iwasawa", "matrix is not square");
  Matrix q = g;
  const Eigen::Index n = g.cols();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double scale = g.col(j).norm();
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double norm = q.col(j).norm();
    if (!(norm > 1e-13 * scale) || scale == 0) throw InvariantViolation("iwasawa", "matrix is singular");
    q.col(j) /= norm;
  }
  if (q.determinant() < 0) throw InvariantViolation("iwasawa", "matrix has negative determinant");
  return {q};
}

namespace {

// Skew part L of a rotation-block generator, with L^2.
struct Split {
  Matrix L, L2;
};

Split split_of(const Matrix& s) {
  const Matrix L = (s - s.transpose()) / 2;
  const Matrix L2 = L * L;
  const Matrix I = Matrix::Identity(s.rows(), s.cols());
  if ((L2 * L + L).norm() > 1e-12 || (I + L + L2 - s).norm() > 1e-12)
    throw Unsupported("generator is not a rotation by pi/2 in a coordinate plane");
  return {L, L2};
}

Matrix psi_of(const Split& sp, double t) {
  const double a = std::numbers::pi * t;
  Matrix out = std::sin(a) * sp.L + (1 - std::cos(a)) * sp.L2;
  out.diagonal().array() += 1.0;
  return out;
}

}  // namespace

Matrix psi_split(const Matrix& s, double t) { return psi_of(split_of(s), t); }

CMatrix rank_one_A(std::complex<double> z, const CVector& v) {
  const double nv2 = v.squaredNorm();
  if (nv2 == 0) throw InvariantViolation("rank-one psi", "v must be nonzero");
  if (std::abs(z.real()) > 1e-12) throw InvariantViolation("rank-one psi", "z must be purely imaginary");
  const Eigen::Index m = v.size();
  CMatrix A(m + 1, m + 1);
  A(0, 0) = z;
  A.block(0, 1, 1, m) = -v.adjoint();
  A.block(1, 0, m, 1) = v;
  A.block(1, 1, m, m) = -(v * z * v.adjoint()) / nv2;
  return A;
}

CMatrix rank_one_J(const CVector& v) {
  const double nv2 = v.squaredNorm();
  if (nv2 == 0) throw InvariantViolation("rank-one psi", "v must be nonzero");
  const Eigen::Index m = v.size();
  CMatrix J = CMatrix::Zero(m + 1, m + 1);
  J(0, 0) = 1;
  J.block(1, 1, m, m) = v * v.adjoint() / nv2;
  return J;
}

CMatrix rank_one_w(std::size_t n) {
  if (n < 2) throw InvariantViolation("rank-one psi", "dimension must be at least 2");
  CMatrix w = CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  w(0, 0) = -1;
  w(1, 1) = -1;
  return w;
}

CMatrix psi_rank_one(std::complex<double> z, const CVector& v, double t) {
  if (std::abs(std::norm(z) + v.squaredNorm() - 1) > 1e-10)
    throw InvariantViolation("rank-one psi", "|z|^2 + |v|^2 must be 1");
  const CMatrix A = rank_one_A(z, v);
  const CMatrix J = rank_one_J(v);
  const CMatrix w = rank_one_w(static_cast<std::size_t>(v.size()) + 1);
  const CMatrix I = CMatrix::Identity(A.rows(), A.cols());
  return (I - J) * w + std::cos(t) * J * w + std::sin(t) * A * w;
}

RankOneResiduals rank_one_residuals(std::complex<double> z, const CVector& v, double t) {
  const CMatrix A = rank_one_A(z, v);
  const CMatrix J = rank_one_J(v);
  const CMatrix w = rank_one_w(static_cast<std::size_t>(v.size()) + 1);
  const CMatrix I = CMatrix::Identity(A.rows(), A.cols());
  const CMatrix at_pi = psi_rank_one(z, v, std::numbers::pi);
  const CMatrix at_t = psi_rank_one(z, v, t);
  const CMatrix expA = (t * A).exp();
  RankOneResiduals r;
  r.a_squared = (A * A + J).norm();
  r.a_cubed = (A * A * A + A).norm();
  r.trace = std::abs(A.trace());
  r.corner = std::abs(at_pi(0, 0) - 1.0);
  r.endpoint = (at_pi - (I - 2.0 * J) * w).norm();
  r.start = (psi_rank_one(z, v, 0) - w).norm();
  r.unitary = (at_t.adjoint() * at_t - I).norm();
  r.series = (at_t - expA * w).norm();
  return r;
}

double RankOneSweep::worst() const {
  return std::max({max.a_squared, max.a_cubed, max.trace, max.corner, max.endpoint, max.start, max.unitary, max.series});
}

RankOneSweep rank_one_sweep(std::size_t draws, std::size_t m, bool complex, std::uint64_t seed) {
  if (m < 1) throw InvariantViolation("rank-one psi", "v needs at least one coordinate");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  RankOneSweep s;
  s.draws = draws;
  s.dim = m;
  s.complex = complex;
  for (std::size_t k = 0; k < draws; ++k) {
    CVector v(static_cast<Eigen::Index>(m));
    for (auto& x : v) x = complex ? std::complex<double>(gauss(rng), gauss(rng)) : std::complex<double>(gauss(rng), 0);
    std::complex<double> z(0, complex ? gauss(rng) : 0.0);
    const double norm = std::sqrt(std::norm(z) + v.squaredNorm());
    z /= norm;
    v /= norm;
    const RankOneResiduals r = rank_one_residuals(z, v, angle(rng));
    auto& M = s.max;
    M.a_squared = std::max(M.a_squared, r.a_squared);
    M.a_cubed = std::max(M.a_cubed, r.a_cubed);
    M.trace = std::max(M.trace, r.trace);
    M.corner = std::max(M.corner, r.corner);
    M.endpoint = std::max(M.endpoint, r.endpoint);
    M.start = std::max(M.start, r.start);
    M.unitary = std::max(M.unitary, r.unitary);
    M.series = std::max(M.series, r.series);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Schubert cells

namespace {

void require_split_preset(const TitsGroup& group) {
  for (int m : group.preset().root_datum.multiplicities)
    if (m != 1) throw Unsupported("Schubert oracle requires every root multiplicity to be 1 (sl(n) presets)");
}

struct CellMap {
  std::vector<Split> factors;
  Matrix c;
};

CellMap cell_map(const TitsGroup& group, std::size_t u) {
  CellMap m;
  for (int i : group.reduced_word(u)) m.factors.push_back(split_of(to_real(group.generator(i))));
  m.c = to_real(group.c_part(u));
  return m;
}

Matrix evaluate(const CellMap& map, const std::vector<double>& t) {
  Matrix p = Matrix::Identity(map.c.rows(), map.c.cols());
  for (std::size_t i = 0; i < map.factors.size(); ++i) p = p * psi_of(map.factors[i], t[i]);
  return p * map.c;
}

template <typename Visit>
void for_each_parameter(std::size_t d, std::size_t count, std::uint64_t seed, std::size_t u, Visit&& visit) {
  std::vector<double> t(d, 0.0);
  std::size_t lattice = 1;
  for (std::size_t i = 0; i < d; ++i) lattice *= 3;
  for (std::size_t k = 0; k < lattice; ++k) {
    std::size_t r = k;
    for (std::size_t i = 0; i < d; ++i, r /= 3) t[i] = 0.5 * static_cast<double>(r % 3);
    visit(t);
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(u)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < count && d > 0; ++k) {
    for (auto& x : t) x = unit(rng);
    visit(t);
  }
}

}  // namespace

Matrix schubert_point(const TitsGroup& group, std::size_t u, const std::vector<double>& t) {
  require_split_preset(group);
  const CellMap map = cell_map(group, u);
  if (t.size() != map.factors.size()) throw InvariantViolation("schubert point", "parameter count differs from length");
  return evaluate(map, t);
}

CellSample sample_schubert(const TitsGroup& group, std::size_t u, std::size_t count, std::uint64_t seed) {
  require_split_preset(group);
  const CellMap map = cell_map(group, u);
  CellSample s;
  s.u = u;
  s.word = group.reduced_word(u);
  for_each_parameter(map.factors.size(), count, seed, u, [&](const std::vector<double>& t) {
    s.parameters.push_back(t);
    s.points.push_back(evaluate(map, t));
  });
  return s;
}

double min_distance(const Matrix& target, const CellSample& sample) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : sample.points) best = std::min(best, (p - target).norm());
  return best;
}

bool incidence_test(const Matrix& target, const CellSample& sample, double tol) {
  return min_distance(target, sample) < tol;
}

SchubertReport schubert_agreement(const ExtendedBruhatOrder& order, std::size_t count, std::uint64_t seed,
                                  double tol, double margin) {
  const TitsGroup& g = order.group();
  require_split_preset(g);
  const std::size_t n = g.size();
  std::vector<Matrix> targets;
  for (std::size_t u = 0; u < n; ++u) targets.push_back(to_real(g.matrix(u)));

  SchubertReport r;
  r.count = count;
  r.seed = seed;
  r.tol = tol;
  r.margin = margin;
  r.min_negative_distance = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (std::size_t hi = 0; hi < n; ++hi) {
    const CellMap map = cell_map(g, hi);
    for_each_parameter(map.factors.size(), count, seed, hi, [&](const std::vector<double>& t) {
      const Matrix p = evaluate(map, t);
      for (std::size_t lo = 0; lo < n; ++lo) dist[hi][lo] = std::min(dist[hi][lo], (p - targets[lo]).norm());
    });
  }
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      PairResult p{lo, hi, order.leq(lo, hi), dist[hi][lo] < tol, dist[hi][lo]};
      if (p.combinatorial == p.numerical) ++r.agreeing;
      if (p.combinatorial)
        r.max_positive_distance = std::max(r.max_positive_distance, p.min_distance);
      else
        r.min_negative_distance = std::min(r.min_negative_distance, p.min_distance);
      r.pairs.push_back(p);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Flows

namespace {

Matrix nilpotent_exp(const Matrix& n, double scale) {
  Matrix out = Matrix::Identity(n.rows(), n.cols());
  Matrix term = out;
  for (Eigen::Index k = 1; k < n.rows(); ++k) {
    term = term * n * (scale / static_cast<double>(k));
    out += term;
  }
  return out;
}

}  // namespace

void FlowSpec::validate() const {
  const Eigen::Index n = H.size();
  if (n < 2) throw InvariantViolation("flow spec", "H must have at least two entries");
  if (elliptic.rows() != n || elliptic.cols() != n || nilpotent.rows() != n || nilpotent.cols() != n)
    throw InvariantViolation("flow spec", "elliptic and nilpotent parts must be n x n");
  if (!(time_step > 0)) throw InvariantViolation("flow spec", "time step must be positive");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (H(i) < H(i + 1) - 1e-12) throw InvariantViolation("H in closed chamber", "entries of H must be nonincreasing");
  if (std::abs(H.sum()) > 1e-10) throw InvariantViolation("H traceless", "entries of H must sum to 0");
  const Matrix I = Matrix::Identity(n, n);
  if ((elliptic.transpose() * elliptic - I).norm() > 1e-10 || elliptic.determinant() < 0)
    throw InvariantViolation("elliptic part", "must be a rotation matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (nilpotent(i, j) != 0) throw InvariantViolation("nilpotent part", "must be strictly upper triangular");
  const Matrix D = H.asDiagonal();
  if ((elliptic * D - D * elliptic).norm() > 1e-10)
    throw InvariantViolation("Jordan parts commute", "elliptic part does not commute with H");
  if ((nilpotent * D - D * nilpotent).norm() > 1e-10)
    throw InvariantViolation("Jordan parts commute", "nilpotent part does not commute with H");
  if ((nilpotent * elliptic - elliptic * nilpotent).norm() > 1e-10)
    throw InvariantViolation("Jordan parts commute", "nilpotent part does not commute with the elliptic part");
}

Matrix FlowSpec::step_matrix(bool forward) const {
  const double dt = forward ? time_step : -time_step;
  const Matrix h = (dt * H).array().exp().matrix().asDiagonal();
  const Matrix u = nilpotent_exp(nilpotent, dt);
  return forward ? Matrix(elliptic * h * u) : Matrix(u * h * elliptic.transpose());
}

FlagPoint flow_step(const FlowSpec& spec, const FlagPoint& x, bool forward) {
  return iwasawa_K(spec.step_matrix(forward) * x.k);
}

Matrix flow(const FlowSpec& spec, const Matrix& x, std::size_t steps, bool forward) {
  const Matrix g = spec.step_matrix(forward);
  Matrix y = x;
  for (std::size_t k = 0; k < steps; ++k) y = iwasawa_K(g * y).k;
  return y;
}

double distance_to_KH_orbit(const Eigen::VectorXd& H, const Matrix& u, const Matrix& x) {
  // Procrustes on each block of equal H entries of M = x u^T.
  const Eigen::Index n = H.size();
  const Matrix M = x * u.transpose();
  Matrix k = Matrix::Zero(n, n);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && std::abs(H(end) - H(start)) < 1e-12) ++end;
    const Eigen::Index b = end - start;
    const Matrix block = M.block(start, start, b, b);
    Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix U = svd.matrixU();
    const Matrix V = svd.matrixV();
    if ((U * V.transpose()).determinant() < 0) U.col(b - 1) *= -1;
    k.block(start, start, b, b) = U * V.transpose();
    start = end;
  }
  return (k * u - x).norm();
}

namespace {

Matrix so_basis(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Matrix X = Matrix::Zero(n, n);
  X(i, j) = -1;
  X(j, i) = 1;
  return X;
}

std::pair<std::size_t, double> nearest(const std::vector<Matrix>& points, const Matrix& x) {
  std::size_t best = 0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double e = (points[i] - x).norm();
    if (e < d) {
      d = e;
      best = i;
    }
  }
  return {best, d};
}

}  // namespace

MorseReport recover_morse(const TitsGroup& group, const FlowSpec& spec, const MorseOptions& options) {
  spec.validate();
  const auto& preset = group.preset();
  const Eigen::Index n = spec.H.size();
  if (static_cast<std::size_t>(n) != group.n()) throw InvariantViolation("flow spec", "H has the wrong dimension");
  require_split_preset(group);
  if (preset.a_basis.size() != group.n())
    throw Unsupported("flow oracle requires the diagonal Cartan subspace of an sl(n) preset");
  for (std::size_t j = 0; j < preset.a_basis.size(); ++j)
    if (preset.a_basis[j] != [&] {
          ExactMatrix e(group.n());
          e(j, j) = 1;
          return e;
        }())
      throw Unsupported("flow oracle requires the diagonal Cartan subspace of an sl(n) preset");

  MorseReport r;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    double a = 0;
    for (Eigen::Index k = 0; k < n; ++k)
      a += boost::rational_cast<double>(preset.root_datum.simple_roots[i][k]) * spec.H(k);
    if (std::abs(a) < 1e-12) r.theta.insert(static_cast<int>(i) + 1);
  }
  if (spec.H.norm() < 1e-14 && spec.nilpotent.norm() < 1e-14) {
    r.degenerate = true;
    for (std::size_t u = 0; u < group.size(); ++u) r.recurrent.push_back(u);
    return r;
  }

  std::vector<Matrix> points;
  for (std::size_t u = 0; u < group.size(); ++u) {
    const Matrix x = to_real(group.matrix(u));
    if ((flow_step(spec, {x}).k - x).norm() < options.fixed_tol) {
      r.recurrent.push_back(u);
      points.push_back(x);
    }
  }
  const std::size_t m = points.size();
  if (m == 0) return r;

  std::vector<Bitset> reach(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) reach[a].set(a);
  std::vector<std::pair<std::size_t, Matrix>> endpoints;  // nearest recurrent index, endpoint
  auto land = [&](const Matrix& end, std::size_t& counter) -> std::optional<std::size_t> {
    const auto [q, d] = nearest(points, end);
    if (d > options.converge_tol) {
      ++counter;
      return std::nullopt;
    }
    endpoints.emplace_back(q, end);
    return q;
  };

  for (std::size_t a = 0; a < m; ++a)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        for (double sign : {1.0, -1.0}) {
          const Matrix X = so_basis(n, i, j) * (sign * options.perturbation);
          const Matrix start = points[a] * X.exp();
          ++r.trajectories;
          if (const auto q = land(flow(spec, start, options.steps, true), r.non_convergent)) reach[a].set(*q);
          ++r.trajectories;
          if (const auto q = land(flow(spec, start, options.steps, false), r.non_convergent)) reach[*q].set(a);
        }

  std::vector<std::pair<std::size_t, std::size_t>> direct;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && reach[a].test(b)) direct.emplace_back(a, b);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a)
      if (reach[a].test(k)) reach[a] |= reach[k];

  r.component_of.assign(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    if (r.component_of[a] != m) continue;
    const std::size_t c = r.components.size();
    r.components.emplace_back();
    for (std::size_t b = a; b < m; ++b)
      if (reach[a].test(b) && reach[b].test(a)) {
        r.component_of[b] = c;
        r.components.back().push_back(r.recurrent[b]);
      }
  }
  for (const auto& [a, b] : direct)
    if (r.component_of[a] != r.component_of[b]) r.flow_edges.emplace_back(r.component_of[a], r.component_of[b]);
  std::sort(r.flow_edges.begin(), r.flow_edges.end());
  r.flow_edges.erase(std::unique(r.flow_edges.begin(), r.flow_edges.end()), r.flow_edges.end());

  for (const auto& [q, end] : endpoints)
    r.max_cluster_distance = std::max(r.max_cluster_distance, distance_to_KH_orbit(spec.H, points[q], end));

  std::vector<bool> is_attractor(r.components.size(), false);
  for (const auto& c : group.C()) {
    const std::size_t id = group.id(c.matrix);
    const auto it = std::find(r.recurrent.begin(), r.recurrent.end(), id);
    if (it != r.recurrent.end()) is_attractor[r.component_of[it - r.recurrent.begin()]] = true;
  }
  for (std::size_t c = 0; c < r.components.size(); ++c)
    if (is_attractor[c]) r.attractors.push_back(c);

  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  for (std::size_t k = 0; k < options.grid; ++k) {
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = normal(rng);
    if (g.determinant() < 0) g.col(0) *= -1;
    const Matrix start = iwasawa_K(g).k;
    ++r.generic_points;
    const auto [q, d] = nearest(points, flow(spec, start, options.steps, true));
    if (d > options.converge_tol)
      ++r.generic_non_convergent;
    else if (is_attractor[r.component_of[q]])
      ++r.generic_in_attractors;
  }
  return r;
}

QuotientMatch match_morse_quotient(const MorseReport& report, const QuotientPoset& quotient) {
  QuotientMatch m;
  const std::size_t k = report.components.size();
  std::vector<bool> hit(quotient.members.size(), false);
  bool ok = k == quotient.members.size();
  for (const auto& comp : report.components) {
    const std::size_t c = quotient.class_of.at(comp.front());
    for (std::size_t id : comp) ok = ok && quotient.class_of.at(id) == c;
    ok = ok && !hit[c];
    hit[c] = true;
    m.coset_of_component.push_back(c);
  }
  m.components_are_cosets = ok;
  if (!ok) return m;

  std::vector<Bitset> reach(k, Bitset(k));
  for (const auto& [a, b] : report.flow_edges) reach[a].set(b);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t a = 0; a < k; ++a)
      if (reach[a].test(x)) reach[a] |= reach[x];
  m.order_reversed = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const bool below = quotient.order.leq(m.coset_of_component[b], m.coset_of_component[a]);
      if (reach[a].test(b) != below) m.order_reversed = false;
    }
  return m;
}

ContractionReport contraction_check(const Eigen::VectorXd& H, const Matrix& n, std::size_t k_max, double step) {
  const Eigen::Index dim = H.size();
  if (n.rows() != dim || n.cols() != dim) throw InvariantViolation("contraction", "n has the wrong dimension");
  ContractionReport r;
  r.alpha = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (n(i, j) == 0) continue;
      if (j <= i) throw InvariantViolation("contraction", "n must be strictly upper triangular");
      const double a = H(i) - H(j);
      if (a <= 1e-12)
        throw InvariantViolation("contraction", "alpha(H) <= 0 on the support of n (entry " + std::to_string(i + 1) +
                                                    "," + std::to_string(j + 1) + ")");
      r.alpha = std::min(r.alpha, a);
    }
  // exp(n) - I without forming exp(n): n + n^2/2 + ...
  const Matrix e = nilpotent_exp(n, 1.0) - Matrix::Identity(dim, dim);
  for (std::size_t k = 0; k <= k_max; ++k) {
    double s = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        const double x = e(i, j) * std::exp(-step * static_cast<double>(k) * (H(i) - H(j)));
        s += x * x;
      }
    r.residuals.push_back(std::sqrt(s));
  }
  if (!std::isfinite(r.alpha)) {
    r.alpha = 0;
    return r;
  }
  r.predicted_ratio = std::exp(-r.alpha * step);
  for (std::size_t k = 0; k + 1 < r.residuals.size(); ++k) {
    const double ratio = r.residuals[k + 1] / r.residuals[k];
    r.ratios.push_back(ratio);
    r.max_relative_error = std::max(r.max_relative_error, std::abs(ratio - r.predicted_ratio) / r.predicted_ratio);
  }
  return r;
}

}  // namespace wtits::oracle
