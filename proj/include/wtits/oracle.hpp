#pragma once

// Floating-point ground truth on SO(n) for the sl(n) presets: the Iwasawa
// K-factor, the rank-one maps psi, Schubert cell parametrizations, and
// Morse components of translation flows.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wtits/utits.hpp"
#include "wtits/xorder.hpp"

namespace wtits::oracle {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

Matrix to_real(const ExactMatrix& m);

/// Orthogonal matrix with determinant +1.
struct FlagPoint {
  Matrix k;
};

/// K-factor of g = k a n: modified Gram-Schmidt on the columns with one
/// reorthogonalization pass and positive diagonal in the triangular factor.
/// Throws InvariantViolation if g is singular or has negative determinant.
FlagPoint iwasawa_K(const Matrix& g);

/// exp(pi t L) with L the skew part of the generator s. L^3 = -L is required,
/// so psi(0) = I, psi(1/2) = s and psi(1) = s^2.
Matrix psi_split(const Matrix& s, double t);

/// A(z, v) and J_v for z purely imaginary (z = 0 in the real case) and v != 0.
CMatrix rank_one_A(std::complex<double> z, const CVector& v);
CMatrix rank_one_J(const CVector& v);
/// w = diag(-1, -1, 1, ..., 1) of size v.size() + 1.
CMatrix rank_one_w(std::size_t n);
/// (I - J) w + cos(t) J w + sin(t) A w. Requires |z|^2 + |v|^2 = 1.
CMatrix psi_rank_one(std::complex<double> z, const CVector& v, double t);

struct RankOneResiduals {
  double a_squared = 0;    // |A^2 + J|
  double a_cubed = 0;      // |A^3 + A|
  double trace = 0;        // |tr A|
  double corner = 0;       // |psi(pi)_{11} - 1|
  double endpoint = 0;     // |psi(pi) - (I - 2J) w|
  double start = 0;        // |psi(0) - w|
  double unitary = 0;      // |psi(t)^* psi(t) - I| at the sampled t
  double series = 0;       // |psi(t) - exp(tA) w| with exp by Eigen's matrix exponential
};

/// All residuals for one (z, v, t).
RankOneResiduals rank_one_residuals(std::complex<double> z, const CVector& v, double t);

/// Componentwise maxima over `draws` random (z, v, t): Gaussian v in C^m (R^m
/// when !complex), z = i y with Gaussian y (0 when !complex), normalized
/// jointly; t uniform in [0, 2 pi).
struct RankOneSweep {
  std::size_t draws = 0;
  std::size_t dim = 0;
  bool complex = false;
  RankOneResiduals max;
  double worst() const;
};

RankOneSweep rank_one_sweep(std::size_t draws, std::size_t m, bool complex, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Schubert cells

/// One cell Psi_u(B^d): u = s_{i_1} ... s_{i_d} c along the canonical reduced
/// word, Psi_u(t) = psi_{i_1}(t_1) ... psi_{i_d}(t_d) c.
struct CellSample {
  std::size_t u = 0;
  Word word;
  std::vector<std::vector<double>> parameters;
  std::vector<Matrix> points;
};

Matrix schubert_point(const TitsGroup& group, std::size_t u, const std::vector<double>& t);

/// The lattice {0, 1/2, 1}^d, which holds the images of the elements below u,
/// followed by `count` uniform draws. The stream is seeded from (seed, u).
CellSample sample_schubert(const TitsGroup& group, std::size_t u, std::size_t count, std::uint64_t seed);

double min_distance(const Matrix& target, const CellSample& sample);
bool incidence_test(const Matrix& target, const CellSample& sample, double tol);

struct PairResult {
  std::size_t lo = 0, hi = 0;
  bool combinatorial = false;
  bool numerical = false;
  double min_distance = 0;
};

struct SchubertReport {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  double margin = 0;
  std::vector<PairResult> pairs;  // every ordered pair (lo, hi)
  std::size_t agreeing = 0;
  double min_negative_distance = 0;  // over pairs with lo not <= hi
  double max_positive_distance = 0;  // over pairs with lo <= hi
  bool margin_ok() const { return min_negative_distance > margin; }
  bool all_agree() const { return agreeing == pairs.size(); }
};

/// Requires every multiplicity to be 1 and the generators to be rotation
/// blocks; throws Unsupported otherwise.
SchubertReport schubert_agreement(const ExtendedBruhatOrder& order, std::size_t count, std::uint64_t seed,
                                  double tol, double margin = 5e-2);

// ---------------------------------------------------------------------------
// Flows

/// g = elliptic * exp(dt H) * exp(dt nilpotent). H is diagonal with
/// nonincreasing entries summing to 0; the three parts commute.
struct FlowSpec {
  Eigen::VectorXd H;
  Matrix elliptic;
  Matrix nilpotent;
  double time_step = 0.02;

  /// Throws InvariantViolation naming the first failed condition.
  void validate() const;
  Matrix step_matrix(bool forward = true) const;
};

FlagPoint flow_step(const FlowSpec& spec, const FlagPoint& x, bool forward = true);
Matrix flow(const FlowSpec& spec, const Matrix& x, std::size_t steps, bool forward = true);

/// min over k in K_H^0 of |k u - x|_F, where K_H^0 is the product of SO
/// blocks on runs of equal H entries.
double distance_to_KH_orbit(const Eigen::VectorXd& H, const Matrix& u, const Matrix& x);

struct MorseReport {
  bool degenerate = false;                      // H = 0 and nilpotent = 0
  IndexSet theta;                               // simple roots vanishing on H
  std::vector<std::size_t> recurrent;           // ids of U-matrices fixed by the flow
  std::vector<std::vector<std::size_t>> components;  // recurrent ids per component
  std::vector<std::size_t> component_of;        // recurrent index -> component
  std::vector<std::pair<std::size_t, std::size_t>> flow_edges;  // component a flows to component b
  std::vector<std::size_t> attractors;          // components containing an element of C
  double max_cluster_distance = 0;              // trajectory end to its component's circle
  std::size_t trajectories = 0;
  std::size_t non_convergent = 0;               // excluded endpoints
  std::size_t generic_points = 0;
  std::size_t generic_in_attractors = 0;
  std::size_t generic_non_convergent = 0;
};

struct MorseOptions {
  std::size_t steps = 2000;
  double perturbation = 0.3;
  std::size_t grid = 200;          // generic random points
  std::uint64_t seed = 42;
  double fixed_tol = 1e-9;         // |step(u) - u| for recurrence
  double converge_tol = 0.5;       // endpoint to nearest recurrent point
};

/// Recurrent U-matrices, perturbed forward and backward; components are the
/// strongly connected classes of the resulting "flows to" graph.
MorseReport recover_morse(const TitsGroup& group, const FlowSpec& spec, const MorseOptions& options);

/// Components against the cosets U_H u for the same H: each component
/// lies in one coset, distinct components in distinct cosets, every coset is
/// hit, and "flows to" reachability is the strict quotient order reversed.
struct QuotientMatch {
  bool components_are_cosets = false;
  bool order_reversed = false;
  std::vector<std::size_t> coset_of_component;
};

QuotientMatch match_morse_quotient(const MorseReport& report, const QuotientPoset& quotient);

struct ContractionReport {
  std::vector<double> residuals;  // |h^{-k} exp(n) h^k - I|_F, k = 0..k_max
  std::vector<double> ratios;     // residuals[k+1] / residuals[k]
  double alpha = 0;               // smallest alpha(H) on the support
  double predicted_ratio = 0;     // exp(-alpha * step)
  double max_relative_error = 0;  // over ratios, against predicted_ratio
};

/// h = exp(step H). Throws InvariantViolation if n is not strictly upper
/// triangular or has support where alpha(H) <= 0.
ContractionReport contraction_check(const Eigen::VectorXd& H, const Matrix& n, std::size_t k_max, double step = 1.0);

}  // namespace wtits::oracle
