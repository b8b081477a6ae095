#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lwcda/bases.hpp"
#include "lwcda/measurement.hpp"

namespace lwcda {

/// Mutual coherence: max |<a_p, a_q>| over distinct l2-normalized columns
/// (conjugate inner product for complex matrices), clamped to [0, 1].
/// Requires at least two columns, all nonzero.
double coherence(const Eigen::MatrixXd& a);
double coherence(const Eigen::MatrixXcd& a);

struct RicEstimate {
  int k = 0;
  double delta_k = 0.0;
  double lambda_min = 0.0;  // extremal eigenvalues at the maximizing support
  double lambda_max = 0.0;
  int trials = 0;
};

enum class RicNorm { Spectral, Frobenius };

/// Monte-Carlo restricted-isometry estimator over the column-normalized CS
/// matrix. Supports are prefixes of one random permutation per trial, so
/// estimates at increasing k over the same (seed, trials) share samples and
/// are monotonically non-decreasing. The estimate is a lower bound on the
/// true delta_k. The Gram matrix is formed once; each trial only gathers a
/// k x k principal submatrix and reads off its extremal eigenvalues.
class RicAnalyzer {
 public:
  explicit RicAnalyzer(const Eigen::MatrixXd& a);
  explicit RicAnalyzer(const Eigen::MatrixXcd& a);

  int columns() const { return n_; }
  int rows() const { return m_; }

  RicEstimate estimate(int k, int trials, std::uint64_t seed,
                       RicNorm norm = RicNorm::Spectral) const;

  /// Largest k with delta_k < 1 under the shared-sample stream
  /// (exponential bracket then bisection; valid because the per-stream
  /// estimate is monotone in k).
  int max_admissible_k(int trials, std::uint64_t seed,
                       RicNorm norm = RicNorm::Spectral) const;

 private:
  int m_ = 0;
  int n_ = 0;
  bool complex_ = false;
  Eigen::MatrixXd gram_real_;
  Eigen::MatrixXcd gram_cplx_;
};

RicEstimate ric_estimate(const Eigen::MatrixXd& a, int k, int trials,
                         std::uint64_t seed, RicNorm norm = RicNorm::Spectral);
RicEstimate ric_estimate(const Eigen::MatrixXcd& a, int k, int trials,
                         std::uint64_t seed, RicNorm norm = RicNorm::Spectral);

/// Fresh measurement matrix with exactly m rows for a given trial seed.
using PhiGenerator =
    std::function<SparseMeasurementMatrix(int m, std::uint64_t seed)>;

struct PhaseGridSpec {
  std::vector<double> rho;  // k / M axis
  std::vector<int> m_values;
  int n = 0;

  static PhaseGridSpec default_grid(int n = 1000);  // 9 x 9, M = 100:100:900
};

struct PhaseCell {
  double rho = 0.0;            // k / M
  double delta = 0.0;          // 1 - M / N
  int m = 0;
  int k = 0;
  double success_rate = 0.0;   // P_s
  int trials = 0;
};

struct PhaseDiagram {
  PhaseGridSpec spec;
  std::vector<PhaseCell> cells;  // row-major over (m_values x rho)
};

/// Empirical phase diagram: per cell, plant a k-sparse coefficient vector
/// (unit-normal nonzeros on a uniform support), measure through a fresh
/// Phi, recover with OMP capped at k atoms, and count recoveries with
/// relative error <= e_th.
PhaseDiagram phase_transition(const PhiGenerator& generator, const Basis& basis,
                              const PhaseGridSpec& spec, int trials,
                              double e_th, std::uint64_t seed);

}  // namespace lwcda
