#include "lwcda/cs_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "lwcda/parallel.hpp"
#include "lwcda/recovery.hpp"
#include "lwcda/rng.hpp"

namespace lwcda {

namespace {

template <typename Matrix>
Matrix normalize_columns(const Matrix& a) {
  Matrix out = a;
  for (int j = 0; j < out.cols(); ++j) {
    const double norm = out.col(j).norm();
    if (norm == 0.0) throw std::invalid_argument("matrix has a zero column");
    out.col(j) /= norm;
  }
  return out;
}

template <typename Matrix>
double coherence_impl(const Matrix& a) {
  if (a.cols() < 2)
    throw std::invalid_argument("coherence needs at least two columns");
  // Raw Gram first, normalization per pair: integer-valued inner products
  // (+-1 matrices) stay exact this way.
  Eigen::VectorXd norms(a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    norms[j] = a.col(j).norm();
    if (norms[j] == 0.0) throw std::invalid_argument("matrix has a zero column");
  }
  const Matrix gram = a.adjoint() * a;
  double mu = 0.0;
  for (int p = 0; p < gram.rows(); ++p) {
    for (int q = p + 1; q < gram.cols(); ++q) {
      mu = std::max(mu, std::abs(gram(p, q)) / (norms[p] * norms[q]));
    }
  }
  return std::min(mu, 1.0);
}

/// First k entries of a seeded uniform permutation of [0, n). Prefixes are
/// nested across k for a fixed seed, which makes RIC estimates monotone.
std::vector<int> sampled_support(int n, int k, std::mt19937_64& rng,
                                 std::vector<int>& scratch) {
  scratch.resize(n);
  std::iota(scratch.begin(), scratch.end(), 0);
  std::vector<int> support(k);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(scratch[i], scratch[pick(rng)]);
    support[i] = scratch[i];
  }
  return support;
}

template <typename Matrix>
RicEstimate ric_over_gram(const Matrix& gram, int m, int k, int trials,
                          std::uint64_t seed, RicNorm norm) {
  const int n = static_cast<int>(gram.cols());
  if (k < 1 || k > m) throw std::invalid_argument("ric: k must lie in [1, M]");
  if (trials < 1) throw std::invalid_argument("ric: trials must be positive");

  RicEstimate best;
  best.k = k;
  best.trials = trials;
  best.delta_k = -1.0;

  std::vector<int> scratch;
  Matrix sub(k, k);
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, "ric-support", static_cast<std::uint64_t>(t));
    const auto support = sampled_support(n, k, rng, scratch);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) sub(r, c) = gram(support[r], support[c]);
    }
    double lambda_min, lambda_max, delta;
    if (k == 1) {
      lambda_min = lambda_max = std::real(sub(0, 0));
      delta = std::abs(lambda_min - 1.0);
    } else {
      Eigen::SelfAdjointEigenSolver<Matrix> solver(sub,
                                                   Eigen::EigenvaluesOnly);
      const auto& eigenvalues = solver.eigenvalues();
      lambda_min = eigenvalues[0];
      lambda_max = eigenvalues[k - 1];
      delta = std::max(lambda_max - 1.0, 1.0 - lambda_min);
    }
    if (norm == RicNorm::Frobenius) {
      Matrix deviation = sub;
      for (int d = 0; d < k; ++d) deviation(d, d) -= 1.0;
      delta = deviation.norm();
    }
    if (delta > best.delta_k) {
      best.delta_k = delta;
      best.lambda_min = lambda_min;
      best.lambda_max = lambda_max;
    }
  }
  return best;
}

}  // namespace

double coherence(const Eigen::MatrixXd& a) { return coherence_impl(a); }
double coherence(const Eigen::MatrixXcd& a) { return coherence_impl(a); }

RicAnalyzer::RicAnalyzer(const Eigen::MatrixXd& a)
    : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
  const Eigen::MatrixXd normalized = normalize_columns(a);
  gram_real_ = normalized.adjoint() * normalized;
}

RicAnalyzer::RicAnalyzer(const Eigen::MatrixXcd& a)
    : m_(static_cast<int>(a.rows())),
      n_(static_cast<int>(a.cols())),
      complex_(true) {
  const Eigen::MatrixXcd normalized = normalize_columns(a);
  gram_cplx_ = normalized.adjoint() * normalized;
}

RicEstimate RicAnalyzer::estimate(int k, int trials, std::uint64_t seed,
                                  RicNorm norm) const {
  return complex_ ? ric_over_gram(gram_cplx_, m_, k, trials, seed, norm)
                  : ric_over_gram(gram_real_, m_, k, trials, seed, norm);
}

int RicAnalyzer::max_admissible_k(int trials, std::uint64_t seed,
                                  RicNorm norm) const {
  auto admissible = [&](int k) {
    return estimate(k, trials, seed, norm).delta_k < 1.0;
  };
  if (!admissible(1)) return 0;

  // Exponential bracket, then bisection on the monotone shared-sample
  // estimate.
  int lo = 1;        // admissible
  int hi = 2;
  while (hi <= m_ && admissible(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (hi > m_) {
    hi = m_;
    if (admissible(hi)) return m_;
  }
  // invariant: lo admissible, hi not
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (admissible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

RicEstimate ric_estimate(const Eigen::MatrixXd& a, int k, int trials,
                         std::uint64_t seed, RicNorm norm) {
  return RicAnalyzer(a).estimate(k, trials, seed, norm);
}

RicEstimate ric_estimate(const Eigen::MatrixXcd& a, int k, int trials,
                         std::uint64_t seed, RicNorm norm) {
  return RicAnalyzer(a).estimate(k, trials, seed, norm);
}

PhaseGridSpec PhaseGridSpec::default_grid(int n) {
  PhaseGridSpec spec;
  spec.n = n;
  for (int i = 1; i <= 9; ++i) spec.rho.push_back(0.1 * i);
  for (int m = 100; m <= 900; m += 100) spec.m_values.push_back(m);
  return spec;
}

PhaseDiagram phase_transition(const PhiGenerator& generator, const Basis& basis,
                              const PhaseGridSpec& spec, int trials,
                              double e_th, std::uint64_t seed) {
  if (e_th <= 0.0) throw std::invalid_argument("phase transition: e_th must be positive");
  if (trials < 1) throw std::invalid_argument("phase transition: trials must be positive");
  if (basis.size() != spec.n)
    throw std::invalid_argument("phase transition: basis dimension mismatch");

  PhaseDiagram diagram;
  diagram.spec = spec;
  const int rows = static_cast<int>(spec.m_values.size());
  const int cols = static_cast<int>(spec.rho.size());
  diagram.cells.resize(static_cast<std::size_t>(rows) * cols);

  parallel_for(rows * cols, [&](int cell_index) {
    const int mi = cell_index / cols;
    const int ri = cell_index % cols;
    const int m = spec.m_values[mi];
    const double rho = spec.rho[ri];
    const int k = std::clamp(static_cast<int>(std::lround(rho * m)), 1, m);

    PhaseCell cell;
    cell.rho = rho;
    cell.delta = 1.0 - static_cast<double>(m) / spec.n;
    cell.m = m;
    cell.k = k;
    cell.trials = trials;

    int successes = 0;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed = substream_seed(
          seed, "phase-trial",
          static_cast<std::uint64_t>(cell_index) * trials + t);
      const SparseMeasurementMatrix phi = generator(m, trial_seed);

      // Planted k-sparse coefficients: uniform support, unit-normal values.
      auto rng = make_rng(trial_seed, "phase-plant");
      std::vector<int> scratch;
      const auto support = sampled_support(spec.n, k, rng, scratch);
      std::normal_distribution<double> normal(0.0, 1.0);

      OmpStop stop;
      stop.max_atoms = std::min(k, phi.rows);
      if (basis.is_complex()) {
        Eigen::VectorXcd theta = Eigen::VectorXcd::Zero(spec.n);
        for (const int idx : support) theta[idx] = normal(rng);
        const Eigen::MatrixXcd a = cs_matrix(phi, basis.matrix_cplx());
        const Eigen::VectorXcd y = a * theta;
        const auto result = omp(a, y, stop);
        const Eigen::VectorXd x = basis.synthesize(theta);
        const Eigen::VectorXd x_hat = basis.synthesize(result.coefficients);
        if (recon_error(x, x_hat) <= e_th) ++successes;
      } else {
        Eigen::VectorXd theta = Eigen::VectorXd::Zero(spec.n);
        for (const int idx : support) theta[idx] = normal(rng);
        const Eigen::MatrixXd a = cs_matrix(phi, basis.matrix_real());
        const Eigen::VectorXd y = a * theta;
        const auto result = omp(a, y, stop);
        const Eigen::VectorXd x = basis.matrix_real() * theta;
        const Eigen::VectorXd x_hat =
            basis.matrix_real() * result.coefficients;
        if (recon_error(x, x_hat) <= e_th) ++successes;
      }
    }
    cell.success_rate = static_cast<double>(successes) / trials;
    diagram.cells[cell_index] = cell;
  });

  return diagram;
}

}  // namespace lwcda
