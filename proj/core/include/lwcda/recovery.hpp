#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lwcda/bases.hpp"
#include "lwcda/measurement.hpp"

namespace lwcda {

struct OmpStop {
  int max_atoms = 0;             // <= rows of A
  double residual_tol = 1e-12;   // relative to the norm of y
};

template <typename Scalar>
struct OmpResult {
  Eigen::Vector<Scalar, Eigen::Dynamic> coefficients;  // length N, sparse content
  std::vector<int> support;                            // selection order
  int iterations = 0;
  std::vector<double> residual_trace;                  // norm after each accepted atom
  bool degenerate_stop = false;                        // rank-deficient active set
};

/// Orthogonal matching pursuit. Each step selects the column with the
/// largest |<a_col, residual>| / ||a_col|| (conjugate inner product, ties to
/// the lowest index), extends an incremental Gram-Schmidt QR of the active
/// set, and stops at max_atoms atoms or when the residual drops below
/// residual_tol * ||y||. The least-squares refit reads off the QR factors;
/// no normal equations are formed. The residual norm must strictly decrease
/// every accepted iteration; a non-improving or in-span column stops the
/// run early with degenerate_stop set.
OmpResult<double> omp(const Eigen::MatrixXd& a, const Eigen::VectorXd& y,
                      const OmpStop& stop);
OmpResult<std::complex<double>> omp(const Eigen::MatrixXcd& a,
                                    const Eigen::VectorXcd& y,
                                    const OmpStop& stop);

/// X_hat = Psi * theta_hat; real part for the DFT.
Eigen::VectorXd reconstruct(const Basis& basis, const Eigen::VectorXcd& theta);

/// Relative l2 reconstruction error ||x - x_hat|| / ||x||; x must be nonzero.
double recon_error(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat);

struct RecoverySummary {
  Eigen::VectorXd x_hat;
  int iterations = 0;
  bool used_direct_solve = false;  // square (M == N) systems skip OMP
};

/// End-to-end recovery of X from y = Phi X under the given basis. For
/// underdetermined systems this runs OMP on A = Phi Psi with
/// max_atoms = floor(M/4) unless overridden; a square system is full rank
/// here (Phi has orthogonal rows) and is solved directly.
RecoverySummary recover_signal(const SparseMeasurementMatrix& phi,
                               const Basis& basis, const Eigen::VectorXd& y,
                               int max_atoms_override = 0,
                               double residual_tol = 1e-12);

}  // namespace lwcda
