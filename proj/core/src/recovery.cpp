#include "lwcda/recovery.hpp"

#include <cmath>
#include <stdexcept>

namespace lwcda {

namespace {

template <typename Scalar>
OmpResult<Scalar> omp_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                           const Eigen::Vector<Scalar, Eigen::Dynamic>& y,
                           const OmpStop& stop) {
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (y.size() != m) throw std::invalid_argument("omp: measurement length mismatch");
  if (stop.max_atoms < 0 || stop.max_atoms > m)
    throw std::invalid_argument("omp: max_atoms must lie in [0, rows(A)]");

  Eigen::VectorXd column_norms(n);
  for (int j = 0; j < n; ++j) {
    column_norms[j] = a.col(j).norm();
    if (column_norms[j] == 0.0)
      throw std::invalid_argument("omp: matrix has a zero column");
  }

  OmpResult<Scalar> result;
  result.coefficients = Vector::Zero(n);

  const double y_norm = y.norm();
  if (y_norm == 0.0) return result;  // theta = 0, zero iterations

  const double target = stop.residual_tol * y_norm;
  const int max_atoms = stop.max_atoms;

  Matrix q(m, max_atoms);           // orthonormal columns spanning the active set
  Matrix r = Matrix::Zero(max_atoms, max_atoms);  // upper triangular
  Vector beta(max_atoms);           // q_i^* y accumulated via residual updates
  Vector residual = y;
  double residual_norm = y_norm;

  while (result.iterations < max_atoms && residual_norm > target) {
    // Column with the strongest normalized correlation, ties to lowest index.
    const Vector correlations = a.adjoint() * residual;
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < n; ++j) {
      const double score = std::abs(correlations[j]) / column_norms[j];
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    if (best < 0) break;  // residual orthogonal to every column

    const int i = result.iterations;
    Vector v = a.col(best);
    Vector w(i);
    if (i > 0) {
      w = q.leftCols(i).adjoint() * v;
      v -= q.leftCols(i) * w;
      // Second orthogonalization pass keeps Q orthonormal on long runs.
      const Vector w2 = q.leftCols(i).adjoint() * v;
      v -= q.leftCols(i) * w2;
      w += w2;
    }
    const double v_norm = v.norm();
    if (v_norm <= 1e-13 * column_norms[best]) {
      result.degenerate_stop = true;  // column already spanned by active set
      break;
    }
    v /= v_norm;

    const Scalar projection = v.dot(residual);  // conjugate inner product
    const Vector next_residual = residual - v * projection;
    const double next_norm = next_residual.norm();
    if (!(next_norm < residual_norm)) {
      result.degenerate_stop = true;  // no progress; reject the atom
      break;
    }

    q.col(i) = v;
    if (i > 0) r.col(i).head(i) = w;
    r(i, i) = v_norm;
    beta[i] = projection;
    result.support.push_back(best);
    residual = next_residual;
    residual_norm = next_norm;
    result.residual_trace.push_back(residual_norm);
    ++result.iterations;
  }

  // Back-substitution R c = beta on the active set.
  const int s = result.iterations;
  if (s > 0) {
    Vector c(s);
    for (int i = s - 1; i >= 0; --i) {
      Scalar acc = beta[i];
      for (int j = i + 1; j < s; ++j) acc -= r(i, j) * c[j];
      c[i] = acc / r(i, i);
    }
    for (int i = 0; i < s; ++i) result.coefficients[result.support[i]] = c[i];
  }
  return result;
}

}  // namespace

OmpResult<double> omp(const Eigen::MatrixXd& a, const Eigen::VectorXd& y,
                      const OmpStop& stop) {
  return omp_impl<double>(a, y, stop);
}

OmpResult<std::complex<double>> omp(const Eigen::MatrixXcd& a,
                                    const Eigen::VectorXcd& y,
                                    const OmpStop& stop) {
  return omp_impl<std::complex<double>>(a, y, stop);
}

Eigen::VectorXd reconstruct(const Basis& basis, const Eigen::VectorXcd& theta) {
  return basis.synthesize(theta);
}

double recon_error(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat) {
  const double x_norm = x.norm();
  if (x_norm == 0.0)
    throw std::invalid_argument("recon_error is undefined for zero reference");
  return (x - x_hat).norm() / x_norm;
}

RecoverySummary recover_signal(const SparseMeasurementMatrix& phi,
                               const Basis& basis, const Eigen::VectorXd& y,
                               int max_atoms_override, double residual_tol) {
  if (basis.size() != phi.cols)
    throw std::invalid_argument("recover_signal: basis dimension mismatch");
  if (y.size() != phi.rows)
    throw std::invalid_argument("recover_signal: measurement length mismatch");

  RecoverySummary summary;
  const int m = phi.rows;
  const int n = phi.cols;

  if (m >= n) {
    // All nodes are cluster heads: Phi is a signed permutation, the system
    // is square and exactly solvable.
    summary.used_direct_solve = true;
    if (basis.is_complex()) {
      const Eigen::MatrixXcd a = cs_matrix(phi, basis.matrix_cplx());
      const Eigen::VectorXcd theta =
          a.colPivHouseholderQr().solve(y.cast<std::complex<double>>());
      summary.x_hat = basis.synthesize(theta);
    } else {
      const Eigen::MatrixXd a = cs_matrix(phi, basis.matrix_real());
      const Eigen::VectorXd theta = a.colPivHouseholderQr().solve(y);
      summary.x_hat = basis.synthesize(theta.cast<std::complex<double>>());
    }
    return summary;
  }

  OmpStop stop;
  stop.max_atoms = max_atoms_override > 0 ? std::min(max_atoms_override, m) : m / 4;
  if (stop.max_atoms == 0) stop.max_atoms = 1;
  stop.residual_tol = residual_tol;

  if (basis.is_complex()) {
    const Eigen::MatrixXcd a = cs_matrix(phi, basis.matrix_cplx());
    const auto result = omp(a, y.cast<std::complex<double>>(), stop);
    summary.x_hat = basis.synthesize(result.coefficients);
    summary.iterations = result.iterations;
  } else {
    const Eigen::MatrixXd a = cs_matrix(phi, basis.matrix_real());
    const auto result = omp(a, y, stop);
    summary.x_hat =
        basis.synthesize(result.coefficients.cast<std::complex<double>>());
    summary.iterations = result.iterations;
  }
  return summary;
}

}  // namespace lwcda
