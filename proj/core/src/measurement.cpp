#include "lwcda/measurement.hpp"

#include <stdexcept>

#include "lwcda/rng.hpp"

namespace lwcda {

int SparseMeasurementMatrix::sign_of(NodeId column) const {
  for (const auto& row : row_support) {
    for (const auto& entry : row) {
      if (entry.column == column) return entry.sign;
    }
  }
  return 0;
}

int SparseMeasurementMatrix::row_of(NodeId column) const {
  for (int j = 0; j < rows; ++j) {
    for (const auto& entry : row_support[j]) {
      if (entry.column == column) return j;
    }
  }
  return -1;
}

SparseMeasurementMatrix build_phi(const ClusterAssignment& assignment,
                                  std::uint64_t seed) {
  SparseMeasurementMatrix phi;
  phi.rows = assignment.cluster_count();
  phi.cols = assignment.node_count();
  phi.row_support.assign(phi.rows, {});

  for (NodeId v = 0; v < phi.cols; ++v) {
    auto rng = make_rng(seed, "alpha", static_cast<std::uint64_t>(v));
    const int sign = (rng() & 1u) ? 1 : -1;
    phi.row_support[assignment.member_of[v]].push_back({v, sign});
  }
  // Node ids ascend, so each row support is already sorted.
  return phi;
}

Eigen::VectorXd apply_phi(const SparseMeasurementMatrix& phi,
                          const Eigen::VectorXd& x) {
  if (x.size() != phi.cols)
    throw std::invalid_argument("apply_phi: sample vector length mismatch");
  Eigen::VectorXd y(phi.rows);
  for (int j = 0; j < phi.rows; ++j) {
    double sum = 0.0;
    for (const auto& entry : phi.row_support[j]) {
      sum += entry.sign > 0 ? x[entry.column] : -x[entry.column];
    }
    y[j] = sum;
  }
  return y;
}

Eigen::MatrixXd densify(const SparseMeasurementMatrix& phi) {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(phi.rows, phi.cols);
  for (int j = 0; j < phi.rows; ++j) {
    for (const auto& entry : phi.row_support[j]) {
      dense(j, entry.column) = static_cast<double>(entry.sign);
    }
  }
  return dense;
}

namespace {

template <typename Matrix>
Matrix cs_matrix_impl(const SparseMeasurementMatrix& phi, const Matrix& psi) {
  if (psi.rows() != phi.cols)
    throw std::invalid_argument("cs_matrix: basis dimension mismatch");
  Matrix a = Matrix::Zero(phi.rows, psi.cols());
  for (int j = 0; j < phi.rows; ++j) {
    for (const auto& entry : phi.row_support[j]) {
      if (entry.sign > 0) {
        a.row(j) += psi.row(entry.column);
      } else {
        a.row(j) -= psi.row(entry.column);
      }
    }
  }
  return a;
}

}  // namespace

Eigen::MatrixXd cs_matrix(const SparseMeasurementMatrix& phi,
                          const Eigen::MatrixXd& psi) {
  return cs_matrix_impl(phi, psi);
}

Eigen::MatrixXcd cs_matrix(const SparseMeasurementMatrix& phi,
                           const Eigen::MatrixXcd& psi) {
  return cs_matrix_impl(phi, psi);
}

}  // namespace lwcda
