#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lwcda/cluster_routing.hpp"

namespace lwcda {

/// Sparse M x N measurement matrix: row j is supported on the members of
/// cluster j with entries in {-1, +1}; every column holds exactly one
/// nonzero because the clusters partition the nodes.
struct SparseMeasurementMatrix {
  struct Entry {
    NodeId column;
    int sign;  // -1 or +1
  };

  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Entry>> row_support;  // per row, ascending column

  int sign_of(NodeId column) const;  // 0 when the column is empty
  int row_of(NodeId column) const;   // -1 when the column is empty
};

/// Draw alpha_i in {-1, +1} equiprobably from the seeded stream indexed by
/// the node id and place it at (cluster of i, i). Each node owns exactly one
/// sign, mirroring the per-node draw of the aggregation protocol.
SparseMeasurementMatrix build_phi(const ClusterAssignment& assignment,
                                  std::uint64_t seed);

/// y_j = sum over cluster members (ascending id) of alpha_i * x_i. The
/// member order is part of the contract: a distributed simulation that sums
/// leaf terms at the CH in the same order reproduces Y bit-for-bit.
Eigen::VectorXd apply_phi(const SparseMeasurementMatrix& phi,
                          const Eigen::VectorXd& x);

/// Lossless dense expansion for analysis-scale matrices (N <= 4096).
Eigen::MatrixXd densify(const SparseMeasurementMatrix& phi);

/// CS matrix A = Phi * Psi computed row-wise from the sparse support.
Eigen::MatrixXd cs_matrix(const SparseMeasurementMatrix& phi,
                          const Eigen::MatrixXd& psi);
Eigen::MatrixXcd cs_matrix(const SparseMeasurementMatrix& phi,
                           const Eigen::MatrixXcd& psi);

}  // namespace lwcda
