#pragma once

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "lwcda/net_topology.hpp"

namespace lwcda {

enum class BasisKind { Dct, Dft, DwtDb4, Laplacian };

std::string to_string(BasisKind kind);
std::optional<BasisKind> basis_kind_from_string(const std::string& name);

/// Orthonormal N x N sparsifying basis. Columns are the basis vectors, so
/// X = Psi * theta and theta = Psi^* X. Only the DFT is complex-valued.
class Basis {
 public:
  BasisKind kind() const { return kind_; }
  int size() const { return n_; }
  bool is_complex() const { return kind_ == BasisKind::Dft; }

  const Eigen::MatrixXd& matrix_real() const;
  const Eigen::MatrixXcd& matrix_cplx() const;

  /// theta = Psi^* X (conjugate transpose; real bases return zero imag).
  Eigen::VectorXcd analyze(const Eigen::VectorXd& x) const;

  /// X = Psi * theta; the DFT reconstruction takes the real part.
  Eigen::VectorXd synthesize(const Eigen::VectorXcd& theta) const;

  friend Basis make_basis(BasisKind kind, int n, const NetworkTopology* topo);

 private:
  BasisKind kind_ = BasisKind::Dct;
  int n_ = 0;
  Eigen::MatrixXd real_;
  Eigen::MatrixXcd cplx_;
};

/// Build an orthonormal basis.
///  - Dct: orthonormal DCT-II synthesis matrix.
///  - Dft: unitary DFT matrix.
///  - DwtDb4: periodized orthonormal Daubechies-4 synthesis matrix with
///    min(3, v2(N)) decomposition levels; odd N is rejected.
///  - Laplacian: eigenvectors of L = Deg - Adj of the unweighted sensor
///    connectivity graph in ascending eigenvalue order, each column's
///    largest-magnitude entry made positive. Requires a connected topology.
Basis make_basis(BasisKind kind, int n, const NetworkTopology* topo = nullptr);

/// Decomposition depth used by the DWT basis at dimension n.
int dwt_levels_for(int n);

/// Numerical sparsity s = (l1 norm)^2 / (l2 norm)^2 of theta = Psi^* X,
/// with complex moduli for the DFT; s lies in [1, N]. X must be nonzero.
double numerical_sparsity(const Basis& basis, const Eigen::VectorXd& x);

}  // namespace lwcda
