#include "lwcda/bases.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace lwcda {

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Dct: return "dct";
    case BasisKind::Dft: return "dft";
    case BasisKind::DwtDb4: return "dwt";
    case BasisKind::Laplacian: return "laplacian";
  }
  return "unknown";
}

std::optional<BasisKind> basis_kind_from_string(const std::string& name) {
  if (name == "dct") return BasisKind::Dct;
  if (name == "dft") return BasisKind::Dft;
  if (name == "dwt") return BasisKind::DwtDb4;
  if (name == "laplacian") return BasisKind::Laplacian;
  return std::nullopt;
}

const Eigen::MatrixXd& Basis::matrix_real() const {
  if (is_complex()) throw std::logic_error("DFT basis has no real matrix");
  return real_;
}

const Eigen::MatrixXcd& Basis::matrix_cplx() const {
  if (!is_complex()) throw std::logic_error("basis is real-valued");
  return cplx_;
}

Eigen::VectorXcd Basis::analyze(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw std::invalid_argument("analyze: dimension mismatch");
  if (is_complex()) return cplx_.adjoint() * x.cast<std::complex<double>>();
  const Eigen::VectorXd theta = real_.transpose() * x;
  return theta.cast<std::complex<double>>();
}

Eigen::VectorXd Basis::synthesize(const Eigen::VectorXcd& theta) const {
  if (theta.size() != n_)
    throw std::invalid_argument("synthesize: dimension mismatch");
  if (is_complex()) return (cplx_ * theta).real();
  return real_ * theta.real();
}

namespace {

Eigen::MatrixXd dct_synthesis(int n) {
  Eigen::MatrixXd psi(n, n);
  const double c0 = std::sqrt(1.0 / n);
  const double ck = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    const double scale = k == 0 ? c0 : ck;
    for (int i = 0; i < n; ++i) {
      psi(i, k) =
          scale * std::cos(std::numbers::pi * (2.0 * i + 1.0) * k / (2.0 * n));
    }
  }
  return psi;
}

Eigen::MatrixXcd dft_synthesis(int n) {
  Eigen::MatrixXcd psi(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(i) * k / n;
      psi(i, k) = std::complex<double>(std::cos(angle), std::sin(angle)) * scale;
    }
  }
  return psi;
}

// Daubechies-4 analysis filters (orthonormal, periodic boundary).
struct Db4Filters {
  double h[4];  // scaling
  double g[4];  // wavelet, g_t = (-1)^t h_{3-t}
  Db4Filters() {
    const double s3 = std::sqrt(3.0);
    const double s2 = std::sqrt(2.0);
    h[0] = (1.0 + s3) / (4.0 * s2);
    h[1] = (3.0 + s3) / (4.0 * s2);
    h[2] = (3.0 - s3) / (4.0 * s2);
    h[3] = (1.0 - s3) / (4.0 * s2);
    for (int t = 0; t < 4; ++t) g[t] = (t % 2 == 0 ? 1.0 : -1.0) * h[3 - t];
  }
};

// One periodized analysis level on the first `len` entries of x.
void dwt_single_level(Eigen::VectorXd& x, int len, const Db4Filters& f) {
  const int half = len / 2;
  Eigen::VectorXd out(len);
  for (int i = 0; i < half; ++i) {
    double a = 0.0, d = 0.0;
    for (int t = 0; t < 4; ++t) {
      const double v = x[(2 * i + t) % len];
      a += f.h[t] * v;
      d += f.g[t] * v;
    }
    out[i] = a;
    out[half + i] = d;
  }
  x.head(len) = out;
}

Eigen::MatrixXd dwt_synthesis(int n, int levels) {
  const Db4Filters filters;
  // Column i of the analysis matrix W is the transform of e_i; the
  // orthonormal synthesis matrix is W^T.
  Eigen::MatrixXd analysis(n, n);
  Eigen::VectorXd work(n);
  for (int i = 0; i < n; ++i) {
    work.setZero();
    work[i] = 1.0;
    int len = n;
    for (int level = 0; level < levels; ++level) {
      dwt_single_level(work, len, filters);
      len /= 2;
    }
    analysis.col(i) = work;
  }
  return analysis.transpose();
}

Eigen::MatrixXd laplacian_eigenbasis(const NetworkTopology& topo) {
  const int n = topo.node_count();
  // Sensor-only subgraph; the variation structure of the sampled field lives
  // on the nodes, not the sink.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (NodeId v = 0; v < n; ++v) {
    for (const auto& nb : topo.neighbors(v)) {
      if (nb.id == topo.sink_id()) continue;
      lap(v, nb.id) = -1.0;
      lap(v, v) += 1.0;
    }
  }

  // Connectivity of the sensor-only subgraph.
  {
    std::vector<char> seen(n, 0);
    std::queue<NodeId> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (const auto& nb : topo.neighbors(v)) {
        if (nb.id == topo.sink_id() || seen[nb.id]) continue;
        seen[nb.id] = 1;
        ++reached;
        frontier.push(nb.id);
      }
    }
    if (reached != n)
      throw std::invalid_argument("Laplacian basis requires a connected sensor graph");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Laplacian eigendecomposition failed");
  Eigen::MatrixXd psi = solver.eigenvectors();  // ascending eigenvalues

  // Deterministic sign: the largest-magnitude entry of each column is
  // positive (first index wins on magnitude ties).
  for (int k = 0; k < n; ++k) {
    int arg = 0;
    double best = std::abs(psi(0, k));
    for (int i = 1; i < n; ++i) {
      const double mag = std::abs(psi(i, k));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (psi(arg, k) < 0) psi.col(k) *= -1.0;
  }
  return psi;
}

}  // namespace

int dwt_levels_for(int n) {
  int levels = 0;
  int m = n;
  while (levels < 3 && m % 2 == 0) {
    m /= 2;
    ++levels;
  }
  return levels;
}

Basis make_basis(BasisKind kind, int n, const NetworkTopology* topo) {
  if (n < 1) throw std::invalid_argument("basis dimension must be positive");
  Basis basis;
  basis.kind_ = kind;
  basis.n_ = n;
  switch (kind) {
    case BasisKind::Dct:
      basis.real_ = dct_synthesis(n);
      break;
    case BasisKind::Dft:
      basis.cplx_ = dft_synthesis(n);
      break;
    case BasisKind::DwtDb4: {
      const int levels = dwt_levels_for(n);
      if (levels == 0)
        throw std::invalid_argument("DWT basis requires even N (db4, periodized)");
      basis.real_ = dwt_synthesis(n, levels);
      break;
    }
    case BasisKind::Laplacian: {
      if (topo == nullptr)
        throw std::invalid_argument("Laplacian basis requires a topology");
      if (topo->node_count() != n)
        throw std::invalid_argument("Laplacian basis: topology size mismatch");
      basis.real_ = laplacian_eigenbasis(*topo);
      break;
    }
  }
  return basis;
}

double numerical_sparsity(const Basis& basis, const Eigen::VectorXd& x) {
  if (x.norm() == 0.0)
    throw std::invalid_argument("numerical sparsity is undefined for the zero vector");
  const Eigen::VectorXcd theta = basis.analyze(x);
  double l1 = 0.0, l2sq = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    const double mag = std::abs(theta[i]);
    l1 += mag;
    l2sq += mag * mag;
  }
  return (l1 * l1) / l2sq;
}

}  // namespace lwcda
