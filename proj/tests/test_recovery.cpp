#include <doctest.h>

#include <algorithm>
#include <set>

#include "lwcda/experiments.hpp"
#include "lwcda/recovery.hpp"
#include "lwcda/rng.hpp"

using namespace lwcda;

TEST_CASE("omp on the identity picks the active coordinate in one step") {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(4, 4);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(4);
  y[2] = 1.0;
  const auto result = omp(a, y, {.max_atoms = 4});
  CHECK(result.iterations == 1);
  REQUIRE(result.support.size() == 1);
  CHECK(result.support[0] == 2);
  CHECK(result.coefficients[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("omp on zero measurements returns zero in zero iterations") {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(8, 16);
  const auto result = omp(a, Eigen::VectorXd::Zero(8), {.max_atoms = 8});
  CHECK(result.iterations == 0);
  CHECK(result.coefficients.isZero(0.0));
}

TEST_CASE("omp rejects zero columns and bad atom caps") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(4, 4);
  a.col(1).setZero();
  CHECK_THROWS_AS(omp(a, Eigen::VectorXd::Ones(4), {.max_atoms = 2}),
                  std::invalid_argument);
  const Eigen::MatrixXd good = Eigen::MatrixXd::Identity(4, 4);
  CHECK_THROWS_AS(omp(good, Eigen::VectorXd::Ones(4), {.max_atoms = 5}),
                  std::invalid_argument);
}

TEST_CASE("omp stops cleanly once the residual is orthogonal to all columns") {
  // Two identical columns: after both reachable directions are used the
  // remaining correlation is exactly zero and the run ends.
  Eigen::MatrixXd a(3, 3);
  a.col(0) << 1, 0, 0;
  a.col(1) << 1, 0, 0;
  a.col(2) << 0, 1, 0;
  Eigen::VectorXd y(3);
  y << 2, 1, 0.5;  // e3 component is unreachable
  const auto result = omp(a, y, {.max_atoms = 3});
  CHECK(result.iterations == 2);
  CHECK_FALSE(result.degenerate_stop);
  CHECK(result.coefficients[0] == doctest::Approx(2.0));
  CHECK(result.coefficients[2] == doctest::Approx(1.0));
}

TEST_CASE("omp reports a degenerate stop when an atom makes no progress") {
  // The only correlated column is one ulp away from the residual's
  // orthogonal complement; accepting it cannot shrink the residual.
  const double phi_angle = 1e-9;
  Eigen::MatrixXd a(2, 2);
  a.col(0) << 1.0, 0.0;
  a.col(1) << std::cos(phi_angle), std::sin(phi_angle);
  Eigen::VectorXd y(2);
  y << 0.0, 1.0;
  const auto result = omp(a, y, {.max_atoms = 2});
  CHECK(result.degenerate_stop);
  CHECK(result.iterations == 0);
}

TEST_CASE("planted dct-sparse signals recover exactly") {
  // Measurement matrices from a 16x16 grid clustered to exactly 128 rows.
  const int n = 256, m = 128, k = 10;
  const auto topo = deploy_grid(n, {100.0, 100.0});
  const Basis dct = make_basis(BasisKind::Dct, n);

  const int trials = 40;
  int exact_support = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = substream_seed(1234, "trial", t);
    const auto phi = generate_phi_exact(topo, m, seed);
    const Eigen::MatrixXd a = densify(phi) * dct.matrix_real();

    auto rng = make_rng(seed, "plant");
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::set<int> support;
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(ids[i], ids[pick(rng)]);
      support.insert(ids[i]);
      theta[ids[i]] = normal(rng);
    }
    const Eigen::VectorXd y = a * theta;
    const auto result = omp(a, y, {.max_atoms = k});
    const std::set<int> found(result.support.begin(), result.support.end());
    if (found == support) {
      ++exact_support;
      const Eigen::VectorXd x = dct.matrix_real() * theta;
      const Eigen::VectorXd x_hat = dct.matrix_real() * result.coefficients;
      CHECK(recon_error(x, x_hat) < 1e-6);
    }
  }
  CHECK(exact_support >= trials * 95 / 100);
}

TEST_CASE("residual norms decrease strictly along the trace") {
  const auto topo = deploy_grid(144, {60.0, 60.0});
  const Basis dct = make_basis(BasisKind::Dct, 144);
  const auto phi = generate_phi_exact(topo, 60, 77);
  const Eigen::MatrixXd a = densify(phi) * dct.matrix_real();
  auto rng = make_rng(99, "y");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd y(60);
  for (int i = 0; i < 60; ++i) y[i] = normal(rng);

  const auto result = omp(a, y, {.max_atoms = 15});
  REQUIRE(result.iterations >= 2);
  double prev = y.norm();
  for (const double norm : result.residual_trace) {
    CHECK(norm < prev);
    prev = norm;
  }
}

TEST_CASE("well-conditioned planted instances reach tiny residuals") {
  // k <= M/2 with random +-1 cluster rows and DCT columns.
  const auto topo = deploy_grid(100, {100.0, 100.0});
  const Basis dct = make_basis(BasisKind::Dct, 100);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto phi = generate_phi_exact(topo, 50, seed);
    const Eigen::MatrixXd a = densify(phi) * dct.matrix_real();
    auto rng = make_rng(seed, "plant");
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(100);
    std::vector<int> ids(100);
    std::iota(ids.begin(), ids.end(), 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
      std::uniform_int_distribution<int> pick(i, 99);
      std::swap(ids[i], ids[pick(rng)]);
      theta[ids[i]] = normal(rng);
    }
    const Eigen::VectorXd y = a * theta;
    const auto result = omp(a, y, {.max_atoms = 25});
    CHECK(result.residual_trace.back() < 1e-9 * y.norm() + 1e-12);
  }
}

TEST_CASE("omp is deterministic") {
  const auto topo = deploy_grid(64, {80.0, 80.0});
  const Basis dct = make_basis(BasisKind::Dct, 64);
  const auto phi = generate_phi_exact(topo, 32, 5);
  const Eigen::MatrixXd a = densify(phi) * dct.matrix_real();
  auto rng = make_rng(3, "y");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd y(32);
  for (int i = 0; i < 32; ++i) y[i] = normal(rng);
  const auto r1 = omp(a, y, {.max_atoms = 8});
  const auto r2 = omp(a, y, {.max_atoms = 8});
  CHECK(r1.support == r2.support);
  CHECK(r1.coefficients == r2.coefficients);
}

TEST_CASE("complex omp recovers dft-sparse plants") {
  const auto topo = deploy_grid(128, {80.0, 80.0});
  const Basis dft = make_basis(BasisKind::Dft, 128);
  const auto phi = generate_phi_exact(topo, 64, 9);
  const Eigen::MatrixXcd a = densify(phi) * dft.matrix_cplx();
  auto rng = make_rng(10, "plant");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd theta = Eigen::VectorXcd::Zero(128);
  for (const int idx : {3, 40, 77, 90, 120}) {
    theta[idx] = std::complex<double>(normal(rng), normal(rng));
  }
  const Eigen::VectorXcd y = a * theta;
  const auto result = omp(a, y, {.max_atoms = 5});
  CHECK((result.coefficients - theta).norm() < 1e-8 * theta.norm());
}

TEST_CASE("reconstruct applies the basis synthesis") {
  const Basis dct = make_basis(BasisKind::Dct, 16);
  Eigen::VectorXcd theta = Eigen::VectorXcd::Zero(16);
  theta[0] = 2.0;
  const Eigen::VectorXd x = reconstruct(dct, theta);
  CHECK(x == dct.synthesize(theta));
}

TEST_CASE("recon_error basics") {
  Eigen::VectorXd x(3);
  x << 1.0, -2.0, 2.0;
  CHECK(recon_error(x, x) == 0.0);
  CHECK(recon_error(x, Eigen::VectorXd::Zero(3)) == doctest::Approx(1.0));
  CHECK(recon_error(x, 2.0 * x) == doctest::Approx(1.0));
  CHECK_THROWS_AS(recon_error(Eigen::VectorXd::Zero(3), x),
                  std::invalid_argument);
}

TEST_CASE("recover_signal solves square systems directly") {
  const auto topo = deploy_grid(49, {70.0, 70.0});
  const Basis dct = make_basis(BasisKind::Dct, 49);
  // threshold 1: every node a cluster head, M = N
  const auto heads = select_cluster_heads(topo, 1.0, 1);
  const auto assignment = assign_leaves(topo, heads);
  const auto phi = build_phi(assignment, 2);
  auto rng = make_rng(4, "x");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(49);
  for (int i = 0; i < 49; ++i) x[i] = normal(rng);
  const Eigen::VectorXd y = apply_phi(phi, x);
  const auto summary = recover_signal(phi, dct, y);
  CHECK(summary.used_direct_solve);
  CHECK(recon_error(x, summary.x_hat) < 1e-9);
}
