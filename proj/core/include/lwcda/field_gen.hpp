#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lwcda/net_topology.hpp"

namespace lwcda {

/// Smooth synthetic scalar field: an ambient offset plus a sum of Gaussian
/// bumps. Stands in for measured temperature surfaces; parameters default to
/// a regime whose samples are numerically sparse under the DCT.
class ScalarField {
 public:
  struct Bump {
    Point2 center;
    double amplitude;
    double width;  // Gaussian sigma, meters
  };

  ScalarField(std::vector<Bump> bumps, double offset)
      : bumps_(std::move(bumps)), offset_(offset) {}

  double value(const Point2& p) const;
  double offset() const { return offset_; }
  const std::vector<Bump>& bumps() const { return bumps_; }

 private:
  std::vector<Bump> bumps_;
  double offset_;
};

/// Deterministic field from a seed: bump centers uniform over the area,
/// amplitudes and widths uniform over the given ranges.
ScalarField make_field(std::uint64_t seed, int n_bumps,
                       std::pair<double, double> amplitude_range,
                       std::pair<double, double> width_range, double offset,
                       const Rect& area);

/// Defaults tuned so that grid samples at N around 1024 have single-digit
/// numerical sparsity under the DCT.
ScalarField default_field(std::uint64_t seed, const Rect& area);

/// X_i = field value at the position of node i.
Eigen::VectorXd sample_field(const ScalarField& field,
                             const NetworkTopology& topo);

}  // namespace lwcda
