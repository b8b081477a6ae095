#include "lwcda/field_gen.hpp"

#include <cmath>
#include <stdexcept>

#include "lwcda/rng.hpp"

namespace lwcda {

double ScalarField::value(const Point2& p) const {
  double v = offset_;
  for (const auto& bump : bumps_) {
    const double d2 = (p.x - bump.center.x) * (p.x - bump.center.x) +
                      (p.y - bump.center.y) * (p.y - bump.center.y);
    v += bump.amplitude * std::exp(-d2 / (2.0 * bump.width * bump.width));
  }
  return v;
}

ScalarField make_field(std::uint64_t seed, int n_bumps,
                       std::pair<double, double> amplitude_range,
                       std::pair<double, double> width_range, double offset,
                       const Rect& area) {
  if (n_bumps < 0) throw std::invalid_argument("make_field: negative bump count");
  if (width_range.first <= 0.0 || width_range.second <= 0.0)
    throw std::invalid_argument("make_field: widths must be positive");

  auto rng = make_rng(seed, "field");
  std::uniform_real_distribution<double> ux(0.0, area.width);
  std::uniform_real_distribution<double> uy(0.0, area.height);
  std::uniform_real_distribution<double> ua(amplitude_range.first,
                                            amplitude_range.second);
  std::uniform_real_distribution<double> uw(width_range.first,
                                            width_range.second);

  std::vector<ScalarField::Bump> bumps;
  bumps.reserve(n_bumps);
  for (int i = 0; i < n_bumps; ++i) {
    ScalarField::Bump bump;
    bump.center = {ux(rng), uy(rng)};
    bump.amplitude = ua(rng);
    bump.width = uw(rng);
    bumps.push_back(bump);
  }
  return ScalarField(std::move(bumps), offset);
}

ScalarField default_field(std::uint64_t seed, const Rect& area) {
  const double a = area.max_side();
  return make_field(seed, 5, {4.0, 12.0}, {0.25 * a, 0.45 * a}, 25.0, area);
}

Eigen::VectorXd sample_field(const ScalarField& field,
                             const NetworkTopology& topo) {
  Eigen::VectorXd x(topo.node_count());
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    x[v] = field.value(topo.position(v));
  }
  return x;
}

}  // namespace lwcda
