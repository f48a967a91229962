#include "core/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace zernlets {

namespace {
constexpr double kPi = std::numbers::pi;
}

void gauss_legendre_01(int count, Eigen::VectorXd& nodes,
                       Eigen::VectorXd& weights) {
  if (count < 1) throw std::invalid_argument("quadrature needs >= 1 node");
  nodes.resize(count);
  weights.resize(count);
  // Standard [-1, 1] Gauss-Legendre by Newton iteration from the Chebyshev
  // initial guess, then map to [0, 1].
  for (int i = 0; i < count; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < count; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = count * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
    weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

DiskQuadrature DiskQuadrature::for_degree(int N) {
  return make(N + 1, 4 * N + 1);
}

DiskQuadrature DiskQuadrature::make(int radial_count, int angular_count) {
  if (angular_count < 1) throw std::invalid_argument("need >= 1 angle");
  DiskQuadrature q;
  Eigen::VectorXd u, w;
  gauss_legendre_01(radial_count, u, w);
  q.radial_nodes = u.array().sqrt();
  // integral over the disk = pi * integral_0^1 (angular mean) du
  q.radial_weights = w * kPi;
  q.angular_count = angular_count;
  return q;
}

double DiskQuadrature::weight_sum() const {
  return radial_weights.sum();
}

complexd DiskQuadrature::integrate(
    const std::function<complexd(PolarPoint)>& f) const {
  complexd acc = 0.0;
  for (int i = 0; i < radial_nodes.size(); ++i) {
    complexd ring = 0.0;
    for (int k = 0; k < angular_count; ++k)
      ring += f({radial_nodes[i], 2.0 * kPi * k / angular_count});
    acc += radial_weights[i] * ring / (double)angular_count;
  }
  return acc;
}

complexd DiskQuadrature::inner_product(
    const std::function<complexd(PolarPoint)>& p,
    const std::function<complexd(PolarPoint)>& q) const {
  return integrate([&](PolarPoint pt) { return p(pt) * std::conj(q(pt)); });
}

std::vector<PolarPoint> DiskQuadrature::grid_points() const {
  std::vector<PolarPoint> pts;
  pts.reserve(radial_nodes.size() * angular_count);
  for (int i = 0; i < radial_nodes.size(); ++i)
    for (int k = 0; k < angular_count; ++k)
      pts.push_back({radial_nodes[i], 2.0 * kPi * k / angular_count});
  return pts;
}

Eigen::VectorXd DiskQuadrature::grid_weights() const {
  Eigen::VectorXd w(radial_nodes.size() * angular_count);
  int at = 0;
  for (int i = 0; i < radial_nodes.size(); ++i)
    for (int k = 0; k < angular_count; ++k)
      w[at++] = radial_weights[i] / angular_count;
  return w;
}

}  // namespace zernlets
