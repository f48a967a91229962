#pragma once

#include <functional>

#include "core/types.hpp"

namespace zernlets {

// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_01(int count, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

// Tensor rule on the disk: Gauss in u = r^2 (so the r dr factor is absorbed)
// times equispaced angles.  Exact for products of two degree-N disk
// polynomials when radial_count >= N+1 and angular_count >= 4N+1.
struct DiskQuadrature {
  Eigen::VectorXd radial_nodes;    // r values
  Eigen::VectorXd radial_weights;  // already include the 1/2 from du = 2 r dr
  int angular_count = 0;           // uniform weight 2*pi/angular_count

  static DiskQuadrature for_degree(int N);
  static DiskQuadrature make(int radial_count, int angular_count);

  double weight_sum() const;  // equals pi

  // Sum of w * f(point) over the full tensor grid.
  complexd integrate(const std::function<complexd(PolarPoint)>& f) const;

  // <p, q> = integral p conj(q).
  complexd inner_product(const std::function<complexd(PolarPoint)>& p,
                         const std::function<complexd(PolarPoint)>& q) const;

  std::vector<PolarPoint> grid_points() const;
  Eigen::VectorXd grid_weights() const;
};

}  // namespace zernlets
