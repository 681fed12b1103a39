#include "berezin/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

Rule1D fixed_rule(const gsl_integration_fixed_type* type, int npoints, double alpha) {
  if (npoints < 1) throw std::invalid_argument("quadrature: need at least one node");
  gsl_integration_fixed_workspace* w =
      gsl_integration_fixed_alloc(type, static_cast<std::size_t>(npoints), 0.0, 1.0, alpha, 0.0);
  if (!w) throw std::runtime_error("quadrature: rule allocation failed");
  Rule1D rule;
  rule.nodes.assign(gsl_integration_fixed_nodes(w), gsl_integration_fixed_nodes(w) + npoints);
  rule.weights.assign(gsl_integration_fixed_weights(w), gsl_integration_fixed_weights(w) + npoints);
  gsl_integration_fixed_free(w);
  return rule;
}

}  // namespace

Rule1D gauss_hermite(int npoints) { return fixed_rule(gsl_integration_fixed_hermite, npoints, 0.0); }

Rule1D gauss_laguerre(int npoints, double alpha) {
  if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  return fixed_rule(gsl_integration_fixed_laguerre, npoints, alpha);
}

QuadratureGrid::QuadratureGrid(int dim, int nodes_per_axis) : dim_(dim) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("QuadratureGrid: dim must be in [1,4]");
  axis_ = gauss_hermite(nodes_per_axis);
  size_ = 1;
  for (int a = 0; a < 2 * dim; ++a) size_ *= static_cast<std::size_t>(nodes_per_axis);
}

double QuadratureGrid::node(std::size_t flat, std::complex<double>* coords) const {
  const std::size_t npa = axis_.nodes.size();
  double w = 1.0;
  for (int d = 0; d < dim_; ++d) {
    std::size_t ix = flat % npa;
    flat /= npa;
    std::size_t iy = flat % npa;
    flat /= npa;
    coords[d] = {axis_.nodes[ix], axis_.nodes[iy]};
    w *= axis_.weights[ix] * axis_.weights[iy];
  }
  return w;
}

double QuadratureGrid::weight_sum() const {
  double s1 = 0.0;
  for (double w : axis_.weights) s1 += w;
  double total = 1.0;
  for (int a = 0; a < 2 * dim_; ++a) total *= s1;
  return total;
}

int QuadratureGrid::default_nodes_per_axis(int dim) {
  switch (dim) {
    case 1: return 80;
    case 2: return 40;
    default: return 12;
  }
}

}  // namespace berezin
