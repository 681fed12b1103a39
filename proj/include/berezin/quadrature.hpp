#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace berezin {

// One-dimensional Gaussian rule: sum_i w_i f(x_i) approximates the weighted
// integral of f with the weight baked into w_i.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// Nodes/weights for weight e^{-x^2} on the real line.
Rule1D gauss_hermite(int npoints);

/// Nodes/weights for weight x^alpha e^{-x} on (0, inf).
Rule1D gauss_laguerre(int npoints, double alpha);

// Tensor Gauss-Hermite grid over the 2*dim real coordinates of C^dim,
// adapted to the weight e^{-|w|^2}. Nodes are enumerated lazily: decoding a
// flat index costs a handful of integer ops, which keeps n=2 grids (40^4
// nodes) out of memory.
class QuadratureGrid {
 public:
  QuadratureGrid(int dim, int nodes_per_axis);

  int dim() const { return dim_; }
  int nodes_per_axis() const { return axis_.size(); }
  std::size_t size() const { return size_; }

  // Fills coords[0..dim) with the complex coordinates of node `flat` and
  // returns its tensor weight.
  double node(std::size_t flat, std::complex<double>* coords) const;

  // sum of all tensor weights; equals pi^dim up to rounding
  double weight_sum() const;

  // default axis counts: generous for n=1, affordable for n=2 and n=3
  static int default_nodes_per_axis(int dim);

 private:
  int dim_;
  Rule1D axis_;
  std::size_t size_;
};

}  // namespace berezin
