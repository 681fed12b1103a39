#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace berezin {

// A point z in C^n, n <= 4. Fixed-capacity storage keeps quadrature loops
// allocation-free.
struct ComplexPoint {
  static constexpr int kMaxDim = 4;

  int n = 1;
  std::array<std::complex<double>, kMaxDim> c{};

  ComplexPoint() = default;
  explicit ComplexPoint(int dim) : n(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("ComplexPoint: dim out of range");
  }
  ComplexPoint(std::initializer_list<std::complex<double>> coords) {
    if (coords.size() < 1 || coords.size() > kMaxDim)
      throw std::invalid_argument("ComplexPoint: dim out of range");
    n = static_cast<int>(coords.size());
    int i = 0;
    for (const auto& v : coords) c[static_cast<std::size_t>(i++)] = v;
  }

  double norm_sq() const {
    double s = 0;
    for (int j = 0; j < n; ++j) s += std::norm(c[static_cast<std::size_t>(j)]);
    return s;
  }
};

// <z, w> = sum_j z_j conj(w_j); makes the reproducing kernel Hermitian.
inline std::complex<double> inner(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.n != w.n) throw std::invalid_argument("inner: dimension mismatch");
  std::complex<double> s = 0;
  for (int j = 0; j < z.n; ++j)
    s += z.c[static_cast<std::size_t>(j)] * std::conj(w.c[static_cast<std::size_t>(j)]);
  return s;
}

inline double dist_sq(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.n != w.n) throw std::invalid_argument("dist_sq: dimension mismatch");
  double s = 0;
  for (int j = 0; j < z.n; ++j)
    s += std::norm(z.c[static_cast<std::size_t>(j)] - w.c[static_cast<std::size_t>(j)]);
  return s;
}

// Identifies the eigenspace (n, m) and everything built on it.
struct KernelSpec {
  int n = 1;
  int m = 0;
};

}  // namespace berezin
