#pragma once

#include "berezin/rational.hpp"

#include <vector>

namespace berezin {

// Dense polynomial with exact rational coefficients, ascending powers.
// Just enough arithmetic for the Gram-projection oracles.
class RationalPoly {
 public:
  RationalPoly() : c_{Rational(0)} {}
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rational(0));
    trim();
  }
  static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
  static RationalPoly monomial(int power, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly& operator*=(const Rational& s);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

inline RationalPoly RationalPoly::monomial(int power, const Rational& coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
  c.back() = coeff;
  return RationalPoly(std::move(c));
}

inline Rational RationalPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

inline double RationalPoly::eval(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
  return r;
}

inline RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

inline RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

inline RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(r));
}

inline RationalPoly& RationalPoly::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

inline void RationalPoly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

}  // namespace berezin
