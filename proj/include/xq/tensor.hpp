#pragma once

#include <cstddef>

#include "xq/integer.hpp"

namespace xq {

/// Element of C (x) C for C free abelian of rank n, as the n x n coefficient
/// matrix over the basis {c_i (x) c_j}.
class Tensor {
 public:
  explicit Tensor(std::size_t n = 0);
  explicit Tensor(IntMatrix coeffs);

  static Tensor basis(std::size_t n, std::size_t i, std::size_t j);
  /// {x} (x) {y}
  static Tensor outer(const IntVector& x, const IntVector& y);

  std::size_t dim() const { return coeffs_.size(); }
  const IntMatrix& coeffs() const { return coeffs_; }
  const Integer& at(std::size_t i, std::size_t j) const { return coeffs_.at(i).at(j); }
  bool is_zero() const;

  Tensor operator+(const Tensor& other) const;
  Tensor operator-(const Tensor& other) const;
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  IntMatrix coeffs_;
};

/// Image of t under f (x) f, where column i of f is the image of c_i:
/// coeffs -> F * coeffs * F^T. F may be rectangular (m x n) for f: Z^n -> Z^m.
Tensor tensor_induced(const IntMatrix& f, const Tensor& t);

}  // namespace xq
