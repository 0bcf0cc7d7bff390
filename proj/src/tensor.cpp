#include "xq/tensor.hpp"

#include <stdexcept>

#include "xq/lattice.hpp"

namespace xq {

Tensor::Tensor(std::size_t n) : coeffs_(n, zero_vector(n)) {}

Tensor::Tensor(IntMatrix coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& row : coeffs_)
    if (row.size() != coeffs_.size()) throw std::invalid_argument("tensor matrix must be square");
}

Tensor Tensor::basis(std::size_t n, std::size_t i, std::size_t j) {
  Tensor t(n);
  t.coeffs_.at(i).at(j) = 1;
  return t;
}

Tensor Tensor::outer(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("tensor factors have different ranks");
  Tensor t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) t.coeffs_[i][j] = x[i] * y[j];
  return t;
}

bool Tensor::is_zero() const {
  for (const auto& row : coeffs_)
    if (!xq::is_zero(row)) return false;
  return true;
}

Tensor Tensor::operator+(const Tensor& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("tensor dimension mismatch");
  Tensor t(dim());
  for (std::size_t i = 0; i < dim(); ++i) t.coeffs_[i] = add(coeffs_[i], other.coeffs_[i]);
  return t;
}

Tensor Tensor::operator-(const Tensor& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("tensor dimension mismatch");
  Tensor t(dim());
  for (std::size_t i = 0; i < dim(); ++i) t.coeffs_[i] = sub(coeffs_[i], other.coeffs_[i]);
  return t;
}

Tensor tensor_induced(const IntMatrix& f, const Tensor& t) {
  for (const auto& row : f)
    if (row.size() != t.dim())
      throw std::invalid_argument("map matrix has " + std::to_string(row.size()) +
                                  " columns but the tensor has rank " + std::to_string(t.dim()));
  if (t.dim() == 0) return Tensor(f.size());
  return Tensor(mat_mul(mat_mul(f, t.coeffs()), transpose(f, t.dim())));
}

}  // namespace xq
