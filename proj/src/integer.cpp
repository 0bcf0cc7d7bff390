#include "xq/integer.hpp"

#include <stdexcept>

namespace xq {

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

static void require_same_size(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

IntVector add(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector neg(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector scale(const Integer& k, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

void axpy(IntVector& a, const Integer& k, const IntVector& b) {
  require_same_size(a, b);
  if (k == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace xq
