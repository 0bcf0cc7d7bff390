#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xq {

/// Arbitrary precision integer used for every exponent and coefficient.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;
/// Row-major integer matrix; rows may be empty when the column count is 0.
using IntMatrix = std::vector<IntVector>;

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector neg(const IntVector& a);
IntVector scale(const Integer& k, const IntVector& a);
/// a += k * b
void axpy(IntVector& a, const Integer& k, const IntVector& b);

/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

std::string to_string(const Integer& x);
std::string to_string(const IntVector& v);

/// Small integer helper for constant tables.
inline Integer integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace xq
