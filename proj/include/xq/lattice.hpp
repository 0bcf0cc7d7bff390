#pragma once

// Integer lattices: row-style Hermite normal form, canonical coset
// representatives and exact solving of linear systems over Z.

#include <cstddef>
#include <optional>
#include <vector>

#include "xq/integer.hpp"

namespace xq {

/// Row-style Hermite normal form of a lattice given by generating rows.
///
/// `rows` holds only the nonzero rows, in echelon order: row k has its first
/// nonzero entry (the pivot, always positive) in column `pivots[k]`, pivots
/// strictly increase, and every entry above a pivot lies in [0, pivot).
struct HermiteForm {
  std::size_t width = 0;
  IntMatrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

/// Hermite form together with a unimodular transform `U` such that
/// U * input = full, where `full` is `form.rows` followed by zero rows.
struct HermiteDecomposition {
  HermiteForm form;
  IntMatrix transform;  // square, size = number of input rows
};

HermiteForm hermite_form(const IntMatrix& rows, std::size_t width);
HermiteDecomposition hermite_decompose(const IntMatrix& rows, std::size_t width);

/// Canonical representative of x modulo the lattice: pivot coordinates are
/// reduced into [0, pivot). Two vectors are congruent iff their reductions agree.
IntVector reduce_mod(const HermiteForm& lattice, IntVector x);
bool in_lattice(const HermiteForm& lattice, const IntVector& x);

/// Canonical representative modulo the lattice that reduces the *last*
/// coordinates first, so the representative concentrates its support on the
/// leading coordinates.
IntVector reduce_mod_trailing(const IntMatrix& lattice_rows, std::size_t width, IntVector x);

/// Solution set {particular + span_Z(kernel)} of A y = b over the integers.
struct IntegerSolution {
  IntVector particular;
  IntMatrix kernel;  // basis rows, each of length = number of unknowns
};

/// Solves A y = b exactly over Z, where A has `unknowns` columns.
/// Returns nullopt iff no integer solution exists.
std::optional<IntegerSolution> solve_integer_system(const IntMatrix& a, const IntVector& b,
                                                    std::size_t unknowns);

IntVector mat_vec(const IntMatrix& a, const IntVector& x);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a, std::size_t cols);
IntMatrix identity_matrix(std::size_t n);

}  // namespace xq
