#pragma once

// Turning homotopy equations into integer linear systems.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xq/group.hpp"
#include "xq/lattice.hpp"

namespace xq {

/// Coordinates in which every abelian subgroup of a group is Z-linear:
/// sums of pairwise commuting elements map to sums of coordinates, and the map
/// is injective modulo `relations`.
///
/// Abelian kinds use their coefficient vectors. A free nil(2)-group uses
/// (a, 2c_ij + a_i a_j): in these coordinates the collection correction is
/// antisymmetric and vanishes on commuting pairs. Free groups of rank <= 1 use
/// the exponent sum. Other groups have no chart.
struct LinearChart {
  std::size_t dim = 0;
  IntMatrix relations;
  std::function<IntVector(const Element&)> coords;
};

std::optional<LinearChart> linear_chart(const Group& g);

/// Equations L*y == rhs modulo a relation lattice, accumulated block by block.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }

  /// Adds rows `lhs` (each of length unknowns()) with right-hand side `rhs`,
  /// holding modulo the row lattice `moduli` (rows of length lhs.size()).
  void add_block(std::string label, IntMatrix lhs, IntVector rhs, IntMatrix moduli = {});

  /// Solution set projected onto the unknowns (kernel rows may be redundant).
  std::optional<IntegerSolution> solve() const;

  /// Label of the first block whose addition makes the system infeasible.
  std::optional<std::string> first_infeasible_block() const;

 private:
  struct Block {
    std::string label;
    IntMatrix lhs;
    IntVector rhs;
    IntMatrix moduli;
  };
  std::optional<IntegerSolution> solve_prefix(std::size_t blocks) const;

  std::size_t unknowns_;
  std::vector<Block> blocks_;
};

/// Canonical member of particular + span(kernel): unknowns listed later in
/// `order` (a permutation of the unknown indices) are reduced first, so the
/// representative concentrates its support on the unknowns listed early.
IntVector canonical_solution(const IntegerSolution& sol, const std::vector<std::size_t>& order);

}  // namespace xq
