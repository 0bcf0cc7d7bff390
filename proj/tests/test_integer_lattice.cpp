#include "doctest.h"

#include <random>

#include "xq/group.hpp"
#include "xq/lattice.hpp"

using namespace xq;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, IntVector(cols));
  for (auto& row : m)
    for (auto& x : row) x = Integer(random_int(rng, lo, hi));
  return m;
}

// Is x in the Z-span of the rows? Brute force over small coefficients.
bool in_span_brute(const IntMatrix& rows, const IntVector& x, long box) {
  std::vector<long> c(rows.size(), -box);
  while (true) {
    IntVector acc = zero_vector(x.size());
    for (std::size_t r = 0; r < rows.size(); ++r) axpy(acc, Integer(c[r]), rows[r]);
    if (acc == x) return true;
    std::size_t k = 0;
    while (k < c.size() && c[k] == box) c[k++] = -box;
    if (k == c.size()) return false;
    ++c[k];
  }
}

}  // namespace

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(-6, 3) == -2);
}

TEST_CASE("integers beyond 64 bits are exact") {
  Integer big("123456789012345678901234567890");
  CHECK(to_string(big * big) == "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("hermite form is echelon with reduced entries above pivots") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
    const HermiteDecomposition d = hermite_decompose(m, cols);
    const HermiteForm& h = d.form;
    for (std::size_t k = 0; k < h.rank(); ++k) {
      const std::size_t p = h.pivots[k];
      CHECK(h.rows[k][p] > 0);
      for (std::size_t c = 0; c < p; ++c) CHECK(h.rows[k][c] == 0);
      if (k) CHECK(h.pivots[k - 1] < p);
      for (std::size_t above = 0; above < k; ++above) {
        CHECK(h.rows[above][p] >= 0);
        CHECK(h.rows[above][p] < h.rows[k][p]);
      }
    }
    const IntMatrix full = mat_mul(d.transform, m);
    for (std::size_t r = 0; r < rows; ++r)
      CHECK(full[r] == (r < h.rank() ? h.rows[r] : zero_vector(cols)));
    // Every input row lies in the lattice.
    for (const auto& row : m) CHECK(in_lattice(h, row));
  }
}

TEST_CASE("reduce_mod picks one representative per coset") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 2, 3, -5, 5);
    const HermiteForm h = hermite_form(m, 3);
    const IntVector x = random_matrix(rng, 1, 3, -20, 20)[0];
    IntVector y = x;
    axpy(y, Integer(random_int(rng, -4, 4)), m[0]);
    axpy(y, Integer(random_int(rng, -4, 4)), m[1]);
    CHECK(reduce_mod(h, x) == reduce_mod(h, y));
    CHECK(in_lattice(h, sub(x, reduce_mod(h, x))));
    CHECK(reduce_mod(h, reduce_mod(h, x)) == reduce_mod(h, x));
  }
}

TEST_CASE("integer systems: solutions satisfy the equations and infeasibility is detected") {
  std::mt19937_64 rng(3);
  int solvable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t eqs = 1 + trial % 3, unknowns = 1 + (trial / 3) % 4;
    const IntMatrix a = random_matrix(rng, eqs, unknowns, -4, 4);
    IntVector b;
    if (trial % 2 == 0) {
      b = mat_vec(a, random_matrix(rng, 1, unknowns, -5, 5)[0]);
    } else {
      b = random_matrix(rng, 1, eqs, -6, 6)[0];
    }
    const auto sol = solve_integer_system(a, b, unknowns);
    if (trial % 2 == 0) REQUIRE(sol.has_value());
    if (!sol) {
      // No small integer vector solves it either.
      const IntMatrix cols = transpose(a, unknowns);
      CHECK_FALSE(in_span_brute(cols, b, 4));
      continue;
    }
    ++solvable;
    CHECK(mat_vec(a, sol->particular) == b);
    for (const auto& k : sol->kernel) CHECK(is_zero(mat_vec(a, k)));
  }
  CHECK(solvable >= 150);
}

TEST_CASE("2x = 1 has no integer solution") {
  CHECK_FALSE(solve_integer_system({{Integer(2)}}, {Integer(1)}, 1).has_value());
  const auto sol = solve_integer_system({{Integer(2)}}, {Integer(6)}, 1);
  REQUIRE(sol);
  CHECK(sol->particular == IntVector{Integer(3)});
  CHECK(sol->kernel.empty());
}

TEST_CASE("fgab_equal agrees with brute-force lattice enumeration") {
  const Group g = Group::fg_abelian(2, {{Integer(2), Integer(-2)}});
  CHECK_FALSE(fgab_equal(g, {Integer(1), Integer(0)}, {Integer(0), Integer(1)}));
  CHECK(fgab_equal(g, {Integer(3), Integer(0)}, {Integer(1), Integer(2)}));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix rel = random_matrix(rng, 1, 2, -3, 3);
    const Group h = Group::fg_abelian(2, rel);
    const IntVector x = random_matrix(rng, 1, 2, -6, 6)[0];
    const IntVector y = random_matrix(rng, 1, 2, -6, 6)[0];
    // |x - y| <= 12 bounds the single coefficient, so the box is exhaustive.
    CHECK(fgab_equal(h, x, y) == in_span_brute(rel, sub(x, y), 12));
  }
}
