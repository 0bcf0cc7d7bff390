#include "xq/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace xq {

namespace {

void check_width(const IntMatrix& rows, std::size_t width) {
  for (const auto& r : rows)
    if (r.size() != width) throw std::invalid_argument("matrix row has wrong width");
}

// Row operations on a working matrix and its transform, kept in lockstep.
struct Work {
  IntMatrix a;
  IntMatrix u;
  bool track;

  void combine(std::size_t r, std::size_t i, const Integer& s, const Integer& t,
               const Integer& p, const Integer& q) {
    // (row_r, row_i) <- (s*row_r + t*row_i, p*row_r + q*row_i), det = 1
    auto mix = [&](IntMatrix& m) {
      IntVector& x = m[r];
      IntVector& y = m[i];
      for (std::size_t c = 0; c < x.size(); ++c) {
        Integer nx = s * x[c] + t * y[c];
        Integer ny = p * x[c] + q * y[c];
        x[c] = std::move(nx);
        y[c] = std::move(ny);
      }
    };
    mix(a);
    if (track) mix(u);
  }
  void negate(std::size_t r) {
    for (auto& v : a[r]) v = -v;
    if (track)
      for (auto& v : u[r]) v = -v;
  }
  void subtract(std::size_t i, const Integer& k, std::size_t r) {
    if (k == 0) return;
    axpy(a[i], -k, a[r]);
    if (track) axpy(u[i], -k, u[r]);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (track) std::swap(u[i], u[j]);
  }
};

HermiteDecomposition run_hermite(const IntMatrix& rows, std::size_t width, bool track) {
  check_width(rows, width);
  const std::size_t m = rows.size();
  Work w{rows, track ? identity_matrix(m) : IntMatrix{}, track};
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (w.a[i][col] == 0) continue;
      if (w.a[r][col] == 0) {
        w.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w.a[r][col].get_mpz_t(),
                 w.a[i][col].get_mpz_t());
      Integer p = -(w.a[i][col] / g);
      Integer q = w.a[r][col] / g;
      w.combine(r, i, s, t, p, q);
    }
    if (w.a[r][col] == 0) continue;
    if (w.a[r][col] < 0) w.negate(r);
    for (std::size_t i = 0; i < r; ++i) w.subtract(i, floor_div(w.a[i][col], w.a[r][col]), r);
    pivots.push_back(col);
    ++r;
  }
  HermiteDecomposition out;
  out.form.width = width;
  out.form.pivots = std::move(pivots);
  out.form.rows.assign(w.a.begin(), w.a.begin() + static_cast<std::ptrdiff_t>(r));
  if (track) out.transform = std::move(w.u);
  return out;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

HermiteForm hermite_form(const IntMatrix& rows, std::size_t width) {
  return run_hermite(rows, width, false).form;
}

HermiteDecomposition hermite_decompose(const IntMatrix& rows, std::size_t width) {
  return run_hermite(rows, width, true);
}

IntVector reduce_mod(const HermiteForm& lattice, IntVector x) {
  if (x.size() != lattice.width) throw std::invalid_argument("vector width does not match lattice");
  for (std::size_t k = 0; k < lattice.rows.size(); ++k) {
    const std::size_t p = lattice.pivots[k];
    axpy(x, -floor_div(x[p], lattice.rows[k][p]), lattice.rows[k]);
  }
  return x;
}

bool in_lattice(const HermiteForm& lattice, const IntVector& x) {
  return is_zero(reduce_mod(lattice, x));
}

IntVector reduce_mod_trailing(const IntMatrix& lattice_rows, std::size_t width, IntVector x) {
  auto reversed = [](IntVector v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  IntMatrix rev;
  rev.reserve(lattice_rows.size());
  for (const auto& r : lattice_rows) rev.push_back(reversed(r));
  return reversed(reduce_mod(hermite_form(rev, width), reversed(std::move(x))));
}

std::optional<IntegerSolution> solve_integer_system(const IntMatrix& a, const IntVector& b,
                                                    std::size_t unknowns) {
  if (a.size() != b.size()) throw std::invalid_argument("system has mismatched right-hand side");
  check_width(a, unknowns);
  // U * A^T = H  =>  A * U^T = H^T; substitute y = U^T z.
  const IntMatrix at = transpose(a, unknowns);
  const HermiteDecomposition dec = hermite_decompose(at, a.size());
  const HermiteForm& h = dec.form;
  IntVector z = zero_vector(unknowns);
  for (std::size_t k = 0; k < h.rank(); ++k) {
    const std::size_t p = h.pivots[k];
    Integer rhs = b[p];
    for (std::size_t j = 0; j < k; ++j) rhs -= h.rows[j][p] * z[j];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h.rows[k][p].get_mpz_t())) return std::nullopt;
    z[k] = rhs / h.rows[k][p];
  }
  // Rows without a pivot must be satisfied by the triangular solution.
  for (std::size_t row = 0; row < b.size(); ++row) {
    Integer lhs = 0;
    for (std::size_t k = 0; k < h.rank(); ++k) lhs += h.rows[k][row] * z[k];
    if (lhs != b[row]) return std::nullopt;
  }
  IntegerSolution sol;
  sol.particular = zero_vector(unknowns);
  for (std::size_t k = 0; k < h.rank(); ++k) axpy(sol.particular, z[k], dec.transform[k]);
  for (std::size_t k = h.rank(); k < unknowns; ++k) sol.kernel.push_back(dec.transform[k]);
  return sol;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("matrix/vector size mismatch");
    Integer s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix r(a.size(), zero_vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0) axpy(r[i], a[i][k], b[k]);
  }
  return r;
}

IntMatrix transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix t(cols, zero_vector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace xq
