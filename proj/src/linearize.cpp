#include "xq/linearize.hpp"

#include <stdexcept>

namespace xq {

std::optional<LinearChart> linear_chart(const Group& g) {
  if (g.vector_represented()) {
    return LinearChart{g.rank(), g.relations(), [](const Element& x) {
                         return std::get<IntVector>(x);
                       }};
  }
  if (g.kind() == GroupKind::free_nil2) {
    const std::size_t n = g.rank();
    return LinearChart{n + commutator_count(n), {}, [n](const Element& x) {
                         const auto& e = std::get<Nil2Element>(x);
                         IntVector v = e.base();
                         for (std::size_t i = 0; i < n; ++i)
                           for (std::size_t j = i + 1; j < n; ++j)
                             v.push_back(2 * e.comm_at(i, j) + e.base()[i] * e.base()[j]);
                         return v;
                       }};
  }
  if (g.rank() <= 1) {
    return LinearChart{g.rank(), {}, [g](const Element& x) { return g.abelianize(x); }};
  }
  return std::nullopt;
}

void LinearSystem::add_block(std::string label, IntMatrix lhs, IntVector rhs, IntMatrix moduli) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("block rows and rhs differ in length");
  for (const auto& row : lhs)
    if (row.size() != unknowns_) throw std::invalid_argument("block row has the wrong width");
  for (const auto& row : moduli)
    if (row.size() != lhs.size()) throw std::invalid_argument("modulus row has the wrong width");
  blocks_.push_back({std::move(label), std::move(lhs), std::move(rhs), std::move(moduli)});
}

std::optional<IntegerSolution> LinearSystem::solve_prefix(std::size_t count) const {
  std::size_t slack = 0;
  for (std::size_t b = 0; b < count; ++b) slack += blocks_[b].moduli.size();
  const std::size_t total = unknowns_ + slack;
  IntMatrix a;
  IntVector rhs;
  std::size_t slack_at = unknowns_;
  for (std::size_t b = 0; b < count; ++b) {
    const Block& blk = blocks_[b];
    for (std::size_t r = 0; r < blk.lhs.size(); ++r) {
      IntVector row = blk.lhs[r];
      row.resize(total, Integer(0));
      for (std::size_t m = 0; m < blk.moduli.size(); ++m) row[slack_at + m] = blk.moduli[m][r];
      a.push_back(std::move(row));
      rhs.push_back(blk.rhs[r]);
    }
    slack_at += blk.moduli.size();
  }
  auto full = solve_integer_system(a, rhs, total);
  if (!full) return std::nullopt;
  IntegerSolution out;
  out.particular.assign(full->particular.begin(),
                        full->particular.begin() + static_cast<std::ptrdiff_t>(unknowns_));
  for (const auto& k : full->kernel) {
    IntVector p(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(unknowns_));
    if (!is_zero(p)) out.kernel.push_back(std::move(p));
  }
  return out;
}

std::optional<IntegerSolution> LinearSystem::solve() const { return solve_prefix(blocks_.size()); }

std::optional<std::string> LinearSystem::first_infeasible_block() const {
  for (std::size_t b = 1; b <= blocks_.size(); ++b)
    if (!solve_prefix(b)) return blocks_[b - 1].label;
  return std::nullopt;
}

IntVector canonical_solution(const IntegerSolution& sol, const std::vector<std::size_t>& order) {
  const std::size_t n = sol.particular.size();
  if (order.size() != n) throw std::invalid_argument("ordering does not cover the unknowns");
  auto permute = [&](const IntVector& v) {
    IntVector out(n);
    for (std::size_t p = 0; p < n; ++p) out[p] = v.at(order[p]);
    return out;
  };
  IntMatrix rows;
  for (const auto& k : sol.kernel) rows.push_back(permute(k));
  const IntVector reduced = reduce_mod_trailing(rows, n, permute(sol.particular));
  IntVector out(n);
  for (std::size_t p = 0; p < n; ++p) out[order[p]] = reduced[p];
  return out;
}

}  // namespace xq
