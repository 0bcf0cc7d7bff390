#pragma once

// Free nilpotent groups of class 2 in collected normal form.
//
// An element is g_1^{a_1} ... g_n^{a_n} * prod_{i<j} (g_i, g_j)^{c_ij}, where
// (x, y) = -x - y + x + y is the basic commutator. Commutators are central, so
// the pair (base, comm) is a unique normal form and the product is
//
//   (a, c) + (a', c') = (a + a', c + c' + delta(a, a')),
//   delta(a, a')_ij = -a_j * a'_i   (i < j).
//
// The correction comes from moving g_i^{a'_i} left past g_j^{a_j} for j > i:
// g_j^s + g_i^t = g_i^t + g_j^s - st (g_i, g_j).

#include <cstddef>

#include "xq/integer.hpp"
#include "xq/word.hpp"

namespace xq {

class Nil2Element {
 public:
  Nil2Element() = default;
  explicit Nil2Element(std::size_t rank);
  Nil2Element(IntVector base, IntVector comm);

  static Nil2Element generator(std::size_t rank, std::size_t i);

  std::size_t rank() const { return base_.size(); }
  const IntVector& base() const { return base_; }
  const IntVector& comm() const { return comm_; }
  const Integer& comm_at(std::size_t i, std::size_t j) const;
  bool is_identity() const { return is_zero(base_) && is_zero(comm_); }

  friend bool operator==(const Nil2Element&, const Nil2Element&) = default;

 private:
  IntVector base_;
  IntVector comm_;
};

/// Number of basic commutators (g_i, g_j), i < j.
std::size_t commutator_count(std::size_t rank);
/// Position of (g_i, g_j), i < j, in the lexicographic basis.
std::size_t commutator_index(std::size_t i, std::size_t j, std::size_t rank);

Nil2Element nil2_normalize(const Word& w, std::size_t rank);
Nil2Element nil2_op(const Nil2Element& x, const Nil2Element& y);
Nil2Element nil2_inv(const Nil2Element& x);
/// (x, y) = -x - y + x + y
Nil2Element nil2_commutator(const Nil2Element& x, const Nil2Element& y);
Nil2Element nil2_pow(const Nil2Element& x, const Integer& k);
IntVector abelianize(const Nil2Element& x);

/// A word whose image is x: the collected normal form with commutators spelled out.
Word nil2_to_word(const Nil2Element& x);

}  // namespace xq
