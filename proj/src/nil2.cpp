#include "xq/nil2.hpp"

#include <stdexcept>
#include <string>

namespace xq {

namespace {

void require_same_rank(const Nil2Element& x, const Nil2Element& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("nil(2) elements have different generator counts: " +
                                std::to_string(x.rank()) + " vs " + std::to_string(y.rank()));
}

}  // namespace

std::size_t commutator_count(std::size_t rank) { return rank < 2 ? 0 : rank * (rank - 1) / 2; }

std::size_t commutator_index(std::size_t i, std::size_t j, std::size_t rank) {
  if (!(i < j && j < rank)) throw std::out_of_range("commutator index requires i < j < rank");
  return i * rank - i * (i + 1) / 2 + (j - i - 1);
}

Nil2Element::Nil2Element(std::size_t rank)
    : base_(zero_vector(rank)), comm_(zero_vector(commutator_count(rank))) {}

Nil2Element::Nil2Element(IntVector base, IntVector comm)
    : base_(std::move(base)), comm_(std::move(comm)) {
  if (comm_.size() != commutator_count(base_.size()))
    throw std::invalid_argument("commutator vector has length " + std::to_string(comm_.size()) +
                                ", expected " + std::to_string(commutator_count(base_.size())));
}

Nil2Element Nil2Element::generator(std::size_t rank, std::size_t i) {
  if (i >= rank) throw std::out_of_range("generator index out of range");
  Nil2Element g(rank);
  g.base_[i] = 1;
  return g;
}

const Integer& Nil2Element::comm_at(std::size_t i, std::size_t j) const {
  return comm_[commutator_index(i, j, rank())];
}

Nil2Element nil2_op(const Nil2Element& x, const Nil2Element& y) {
  require_same_rank(x, y);
  const std::size_t n = x.rank();
  IntVector base = add(x.base(), y.base());
  IntVector comm = add(x.comm(), y.comm());
  for (std::size_t i = 0; i < n; ++i) {
    if (y.base()[i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) comm[commutator_index(i, j, n)] -= x.base()[j] * y.base()[i];
  }
  return Nil2Element(std::move(base), std::move(comm));
}

Nil2Element nil2_inv(const Nil2Element& x) {
  const std::size_t n = x.rank();
  IntVector comm = neg(x.comm());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) comm[commutator_index(i, j, n)] -= x.base()[i] * x.base()[j];
  return Nil2Element(neg(x.base()), std::move(comm));
}

Nil2Element nil2_commutator(const Nil2Element& x, const Nil2Element& y) {
  require_same_rank(x, y);
  return nil2_op(nil2_op(nil2_inv(x), nil2_inv(y)), nil2_op(x, y));
}

Nil2Element nil2_pow(const Nil2Element& x, const Integer& k) {
  Nil2Element base = k < 0 ? nil2_inv(x) : x;
  Integer e = k < 0 ? Integer(-k) : k;
  Nil2Element acc(x.rank());
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = nil2_op(acc, base);
    e >>= 1;
    if (e > 0) base = nil2_op(base, base);
  }
  return acc;
}

IntVector abelianize(const Nil2Element& x) { return x.base(); }

Nil2Element nil2_normalize(const Word& w, std::size_t rank) {
  Nil2Element acc(rank);
  for (const Letter& l : w) {
    if (l.gen >= rank)
      throw std::out_of_range("generator index " + std::to_string(l.gen) +
                              " out of range for rank " + std::to_string(rank));
    Nil2Element g = Nil2Element::generator(rank, l.gen);
    acc = nil2_op(acc, l.sign > 0 ? g : nil2_inv(g));
  }
  return acc;
}

Word nil2_to_word(const Nil2Element& x) {
  const std::size_t n = x.rank();
  Word w;
  auto push_power = [&w](std::size_t gen, const Integer& e) {
    const int sign = e < 0 ? -1 : 1;
    for (Integer k = abs(e); k > 0; --k) w.push_back({gen, sign});
  };
  for (std::size_t i = 0; i < n; ++i) push_power(i, x.base()[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer& c = x.comm_at(i, j);
      // (g_i, g_j) = -g_i - g_j + g_i + g_j, and its inverse (g_j, g_i).
      const Word unit = c > 0 ? Word{{i, -1}, {j, -1}, {i, 1}, {j, 1}}
                              : Word{{j, -1}, {i, -1}, {j, 1}, {i, 1}};
      for (Integer k = abs(c); k > 0; --k) w.insert(w.end(), unit.begin(), unit.end());
    }
  }
  return w;
}

}  // namespace xq
