#include "doctest.h"

#include <random>

#include "support/nil2_rewriting_oracle.hpp"
#include "xq/group.hpp"
#include "xq/nil2.hpp"

using namespace xq;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  Word w(static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(max_length))));
  for (auto& l : w) {
    l.gen = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(rank) - 1));
    l.sign = random_int(rng, 0, 1) ? 1 : -1;
  }
  return w;
}

Nil2Element from_oracle(const Word& w, std::size_t rank) {
  std::vector<oracle::Letter> letters;
  for (const auto& l : w) letters.push_back({l.gen, l.sign});
  const oracle::Collected c = oracle::rewrite(letters, rank);
  IntVector base, comm(commutator_count(rank));
  for (long a : c.base) base.push_back(Integer(a));
  for (const auto& [ij, v] : c.comm) comm[commutator_index(ij.first, ij.second, rank)] = Integer(v);
  return {base, comm};
}

Nil2Element gen(std::size_t rank, std::size_t i) { return Nil2Element::generator(rank, i); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(word_reduce(word_from_powers({{0, 2}, {1, 1}, {1, -1}, {0, -1}})) == word_from_powers({{0, 1}}));
  CHECK(word_reduce(word_concat(word_from_powers({{0, 1}, {1, 3}}), word_inverse(word_from_powers({{0, 1}, {1, 3}}))))
            .empty());
}

TEST_CASE("g2 + g1 collects to base (1,1) with c12 = -1") {
  const Nil2Element x = nil2_normalize(word_from_powers({{1, 1}, {0, 1}}), 2);
  CHECK(x.base() == IntVector{1, 1});
  CHECK(x.comm() == IntVector{-1});
  CHECK(x == from_oracle(word_from_powers({{1, 1}, {0, 1}}), 2));
}

TEST_CASE("the basic commutator is -x - y + x + y") {
  const Nil2Element c = nil2_commutator(gen(2, 0), gen(2, 1));
  CHECK(c.base() == IntVector{0, 0});
  CHECK(c.comm() == IntVector{1});
  CHECK(c == nil2_normalize(word_from_powers({{0, -1}, {1, -1}, {0, 1}, {1, 1}}), 2));
}

TEST_CASE("triple commutators are trivial") {
  const Nil2Element c = nil2_commutator(gen(2, 0), gen(2, 1));
  CHECK(nil2_commutator(c, gen(2, 0)).is_identity());
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const auto x = nil2_normalize(random_word(rng, 3, 6), 3);
    const auto y = nil2_normalize(random_word(rng, 3, 6), 3);
    const auto z = nil2_normalize(random_word(rng, 3, 6), 3);
    CHECK(nil2_commutator(nil2_commutator(x, y), z).is_identity());
  }
}

TEST_CASE("abelianization of -g + g' + g''") {
  const Nil2Element x = nil2_normalize(word_from_powers({{0, -1}, {1, 1}, {2, 1}}), 3);
  CHECK(abelianize(x) == IntVector{-1, 1, 1});
}

TEST_CASE("normal form agrees with the rewriting oracle") {
  std::mt19937_64 rng(20);
  for (int k = 0; k < 3000; ++k) {
    const std::size_t rank = 1 + k % 3;
    const Word w = random_word(rng, rank, 8);
    CHECK(nil2_normalize(w, rank) == from_oracle(w, rank));
  }
}

TEST_CASE("group laws of the collected product") {
  std::mt19937_64 rng(21);
  const std::size_t n = 3;
  for (int k = 0; k < 300; ++k) {
    const Word u = random_word(rng, n, 6), v = random_word(rng, n, 6), w = random_word(rng, n, 6);
    const auto x = nil2_normalize(u, n), y = nil2_normalize(v, n), z = nil2_normalize(w, n);
    CHECK(nil2_op(nil2_op(x, y), z) == nil2_op(x, nil2_op(y, z)));
    CHECK(nil2_op(x, nil2_inv(x)).is_identity());
    CHECK(nil2_op(nil2_inv(x), x).is_identity());
    CHECK(nil2_op(x, y) == nil2_normalize(word_concat(u, v), n));
    CHECK(nil2_inv(x) == nil2_normalize(word_inverse(u), n));
    CHECK(nil2_normalize(nil2_to_word(x), n) == x);
    // (x, y) = -(y, x), and commutators are central and bilinear.
    CHECK(nil2_commutator(x, y) == nil2_inv(nil2_commutator(y, x)));
    CHECK(nil2_op(nil2_commutator(x, y), z) == nil2_op(z, nil2_commutator(x, y)));
    CHECK(nil2_commutator(nil2_op(x, y), z) == nil2_op(nil2_commutator(x, z), nil2_commutator(y, z)));
  }
}

TEST_CASE("powers") {
  const Nil2Element x = nil2_op(gen(2, 1), gen(2, 0));
  Nil2Element acc(2);
  for (int k = 1; k <= 5; ++k) {
    acc = nil2_op(acc, x);
    CHECK(nil2_pow(x, k) == acc);
    CHECK(nil2_pow(x, -k) == nil2_inv(acc));
  }
  CHECK(nil2_pow(x, 0).is_identity());
}

TEST_CASE("commutator indices enumerate pairs lexicographically") {
  CHECK(commutator_count(4) == 6);
  CHECK(commutator_index(0, 1, 4) == 0);
  CHECK(commutator_index(0, 3, 4) == 2);
  CHECK(commutator_index(1, 2, 4) == 3);
  CHECK(commutator_index(2, 3, 4) == 5);
}
