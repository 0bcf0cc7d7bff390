#pragma once

#include <cstddef>
#include <vector>

namespace xq {

/// A generator or its inverse.
struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Words in the free group, read left to right (additive notation: x + y).
using Word = std::vector<Letter>;

/// The unique freely reduced word equal to `w`.
Word word_reduce(const Word& w);

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);

/// Builds a word from (generator, exponent) pairs; exponents may be negative
/// or zero and are split into signed letters.
Word word_from_powers(const std::vector<std::pair<std::size_t, long>>& powers);

/// Exponent sum of each generator (abelianization of the free group).
std::vector<long> word_exponent_sums(const Word& w, std::size_t rank);

}  // namespace xq
