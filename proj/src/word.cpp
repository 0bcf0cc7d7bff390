#include "xq/word.hpp"

#include <stdexcept>

namespace xq {

Word word_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return word_reduce(out);
}

Word word_from_powers(const std::vector<std::pair<std::size_t, long>>& powers) {
  Word out;
  for (const auto& [gen, exp] : powers) {
    const int sign = exp < 0 ? -1 : 1;
    for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) out.push_back({gen, sign});
  }
  return word_reduce(out);
}

std::vector<long> word_exponent_sums(const Word& w, std::size_t rank) {
  std::vector<long> sums(rank, 0);
  for (const Letter& l : w) {
    if (l.gen >= rank) throw std::out_of_range("generator index out of range");
    sums[l.gen] += l.sign;
  }
  return sums;
}

}  // namespace xq
