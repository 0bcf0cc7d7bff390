#pragma once

// Reference normal form for the free nil(2)-group by plain word rewriting.
//
// Single letters g_i^{+-1} are bubble-sorted by generator. Each swap of an
// out-of-order adjacent pair g_j^s g_i^t (i < j) uses x + y = y + x + (x, y)
// with (g_j^s, g_i^t) = -s t (g_i, g_j), the new commutator being central.
// Commutators of commutators never arise, so triple commutators vanish by
// construction. Adjacent inverse letters of one generator cancel.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

struct Letter {
  std::size_t gen;
  int sign;
};

struct Collected {
  std::vector<long> base;                            // exponent of each generator
  std::map<std::pair<std::size_t, std::size_t>, long> comm;  // (i, j), i < j
};

inline Collected rewrite(std::vector<Letter> w, std::size_t rank) {
  Collected out;
  out.base.assign(rank, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const Letter x = w[k], y = w[k + 1];
      if (x.gen == y.gen && x.sign == -y.sign) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
      if (x.gen > y.gen) {
        out.comm[{y.gen, x.gen}] -= static_cast<long>(x.sign) * y.sign;
        std::swap(w[k], w[k + 1]);
        changed = true;
      }
    }
  }
  for (const Letter& l : w) out.base[l.gen] += l.sign;
  return out;
}

}  // namespace oracle
