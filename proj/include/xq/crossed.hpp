#pragma once

// Pre-crossed modules, crossed modules and 3-dimensional crossed complexes
// over groups, with exact axiom checkers and a homotopy decision procedure.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xq/action.hpp"
#include "xq/group.hpp"
#include "xq/report.hpp"
#include "xq/tensor.hpp"

namespace xq {

/// d: M2 -> M1 with a right action of M1 on M2.
struct PreCrossedModule {
  PreCrossedModule(GroupHom d, GroupAction action);

  const Group& m1() const { return d.target(); }
  const Group& m2() const { return d.source(); }

  GroupHom d;
  GroupAction action;
};

/// <x, y> = -x - y + x + y^d(x)
Element peiffer_commutator(const PreCrossedModule& m, const Element& x, const Element& y);

/// Action axioms and equivariance d(x^m) = -m + d(x) + m.
Report check_precrossed(const PreCrossedModule& m, const SamplingOptions& opts);
/// check_precrossed plus triviality of Peiffer commutators, exact on
/// generator pairs and sampled on `opts.depth` random products.
Report check_crossed(const PreCrossedModule& m, const SamplingOptions& opts);

/// Peiffer commutator map on C (x) C, C = M2^ab, for a free nil(2) M2:
/// w(c_i (x) c_j) = <g_i, g_j>, extended additively in row-major order.
Element peiffer_map_w(const PreCrossedModule& m, const Tensor& t);

/// M3 -> M2 -> M1 with M1 acting on M2 and on the abelian group M3.
/// `under` lists the images in M2 of the generators of the object the
/// complex lives under (homotopies must vanish there).
struct CrossedComplex3 {
  PreCrossedModule module;
  GroupHom d3;
  GroupAction action3;
  std::vector<Element> under;

  const Group& m1() const { return module.m1(); }
  const Group& m2() const { return module.m2(); }
  const Group& m3() const { return d3.source(); }
  const GroupHom& d2() const { return module.d; }
};

/// (1) d2 is a crossed module, (2) M3 is abelian, (3) d2 d3 = 0 and
/// im(d2) acts trivially on M3 (plus d3 equivariance).
Report xc3_check(const CrossedComplex3& x, const SamplingOptions& opts);

struct Xc3Morphism {
  GroupHom f1, f2, f3;
};

Report xc3_morphism_check(const Xc3Morphism& f, const CrossedComplex3& x,
                          const CrossedComplex3& y, const SamplingOptions& opts);

/// alpha: M2 -> M3', given on the generators of M2.
struct Xc3Homotopy {
  std::vector<IntVector> alpha;
};

/// Outcome of a homotopy search. `witness` is set iff a homotopy was found;
/// otherwise `obstruction` explains why none exists (or none was found
/// within the enumeration bound, when `complete` is false).
template <class Witness>
struct HomotopySearch {
  std::optional<Witness> witness;
  std::string obstruction;
  std::string method;
  bool complete = true;
  std::optional<std::size_t> failing_generator;
};

/// Searches for alpha with -f2 + g2 = d3' alpha, -f3 + g3 = alpha d3,
/// alpha f1-equivariant and zero on `x.under`. Exact (linear algebra over Z)
/// when M2' admits a linear chart, otherwise enumerates alpha coordinates in
/// [-bound, bound] in lexicographic order.
HomotopySearch<Xc3Homotopy> xc3_homotopic(const Xc3Morphism& f, const Xc3Morphism& g,
                                          const CrossedComplex3& x, const CrossedComplex3& y,
                                          std::size_t bound);

/// Direct re-evaluation of every homotopy equation on generators and samples.
Report verify_xc3_homotopy(const Xc3Morphism& f, const Xc3Morphism& g, const CrossedComplex3& x,
                           const CrossedComplex3& y, const Xc3Homotopy& h,
                           const SamplingOptions& opts);

}  // namespace xq
