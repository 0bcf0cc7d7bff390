#pragma once

// Quadratic modules, reduced quadratic modules and 4-dimensional reduced
// quadratic complexes, with axiom checkers and morphisms.
//
// C is always the abelianization of Q2 in generator coordinates, and omega is
// stored on the basis tensors c_i (x) c_j. Q3 and Q4 must be vector-represented
// (abelian), which makes every homotopy question a linear one.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xq/action.hpp"
#include "xq/crossed.hpp"
#include "xq/group.hpp"
#include "xq/report.hpp"
#include "xq/tensor.hpp"

namespace xq {

/// omega[i][j] = omega(c_i (x) c_j), a vector of the omega target.
using OmegaTable = std::vector<std::vector<IntVector>>;

/// omega applied to a tensor, as a raw (unreduced) vector.
IntVector apply_omega(const OmegaTable& omega, std::size_t width, const Tensor& t);

/// omega: C (x) C -> Q3, d3: Q3 -> Q2 with Q2 a free nil(2)-group.
struct ReducedQuadraticModule {
  ReducedQuadraticModule(GroupHom d3, OmegaTable omega);

  const Group& q2() const { return d3.target(); }
  const Group& q3() const { return d3.source(); }
  IntVector omega_of(const Tensor& t) const;
  /// {x} in C.
  IntVector cls(const Element& x) const { return q2().abelianize(x); }

  GroupHom d3;
  OmegaTable omega;
};

/// The structure map q: D -> Q of a complex living under D.
struct UnderStructure {
  ReducedQuadraticModule base;
  GroupHom q2;  // D2 -> Q2
  GroupHom q3;  // D3 -> Q3
};

struct ReducedQuadraticComplex4 {
  ReducedQuadraticComplex4(ReducedQuadraticModule rqm, GroupHom d4,
                           std::optional<UnderStructure> under = std::nullopt);

  const Group& q2() const { return rqm.q2(); }
  const Group& q3() const { return rqm.q3(); }
  const Group& q4() const { return d4.source(); }
  const GroupHom& d3() const { return rqm.d3; }

  ReducedQuadraticModule rqm;
  GroupHom d4;
  std::optional<UnderStructure> under;
};

/// Q viewed as a complex with Q4 = 0, living under itself via the identity.
ReducedQuadraticComplex4 as_complex_under_itself(const ReducedQuadraticModule& q);

/// Full quadratic module: nil(2)-module d2: Q2 -> Q1, d3: Q3 -> Q2, omega and
/// an action of Q1 on Q3.
struct QuadraticModule {
  PreCrossedModule module;
  GroupHom d3;
  GroupAction action3;
  OmegaTable omega;

  const Group& q1() const { return module.m1(); }
  const Group& q2() const { return module.m2(); }
  const Group& q3() const { return d3.source(); }
};

/// Axioms (1)-(4): Q2 is nil(2) with C = Q2^ab; d3 omega({x} (x) {y}) = (x, y);
/// omega({d3 q} (x) {x} + {x} (x) {d3 q}) = 0; (p, q) = omega({d3 p} (x) {d3 q}).
Report rqm_check(const ReducedQuadraticModule& q, const SamplingOptions& opts);
/// rqm_check plus Q4 abelian, d3 d4 = 0 and compatibility of the under-map.
Report rqc4_check(const ReducedQuadraticComplex4& q, const SamplingOptions& opts);
/// Axioms (1)-(4) of quadratic modules over the group Q1.
Report qm_check(const QuadraticModule& q, const SamplingOptions& opts);

/// Morphism of reduced quadratic complexes.
struct QCMorphism {
  GroupHom f2, f3, f4;
};

QCMorphism identity_morphism(const ReducedQuadraticComplex4& q);

/// f2 d3 = d3' f3, f3 d4 = d4' f4, f3 omega = omega'(f2^ab (x) f2^ab), and
/// f q = q' on the under-object.
Report qcm_check(const QCMorphism& f, const ReducedQuadraticComplex4& source,
                 const ReducedQuadraticComplex4& target, const SamplingOptions& opts);

/// Free construction: Q3 is generated by named 3-cells followed by the symbols
/// omega(c_i (x) c_j) (row-major), modulo the relations that axioms (3) and
/// (4) impose; Q4 is free abelian on the 4-cells. Throws std::logic_error if
/// the resulting Q3 would not be abelian.
struct Cell3 {
  std::string name;
  Element boundary;  // in Q2
};

struct Cell4 {
  std::string name;
  IntVector cells;  // coefficients on the 3-cells
  Tensor omega_part;
};

ReducedQuadraticComplex4 build_free_rqc4(const Group& q2, const std::vector<Cell3>& cells3,
                                         const std::vector<Cell4>& cells4);

/// Index in a freely built Q3 of the symbol omega(c_i (x) c_j).
std::size_t omega_symbol_index(std::size_t cells3, std::size_t rank, std::size_t i, std::size_t j);

}  // namespace xq
