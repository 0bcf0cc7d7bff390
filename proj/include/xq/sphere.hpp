#pragma once

// Self-maps of S^2 x S^2 fixing the diagonal: the sphere module D, the
// complex Q of the mapping cylinder of the comultiplication, retractions
// Q -> D and their homotopy classes, and the final count.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "xq/quadratic.hpp"
#include "xq/rq_homotopy.hpp"

namespace xq {

/// D2 = Z<e>, D3 = Z<omega(e (x) e)>, d3 = 0, omega an isomorphism, D4 = 0;
/// D lives under itself via the identity.
ReducedQuadraticComplex4 build_sphere_D();

/// Q2 free nil(2) on e, e', e''; Q3 on e3 and the nine omega-symbols;
/// Q4 = Z<e4>; d3(e3) = -e + e' + e'', d4(e4) = omega(e' (x) e'' + e'' (x) e');
/// under D via e -> e and omega(e (x) e) -> omega(e (x) e).
ReducedQuadraticComplex4 build_cylinder_Q();

struct HomologySolution {
  Integer a, b, k;
  friend bool operator==(const HomologySolution&, const HomologySolution&) = default;
};

struct HomologyConstraints {
  std::vector<HomologySolution> solutions;  // lexicographic in (a, b)
  std::vector<std::string> certificate;
};

/// Integer solutions with |a|, |b| <= range of 2a(1 - a) = 0, 2b(1 - b) = 0,
/// a + b - 2ab = k.
HomologyConstraints solve_homology_constraints(std::size_t range);

/// Same set, found by pushing the intersection form e' (x) e'' + e'' (x) e'
/// through H2(f) = [[a, 1 - a], [b, 1 - b]] and asking for a multiple of it.
std::vector<HomologySolution> intersection_form_solutions(std::size_t range);

/// g: Q -> D given on Q2 generators, on the 3-cells of Q3 (by generator
/// index), and forced on omega-symbols by omega-compatibility; g4 = 0.
/// Throws std::logic_error if some generator of Q3 is neither.
QCMorphism morphism_to_sphere(const ReducedQuadraticComplex4& q, const ReducedQuadraticComplex4& d,
                              const std::vector<Element>& g2_images,
                              const std::map<std::size_t, IntVector>& cell_images);

/// Candidate g2(e) = e, g2(e') = a e, g2(e'') = b e, g3(e3) = r omega(e (x) e).
QCMorphism retraction_candidate(const ReducedQuadraticComplex4& q,
                                const ReducedQuadraticComplex4& d, const Integer& a,
                                const Integer& b, const Integer& r);

struct Retraction {
  Integer a, b, r;
  QCMorphism map;
};

/// All candidates with |a|, |b| <= ab_range and |r| <= r_bound that pass
/// qcm_check, in lexicographic (a, b, r) order.
std::vector<Retraction> enumerate_retractions(const ReducedQuadraticComplex4& q,
                                              const ReducedQuadraticComplex4& d,
                                              std::size_t ab_range, std::size_t r_bound);

struct RetractionClass {
  Integer a, b;                      // common values on e', e''
  std::size_t representative;        // index into the retraction list
  std::vector<std::size_t> members;  // indices, ascending
};

struct ClassWitness {
  std::size_t from, to;  // representative and member
  QCHomotopy homotopy;
};

struct ClassObstruction {
  std::size_t from, to;  // representatives of two different classes
  std::string reason;
};

struct Classification {
  std::vector<Retraction> retractions;
  std::vector<RetractionClass> classes;
  std::vector<ClassWitness> witnesses;
  std::vector<ClassObstruction> obstructions;
};

/// Partitions retractions into homotopy classes under D. Representatives are
/// chosen with r = 0 when possible; every member gets a verified witness from
/// its representative and every pair of classes an obstruction.
Classification classify_retractions(std::vector<Retraction> retractions,
                                    const ReducedQuadraticComplex4& q,
                                    const ReducedQuadraticComplex4& d, std::size_t bound);

/// Topological input the count relies on, trusted rather than computed.
struct Axiom {
  std::string id;
  std::string statement;
};

const std::vector<Axiom>& axiom_manifest();

struct SelfmapCount {
  Integer count;
  Integer monoid_size;
  bool consistent = false;  // classes == 2 and count == |Mbar|
  std::vector<std::string> derivation;
};

/// (classes * |pi4(S^2)|)^2, cross-checked against |Mbar|.
SelfmapCount assemble_selfmap_count(std::size_t classes);

}  // namespace xq
