#pragma once

// Homotopies f ~ g of morphisms of reduced quadratic complexes under D:
//   -f2 + g2 = d3' alpha2
//   -f3 + g3 = d4' alpha3 + alpha2 d3
//   -f4 + g4 = alpha3 d4
// with alpha3: Q3 -> Q4' a homomorphism and alpha2: Q2 -> Q3' a function
// obeying alpha2(x + y) = alpha2 x + alpha2 y + omega'({-f2 x + g2 x} (x) {f2 y}),
// both vanishing on the image of D.

#include <vector>

#include "xq/crossed.hpp"
#include "xq/quadratic.hpp"

namespace xq {

struct QCHomotopy {
  std::vector<IntVector> alpha2;  // value on each generator of Q2, in Q3'
  GroupHom alpha3;
};

/// alpha2 on x, folding the extension rule left to right over the normal-form
/// word of x. Throws std::invalid_argument if a generator value is missing.
IntVector alpha2_extend(const std::vector<IntVector>& values, const QCMorphism& f,
                        const QCMorphism& g, const ReducedQuadraticComplex4& target,
                        const Element& x);
/// Same fold over an arbitrary word in the generators of Q2.
IntVector alpha2_on_word(const std::vector<IntVector>& values, const QCMorphism& f,
                         const QCMorphism& g, const ReducedQuadraticComplex4& target,
                         const Word& w);

/// Decides whether f ~ g. Q3' and Q4' are abelian, so the equations form an
/// integer linear system and the answer is exact for every `bound` (which is
/// only recorded). A found homotopy is canonicalized (alpha supported on
/// generators not killed by f2 where possible) and re-verified before return.
/// Throws std::invalid_argument for morphisms between mismatched structures.
HomotopySearch<QCHomotopy> rq_homotopic(const QCMorphism& f, const QCMorphism& g,
                                        const ReducedQuadraticComplex4& source,
                                        const ReducedQuadraticComplex4& target,
                                        std::size_t bound);

/// Evaluates every homotopy equation, the vanishing conditions and the
/// consistency of the extension rule, on generators and random elements.
Report verify_rq_homotopy(const QCMorphism& f, const QCMorphism& g,
                          const ReducedQuadraticComplex4& source,
                          const ReducedQuadraticComplex4& target, const QCHomotopy& h,
                          const SamplingOptions& opts);

/// g ~ f from f ~ g when f2 = g2 (the correction term vanishes, so negation
/// suffices). Throws std::invalid_argument otherwise.
QCHomotopy reverse_homotopy(const QCHomotopy& h, const QCMorphism& f, const QCMorphism& g);

}  // namespace xq
