#include "doctest.h"

#include "xq/crossed.hpp"

using namespace xq;

namespace {

SamplingOptions opts(std::size_t depth = 200) {
  SamplingOptions o;
  o.depth = depth;
  return o;
}

PreCrossedModule zero_module(std::size_t rank) {
  const Group m1 = Group::free_abelian(1);
  const Group m2 = Group::free_nil2(rank);
  return PreCrossedModule(GroupHom::zero(m2, m1), GroupAction::trivial(m1, m2));
}

// 0 -> Z --0--> Z --0--> Z, trivial actions.
CrossedComplex3 line_complex() {
  const Group m1 = Group::free_abelian(1), m2 = Group::free_abelian(1), m3 = Group::free_abelian(1);
  return {PreCrossedModule(GroupHom::zero(m2, m1), GroupAction::trivial(m1, m2)), GroupHom::zero(m3, m2),
          GroupAction::trivial(m1, m3), {}};
}

// Z --1--> Z --0--> Z: the degree-2 generator bounds.
CrossedComplex3 bounding_complex() {
  const Group m1 = Group::free_abelian(1), m2 = Group::free_abelian(1), m3 = Group::free_abelian(1);
  return {PreCrossedModule(GroupHom::zero(m2, m1), GroupAction::trivial(m1, m2)),
          GroupHom(m3, m2, {IntVector{1}}), GroupAction::trivial(m1, m3), {}};
}

Xc3Morphism scaled(const CrossedComplex3& x, long k2, long k3) {
  return {GroupHom::identity(x.m1()), GroupHom(x.m2(), x.m2(), {IntVector{Integer(k2)}}),
          GroupHom(x.m3(), x.m3(), {IntVector{Integer(k3)}})};
}

}  // namespace

TEST_CASE("Peiffer commutator <e, e'> with d = 0 is the basic commutator") {
  const PreCrossedModule m = zero_module(2);
  const Element p = peiffer_commutator(m, m.m2().generator(0), m.m2().generator(1));
  CHECK(std::get<Nil2Element>(p).comm() == IntVector{1});
  CHECK(std::get<Nil2Element>(p).base() == IntVector{0, 0});
}

TEST_CASE("d = 0 on a free nil(2)-group is pre-crossed but not crossed") {
  const PreCrossedModule m = zero_module(2);
  CHECK(check_precrossed(m, opts()).passed());
  const Report r = check_crossed(m, opts());
  CHECK_FALSE(r.passed());
  const CheckResult* c = r.find("peiffer.generators");
  REQUIRE(c);
  CHECK_FALSE(c->passed);
  CHECK(c->witness.has_value());
}

TEST_CASE("the identity of a group with conjugation is a crossed module") {
  for (const Group& g : {Group::free(2), Group::free_nil2(3), Group::free_abelian(2)}) {
    const PreCrossedModule m(GroupHom::identity(g), GroupAction::conjugation(g));
    const Report r = check_crossed(m, opts());
    CHECK(r.passed());
    Rng rng(1);
    for (int k = 0; k < 50; ++k) {
      const Element x = g.random_element(rng, 5), y = g.random_element(rng, 5);
      CHECK(g.is_identity(peiffer_commutator(m, x, y)));
    }
  }
}

TEST_CASE("the Peiffer map w sends e (x) e' to the commutator (e, e')") {
  const PreCrossedModule m = zero_module(2);
  const Element w = peiffer_map_w(m, Tensor::basis(2, 0, 1));
  CHECK(m.m2().equal(w, m.m2().commutator(m.m2().generator(0), m.m2().generator(1))));
  // 2(e, e') + (e', e) = (e, e')
  const Tensor t = Tensor::basis(2, 0, 1) + Tensor::basis(2, 1, 0) + Tensor::basis(2, 0, 1);
  CHECK(m.m2().equal(peiffer_map_w(m, t), w));
}

TEST_CASE("crossed complexes pass their axioms") {
  CHECK(xc3_check(line_complex(), opts()).passed());
  CHECK(xc3_check(bounding_complex(), opts()).passed());
}

TEST_CASE("no homotopy when -f2 + g2 is not a boundary") {
  const CrossedComplex3 x = line_complex();
  const Xc3Morphism f = scaled(x, 1, 1), g = scaled(x, 2, 1);
  REQUIRE(xc3_morphism_check(f, x, x, opts()).passed());
  REQUIRE(xc3_morphism_check(g, x, x, opts()).passed());
  const auto found = xc3_homotopic(f, g, x, x, 10);
  CHECK_FALSE(found.witness.has_value());
  CHECK(found.complete);
  CHECK_FALSE(found.obstruction.empty());
}

TEST_CASE("homotopy of crossed complexes: reflexive, symmetric, transitive") {
  const CrossedComplex3 x = bounding_complex();
  std::vector<Xc3Morphism> family;
  for (long k = -2; k <= 2; ++k) family.push_back(scaled(x, k, k));
  for (const auto& f : family) REQUIRE(xc3_morphism_check(f, x, x, opts()).passed());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto refl = xc3_homotopic(family[i], family[i], x, x, 10);
    REQUIRE(refl.witness);
    CHECK(verify_xc3_homotopy(family[i], family[i], x, x, *refl.witness, opts()).passed());
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto ij = xc3_homotopic(family[i], family[j], x, x, 10);
      const auto ji = xc3_homotopic(family[j], family[i], x, x, 10);
      REQUIRE(ij.witness);
      REQUIRE(ji.witness);
      CHECK(verify_xc3_homotopy(family[i], family[j], x, x, *ij.witness, opts()).passed());
      // Symmetry by negation.
      Xc3Homotopy neg{{xq::neg(ij.witness->alpha[0])}};
      CHECK(verify_xc3_homotopy(family[j], family[i], x, x, neg, opts()).passed());
      for (std::size_t k = 0; k < family.size(); ++k) {
        const auto jk = xc3_homotopic(family[j], family[k], x, x, 10);
        REQUIRE(jk.witness);
        Xc3Homotopy sum{{add(ij.witness->alpha[0], jk.witness->alpha[0])}};
        CHECK(verify_xc3_homotopy(family[i], family[k], x, x, sum, opts(50)).passed());
      }
    }
  }
}

TEST_CASE("a wrong witness is rejected") {
  const CrossedComplex3 x = bounding_complex();
  const Xc3Morphism f = scaled(x, 0, 0), g = scaled(x, 3, 3);
  const auto found = xc3_homotopic(f, g, x, x, 10);
  REQUIRE(found.witness);
  CHECK(found.witness->alpha[0] == IntVector{3});
  CHECK_FALSE(verify_xc3_homotopy(f, g, x, x, Xc3Homotopy{{IntVector{2}}}, opts()).passed());
}
