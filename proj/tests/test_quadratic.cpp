#include "doctest.h"

#include "xq/quadratic.hpp"
#include "xq/rq_homotopy.hpp"
#include "xq/sphere.hpp"

using namespace xq;

namespace {

SamplingOptions opts(std::size_t depth = 200) {
  SamplingOptions o;
  o.depth = depth;
  return o;
}

IntVector omega_ee(long r) { return IntVector{Integer(r)}; }

}  // namespace

TEST_CASE("the sphere module D passes every axiom") {
  const auto d = build_sphere_D();
  CHECK(d.d3().is_zero());
  const Report r = rqc4_check(d, opts());
  CHECK(r.passed());
}

TEST_CASE("the cylinder complex Q passes every axiom including d3 d4 = 0") {
  const auto q = build_cylinder_Q();
  const Report r = rqc4_check(q, opts());
  CHECK(r.passed());
  REQUIRE(r.find("d3d4.generators"));
  CHECK(r.find("d3d4.generators")->passed);
  CHECK(q.q3().rank() == 10);
  CHECK(q.q3().is_abelian());
}

TEST_CASE("omega = 0 over a rank-2 nil(2)-group violates d3 omega = commutator") {
  const Group q2 = Group::free_nil2(2), q3 = Group::free_abelian(1);
  const OmegaTable zero(2, std::vector<IntVector>(2, IntVector{0}));
  const ReducedQuadraticModule bad(GroupHom::zero(q3, q2), zero);
  const Report r = rqm_check(bad, opts());
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("2.generators"));
  CHECK_FALSE(r.find("2.generators")->passed);
}

TEST_CASE("a quadratic module over the trivial group") {
  const Group q1 = Group::free_abelian(0);
  Group q2 = Group::free_nil2(1);
  const Group q3 = Group::free_abelian(1);
  QuadraticModule qm{PreCrossedModule(GroupHom::zero(q2, q1), GroupAction::trivial(q1, q2)),
                     GroupHom::zero(q3, q2), GroupAction::trivial(q1, q3), {{IntVector{1}}}};
  CHECK(qm_check(qm, opts()).passed());
}

TEST_CASE("the retraction pr1 is a morphism; (a, b) = (1, 1) is not") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  CHECK(qcm_check(retraction_candidate(q, d, 1, 0, 0), q, d, opts()).passed());
  CHECK(qcm_check(identity_morphism(q), q, q, opts()).passed());

  const Report bad = qcm_check(retraction_candidate(q, d, 1, 1, 0), q, d, opts());
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.find("square.d3"));
  CHECK_FALSE(bad.find("square.d3")->passed);
  REQUIRE(bad.find("square.d4"));
  CHECK_FALSE(bad.find("square.d4")->passed);
}

TEST_CASE("witness alpha2(e') = r omega(e (x) e) within the (1, 0) family") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  const QCMorphism f = retraction_candidate(q, d, 1, 0, 0);
  for (long r = -10; r <= 10; ++r) {
    const QCMorphism g = retraction_candidate(q, d, 1, 0, r);
    const auto found = rq_homotopic(f, g, q, d, 10);
    REQUIRE(found.witness);
    const QCHomotopy& h = *found.witness;
    CHECK(h.alpha2 == std::vector<IntVector>{omega_ee(0), omega_ee(r), omega_ee(0)});
    CHECK(h.alpha3.is_zero());
    CHECK(verify_rq_homotopy(f, g, q, d, h, opts()).passed());
  }
}

TEST_CASE("the (0, 1) family uses alpha2(e'') instead") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  const auto found = rq_homotopic(retraction_candidate(q, d, 0, 1, 0), retraction_candidate(q, d, 0, 1, 4), q, d, 10);
  REQUIRE(found.witness);
  CHECK(found.witness->alpha2 == std::vector<IntVector>{omega_ee(0), omega_ee(0), omega_ee(4)});
}

TEST_CASE("pr1 and pr2 are not homotopic") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  const auto found =
      rq_homotopic(retraction_candidate(q, d, 1, 0, 0), retraction_candidate(q, d, 0, 1, 0), q, d, 10);
  CHECK_FALSE(found.witness);
  CHECK(found.complete);
  CHECK(found.obstruction.find("∂₃ = 0 forces f₂ = g₂") != std::string::npos);
}

TEST_CASE("with f2 = g2, alpha2 is additive") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  const QCMorphism f = retraction_candidate(q, d, 1, 0, 0), g = retraction_candidate(q, d, 1, 0, 5);
  const std::vector<IntVector> values = {omega_ee(2), omega_ee(-3), omega_ee(7)};
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    const Element x = q.q2().random_element(rng, 6), y = q.q2().random_element(rng, 6);
    CHECK(d.q3().equal(alpha2_extend(values, f, g, d, q.q2().op(x, y)),
                       add(alpha2_extend(values, f, g, d, x), alpha2_extend(values, f, g, d, y))));
  }
}

TEST_CASE("the extension rule is independent of bracketing") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  // f2 != g2 here, so the correction term is active.
  const QCMorphism f = retraction_candidate(q, d, 1, 0, 0), g = retraction_candidate(q, d, 0, 1, 0);
  const std::vector<IntVector> values = {omega_ee(1), omega_ee(-2), omega_ee(3)};
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Word u = q.q2().to_word(q.q2().random_element(rng, 4));
    const Word v = q.q2().to_word(q.q2().random_element(rng, 4));
    const Word w = q.q2().to_word(q.q2().random_element(rng, 4));
    const IntVector left = alpha2_on_word(values, f, g, d, word_concat(word_concat(u, v), w));
    const IntVector right = alpha2_on_word(values, f, g, d, word_concat(u, word_concat(v, w)));
    CHECK(d.q3().equal(left, right));
    // Inserting a cancelling pair does not change the value.
    Word padded = u;
    padded.push_back({1, 1});
    padded.push_back({1, -1});
    CHECK(d.q3().equal(alpha2_on_word(values, f, g, d, padded), alpha2_on_word(values, f, g, d, u)));
  }
}

TEST_CASE("reversed and tampered witnesses") {
  const auto q = build_cylinder_Q(), d = build_sphere_D();
  const QCMorphism f = retraction_candidate(q, d, 1, 0, 0), g = retraction_candidate(q, d, 1, 0, 3);
  const auto found = rq_homotopic(f, g, q, d, 10);
  REQUIRE(found.witness);
  const QCHomotopy back = reverse_homotopy(*found.witness, f, g);
  CHECK(verify_rq_homotopy(g, f, q, d, back, opts()).passed());

  QCHomotopy tampered = *found.witness;
  tampered.alpha2[1] = omega_ee(2);
  CHECK_FALSE(verify_rq_homotopy(f, g, q, d, tampered, opts()).passed());
  tampered = *found.witness;
  tampered.alpha2[0] = omega_ee(1);  // must vanish on the image of D
  const Report r = verify_rq_homotopy(f, g, q, d, tampered, opts());
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("vanish.alpha2")->passed);

  CHECK_THROWS_AS(reverse_homotopy(*found.witness, f, retraction_candidate(q, d, 0, 1, 0)),
                  std::invalid_argument);
}

TEST_CASE("the free construction on one 2-cell and no higher cells") {
  Group q2 = Group::free_nil2(1);
  const auto built = build_free_rqc4(q2, {}, {});
  CHECK(built.q3().rank() == 1);
  CHECK(rqc4_check(built, opts()).passed());
  CHECK(omega_symbol_index(1, 3, 0, 0) == 1);
  CHECK(omega_symbol_index(1, 3, 2, 1) == 8);
}
