#include "doctest.h"

#include <set>
#include <tuple>

#include "xq/rq_homotopy.hpp"
#include "xq/sphere.hpp"

using namespace xq;

namespace {

using Triple = std::tuple<long, long, long>;

std::set<Triple> triples(const std::vector<HomologySolution>& s) {
  std::set<Triple> out;
  for (const auto& x : s) out.insert({x.a.get_si(), x.b.get_si(), x.k.get_si()});
  return out;
}

}  // namespace

TEST_CASE("D and Q as built") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  CHECK(d.d3().is_zero());
  CHECK(d.rqm.omega_of(Tensor::basis(1, 0, 0)) == IntVector{1});
  const Element e3 = q.q3().generator(0);
  CHECK(q.q2().abelianize(q.d3().apply(e3)) == IntVector{-1, 1, 1});
  CHECK(q.q2().is_identity(q.d3().apply(q.d4.apply(q.q4().generator(0)))));
  REQUIRE(q.under.has_value());
  CHECK(q.q2().equal(q.under->q2.image(0), q.q2().generator(0)));
}

TEST_CASE("homology constraints for range 5") {
  const auto hc = solve_homology_constraints(5);
  CHECK(triples(hc.solutions) == std::set<Triple>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(hc.certificate.empty());
  CHECK_THROWS_AS(solve_homology_constraints(0), std::invalid_argument);
}

TEST_CASE("the intersection-form route agrees with the constraint solver") {
  for (std::size_t range = 1; range <= 6; ++range)
    CHECK(triples(intersection_form_solutions(range)) == triples(solve_homology_constraints(range).solutions));
}

TEST_CASE("algebraic filtering keeps (a, b) = (1, 0) and (0, 1) only") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  const auto small = enumerate_retractions(q, d, 2, 1);
  REQUIRE(small.size() == 6);
  const std::vector<Triple> expected = {{0, 1, -1}, {0, 1, 0}, {0, 1, 1}, {1, 0, -1}, {1, 0, 0}, {1, 0, 1}};
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(Triple{small[k].a.get_si(), small[k].b.get_si(), small[k].r.get_si()} == expected[k]);

  // The surviving (a, b) are exactly the homology solutions with k = 1.
  std::set<std::pair<long, long>> ab, from_homology;
  for (const auto& r : enumerate_retractions(q, d, 3, 2)) ab.insert({r.a.get_si(), r.b.get_si()});
  for (const auto& s : solve_homology_constraints(3).solutions)
    if (s.a + s.b == 1) from_homology.insert({s.a.get_si(), s.b.get_si()});
  CHECK(ab == from_homology);
}

TEST_CASE("(0, 0) and (1, 1) candidates are rejected") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  SamplingOptions o;
  CHECK_FALSE(qcm_check(retraction_candidate(q, d, 0, 0, 0), q, d, o).passed());
  CHECK_FALSE(qcm_check(retraction_candidate(q, d, 1, 1, 0), q, d, o).passed());
}

TEST_CASE("g3 on omega symbols is forced by omega-compatibility") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  const QCMorphism g = retraction_candidate(q, d, 1, 0, 0);
  // omega(e' (x) e') maps to omega(e (x) e) under pr1, omega(e'' (x) e'') to 0.
  CHECK(std::get<IntVector>(g.f3.image(omega_symbol_index(1, 3, 1, 1))) == IntVector{1});
  CHECK(std::get<IntVector>(g.f3.image(omega_symbol_index(1, 3, 2, 2))) == IntVector{0});
  CHECK(std::get<IntVector>(g.f3.image(omega_symbol_index(1, 3, 0, 1))) == IntVector{1});
}

TEST_CASE("an undetermined omega-symbol image fails loudly") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  const Group& t = d.q2();
  // Only the 3-cell is given, so this succeeds; dropping it must throw.
  CHECK_NOTHROW(morphism_to_sphere(q, d, {t.generator(0), t.generator(0), t.identity()}, {{0, IntVector{0}}}));
  CHECK_THROWS_AS(morphism_to_sphere(q, d, {t.generator(0), t.generator(0), t.identity()}, {}), std::logic_error);
}

TEST_CASE("classification: two classes, witnesses and one obstruction") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  const Classification c = classify_retractions(enumerate_retractions(q, d, 3, 10), q, d, 10);
  REQUIRE(c.classes.size() == 2);
  std::set<std::pair<long, long>> ab;
  for (const auto& cls : c.classes) {
    ab.insert({cls.a.get_si(), cls.b.get_si()});
    CHECK(cls.members.size() == 21);
    CHECK(c.retractions[cls.representative].r == 0);
  }
  CHECK(ab == std::set<std::pair<long, long>>{{1, 0}, {0, 1}});
  CHECK(c.witnesses.size() == 42);
  REQUIRE(c.obstructions.size() == 1);
  CHECK(c.obstructions[0].reason.find("forces f₂ = g₂") != std::string::npos);
}

TEST_CASE("homotopy is an equivalence relation on the retraction family") {
  const auto d = build_sphere_D(), q = build_cylinder_Q();
  const auto family = enumerate_retractions(q, d, 2, 2);
  SamplingOptions o;
  o.depth = 30;
  for (const auto& f : family) {
    for (const auto& g : family) {
      const auto fg = rq_homotopic(f.map, g.map, q, d, 10);
      const auto gf = rq_homotopic(g.map, f.map, q, d, 10);
      CHECK(fg.witness.has_value() == gf.witness.has_value());
      CHECK(fg.witness.has_value() == (f.a == g.a && f.b == g.b));
      if (!fg.witness) continue;
      CHECK(verify_rq_homotopy(f.map, g.map, q, d, *fg.witness, o).passed());
      CHECK(verify_rq_homotopy(g.map, f.map, q, d, reverse_homotopy(*fg.witness, f.map, g.map), o).passed());
      for (const auto& h : family) {
        if (h.a != g.a || h.b != g.b) continue;
        const auto gh = rq_homotopic(g.map, h.map, q, d, 10);
        REQUIRE(gh.witness);
        std::vector<IntVector> alpha2;
        for (std::size_t i = 0; i < 3; ++i) alpha2.push_back(add(fg.witness->alpha2[i], gh.witness->alpha2[i]));
        const QCHomotopy composite{alpha2, GroupHom::zero(q.q3(), d.q4())};
        CHECK(verify_rq_homotopy(f.map, h.map, q, d, composite, o).passed());
      }
    }
  }
}

TEST_CASE("self-map count") {
  const SelfmapCount c = assemble_selfmap_count(2);
  CHECK(c.count == 16);
  CHECK(c.monoid_size == 16);
  CHECK(c.consistent);
  CHECK_FALSE(assemble_selfmap_count(3).consistent);
  CHECK(axiom_manifest().size() == 7);
}
