#include "xq/sphere.hpp"

#include <algorithm>
#include <stdexcept>

#include "xq/monoid.hpp"

namespace xq {

namespace {

// Integers in [-range, range], ascending.
std::vector<Integer> symmetric_range(std::size_t range) {
  std::vector<Integer> out;
  const long r = static_cast<long>(range);
  for (long v = -r; v <= r; ++v) out.push_back(Integer(v));
  return out;
}

}  // namespace

ReducedQuadraticComplex4 build_sphere_D() {
  Group d2 = Group::free_nil2(1);
  d2.with_names({"e"});
  Group d3 = Group::free_abelian(1);
  d3.with_names({"ω(e⊗e)"});
  ReducedQuadraticModule rqm(GroupHom::zero(d3, d2), {{unit_vector(1, 0)}});
  return as_complex_under_itself(rqm);
}

ReducedQuadraticComplex4 build_cylinder_Q() {
  Group q2 = Group::free_nil2(3);
  q2.with_names({"e", "e'", "e''"});
  const Element e = q2.generator(0), e1 = q2.generator(1), e2 = q2.generator(2);
  const Element boundary = q2.op(q2.op(q2.inv(e), e1), e2);
  Tensor form = Tensor::basis(3, 1, 2) + Tensor::basis(3, 2, 1);
  ReducedQuadraticComplex4 built =
      build_free_rqc4(q2, {Cell3{"e3", boundary}}, {Cell4{"e4", {Integer(0)}, form}});

  const ReducedQuadraticComplex4 d = build_sphere_D();
  UnderStructure under{d.rqm, GroupHom(d.q2(), built.q2(), {e}),
                       GroupHom(d.q3(), built.q3(),
                                {unit_vector(built.q3().rank(), omega_symbol_index(1, 3, 0, 0))})};
  return ReducedQuadraticComplex4(built.rqm, built.d4, std::move(under));
}

HomologyConstraints solve_homology_constraints(std::size_t range) {
  if (range < 1) throw std::invalid_argument("range must be at least 1");
  HomologyConstraints out;
  for (const Integer& a : symmetric_range(range))
    for (const Integer& b : symmetric_range(range)) {
      if (2 * a * (1 - a) != 0 || 2 * b * (1 - b) != 0) continue;
      out.solutions.push_back({a, b, Integer(a + b - 2 * a * b)});
    }
  out.certificate = {
      "Z has no zero divisors and 2 != 0, so 2a(1 - a) = 0 forces a = 0 or 1 - a = 0, "
      "i.e. a in {0, 1}; likewise b in {0, 1}.",
      "k = a + b - 2ab is then determined: (0,0) -> 0, (0,1) -> 1, (1,0) -> 1, (1,1) -> 0.",
      "The search over |a|, |b| <= " + std::to_string(range) + " finds exactly these four.",
  };
  return out;
}

std::vector<HomologySolution> intersection_form_solutions(std::size_t range) {
  const Tensor form = Tensor::basis(2, 0, 1) + Tensor::basis(2, 1, 0);
  std::vector<HomologySolution> out;
  for (const Integer& a : symmetric_range(range))
    for (const Integer& b : symmetric_range(range)) {
      // Columns are the images of e' and e'' = (e' + e'') - e'.
      const IntMatrix h2 = {{a, Integer(1 - a)}, {b, Integer(1 - b)}};
      const Tensor image = tensor_induced(h2, form);
      if (image.at(0, 0) != 0 || image.at(1, 1) != 0 || image.at(0, 1) != image.at(1, 0)) continue;
      out.push_back({a, b, image.at(0, 1)});
    }
  return out;
}

QCMorphism morphism_to_sphere(const ReducedQuadraticComplex4& q, const ReducedQuadraticComplex4& d,
                              const std::vector<Element>& g2_images,
                              const std::map<std::size_t, IntVector>& cell_images) {
  const GroupHom g2(q.q2(), d.q2(), g2_images);
  IntMatrix gab(d.q2().rank(), zero_vector(q.q2().rank()));
  for (std::size_t i = 0; i < q.q2().rank(); ++i) {
    const IntVector c = d.q2().abelianize(g2.image(i));
    for (std::size_t r = 0; r < c.size(); ++r) gab[r][i] = c[r];
  }
  const std::size_t n = q.q2().rank();
  std::vector<Element> g3_images;
  for (std::size_t k = 0; k < q.q3().rank(); ++k) {
    if (auto it = cell_images.find(k); it != cell_images.end()) {
      g3_images.push_back(it->second);
      continue;
    }
    std::optional<IntVector> forced;
    const IntVector unit = unit_vector(q.q3().rank(), k);
    for (std::size_t i = 0; i < n && !forced; ++i)
      for (std::size_t j = 0; j < n && !forced; ++j)
        if (q.rqm.omega[i][j] == unit)
          forced = d.rqm.omega_of(tensor_induced(gab, Tensor::basis(n, i, j)));
    if (!forced)
      throw std::logic_error("the image of " + q.q3().generator_name(k) +
                             " is neither given nor forced by omega-compatibility");
    g3_images.push_back(*forced);
  }
  return {g2, GroupHom(q.q3(), d.q3(), std::move(g3_images)), GroupHom::zero(q.q4(), d.q4())};
}

QCMorphism retraction_candidate(const ReducedQuadraticComplex4& q, const ReducedQuadraticComplex4& d,
                                const Integer& a, const Integer& b, const Integer& r) {
  const Group& t = d.q2();
  const Element e = t.generator(0);
  return morphism_to_sphere(q, d, {e, t.pow(e, a), t.pow(e, b)}, {{0, IntVector{r}}});
}

std::vector<Retraction> enumerate_retractions(const ReducedQuadraticComplex4& q,
                                              const ReducedQuadraticComplex4& d,
                                              std::size_t ab_range, std::size_t r_bound) {
  if (ab_range < 1 || r_bound < 1) throw std::invalid_argument("bounds must be at least 1");
  SamplingOptions opts;
  opts.depth = 0;
  std::vector<Retraction> out;
  for (const Integer& a : symmetric_range(ab_range))
    for (const Integer& b : symmetric_range(ab_range))
      for (const Integer& r : symmetric_range(r_bound)) {
        QCMorphism g = retraction_candidate(q, d, a, b, r);
        if (qcm_check(g, q, d, opts).passed()) out.push_back({a, b, r, std::move(g)});
      }
  return out;
}

Classification classify_retractions(std::vector<Retraction> retractions,
                                    const ReducedQuadraticComplex4& q,
                                    const ReducedQuadraticComplex4& d, std::size_t bound) {
  Classification out;
  out.retractions = std::move(retractions);
  const auto& rs = out.retractions;

  for (std::size_t k = 0; k < rs.size(); ++k) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (rq_homotopic(rs[cls.representative].map, rs[k].map, q, d, bound).witness) {
        cls.members.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({rs[k].a, rs[k].b, k, {k}});
  }

  for (auto& cls : out.classes) {
    for (std::size_t k : cls.members)
      if (rs[k].r == 0) {
        cls.representative = k;
        break;
      }
    for (std::size_t k : cls.members) {
      auto found = rq_homotopic(rs[cls.representative].map, rs[k].map, q, d, bound);
      if (!found.witness)
        throw std::logic_error("homotopy classes are not transitive: " + found.obstruction);
      out.witnesses.push_back({cls.representative, k, std::move(*found.witness)});
    }
  }
  for (std::size_t i = 0; i < out.classes.size(); ++i)
    for (std::size_t j = i + 1; j < out.classes.size(); ++j) {
      const std::size_t a = out.classes[i].representative, b = out.classes[j].representative;
      auto found = rq_homotopic(rs[a].map, rs[b].map, q, d, bound);
      if (found.witness) throw std::logic_error("distinct classes turned out homotopic");
      out.obstructions.push_back({a, b, found.obstruction});
    }
  return out;
}

const std::vector<Axiom>& axiom_manifest() {
  static const std::vector<Axiom> axioms = {
      {"pi4_S2", "π₄(S²) = Z₂"},
      {"pi4_S2xS2", "π₄(S²×S²) = Z₂ ⊕ Z₂"},
      {"free_action",
       "π₄(S²) acts freely on [Z, S²]^D (Whitehead products of π₃(S²) and π₂(S²) vanish)"},
      {"product_split", "[S²×S², S²×S²]^D = [S²×S², S²]^D × [S²×S², S²]^D"},
      {"mapping_cylinder",
       "[Z, S²]^D = [S²×S², S²]^D for the mapping cylinder Z of the comultiplication S² → S² ∨ S²"},
      {"orbits_are_retractions",
       "orbits of π₄(S²) on [Z, S²]^D correspond to homotopy classes under D of retractions Q → D"},
      {"identity_bimodule_action", "I acts as the identity on Z₂ ⊕ Z₂ from both sides"},
  };
  return axioms;
}

SelfmapCount assemble_selfmap_count(std::size_t classes) {
  SelfmapCount out;
  const Integer pi4 = 2;
  const Integer per_factor = Integer(static_cast<unsigned long>(classes)) * pi4;
  out.count = per_factor * per_factor;
  out.monoid_size = Integer(static_cast<unsigned long>(mbar_elements().size()));
  out.consistent = classes == 2 && out.count == out.monoid_size;
  out.derivation = {
      "homotopy classes of retractions Q → D: " + std::to_string(classes) + " (computed)",
      "orbits of π₄(S²) on [Z, S²]^D: " + std::to_string(classes) + " (orbits_are_retractions)",
      "|[S²×S², S²]^D| = " + to_string(per_factor) + " = " + std::to_string(classes) +
          " · |π₄(S²)| (free_action, pi4_S2, mapping_cylinder)",
      "|[S²×S², S²×S²]^D| = " + to_string(per_factor) + "² = " + to_string(out.count) +
          " (product_split)",
      "|Mbar| = |M| · |Z₂ ⊕ Z₂| = 4 · 4 = " + to_string(out.monoid_size),
  };
  if (!out.consistent)
    out.derivation.push_back("inconsistent: the classification requires exactly 2 classes and a count equal to |Mbar|");
  return out;
}

}  // namespace xq
