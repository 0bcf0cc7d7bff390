#include "xq/crossed.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "xq/linearize.hpp"

namespace xq {

namespace {

void record(Report& rep, const std::string& id, const std::string& what,
            const std::optional<std::string>& witness, std::size_t sampled = 0) {
  rep.record(id, what, witness, sampled);
}

std::optional<std::string> hom_defect(const GroupHom& h, const std::string& name) {
  if (auto d = h.well_defined_defect()) return name + ": " + *d;
  return std::nullopt;
}

}  // namespace

PreCrossedModule::PreCrossedModule(GroupHom d_, GroupAction action_)
    : d(std::move(d_)), action(std::move(action_)) {
  if (!action.acting().same_descriptor(d.target()) || !action.acted().same_descriptor(d.source()))
    throw std::invalid_argument("the action must be of M1 = target(d) on M2 = source(d)");
}

Element peiffer_commutator(const PreCrossedModule& m, const Element& x, const Element& y) {
  const Group& g = m.m2();
  g.validate(x);
  g.validate(y);
  const Element yd = m.action.act(y, m.d.apply(x));
  return g.op(g.op(g.op(g.inv(x), g.inv(y)), x), yd);
}

Report check_precrossed(const PreCrossedModule& m, const SamplingOptions& opts) {
  Report rep("pre-crossed module");
  rep.sampling = opts;
  rep.merge(m.action.check(opts), "");
  record(rep, "d.homomorphism", "d is a well-defined homomorphism", hom_defect(m.d, "d"));

  const Group& g1 = m.m1();
  const Group& g2 = m.m2();
  auto equivariant = [&](const Element& x, const Element& a) {
    return g1.equal(m.d.apply(m.action.act(x, a)), g1.op(g1.op(g1.inv(a), m.d.apply(x)), a));
  };
  std::optional<std::string> bad;
  for (const Element& x : signed_generators(g2))
    for (const Element& a : signed_generators(g1))
      if (!bad && !equivariant(x, a)) bad = "x = " + g2.format(x) + ", m = " + g1.format(a);
  record(rep, "equivariance.generators", "d(x^m) = -m + d(x) + m on generators", bad);

  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  bad.reset();
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element x = g2.random_element(rng, opts.max_length);
    const Element a = g1.random_element(rng, opts.max_length);
    if (!equivariant(x, a)) bad = "x = " + g2.format(x) + ", m = " + g1.format(a);
  }
  record(rep, "equivariance.sampled", "d(x^m) = -m + d(x) + m on random elements", bad, opts.depth);
  return rep;
}

Report check_crossed(const PreCrossedModule& m, const SamplingOptions& opts) {
  Report rep = check_precrossed(m, opts);
  rep = [&] {
    Report r("crossed module");
    r.sampling = opts;
    r.merge(rep, "");
    return r;
  }();
  const Group& g2 = m.m2();
  std::optional<std::string> bad;
  for (const Element& x : signed_generators(g2))
    for (const Element& y : signed_generators(g2)) {
      if (bad) break;
      const Element p = peiffer_commutator(m, x, y);
      if (!g2.is_identity(p))
        bad = "<" + g2.format(x) + ", " + g2.format(y) + "> = " + g2.format(p);
    }
  record(rep, "peiffer.generators", "<x, y> = 0 for generators and their inverses", bad);

  // Generator-level triviality does not imply global triviality, so sample.
  Rng rng(opts.seed ^ 0x2545f4914f6cdd1dULL);
  bad.reset();
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element x = g2.random_element(rng, opts.max_length);
    const Element y = g2.random_element(rng, opts.max_length);
    const Element p = peiffer_commutator(m, x, y);
    if (!g2.is_identity(p)) bad = "<" + g2.format(x) + ", " + g2.format(y) + "> = " + g2.format(p);
  }
  record(rep, "peiffer.sampled", "<x, y> = 0 on random products", bad, opts.depth);
  return rep;
}

Element peiffer_map_w(const PreCrossedModule& m, const Tensor& t) {
  const Group& g2 = m.m2();
  if (g2.kind() != GroupKind::free_nil2)
    throw std::invalid_argument("the Peiffer commutator map needs a free nil(2) group M2");
  if (t.dim() != g2.rank()) throw std::invalid_argument("tensor rank does not match M2");
  Element acc = g2.identity();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (t.at(i, j) != 0)
        acc = g2.op(acc, g2.pow(peiffer_commutator(m, g2.generator(i), g2.generator(j)), t.at(i, j)));
  return acc;
}

// ---------------------------------------------------------------------------

Report xc3_check(const CrossedComplex3& x, const SamplingOptions& opts) {
  Report rep("3-dimensional crossed complex");
  rep.sampling = opts;
  rep.merge(check_crossed(x.module, opts), "1.");

  const Group& m2 = x.m2();
  const Group& m3 = x.m3();
  if (!x.d3.target().same_descriptor(m2))
    throw std::invalid_argument("d3 must land in M2");
  if (!x.action3.acting().same_descriptor(x.m1()) || !x.action3.acted().same_descriptor(m3))
    throw std::invalid_argument("M1 must act on M3");

  std::optional<std::string> bad;
  if (!m3.is_abelian()) {
    for (std::size_t i = 0; i < m3.rank() && !bad; ++i)
      for (std::size_t j = i + 1; j < m3.rank() && !bad; ++j)
        if (!m3.is_identity(m3.commutator(m3.generator(i), m3.generator(j))))
          bad = m3.generator_name(i) + " and " + m3.generator_name(j) + " do not commute";
  }
  record(rep, "2.abelian", "M3 is abelian", bad);

  record(rep, "3.d3.homomorphism", "d3 is a well-defined homomorphism", hom_defect(x.d3, "d3"));

  bad.reset();
  for (std::size_t q = 0; q < m3.rank() && !bad; ++q) {
    const Element v = x.d2().apply(x.d3.apply(m3.generator(q)));
    if (!x.m1().is_identity(v)) bad = "d2 d3(" + m3.generator_name(q) + ") = " + x.m1().format(v);
  }
  record(rep, "3.boundary", "d2 d3 = 0 on generators of M3", bad);

  bad.reset();
  for (std::size_t i = 0; i < m2.rank() && !bad; ++i) {
    const Element a = x.d2().apply(m2.generator(i));
    for (std::size_t q = 0; q < m3.rank() && !bad; ++q)
      if (!m3.equal(x.action3.act(m3.generator(q), a), m3.generator(q)))
        bad = m3.generator_name(q) + " moved by d2(" + m2.generator_name(i) + ")";
  }
  record(rep, "3.trivial_action", "im(d2) acts trivially on M3", bad);

  bad.reset();
  for (std::size_t q = 0; q < m3.rank() && !bad; ++q)
    for (const Element& a : signed_generators(x.m1())) {
      const Element lhs = x.d3.apply(x.action3.act(m3.generator(q), a));
      const Element rhs = x.module.action.act(x.d3.apply(m3.generator(q)), a);
      if (!m2.equal(lhs, rhs)) {
        bad = "q = " + m3.generator_name(q) + ", m = " + x.m1().format(a);
        break;
      }
    }
  record(rep, "3.equivariance", "d3(q^m) = d3(q)^m on generators", bad);

  rep.merge(x.action3.check(opts), "3.");
  for (const Element& u : x.under) m2.validate(u);
  return rep;
}

Report xc3_morphism_check(const Xc3Morphism& f, const CrossedComplex3& x, const CrossedComplex3& y,
                          const SamplingOptions& opts) {
  (void)opts;
  Report rep("crossed complex morphism");
  record(rep, "f1.homomorphism", "f1 well-defined", hom_defect(f.f1, "f1"));
  record(rep, "f2.homomorphism", "f2 well-defined", hom_defect(f.f2, "f2"));
  record(rep, "f3.homomorphism", "f3 well-defined", hom_defect(f.f3, "f3"));

  std::optional<std::string> bad;
  for (std::size_t i = 0; i < x.m2().rank() && !bad; ++i) {
    const Element g = x.m2().generator(i);
    if (!y.m1().equal(f.f1.apply(x.d2().apply(g)), y.d2().apply(f.f2.apply(g))))
      bad = "generator " + x.m2().generator_name(i);
  }
  record(rep, "square.d2", "f1 d2 = d2' f2 on generators", bad);

  bad.reset();
  for (std::size_t q = 0; q < x.m3().rank() && !bad; ++q) {
    const Element g = x.m3().generator(q);
    if (!y.m2().equal(f.f2.apply(x.d3.apply(g)), y.d3.apply(f.f3.apply(g))))
      bad = "generator " + x.m3().generator_name(q);
  }
  record(rep, "square.d3", "f2 d3 = d3' f3 on generators", bad);

  bad.reset();
  for (const Element& a : signed_generators(x.m1())) {
    const Element fa = f.f1.apply(a);
    for (std::size_t i = 0; i < x.m2().rank() && !bad; ++i) {
      const Element g = x.m2().generator(i);
      if (!y.m2().equal(f.f2.apply(x.module.action.act(g, a)), y.module.action.act(f.f2.apply(g), fa)))
        bad = "f2 on " + x.m2().generator_name(i) + " under " + x.m1().format(a);
    }
    for (std::size_t q = 0; q < x.m3().rank() && !bad; ++q) {
      const Element g = x.m3().generator(q);
      if (!y.m3().equal(f.f3.apply(x.action3.act(g, a)), y.action3.act(f.f3.apply(g), fa)))
        bad = "f3 on " + x.m3().generator_name(q) + " under " + x.m1().format(a);
    }
    if (bad) break;
  }
  record(rep, "equivariance", "f2 and f3 are f1-equivariant on generators", bad);

  bad.reset();
  if (x.under.size() != y.under.size()) {
    bad = "under-objects have different generator counts";
  } else {
    for (std::size_t k = 0; k < x.under.size() && !bad; ++k)
      if (!y.m2().equal(f.f2.apply(x.under[k]), y.under[k]))
        bad = "under-generator " + std::to_string(k + 1) + " is not preserved";
  }
  record(rep, "under", "f restricts to the structure map on the under-object", bad);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void require_compatible(const Xc3Morphism& f, const Xc3Morphism& g, const CrossedComplex3& x,
                        const CrossedComplex3& y) {
  for (const Xc3Morphism* h : {&f, &g}) {
    if (!h->f1.source().same_descriptor(x.m1()) || !h->f1.target().same_descriptor(y.m1()) ||
        !h->f2.source().same_descriptor(x.m2()) || !h->f2.target().same_descriptor(y.m2()) ||
        !h->f3.source().same_descriptor(x.m3()) || !h->f3.target().same_descriptor(y.m3()))
      throw std::invalid_argument("morphism does not go between the given complexes");
  }
  if (!f.f1.equals(g.f1))
    throw std::invalid_argument("homotopies of crossed complexes need f1 = g1");
  if (x.under.size() != y.under.size())
    throw std::invalid_argument("mismatched under-structures");
  for (std::size_t k = 0; k < x.under.size(); ++k)
    if (!y.m2().equal(f.f2.apply(x.under[k]), y.under[k]) ||
        !y.m2().equal(g.f2.apply(x.under[k]), y.under[k]))
      throw std::invalid_argument("morphisms do not agree on the under-structure");
  if (!y.m3().vector_represented())
    throw std::invalid_argument("homotopy search needs M3' given as an abelian group");
}

Element difference(const Group& g, const Element& a, const Element& b) {
  return g.op(g.inv(a), b);  // -a + b
}

}  // namespace

Report verify_xc3_homotopy(const Xc3Morphism& f, const Xc3Morphism& g, const CrossedComplex3& x,
                           const CrossedComplex3& y, const Xc3Homotopy& h,
                           const SamplingOptions& opts) {
  Report rep("crossed complex homotopy");
  rep.sampling = opts;
  if (h.alpha.size() != x.m2().rank()) {
    rep.fail("alpha.shape", "alpha has one value per generator of M2", "wrong length");
    return rep;
  }
  std::vector<Element> ims(h.alpha.begin(), h.alpha.end());
  const GroupHom alpha(x.m2(), y.m3(), std::move(ims));
  record(rep, "alpha.homomorphism", "alpha is a well-defined homomorphism", hom_defect(alpha, "alpha"));

  std::optional<std::string> bad;
  for (std::size_t k = 0; k < x.under.size() && !bad; ++k)
    if (!y.m3().is_identity(alpha.apply(x.under[k])))
      bad = "alpha(under-generator " + std::to_string(k + 1) + ") != 0";
  record(rep, "alpha.under", "alpha vanishes on the under-object", bad);

  Rng rng(opts.seed ^ 0x5851f42d4c957f2dULL);
  auto degree2 = [&](const Element& e) {
    return y.m2().equal(difference(y.m2(), f.f2.apply(e), g.f2.apply(e)), y.d3.apply(alpha.apply(e)));
  };
  auto degree3 = [&](const Element& e) {
    return y.m3().equal(difference(y.m3(), f.f3.apply(e), g.f3.apply(e)), alpha.apply(x.d3.apply(e)));
  };
  auto equivariant = [&](const Element& e, const Element& a) {
    return y.m3().equal(alpha.apply(x.module.action.act(e, a)),
                        y.action3.act(alpha.apply(e), f.f1.apply(a)));
  };

  bad.reset();
  for (std::size_t i = 0; i < x.m2().rank() && !bad; ++i)
    if (!degree2(x.m2().generator(i))) bad = "generator " + x.m2().generator_name(i);
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element e = x.m2().random_element(rng, opts.max_length);
    if (!degree2(e)) bad = "element " + x.m2().format(e);
  }
  record(rep, "homotopy.degree2", "-f2 + g2 = d3' alpha", bad, opts.depth);

  bad.reset();
  for (std::size_t q = 0; q < x.m3().rank() && !bad; ++q)
    if (!degree3(x.m3().generator(q))) bad = "generator " + x.m3().generator_name(q);
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element e = x.m3().random_element(rng, opts.max_length);
    if (!degree3(e)) bad = "element " + x.m3().format(e);
  }
  record(rep, "homotopy.degree3", "-f3 + g3 = alpha d3", bad, opts.depth);

  bad.reset();
  for (std::size_t i = 0; i < x.m2().rank() && !bad; ++i)
    for (const Element& a : signed_generators(x.m1()))
      if (!equivariant(x.m2().generator(i), a)) {
        bad = x.m2().generator_name(i) + " under " + x.m1().format(a);
        break;
      }
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element e = x.m2().random_element(rng, opts.max_length);
    const Element a = x.m1().random_element(rng, opts.max_length);
    if (!equivariant(e, a)) bad = x.m2().format(e) + " under " + x.m1().format(a);
  }
  record(rep, "alpha.equivariance", "alpha(x^m) = alpha(x)^f1(m)", bad, opts.depth);
  return rep;
}

HomotopySearch<Xc3Homotopy> xc3_homotopic(const Xc3Morphism& f, const Xc3Morphism& g,
                                          const CrossedComplex3& x, const CrossedComplex3& y,
                                          std::size_t bound) {
  require_compatible(f, g, x, y);
  HomotopySearch<Xc3Homotopy> out;
  const Group& m2 = x.m2();
  const Group& t2 = y.m2();
  const Group& t3 = y.m3();
  const std::size_t n2 = m2.rank();
  const std::size_t r3 = t3.rank();
  const std::size_t unknowns = n2 * r3;
  SamplingOptions verify_opts;
  verify_opts.depth = 50;

  std::vector<Element> deltas;
  for (std::size_t i = 0; i < n2; ++i)
    deltas.push_back(difference(t2, f.f2.apply(m2.generator(i)), g.f2.apply(m2.generator(i))));

  auto chart = linear_chart(t2);
  if (chart && !t2.is_abelian()) {
    // The chart is linear only on commuting families.
    for (std::size_t k = 0; k < r3 && chart; ++k)
      for (std::size_t l = k + 1; l < r3 && chart; ++l)
        if (!t2.is_identity(t2.commutator(y.d3.apply(t3.generator(k)), y.d3.apply(t3.generator(l)))))
          chart.reset();
  }
  if (chart) {
    IntMatrix boundary_cols;  // chart coordinates of d3'(generator k), one row per k
    for (std::size_t k = 0; k < r3; ++k) boundary_cols.push_back(chart->coords(y.d3.apply(t3.generator(k))));
    auto boundary_rows = [&]() { return transpose(boundary_cols, chart->dim); };

    // Degree 2, generator by generator: is -f2(x) + g2(x) in im(d3')?
    if (y.d3.is_zero()) {
      for (std::size_t i = 0; i < n2; ++i)
        if (!t2.is_identity(deltas[i])) {
          out.obstruction = "d3' = 0 forces f2 = g2, but they differ on " + m2.generator_name(i);
          out.method = "linear algebra over Z";
          out.failing_generator = i;
          return out;
        }
    }
    for (std::size_t i = 0; i < n2; ++i) {
      LinearSystem single(r3);
      single.add_block("degree 2", boundary_rows(), chart->coords(deltas[i]), chart->relations);
      if (!single.solve()) {
        out.obstruction = "-f2 + g2 on " + m2.generator_name(i) + " = " + t2.format(deltas[i]) +
                          " is not in the image of d3'";
        out.method = "linear algebra over Z";
        out.failing_generator = i;
        return out;
      }
    }

    LinearSystem sys(unknowns);
    auto place = [&](const IntMatrix& block, std::size_t i, IntMatrix& rows) {
      // rows += block placed at the columns of unknown block i
      for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < r3; ++c) rows[r][i * r3 + c] += block[r][c];
    };
    auto zero_rows = [&](std::size_t m) { return IntMatrix(m, zero_vector(unknowns)); };
    auto linear_in_alpha = [&](const IntVector& ab) {
      // sum_i ab[i] * alpha(x_i) as r3 rows
      IntMatrix rows = zero_rows(r3);
      for (std::size_t i = 0; i < n2; ++i)
        if (ab[i] != 0)
          for (std::size_t c = 0; c < r3; ++c) rows[c][i * r3 + c] += ab[i];
      return rows;
    };

    for (std::size_t i = 0; i < n2; ++i) {
      IntMatrix rows = zero_rows(chart->dim);
      place(boundary_rows(), i, rows);
      sys.add_block("degree 2 on " + m2.generator_name(i), rows, chart->coords(deltas[i]), chart->relations);
    }
    for (std::size_t q = 0; q < x.m3().rank(); ++q) {
      const Element gq = x.m3().generator(q);
      const IntVector rhs = std::get<IntVector>(difference(t3, f.f3.apply(gq), g.f3.apply(gq)));
      sys.add_block("degree 3 on " + x.m3().generator_name(q), linear_in_alpha(m2.abelianize(x.d3.apply(gq))),
                    rhs, t3.relations());
    }
    for (std::size_t k = 0; k < x.under.size(); ++k)
      sys.add_block("vanishing on the under-object", linear_in_alpha(m2.abelianize(x.under[k])),
                    zero_vector(r3), t3.relations());
    if (m2.vector_represented())
      for (const auto& rel : m2.relations())
        sys.add_block("relators of M2", linear_in_alpha(rel), zero_vector(r3), t3.relations());
    for (std::size_t a = 0; a < x.m1().rank(); ++a) {
      const Element ga = x.m1().generator(a);
      const IntMatrix act = y.action3.matrix_of(f.f1.apply(ga));
      for (std::size_t i = 0; i < n2; ++i) {
        IntMatrix rows = linear_in_alpha(m2.abelianize(x.module.action.act(m2.generator(i), ga)));
        for (std::size_t r = 0; r < r3; ++r)
          for (std::size_t c = 0; c < r3; ++c) rows[r][i * r3 + c] -= act[r][c];
        sys.add_block("equivariance", rows, zero_vector(r3), t3.relations());
      }
    }

    out.method = "linear algebra over Z";
    const auto sol = sys.solve();
    if (!sol) {
      out.obstruction = "the homotopy equations have no integer solution (first infeasible block: " +
                        sys.first_infeasible_block().value_or("?") + ")";
      return out;
    }
    // Generators that f2 kills are reduced first, concentrating alpha elsewhere.
    std::vector<std::size_t> order;
    for (bool killed : {false, true})
      for (std::size_t i = 0; i < n2; ++i)
        if (t2.is_identity(f.f2.apply(m2.generator(i))) == killed)
          for (std::size_t c = 0; c < r3; ++c) order.push_back(i * r3 + c);
    const IntVector y_vec = canonical_solution(*sol, order);
    Xc3Homotopy h;
    for (std::size_t i = 0; i < n2; ++i) {
      IntVector v(y_vec.begin() + static_cast<std::ptrdiff_t>(i * r3),
                  y_vec.begin() + static_cast<std::ptrdiff_t>((i + 1) * r3));
      h.alpha.push_back(std::get<IntVector>(t3.canonical(v)));
    }
    if (!verify_xc3_homotopy(f, g, x, y, h, verify_opts).passed())
      throw std::logic_error("linear solution failed re-verification");
    out.witness = std::move(h);
    return out;
  }

  // No linear chart for M2': enumerate alpha coordinates in the box.
  out.method = "enumeration within coefficient radius " + std::to_string(bound);
  out.complete = false;
  const long b = static_cast<long>(bound);
  std::vector<long> coords(unknowns, -b);
  while (true) {
    Xc3Homotopy h;
    for (std::size_t i = 0; i < n2; ++i) {
      IntVector v;
      for (std::size_t c = 0; c < r3; ++c) v.push_back(Integer(coords[i * r3 + c]));
      h.alpha.push_back(std::move(v));
    }
    if (verify_xc3_homotopy(f, g, x, y, h, verify_opts).passed()) {
      for (auto& v : h.alpha) v = std::get<IntVector>(t3.canonical(v));
      out.witness = std::move(h);
      return out;
    }
    // Lexicographic odometer over [-b, b]^unknowns.
    std::size_t pos = unknowns;
    while (pos > 0 && coords[pos - 1] == b) coords[--pos] = -b;
    if (pos == 0) break;
    ++coords[pos - 1];
  }
  out.obstruction = "no homotopy with coefficients in [-" + std::to_string(bound) + ", " +
                    std::to_string(bound) + "]";
  return out;
}

}  // namespace xq
