#include "xq/quadratic.hpp"

#include <stdexcept>

namespace xq {

namespace {

std::optional<std::string> hom_defect(const GroupHom& h, const std::string& name) {
  if (auto d = h.well_defined_defect()) return name + ": " + *d;
  return std::nullopt;
}

void check_omega_shape(const OmegaTable& omega, std::size_t n, const Group& q3) {
  if (omega.size() != n) throw std::invalid_argument("omega needs one row per generator of Q2");
  for (const auto& row : omega) {
    if (row.size() != n) throw std::invalid_argument("omega needs one entry per basis tensor");
    for (const auto& v : row) q3.validate(v);
  }
}

// Matrix of f^ab: C -> C' (column i = {f(g_i)}).
IntMatrix abelianized_matrix(const GroupHom& f) {
  const std::size_t m = f.target().rank();
  IntMatrix out(m, zero_vector(f.source().rank()));
  for (std::size_t i = 0; i < f.source().rank(); ++i) {
    const IntVector c = f.target().abelianize(f.image(i));
    for (std::size_t r = 0; r < m; ++r) out[r][i] = c[r];
  }
  return out;
}

// Runs `bad_at` on every element of `cases` (exact) or on `depth` samples,
// returning the first witness.
template <class F>
std::optional<std::string> first_failure(std::size_t count, F bad_at) {
  for (std::size_t k = 0; k < count; ++k)
    if (auto w = bad_at(k)) return w;
  return std::nullopt;
}

}  // namespace

IntVector apply_omega(const OmegaTable& omega, std::size_t width, const Tensor& t) {
  if (t.dim() != omega.size()) throw std::invalid_argument("tensor rank does not match omega");
  IntVector out = zero_vector(width);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (t.at(i, j) != 0) axpy(out, t.at(i, j), omega[i][j]);
  return out;
}

ReducedQuadraticModule::ReducedQuadraticModule(GroupHom d3_, OmegaTable omega_)
    : d3(std::move(d3_)), omega(std::move(omega_)) {
  if (q2().kind() != GroupKind::free_nil2)
    throw std::invalid_argument("Q2 of a reduced quadratic module must be a free nil(2)-group");
  if (!q3().vector_represented()) throw std::invalid_argument("Q3 must be abelian");
  check_omega_shape(omega, q2().rank(), q3());
}

IntVector ReducedQuadraticModule::omega_of(const Tensor& t) const {
  return apply_omega(omega, q3().rank(), t);
}

ReducedQuadraticComplex4::ReducedQuadraticComplex4(ReducedQuadraticModule rqm_, GroupHom d4_,
                                                   std::optional<UnderStructure> under_)
    : rqm(std::move(rqm_)), d4(std::move(d4_)), under(std::move(under_)) {
  if (!q4().vector_represented()) throw std::invalid_argument("Q4 must be abelian");
  if (!d4.target().same_descriptor(q3())) throw std::invalid_argument("d4 must land in Q3");
  if (under) {
    const UnderStructure& u = *under;
    if (!u.q2.source().same_descriptor(u.base.q2()) || !u.q2.target().same_descriptor(q2()))
      throw std::invalid_argument("under-map q2 must go from D2 to Q2");
    if (!u.q3.source().same_descriptor(u.base.q3()) || !u.q3.target().same_descriptor(q3()))
      throw std::invalid_argument("under-map q3 must go from D3 to Q3");
  }
}

ReducedQuadraticComplex4 as_complex_under_itself(const ReducedQuadraticModule& q) {
  const Group q4 = Group::free_abelian(0);
  UnderStructure u{q, GroupHom::identity(q.q2()), GroupHom::identity(q.q3())};
  return ReducedQuadraticComplex4(q, GroupHom(q4, q.q3(), {}), std::move(u));
}

Report rqm_check(const ReducedQuadraticModule& q, const SamplingOptions& opts) {
  Report rep("reduced quadratic module");
  rep.sampling = opts;
  const Group& g2 = q.q2();
  const Group& g3 = q.q3();
  const std::size_t n = g2.rank();
  const std::size_t r3 = g3.rank();
  Rng rng(opts.seed ^ 0x51ed2701a3c4b5d9ULL);

  rep.record("1.nil2", "Q2 is a free nil(2)-group and C = Q2^ab",
             g2.kind() == GroupKind::free_nil2 ? std::nullopt
                                               : std::optional<std::string>("Q2 is not nil(2)"));
  rep.record("d3.homomorphism", "d3 is a well-defined homomorphism", hom_defect(q.d3, "d3"));

  auto lift_bad = [&](const Element& x, const Element& y) -> std::optional<std::string> {
    const Element lhs = q.d3.apply(Element(q.omega_of(Tensor::outer(q.cls(x), q.cls(y)))));
    const Element rhs = g2.commutator(x, y);
    if (g2.equal(lhs, rhs)) return std::nullopt;
    return "x = " + g2.format(x) + ", y = " + g2.format(y) + ": d3 omega = " + g2.format(lhs) +
           ", (x, y) = " + g2.format(rhs);
  };
  rep.record("2.generators", "d3 omega({x} (x) {y}) = (x, y) on generator pairs",
             first_failure(n * n, [&](std::size_t k) {
               return lift_bad(g2.generator(k / n), g2.generator(k % n));
             }));
  rep.record("2.sampled", "d3 omega({x} (x) {y}) = (x, y) on random pairs",
             first_failure(opts.depth, [&](std::size_t) {
               const Element x = g2.random_element(rng, opts.max_length);
               return lift_bad(x, g2.random_element(rng, opts.max_length));
             }),
             opts.depth);

  auto sym_bad = [&](const Element& p, const Element& x) -> std::optional<std::string> {
    const IntVector a = q.cls(q.d3.apply(p));
    const IntVector c = q.cls(x);
    const IntVector v = q.omega_of(Tensor::outer(a, c) + Tensor::outer(c, a));
    if (g3.is_identity(v)) return std::nullopt;
    return "q = " + g3.format(p) + ", x = " + g2.format(x) + ": omega(...) = " + g3.format(v);
  };
  rep.record("3.generators", "omega({d3 q} (x) {x} + {x} (x) {d3 q}) = 0 on generators",
             first_failure(r3 * n, [&](std::size_t k) {
               return sym_bad(g3.generator(k / n), g2.generator(k % n));
             }));
  rep.record("3.sampled", "omega({d3 q} (x) {x} + {x} (x) {d3 q}) = 0 on random elements",
             first_failure(opts.depth, [&](std::size_t) {
               const Element p = g3.random_element(rng, opts.max_length);
               return sym_bad(p, g2.random_element(rng, opts.max_length));
             }),
             opts.depth);

  auto comm_bad = [&](const Element& p, const Element& s) -> std::optional<std::string> {
    const IntVector v = q.omega_of(Tensor::outer(q.cls(q.d3.apply(p)), q.cls(q.d3.apply(s))));
    const Element c = g3.commutator(p, s);
    if (g3.equal(c, v)) return std::nullopt;
    return "p = " + g3.format(p) + ", q = " + g3.format(s) + ": (p, q) = " + g3.format(c) +
           ", omega({d3 p} (x) {d3 q}) = " + g3.format(v);
  };
  rep.record("4.generators", "(p, q) = omega({d3 p} (x) {d3 q}) on generator pairs",
             first_failure(r3 * r3, [&](std::size_t k) {
               return comm_bad(g3.generator(k / r3), g3.generator(k % r3));
             }));
  rep.record("4.sampled", "(p, q) = omega({d3 p} (x) {d3 q}) on random pairs",
             first_failure(opts.depth, [&](std::size_t) {
               const Element p = g3.random_element(rng, opts.max_length);
               return comm_bad(p, g3.random_element(rng, opts.max_length));
             }),
             opts.depth);
  return rep;
}

Report rqc4_check(const ReducedQuadraticComplex4& q, const SamplingOptions& opts) {
  Report rep("reduced quadratic complex");
  rep.sampling = opts;
  rep.merge(rqm_check(q.rqm, opts), "");
  const Group& g2 = q.q2();
  const Group& g3 = q.q3();
  const Group& g4 = q.q4();
  Rng rng(opts.seed ^ 0x2545f4914f6cdd1dULL);

  rep.record("q4.abelian", "Q4 is abelian",
             g4.vector_represented() ? std::nullopt
                                     : std::optional<std::string>("Q4 is not abelian"));
  rep.record("d4.homomorphism", "d4 is a well-defined homomorphism", hom_defect(q.d4, "d4"));
  auto dd_bad = [&](const Element& p) -> std::optional<std::string> {
    const Element v = q.d3().apply(q.d4.apply(p));
    if (g2.is_identity(v)) return std::nullopt;
    return "p = " + g4.format(p) + ": d3 d4 p = " + g2.format(v);
  };
  rep.record("d3d4.generators", "d3 d4 = 0 on generators",
             first_failure(g4.rank(), [&](std::size_t k) { return dd_bad(g4.generator(k)); }));
  rep.record("d3d4.sampled", "d3 d4 = 0 on random elements",
             first_failure(opts.depth,
                           [&](std::size_t) {
                             return dd_bad(g4.random_element(rng, opts.max_length));
                           }),
             opts.depth);

  if (!q.under) return rep;
  const UnderStructure& u = *q.under;
  const Group& dg2 = u.base.q2();
  const Group& dg3 = u.base.q3();
  rep.record("under.q2.homomorphism", "q2 is a well-defined homomorphism", hom_defect(u.q2, "q2"));
  rep.record("under.q3.homomorphism", "q3 is a well-defined homomorphism", hom_defect(u.q3, "q3"));
  rep.record("under.d3", "q2 d3 = d3 q3 on the generators of D3",
             first_failure(dg3.rank(), [&](std::size_t k) -> std::optional<std::string> {
               const Element t = dg3.generator(k);
               const Element lhs = u.q2.apply(u.base.d3.apply(t));
               const Element rhs = q.d3().apply(u.q3.apply(t));
               if (g2.equal(lhs, rhs)) return std::nullopt;
               return dg3.generator_name(k) + ": " + g2.format(lhs) + " vs " + g2.format(rhs);
             }));
  const IntMatrix qab = abelianized_matrix(u.q2);
  const std::size_t dn = dg2.rank();
  rep.record("under.omega", "q3 omega_D = omega (q2^ab (x) q2^ab) on basis tensors",
             first_failure(dn * dn, [&](std::size_t k) -> std::optional<std::string> {
               const std::size_t i = k / dn, j = k % dn;
               const Element lhs = u.q3.apply(Element(u.base.omega[i][j]));
               const IntVector rhs = q.rqm.omega_of(tensor_induced(qab, Tensor::basis(dn, i, j)));
               if (g3.equal(lhs, rhs)) return std::nullopt;
               return dg2.generator_name(i) + " (x) " + dg2.generator_name(j) + ": " +
                      g3.format(lhs) + " vs " + g3.format(rhs);
             }));
  return rep;
}

Report qm_check(const QuadraticModule& q, const SamplingOptions& opts) {
  Report rep("quadratic module");
  rep.sampling = opts;
  const Group& g1 = q.q1();
  const Group& g2 = q.q2();
  const Group& g3 = q.q3();
  const std::size_t n = g2.rank();
  if (!q.d3.target().same_descriptor(g2) || !q.action3.acting().same_descriptor(g1) ||
      !q.action3.acted().same_descriptor(g3) || !g3.vector_represented()) {
    rep.fail("shape", "d3: Q3 -> Q2 with Q1 acting on an abelian Q3",
             "the maps do not fit together");
    return rep;
  }
  check_omega_shape(q.omega, n, g3);
  Rng rng(opts.seed ^ 0x7f4a7c159e3779b9ULL);
  auto om = [&](const IntVector& a, const IntVector& b) {
    return apply_omega(q.omega, g3.rank(), Tensor::outer(a, b));
  };
  auto cls = [&](const Element& x) { return g2.abelianize(x); };
  auto peiffer = [&](const Element& x, const Element& y) {
    return peiffer_commutator(q.module, x, y);
  };

  rep.merge(check_precrossed(q.module, opts), "1.");
  auto nil_bad = [&](const Element& x, const Element& y,
                     const Element& z) -> std::optional<std::string> {
    if (g2.is_identity(peiffer(peiffer(x, y), z)) && g2.is_identity(peiffer(x, peiffer(y, z))))
      return std::nullopt;
    return "x = " + g2.format(x) + ", y = " + g2.format(y) + ", z = " + g2.format(z);
  };
  rep.record("1.nil2.generators", "Peiffer commutators of length 3 vanish on generators",
             first_failure(n * n * n, [&](std::size_t k) {
               return nil_bad(g2.generator(k / (n * n)), g2.generator((k / n) % n),
                              g2.generator(k % n));
             }));
  rep.record("1.nil2.sampled", "Peiffer commutators of length 3 vanish on random elements",
             first_failure(opts.depth, [&](std::size_t) {
               const Element x = g2.random_element(rng, opts.max_length);
               const Element y = g2.random_element(rng, opts.max_length);
               return nil_bad(x, y, g2.random_element(rng, opts.max_length));
             }),
             opts.depth);
  // omega must factor through C = (Q2^cr)^ab.
  rep.record("1.omega.descends", "omega vanishes on classes of Peiffer commutators",
             first_failure(n * n * n, [&](std::size_t k) -> std::optional<std::string> {
               const IntVector p = cls(peiffer(g2.generator(k / (n * n)), g2.generator((k / n) % n)));
               const IntVector c = unit_vector(n, k % n);
               if (g3.is_identity(om(p, c)) && g3.is_identity(om(c, p))) return std::nullopt;
               return "class of <" + g2.generator_name(k / (n * n)) + ", " +
                      g2.generator_name((k / n) % n) + ">";
             }));

  rep.record("d3.homomorphism", "d3 is a well-defined homomorphism", hom_defect(q.d3, "d3"));
  rep.record("2.d2d3", "d2 d3 = 0 on generators",
             first_failure(g3.rank(), [&](std::size_t k) -> std::optional<std::string> {
               const Element v = q.module.d.apply(q.d3.apply(g3.generator(k)));
               if (g1.is_identity(v)) return std::nullopt;
               return g3.generator_name(k) + ": " + g1.format(v);
             }));
  auto lift_bad = [&](const Element& x, const Element& y) -> std::optional<std::string> {
    const Element lhs = q.d3.apply(Element(om(cls(x), cls(y))));
    const Element rhs = peiffer(x, y);
    if (g2.equal(lhs, rhs)) return std::nullopt;
    return "x = " + g2.format(x) + ", y = " + g2.format(y) + ": d3 omega = " + g2.format(lhs) +
           ", <x, y> = " + g2.format(rhs);
  };
  rep.record("2.lift.generators", "d3 omega({x} (x) {y}) = <x, y> on generator pairs",
             first_failure(n * n, [&](std::size_t k) {
               return lift_bad(g2.generator(k / n), g2.generator(k % n));
             }));
  rep.record("2.lift.sampled", "d3 omega({x} (x) {y}) = <x, y> on random pairs",
             first_failure(opts.depth, [&](std::size_t) {
               const Element x = g2.random_element(rng, opts.max_length);
               return lift_bad(x, g2.random_element(rng, opts.max_length));
             }),
             opts.depth);

  rep.merge(q.action3.check(opts), "3.action3.");
  const std::vector<Element> acting = signed_generators(g1);
  rep.record("3.equivariance.d3", "d3(q^m) = d3(q)^m on generators",
             first_failure(g3.rank() * acting.size(),
                           [&](std::size_t k) -> std::optional<std::string> {
                             const Element p = g3.generator(k / acting.size());
                             const Element& m = acting[k % acting.size()];
                             const Element lhs = q.d3.apply(q.action3.act(p, m));
                             const Element rhs = q.module.action.act(q.d3.apply(p), m);
                             if (g2.equal(lhs, rhs)) return std::nullopt;
                             return "q = " + g3.format(p) + ", m = " + g1.format(m);
                           }));
  rep.record("3.equivariance.omega", "omega({x^m} (x) {y^m}) = omega({x} (x) {y})^m on generators",
             first_failure(n * n * acting.size(),
                           [&](std::size_t k) -> std::optional<std::string> {
                             const std::size_t i = k / (n * acting.size());
                             const std::size_t j = (k / acting.size()) % n;
                             const Element& m = acting[k % acting.size()];
                             const Element xm = q.module.action.act(g2.generator(i), m);
                             const Element ym = q.module.action.act(g2.generator(j), m);
                             const Element lhs = om(cls(xm), cls(ym));
                             const Element rhs = q.action3.act(Element(q.omega[i][j]), m);
                             if (g3.equal(lhs, rhs)) return std::nullopt;
                             return g2.generator_name(i) + " (x) " + g2.generator_name(j) +
                                    ", m = " + g1.format(m);
                           }));
  auto bdry_bad = [&](const Element& p, const Element& x) -> std::optional<std::string> {
    const IntVector a = cls(q.d3.apply(p));
    const IntVector c = cls(x);
    const Element lhs = q.action3.act(p, q.module.d.apply(x));
    const Element rhs = g3.op(p, Element(add(om(a, c), om(c, a))));
    if (g3.equal(lhs, rhs)) return std::nullopt;
    return "q = " + g3.format(p) + ", x = " + g2.format(x) + ": q^(d2 x) = " + g3.format(lhs) +
           ", expected " + g3.format(rhs);
  };
  rep.record("3.generators", "q^(d2 x) = q + omega({d3 q} (x) {x} + {x} (x) {d3 q}) on generators",
             first_failure(g3.rank() * n, [&](std::size_t k) {
               return bdry_bad(g3.generator(k / n), g2.generator(k % n));
             }));
  rep.record("3.sampled", "q^(d2 x) = q + omega({d3 q} (x) {x} + {x} (x) {d3 q}) on random elements",
             first_failure(opts.depth, [&](std::size_t) {
               const Element p = g3.random_element(rng, opts.max_length);
               return bdry_bad(p, g2.random_element(rng, opts.max_length));
             }),
             opts.depth);

  auto comm_bad = [&](const Element& p, const Element& s) -> std::optional<std::string> {
    const IntVector v = om(cls(q.d3.apply(p)), cls(q.d3.apply(s)));
    if (g3.equal(g3.commutator(p, s), v)) return std::nullopt;
    return "p = " + g3.format(p) + ", q = " + g3.format(s) + ": omega({d3 p} (x) {d3 q}) = " +
           g3.format(v);
  };
  const std::size_t r3 = g3.rank();
  rep.record("4.generators", "(p, q) = omega({d3 p} (x) {d3 q}) on generator pairs",
             first_failure(r3 * r3, [&](std::size_t k) {
               return comm_bad(g3.generator(k / r3), g3.generator(k % r3));
             }));
  rep.record("4.sampled", "(p, q) = omega({d3 p} (x) {d3 q}) on random pairs",
             first_failure(opts.depth, [&](std::size_t) {
               const Element p = g3.random_element(rng, opts.max_length);
               return comm_bad(p, g3.random_element(rng, opts.max_length));
             }),
             opts.depth);
  return rep;
}

QCMorphism identity_morphism(const ReducedQuadraticComplex4& q) {
  return {GroupHom::identity(q.q2()), GroupHom::identity(q.q3()), GroupHom::identity(q.q4())};
}

Report qcm_check(const QCMorphism& f, const ReducedQuadraticComplex4& x,
                 const ReducedQuadraticComplex4& y, const SamplingOptions& opts) {
  Report rep("morphism of reduced quadratic complexes");
  rep.sampling = opts;
  auto fits = [](const GroupHom& h, const Group& s, const Group& t) {
    return h.source().same_descriptor(s) && h.target().same_descriptor(t);
  };
  if (!fits(f.f2, x.q2(), y.q2()) || !fits(f.f3, x.q3(), y.q3()) || !fits(f.f4, x.q4(), y.q4())) {
    rep.fail("shape", "f2, f3, f4 map Q2, Q3, Q4 to Q2', Q3', Q4'", "a degree does not fit");
    return rep;
  }
  rep.record("f2.homomorphism", "f2 is a well-defined homomorphism", hom_defect(f.f2, "f2"));
  rep.record("f3.homomorphism", "f3 is a well-defined homomorphism", hom_defect(f.f3, "f3"));
  rep.record("f4.homomorphism", "f4 is a well-defined homomorphism", hom_defect(f.f4, "f4"));

  const Group& t2 = y.q2();
  const Group& t3 = y.q3();
  rep.record("square.d3", "f2 d3 = d3' f3 on generators",
             first_failure(x.q3().rank(), [&](std::size_t k) -> std::optional<std::string> {
               const Element p = x.q3().generator(k);
               const Element lhs = f.f2.apply(x.d3().apply(p));
               const Element rhs = y.d3().apply(f.f3.apply(p));
               if (t2.equal(lhs, rhs)) return std::nullopt;
               return x.q3().generator_name(k) + ": f2 d3 = " + t2.format(lhs) +
                      ", d3' f3 = " + t2.format(rhs);
             }));
  rep.record("square.d4", "f3 d4 = d4' f4 on generators",
             first_failure(x.q4().rank(), [&](std::size_t k) -> std::optional<std::string> {
               const Element p = x.q4().generator(k);
               const Element lhs = f.f3.apply(x.d4.apply(p));
               const Element rhs = y.d4.apply(f.f4.apply(p));
               if (t3.equal(lhs, rhs)) return std::nullopt;
               return x.q4().generator_name(k) + ": f3 d4 = " + t3.format(lhs) +
                      ", d4' f4 = " + t3.format(rhs);
             }));
  const IntMatrix fab = abelianized_matrix(f.f2);
  const std::size_t n = x.q2().rank();
  rep.record("omega", "f3 omega = omega' (f2^ab (x) f2^ab) on basis tensors",
             first_failure(n * n, [&](std::size_t k) -> std::optional<std::string> {
               const std::size_t i = k / n, j = k % n;
               const Element lhs = f.f3.apply(Element(x.rqm.omega[i][j]));
               const IntVector rhs = y.rqm.omega_of(tensor_induced(fab, Tensor::basis(n, i, j)));
               if (t3.equal(lhs, rhs)) return std::nullopt;
               return x.q2().generator_name(i) + " (x) " + x.q2().generator_name(j) + ": " +
                      t3.format(lhs) + " vs " + t3.format(rhs);
             }));

  if (x.under.has_value() != y.under.has_value()) {
    rep.fail("under", "f q = q' on the under-object", "only one side lives under D");
    return rep;
  }
  if (!x.under) return rep;
  const UnderStructure& u = *x.under;
  const UnderStructure& v = *y.under;
  if (!u.base.q2().same_descriptor(v.base.q2()) || !u.base.q3().same_descriptor(v.base.q3())) {
    rep.fail("under", "f q = q' on the under-object", "the under-objects differ");
    return rep;
  }
  std::optional<std::string> bad;
  for (std::size_t k = 0; k < u.base.q2().rank() && !bad; ++k) {
    const Element d = u.base.q2().generator(k);
    if (!t2.equal(f.f2.apply(u.q2.apply(d)), v.q2.apply(d)))
      bad = "degree 2 at " + u.base.q2().generator_name(k);
  }
  for (std::size_t k = 0; k < u.base.q3().rank() && !bad; ++k) {
    const Element d = u.base.q3().generator(k);
    if (!t3.equal(f.f3.apply(u.q3.apply(d)), v.q3.apply(d)))
      bad = "degree 3 at " + u.base.q3().generator_name(k);
  }
  rep.record("under", "f q = q' on the under-object", bad);
  return rep;
}

std::size_t omega_symbol_index(std::size_t cells3, std::size_t rank, std::size_t i,
                               std::size_t j) {
  return cells3 + i * rank + j;
}

ReducedQuadraticComplex4 build_free_rqc4(const Group& q2, const std::vector<Cell3>& cells3,
                                         const std::vector<Cell4>& cells4) {
  if (q2.kind() != GroupKind::free_nil2)
    throw std::invalid_argument("Q2 must be a free nil(2)-group");
  const std::size_t n = q2.rank();
  const std::size_t nc = cells3.size();
  const std::size_t width = nc + n * n;
  auto sym = [&](std::size_t i, std::size_t j) { return omega_symbol_index(nc, n, i, j); };

  std::vector<IntVector> v;
  for (const Cell3& c : cells3) {
    q2.validate(c.boundary);
    v.push_back(q2.abelianize(c.boundary));
  }
  IntMatrix rels;
  auto push = [&](IntVector row) {
    if (!is_zero(row)) rels.push_back(std::move(row));
  };
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t k = 0; k < n; ++k) {
      IntVector row = zero_vector(width);
      for (std::size_t i = 0; i < n; ++i) {
        row[sym(i, k)] += v[c][i];
        row[sym(k, i)] += v[c][i];
      }
      push(std::move(row));
    }
    IntVector row = zero_vector(width);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row[sym(i, j)] += v[c][i] * v[c][j];
    push(std::move(row));
  }

  std::vector<std::string> names;
  for (const Cell3& c : cells3) names.push_back(c.name);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("ω(" + q2.generator_name(i) + "⊗" + q2.generator_name(j) + ")");
  Group q3 = Group::fg_abelian(width, rels);
  q3.with_names(names);

  OmegaTable omega(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega[i][j] = unit_vector(width, sym(i, j));

  // Commutators of 3-cells are omega({dp} (x) {dq}); Q3 is abelian only if
  // these vanish modulo the relations.
  for (std::size_t p = 0; p < nc; ++p)
    for (std::size_t s = 0; s < nc; ++s) {
      if (p == s) continue;
      const IntVector c = apply_omega(omega, width, Tensor::outer(v[p], v[s]));
      if (!q3.is_identity(c))
        throw std::logic_error("Q3 is not abelian: the commutator of " + cells3[p].name + " and " +
                               cells3[s].name + " is " + q3.format(c));
    }

  std::vector<Element> d3_images;
  for (const Cell3& c : cells3) d3_images.push_back(c.boundary);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d3_images.push_back(q2.commutator(q2.generator(i), q2.generator(j)));
  ReducedQuadraticModule rqm(GroupHom(q3, q2, d3_images), omega);

  Group q4 = Group::free_abelian(cells4.size());
  std::vector<std::string> names4;
  std::vector<Element> d4_images;
  for (const Cell4& c : cells4) {
    if (c.cells.size() != nc) throw std::invalid_argument("4-cell " + c.name + ": wrong width");
    IntVector img = rqm.omega_of(c.omega_part);
    for (std::size_t k = 0; k < nc; ++k) img[k] += c.cells[k];
    d4_images.push_back(img);
    names4.push_back(c.name);
  }
  q4.with_names(names4);
  return ReducedQuadraticComplex4(std::move(rqm), GroupHom(q4, q3, d4_images));
}

}  // namespace xq
