#include "xq/rq_homotopy.hpp"

#include <stdexcept>

#include "xq/linearize.hpp"

namespace xq {

namespace {

struct Fits {
  const ReducedQuadraticComplex4& x;
  const ReducedQuadraticComplex4& y;

  bool operator()(const QCMorphism& h) const {
    auto ok = [](const GroupHom& m, const Group& s, const Group& t) {
      return m.source().same_descriptor(s) && m.target().same_descriptor(t);
    };
    return ok(h.f2, x.q2(), y.q2()) && ok(h.f3, x.q3(), y.q3()) && ok(h.f4, x.q4(), y.q4());
  }
};

void require_compatible(const QCMorphism& f, const QCMorphism& g, const ReducedQuadraticComplex4& x,
                        const ReducedQuadraticComplex4& y) {
  const Fits fits{x, y};
  if (!fits(f) || !fits(g)) throw std::invalid_argument("morphism does not go between the given complexes");
  if (x.under.has_value() != y.under.has_value())
    throw std::invalid_argument("mismatched under-structures");
  if (x.under && (!x.under->base.q2().same_descriptor(y.under->base.q2()) ||
                  !x.under->base.q3().same_descriptor(y.under->base.q3())))
    throw std::invalid_argument("the complexes live under different objects");
}

Element difference(const Group& g, const Element& a, const Element& b) {
  return g.op(g.inv(a), b);  // -a + b
}

// Word of ((x_a, x_b), x_c) in the free group.
Word triple_commutator_word(std::size_t a, std::size_t b, std::size_t c) {
  auto comm = [](const Word& u, const Word& v) {
    return word_concat(word_concat(word_inverse(u), word_inverse(v)), word_concat(u, v));
  };
  return comm(comm(Word{{a, 1}}, Word{{b, 1}}), Word{{c, 1}});
}

class Evaluator {
 public:
  Evaluator(const QCMorphism& f, const QCMorphism& g, const ReducedQuadraticComplex4& y)
      : f_(f), g_(g), y_(y) {}

  // {-f2 x + g2 x} in C'
  IntVector delta(const Element& x) const {
    return sub(y_.q2().abelianize(g_.f2.apply(x)), y_.q2().abelianize(f_.f2.apply(x)));
  }
  IntVector f2_class(const Element& x) const { return y_.q2().abelianize(f_.f2.apply(x)); }
  IntVector correction(const IntVector& dx, const IntVector& fy) const {
    return y_.rqm.omega_of(Tensor::outer(dx, fy));
  }

  IntVector on_word(const std::vector<IntVector>& values, const Word& w) const {
    const Group& src = f_.f2.source();
    if (values.size() != src.rank()) throw std::invalid_argument("alpha2 needs one value per generator of Q2");
    for (const auto& v : values)
      if (v.size() != y_.q3().rank()) throw std::invalid_argument("alpha2 value has the wrong width");
    IntVector acc = zero_vector(y_.q3().rank());
    IntVector prefix_delta = zero_vector(y_.q2().rank());
    for (const Letter& l : w) {
      const Element gen = src.generator(l.gen);
      const IntVector d = delta(gen);
      const IntVector fc = f2_class(gen);
      IntVector a = values[l.gen];
      if (l.sign < 0) {
        // 0 = alpha2(-x + x) = alpha2(-x) + alpha2(x) - omega'({dx} (x) {f2 x})
        a = add(neg(a), correction(d, fc));
      }
      acc = add(add(acc, a), correction(prefix_delta, scale(Integer(l.sign), fc)));
      prefix_delta = add(prefix_delta, scale(Integer(l.sign), d));
    }
    return acc;
  }

  IntVector on(const std::vector<IntVector>& values, const Element& x) const {
    return on_word(values, f_.f2.source().to_word(x));
  }

 private:
  const QCMorphism& f_;
  const QCMorphism& g_;
  const ReducedQuadraticComplex4& y_;
};

}  // namespace

IntVector alpha2_on_word(const std::vector<IntVector>& values, const QCMorphism& f,
                         const QCMorphism& g, const ReducedQuadraticComplex4& target,
                         const Word& w) {
  return Evaluator(f, g, target).on_word(values, w);
}

IntVector alpha2_extend(const std::vector<IntVector>& values, const QCMorphism& f,
                        const QCMorphism& g, const ReducedQuadraticComplex4& target,
                        const Element& x) {
  return Evaluator(f, g, target).on(values, x);
}

Report verify_rq_homotopy(const QCMorphism& f, const QCMorphism& g,
                          const ReducedQuadraticComplex4& x, const ReducedQuadraticComplex4& y,
                          const QCHomotopy& h, const SamplingOptions& opts) {
  Report rep("homotopy of reduced quadratic complexes");
  rep.sampling = opts;
  const Group& s2 = x.q2();
  const Group& s3 = x.q3();
  const Group& s4 = x.q4();
  const Group& t2 = y.q2();
  const Group& t3 = y.q3();
  const Group& t4 = y.q4();
  if (h.alpha2.size() != s2.rank() || !h.alpha3.source().same_descriptor(s3) ||
      !h.alpha3.target().same_descriptor(t4)) {
    rep.fail("shape", "alpha2: Q2 -> Q3' on generators, alpha3: Q3 -> Q4'", "wrong shape");
    return rep;
  }
  const Evaluator ev(f, g, y);
  auto a2 = [&](const Element& e) { return ev.on(h.alpha2, e); };
  Rng rng(opts.seed ^ 0x9fb21c651e98df25ULL);
  auto sample2 = [&]() { return s2.random_element(rng, opts.max_length); };

  if (auto d = h.alpha3.well_defined_defect())
    rep.fail("alpha3.homomorphism", "alpha3 is a well-defined homomorphism", *d);
  else
    rep.pass("alpha3.homomorphism", "alpha3 is a well-defined homomorphism");

  std::optional<std::string> bad;
  const std::size_t n = s2.rank();
  for (std::size_t a = 0; a < n && !bad; ++a)
    for (std::size_t b = 0; b < n && !bad; ++b)
      for (std::size_t c = 0; c < n && !bad; ++c) {
        const IntVector v = ev.on_word(h.alpha2, triple_commutator_word(a, b, c));
        if (!t3.is_identity(v))
          bad = "((" + s2.generator_name(a) + ", " + s2.generator_name(b) + "), " +
                s2.generator_name(c) + ") has alpha2 = " + t3.format(v);
      }
  rep.record("alpha2.triple_commutators", "alpha2 vanishes on triple commutators of generators", bad);

  bad.reset();
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    Word w;
    const auto len = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(opts.max_length)));
    for (std::size_t k = 0; k < len && n > 0; ++k)
      w.push_back({static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 1)),
                   random_int(rng, 0, 1) ? 1 : -1});
    const Element e = s2.from_word(w);
    if (!t3.equal(ev.on_word(h.alpha2, w), a2(e))) bad = "a word for " + s2.format(e);
  }
  rep.record("alpha2.well_defined", "alpha2 agrees on all words for the same element", bad, opts.depth);

  bad.reset();
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element u = sample2(), v = sample2();
    const IntVector lhs = a2(s2.op(u, v));
    const IntVector rhs = add(add(a2(u), a2(v)), ev.correction(ev.delta(u), ev.f2_class(v)));
    if (!t3.equal(lhs, rhs)) bad = "x = " + s2.format(u) + ", y = " + s2.format(v);
  }
  rep.record("rule.sampled", "alpha2(x + y) = alpha2 x + alpha2 y + omega'({-f2 x + g2 x} (x) {f2 y})",
             bad, opts.depth);

  bad.reset();
  for (std::size_t s = 0; s < opts.depth && !bad; ++s) {
    const Element u = sample2(), v = sample2(), w = sample2();
    const IntVector left = add(add(a2(s2.op(u, v)), a2(w)), ev.correction(ev.delta(s2.op(u, v)), ev.f2_class(w)));
    const IntVector right = add(add(a2(u), a2(s2.op(v, w))), ev.correction(ev.delta(u), ev.f2_class(s2.op(v, w))));
    if (!t3.equal(left, right) || !t3.equal(left, a2(s2.op(s2.op(u, v), w))))
      bad = "x = " + s2.format(u) + ", y = " + s2.format(v) + ", z = " + s2.format(w);
  }
  rep.record("rule.bracketing", "alpha2((x + y) + z) = alpha2(x + (y + z)) via the rule", bad, opts.depth);

  auto degree2 = [&](const Element& e) -> std::optional<std::string> {
    const Element lhs = difference(t2, f.f2.apply(e), g.f2.apply(e));
    const Element rhs = y.d3().apply(Element(a2(e)));
    if (t2.equal(lhs, rhs)) return std::nullopt;
    return s2.format(e) + ": -f2 + g2 = " + t2.format(lhs) + ", d3' alpha2 = " + t2.format(rhs);
  };
  auto degree3 = [&](const Element& e) -> std::optional<std::string> {
    const Element lhs = difference(t3, f.f3.apply(e), g.f3.apply(e));
    const Element rhs = t3.op(y.d4.apply(h.alpha3.apply(e)), Element(a2(x.d3().apply(e))));
    if (t3.equal(lhs, rhs)) return std::nullopt;
    return s3.format(e) + ": -f3 + g3 = " + t3.format(lhs) + ", d4' alpha3 + alpha2 d3 = " + t3.format(rhs);
  };
  auto degree4 = [&](const Element& e) -> std::optional<std::string> {
    const Element lhs = difference(t4, f.f4.apply(e), g.f4.apply(e));
    const Element rhs = h.alpha3.apply(x.d4.apply(e));
    if (t4.equal(lhs, rhs)) return std::nullopt;
    return s4.format(e) + ": -f4 + g4 = " + t4.format(lhs) + ", alpha3 d4 = " + t4.format(rhs);
  };
  auto run = [&](const std::string& id, const std::string& what, const Group& src, auto&& eq) {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < src.rank() && !w; ++i) w = eq(src.generator(i));
    for (std::size_t s = 0; s < opts.depth && !w; ++s) w = eq(src.random_element(rng, opts.max_length));
    rep.record(id, what, w, opts.depth);
  };
  run("equation.degree2", "-f2 + g2 = d3' alpha2", s2, degree2);
  run("equation.degree3", "-f3 + g3 = d4' alpha3 + alpha2 d3", s3, degree3);
  run("equation.degree4", "-f4 + g4 = alpha3 d4", s4, degree4);

  if (x.under) {
    const UnderStructure& u = *x.under;
    bad.reset();
    for (std::size_t k = 0; k < u.base.q2().rank() && !bad; ++k)
      if (!t3.is_identity(a2(u.q2.apply(u.base.q2().generator(k)))))
        bad = "alpha2 q2(" + u.base.q2().generator_name(k) + ") != 0";
    rep.record("vanish.alpha2", "alpha2 vanishes on D2", bad);
    bad.reset();
    for (std::size_t k = 0; k < u.base.q3().rank() && !bad; ++k)
      if (!t4.is_identity(h.alpha3.apply(u.q3.apply(u.base.q3().generator(k)))))
        bad = "alpha3 q3(" + u.base.q3().generator_name(k) + ") != 0";
    rep.record("vanish.alpha3", "alpha3 vanishes on D3", bad);
  }
  return rep;
}

HomotopySearch<QCHomotopy> rq_homotopic(const QCMorphism& f, const QCMorphism& g,
                                        const ReducedQuadraticComplex4& x,
                                        const ReducedQuadraticComplex4& y, std::size_t bound) {
  (void)bound;  // the system is linear over Z, so the answer never depends on it
  require_compatible(f, g, x, y);
  HomotopySearch<QCHomotopy> out;
  out.method = "linear algebra over Z";
  const Group& s2 = x.q2();
  const Group& s3 = x.q3();
  const Group& t2 = y.q2();
  const Group& t3 = y.q3();
  const Group& t4 = y.q4();
  const std::size_t n2 = s2.rank(), n3 = s3.rank(), n4 = x.q4().rank();
  const std::size_t r3 = t3.rank(), r4 = t4.rank();
  const std::size_t unknowns = n2 * r3 + n3 * r4;
  auto idx2 = [&](std::size_t i, std::size_t c) { return i * r3 + c; };
  auto idx3 = [&](std::size_t j, std::size_t c) { return n2 * r3 + j * r4 + c; };
  const Evaluator ev(f, g, y);
  const std::vector<IntVector> zero_values(n2, zero_vector(r3));

  std::vector<Element> deltas;
  for (std::size_t i = 0; i < n2; ++i)
    deltas.push_back(difference(t2, f.f2.apply(s2.generator(i)), g.f2.apply(s2.generator(i))));

  if (y.d3().is_zero())
    for (std::size_t i = 0; i < n2; ++i)
      if (!t2.is_identity(deltas[i])) {
        out.obstruction = "target ∂₃ = 0 forces f₂ = g₂, but f₂(" + s2.generator_name(i) + ") = " +
                          t2.format(f.f2.apply(s2.generator(i))) + " and g₂(" +
                          s2.generator_name(i) + ") = " + t2.format(g.f2.apply(s2.generator(i)));
        out.failing_generator = i;
        return out;
      }

  const auto chart = linear_chart(t2);
  if (!chart) throw std::logic_error("Q2' has no linear chart");
  IntMatrix boundary_cols;
  for (std::size_t k = 0; k < r3; ++k) boundary_cols.push_back(chart->coords(y.d3().apply(t3.generator(k))));
  const IntMatrix boundary_rows = transpose(boundary_cols, chart->dim);

  for (std::size_t i = 0; i < n2; ++i) {
    LinearSystem single(r3);
    single.add_block("degree 2", boundary_rows, chart->coords(deltas[i]), chart->relations);
    if (!single.solve()) {
      out.obstruction = "-f₂ + g₂ on " + s2.generator_name(i) + " is " + t2.format(deltas[i]) +
                        ", which is not in the image of ∂₃'";
      out.failing_generator = i;
      return out;
    }
  }

  // The rule fixes alpha2 on triple commutators independently of the values.
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t c = 0; c < n2; ++c) {
        const IntVector v = ev.on_word(zero_values, triple_commutator_word(a, b, c));
        if (!t3.is_identity(v)) {
          out.obstruction = "the extension rule does not vanish on ((" + s2.generator_name(a) + ", " +
                            s2.generator_name(b) + "), " + s2.generator_name(c) + ")";
          return out;
        }
      }

  LinearSystem sys(unknowns);
  auto zero_rows = [&](std::size_t m) { return IntMatrix(m, zero_vector(unknowns)); };
  // alpha2(z) = sum_i {z}_i alpha2(x_i) + alpha2_0(z): rows for the linear part.
  auto alpha2_rows = [&](const IntVector& ab) {
    IntMatrix rows = zero_rows(r3);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t c = 0; c < r3; ++c) rows[c][idx2(i, c)] += ab[i];
    return rows;
  };
  auto alpha3_rows = [&](const IntVector& coeffs) {
    IntMatrix rows = zero_rows(r4);
    for (std::size_t j = 0; j < n3; ++j)
      for (std::size_t c = 0; c < r4; ++c) rows[c][idx3(j, c)] += coeffs[j];
    return rows;
  };
  const IntMatrix d4m = y.d4.matrix();  // r3 x r4

  for (std::size_t i = 0; i < n2; ++i) {
    IntMatrix rows = zero_rows(chart->dim);
    for (std::size_t r = 0; r < chart->dim; ++r)
      for (std::size_t c = 0; c < r3; ++c) rows[r][idx2(i, c)] = boundary_rows[r][c];
    sys.add_block("degree 2 on " + s2.generator_name(i), rows, chart->coords(deltas[i]), chart->relations);
  }
  for (std::size_t j = 0; j < n3; ++j) {
    const Element q = s3.generator(j);
    const Element bq = x.d3().apply(q);
    IntMatrix rows = alpha2_rows(s2.abelianize(bq));
    for (std::size_t r = 0; r < r3; ++r)
      for (std::size_t c = 0; c < r4; ++c) rows[r][idx3(j, c)] += d4m[r][c];
    const IntVector rhs = sub(std::get<IntVector>(difference(t3, f.f3.apply(q), g.f3.apply(q))),
                              ev.on(zero_values, bq));
    sys.add_block("degree 3 on " + s3.generator_name(j), rows, rhs, t3.relations());
  }
  for (std::size_t p = 0; p < n4; ++p) {
    const Element e = x.q4().generator(p);
    sys.add_block("degree 4 on " + x.q4().generator_name(p),
                  alpha3_rows(std::get<IntVector>(x.d4.apply(e))),
                  std::get<IntVector>(difference(t4, f.f4.apply(e), g.f4.apply(e))), t4.relations());
  }
  for (const auto& rel : s3.relations())
    sys.add_block("relations of Q3", alpha3_rows(rel), zero_vector(r4), t4.relations());
  if (x.under) {
    const UnderStructure& u = *x.under;
    for (std::size_t k = 0; k < u.base.q2().rank(); ++k) {
      const Element d = u.q2.apply(u.base.q2().generator(k));
      sys.add_block("alpha2 vanishes on D2", alpha2_rows(s2.abelianize(d)), neg(ev.on(zero_values, d)),
                    t3.relations());
    }
    for (std::size_t k = 0; k < u.base.q3().rank(); ++k)
      sys.add_block("alpha3 vanishes on D3",
                    alpha3_rows(std::get<IntVector>(u.q3.apply(u.base.q3().generator(k)))),
                    zero_vector(r4), t4.relations());
  }

  const auto sol = sys.solve();
  if (!sol) {
    out.obstruction = "the homotopy equations have no integer solution (first inconsistent: " +
                      sys.first_infeasible_block().value_or("?") + ")";
    return out;
  }

  // Generators that f2 kills are reduced first, concentrating alpha2 elsewhere.
  std::vector<std::size_t> order;
  for (bool killed : {false, true})
    for (std::size_t i = 0; i < n2; ++i)
      if (t2.is_identity(f.f2.apply(s2.generator(i))) == killed)
        for (std::size_t c = 0; c < r3; ++c) order.push_back(idx2(i, c));
  for (std::size_t k = n2 * r3; k < unknowns; ++k) order.push_back(k);
  const IntVector y_vec = canonical_solution(*sol, order);

  QCHomotopy h{{}, GroupHom::zero(s3, t4)};
  for (std::size_t i = 0; i < n2; ++i) {
    IntVector v(y_vec.begin() + static_cast<std::ptrdiff_t>(idx2(i, 0)),
                y_vec.begin() + static_cast<std::ptrdiff_t>(idx2(i, 0) + r3));
    h.alpha2.push_back(std::move(v));
  }
  std::vector<Element> a3;
  for (std::size_t j = 0; j < n3; ++j)
    a3.emplace_back(IntVector(y_vec.begin() + static_cast<std::ptrdiff_t>(idx3(j, 0)),
                              y_vec.begin() + static_cast<std::ptrdiff_t>(idx3(j, 0) + r4)));
  h.alpha3 = GroupHom(s3, t4, std::move(a3));

  SamplingOptions verify_opts;
  verify_opts.depth = 50;
  const Report check = verify_rq_homotopy(f, g, x, y, h, verify_opts);
  if (!check.passed()) throw std::logic_error("homotopy solver produced a witness that fails verification");
  out.witness = std::move(h);
  return out;
}

QCHomotopy reverse_homotopy(const QCHomotopy& h, const QCMorphism& f, const QCMorphism& g) {
  if (!f.f2.equals(g.f2)) throw std::invalid_argument("reversal by negation needs f2 = g2");
  QCHomotopy out{{}, h.alpha3};
  for (const auto& v : h.alpha2) out.alpha2.push_back(neg(v));
  std::vector<Element> a3;
  for (const auto& im : h.alpha3.images()) a3.push_back(h.alpha3.target().inv(im));
  out.alpha3 = GroupHom(h.alpha3.source(), h.alpha3.target(), std::move(a3));
  return out;
}

}  // namespace xq
