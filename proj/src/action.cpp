#include "xq/action.hpp"

#include <stdexcept>

namespace xq {

GroupAction::GroupAction(Group acting, Group acted, std::vector<GroupHom> forward,
                         std::vector<GroupHom> inverse)
    : acting_(std::move(acting)),
      acted_(std::move(acted)),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)) {
  if (forward_.size() != acting_.rank() || inverse_.size() != acting_.rank())
    throw std::invalid_argument("action table needs one automorphism (and inverse) per acting generator");
  for (const auto* table : {&forward_, &inverse_})
    for (const GroupHom& h : *table)
      if (!h.source().same_descriptor(acted_) || !h.target().same_descriptor(acted_))
        throw std::invalid_argument("action table entries must be endomorphisms of the acted group");
}

GroupAction GroupAction::trivial(const Group& acting, const Group& acted) {
  std::vector<GroupHom> ids(acting.rank(), GroupHom::identity(acted));
  GroupAction a(acting, acted, ids, ids);
  a.style_ = Style::trivial;
  return a;
}

GroupAction GroupAction::conjugation(const Group& g) {
  std::vector<GroupHom> fwd, inv;
  for (std::size_t m = 0; m < g.rank(); ++m) {
    const Element gm = g.generator(m);
    std::vector<Element> f, b;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const Element x = g.generator(i);
      f.push_back(g.op(g.op(g.inv(gm), x), gm));
      b.push_back(g.op(g.op(gm, x), g.inv(gm)));
    }
    fwd.emplace_back(g, g, std::move(f));
    inv.emplace_back(g, g, std::move(b));
  }
  GroupAction a(g, g, std::move(fwd), std::move(inv));
  a.style_ = Style::conjugation;
  return a;
}

Element GroupAction::act(const Element& x, const Element& m) const {
  acted_.validate(x);
  if (style_ == Style::trivial) return acted_.canonical(x);
  Element y = x;
  for (const Letter& l : acting_.to_word(m)) y = (l.sign > 0 ? forward_ : inverse_)[l.gen].apply(y);
  return y;
}

IntMatrix GroupAction::matrix_of(const Element& m) const {
  if (!acted_.vector_represented()) throw std::logic_error("matrix_of needs a vector-represented module");
  IntMatrix acc = identity_matrix(acted_.rank());
  // x^(l1 + l2 + ...) applies l1 first, so later letters multiply on the left.
  for (const Letter& l : acting_.to_word(m))
    acc = mat_mul((l.sign > 0 ? forward_ : inverse_)[l.gen].matrix(), acc);
  return acc;
}

Report GroupAction::check(const SamplingOptions& opts) const {
  Report rep("action");
  const std::size_t na = acting_.rank();
  const std::size_t nx = acted_.rank();

  // Table entries are well-defined endomorphisms.
  {
    std::optional<std::string> bad;
    for (std::size_t m = 0; m < na && !bad; ++m)
      for (const GroupHom* h : {&forward_[m], &inverse_[m]})
        if (auto d = h->well_defined_defect()) {
          bad = "action of " + acting_.generator_name(m) + ": " + *d;
          break;
        }
    if (bad)
      rep.fail("action.endomorphism", "each generator acts by a well-defined endomorphism", *bad);
    else
      rep.pass("action.endomorphism", "each generator acts by a well-defined endomorphism");
  }

  // forward and inverse are mutually inverse on generators.
  {
    std::optional<std::string> bad;
    for (std::size_t m = 0; m < na && !bad; ++m)
      for (std::size_t i = 0; i < nx && !bad; ++i) {
        const Element x = acted_.generator(i);
        if (!acted_.equal(inverse_[m].apply(forward_[m].apply(x)), x) ||
            !acted_.equal(forward_[m].apply(inverse_[m].apply(x)), x))
          bad = "generator " + acted_.generator_name(i) + " under " + acting_.generator_name(m);
      }
    if (bad)
      rep.fail("action.invertible", "x^(m - m) = x on generators", *bad);
    else
      rep.pass("action.invertible", "x^(m - m) = x on generators");
  }

  // Relators of the acting group act trivially.
  {
    std::vector<Word> relators;
    if (acting_.vector_represented()) {
      for (const auto& rel : acting_.relations()) relators.push_back(acting_.to_word(IntVector(rel)));
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = a + 1; b < na; ++b)
          relators.push_back({{a, -1}, {b, -1}, {a, 1}, {b, 1}});
    } else if (acting_.kind() == GroupKind::free_nil2) {
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = a + 1; b < na; ++b)
          for (std::size_t c = 0; c < na; ++c) {
            const Word ab{{a, -1}, {b, -1}, {a, 1}, {b, 1}};
            Word w = word_inverse(ab);
            w.push_back({c, -1});
            w.insert(w.end(), ab.begin(), ab.end());
            w.push_back({c, 1});
            relators.push_back(w);
          }
    }
    std::optional<std::string> bad;
    for (const Word& r : relators) {
      for (std::size_t i = 0; i < nx && !bad; ++i) {
        Element y = acted_.generator(i);
        for (const Letter& l : r) y = (l.sign > 0 ? forward_ : inverse_)[l.gen].apply(y);
        if (!acted_.equal(y, acted_.generator(i)))
          bad = "a relator of the acting group moves " + acted_.generator_name(i);
      }
      if (bad) break;
    }
    if (bad)
      rep.fail("action.relators", "relators of the acting group act trivially", *bad);
    else
      rep.pass("action.relators", "relators of the acting group act trivially");
  }

  Rng rng(opts.seed);
  std::optional<std::string> comp_bad, add_bad;
  for (std::size_t s = 0; s < opts.depth; ++s) {
    const Element x = acted_.random_element(rng, opts.max_length);
    const Element y = acted_.random_element(rng, opts.max_length);
    const Element a = acting_.random_element(rng, opts.max_length);
    const Element b = acting_.random_element(rng, opts.max_length);
    if (!comp_bad && !acted_.equal(act(x, acting_.op(a, b)), act(act(x, a), b)))
      comp_bad = "x = " + acted_.format(x) + ", a = " + acting_.format(a) + ", b = " + acting_.format(b);
    if (!add_bad && !acted_.equal(act(acted_.op(x, y), a), acted_.op(act(x, a), act(y, a))))
      add_bad = "x = " + acted_.format(x) + ", y = " + acted_.format(y) + ", a = " + acting_.format(a);
  }
  if (comp_bad)
    rep.fail("action.composition", "x^(a+b) = (x^a)^b", *comp_bad, opts.depth);
  else
    rep.pass("action.composition", "x^(a+b) = (x^a)^b", opts.depth);
  if (add_bad)
    rep.fail("action.additivity", "(x+y)^a = x^a + y^a", *add_bad, opts.depth);
  else
    rep.pass("action.additivity", "(x+y)^a = x^a + y^a", opts.depth);
  return rep;
}

}  // namespace xq
