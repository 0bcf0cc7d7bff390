#include "doctest.h"

#include "xq/group.hpp"
#include "xq/tensor.hpp"

using namespace xq;

namespace {

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.push_back(Integer(x));
  return out;
}

}  // namespace

TEST_CASE("group laws hold for every kind on random elements") {
  const std::vector<Group> groups = {Group::free(2), Group::free_abelian(3), Group::cyclic(5),
                                     Group::free_nil2(3), Group::fg_abelian(2, {v({2, -2})})};
  Rng rng(9);
  for (const Group& g : groups) {
    for (int k = 0; k < 100; ++k) {
      const Element x = g.random_element(rng, 5), y = g.random_element(rng, 5), z = g.random_element(rng, 5);
      CHECK(g.equal(g.op(g.op(x, y), z), g.op(x, g.op(y, z))));
      CHECK(g.is_identity(g.op(x, g.inv(x))));
      CHECK(g.equal(g.op(g.identity(), x), x));
      CHECK(g.equal(g.canonical(x), x));
      CHECK(g.equal(g.from_word(g.to_word(x)), x));
      if (g.is_abelian()) CHECK(g.equal(g.op(x, y), g.op(y, x)));
    }
  }
}

TEST_CASE("cyclic and finitely generated abelian equality is modulo relations") {
  const Group c = Group::cyclic(5);
  CHECK(c.is_identity(v({10})));
  CHECK(c.equal(v({7}), v({2})));
  CHECK_FALSE(c.equal(v({7}), v({3})));
  const Group g = Group::fg_abelian(2, {v({2, -2})});
  CHECK(g.equal(v({3, 0}), v({1, 2})));
  CHECK_FALSE(g.equal(v({1, 0}), v({0, 1})));
}

TEST_CASE("free groups are not abelian") {
  const Group f = Group::free(2);
  CHECK_FALSE(f.equal(f.op(f.generator(0), f.generator(1)), f.op(f.generator(1), f.generator(0))));
  CHECK_FALSE(f.is_identity(f.commutator(f.generator(0), f.generator(1))));
}

TEST_CASE("homomorphisms apply, compose and detect ill-defined images") {
  const Group q = Group::free_nil2(2), z = Group::free_abelian(1);
  const GroupHom ab(q, z, {v({1}), v({1})});
  CHECK(std::get<IntVector>(ab.apply(q.commutator(q.generator(0), q.generator(1)))) == v({0}));
  CHECK_FALSE(ab.well_defined_defect().has_value());

  const Group c4 = Group::cyclic(4), c6 = Group::cyclic(6);
  CHECK_FALSE(GroupHom(c4, c6, {v({3})}).well_defined_defect().has_value());
  CHECK(GroupHom(c4, c6, {v({1})}).well_defined_defect().has_value());

  const GroupHom swap(q, q, {q.generator(1), q.generator(0)});
  const GroupHom twice = swap.after(swap);
  CHECK(twice.equals(GroupHom::identity(q)));
  CHECK(q.equal(swap.apply(q.commutator(q.generator(0), q.generator(1))),
                q.commutator(q.generator(1), q.generator(0))));
  CHECK(GroupHom::zero(q, z).is_zero());
}

TEST_CASE("homomorphisms out of nil(2) preserve products on random words") {
  const Group q = Group::free_nil2(3), t = Group::free_nil2(2);
  const GroupHom f(q, t, {t.op(t.generator(0), t.generator(1)), t.inv(t.generator(1)), t.generator(0)});
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const Element x = q.random_element(rng, 6), y = q.random_element(rng, 6);
    CHECK(t.equal(f.apply(q.op(x, y)), t.op(f.apply(x), f.apply(y))));
  }
}

TEST_CASE("tensor_induced kills e' (x) e'' + e'' (x) e' under pr1") {
  // Basis (e, e', e''); pr1: e -> e, e' -> e, e'' -> 0 on the target Z<e>.
  const IntMatrix pr1 = {v({1, 1, 0})};
  const Tensor t = Tensor::basis(3, 1, 2) + Tensor::basis(3, 2, 1);
  CHECK(tensor_induced(pr1, t).is_zero());
  // (a, b) = (1, 1): 2ab = 2.
  CHECK(tensor_induced({v({1, 1, 1})}, t).at(0, 0) == 2);
}

TEST_CASE("tensor_induced is functorial and matches outer products") {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    IntMatrix f(2, IntVector(3)), g(3, IntVector(2));
    for (auto& r : f)
      for (auto& x : r) x = Integer(random_int(rng, -3, 3));
    for (auto& r : g)
      for (auto& x : r) x = Integer(random_int(rng, -3, 3));
    IntVector x(2), y(2);
    for (auto& c : x) c = Integer(random_int(rng, -3, 3));
    for (auto& c : y) c = Integer(random_int(rng, -3, 3));
    const Tensor t = Tensor::outer(x, y);
    CHECK(tensor_induced(f, tensor_induced(g, t)) == tensor_induced(mat_mul(f, g), t));
    CHECK(tensor_induced(g, t) == Tensor::outer(mat_vec(g, x), mat_vec(g, y)));
  }
}
