#include "doctest.h"

#include "xq/monoid.hpp"

using namespace xq;

namespace {

constexpr auto I = MonoidElement::I, T = MonoidElement::T, P1 = MonoidElement::P1, P2 = MonoidElement::P2;

ExtMonoidElement el(MonoidElement m, int x, int y) {
  return {m, {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)}};
}

}  // namespace

TEST_CASE("the 4x4 table of M") {
  const MonoidTable expected = {{{I, T, P1, P2}, {T, I, P1, P2}, {P1, P2, P1, P2}, {P2, P1, P1, P2}}};
  CHECK(monoid_M_table() == expected);
  CHECK(monoid_mul(T, T) == I);
  CHECK(monoid_mul(P1, P2) == P2);
  CHECK(monoid_mul(P2, T) == P1);
}

TEST_CASE("names round-trip") {
  for (MonoidElement m : kMonoidElements) CHECK(parse_monoid_element(to_string(m)) == m);
  CHECK_FALSE(parse_monoid_element("Q").has_value());
  CHECK(to_string(el(T, 1, 0)) == "(T,(1,0))");
}

TEST_CASE("composition in Mbar") {
  CHECK(mbar_compose(el(T, 1, 0), el(T, 0, 0)) == el(I, 1, 0));
  // (P', (x, y)) o (I, (x', y')) = (P', (x', x') + (x, y)) with I^* the identity.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int y1 = 0; y1 < 2; ++y1)
          CHECK(mbar_compose(el(P1, x, y), el(I, x1, y1)) == el(P1, x1 ^ x, x1 ^ y));
}

TEST_CASE("brute-force associativity and identity") {
  const auto all = mbar_elements();
  REQUIRE(all.size() == 16);
  for (const auto& a : all) {
    CHECK(mbar_compose(el(I, 0, 0), a) == a);
    CHECK(mbar_compose(a, el(I, 0, 0)) == a);
    for (const auto& b : all)
      for (const auto& c : all) CHECK(mbar_compose(mbar_compose(a, b), c) == mbar_compose(a, mbar_compose(b, c)));
  }
}

TEST_CASE("units: the 8 elements over I and T") {
  const auto units = mbar_units();
  REQUIRE(units.size() == 8);
  for (const auto& u : units) CHECK((u.m == I || u.m == T));
  // Independent search for inverses.
  const auto all = mbar_elements();
  std::size_t invertible = 0;
  for (const auto& a : all) {
    bool found = false;
    for (const auto& b : all)
      if (mbar_compose(a, b) == el(I, 0, 0) && mbar_compose(b, a) == el(I, 0, 0)) found = true;
    invertible += found;
    if (a.m == P1 || a.m == P2) CHECK_FALSE(found);
  }
  CHECK(invertible == 8);
}

TEST_CASE("unit group is Z2 semidirect (Z2 + Z2)") {
  const auto units = mbar_units();
  for (const auto& u : units)
    for (const auto& v : units)
      CHECK(unit_to_semidirect(mbar_compose(u, v)) == semidirect_mul(unit_to_semidirect(u), unit_to_semidirect(v)));
  // The group is not abelian.
  CHECK_FALSE(mbar_compose(el(T, 0, 0), el(I, 1, 0)) == mbar_compose(el(I, 1, 0), el(T, 0, 0)));
  CHECK(mbar_check_structure().passed());
}

TEST_CASE("bimodule axioms") {
  for (MonoidElement m : kMonoidElements)
    for (MonoidElement n : kMonoidElements)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const Z2Pair v{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)};
          CHECK(lower_action(monoid_mul(m, n), v) == lower_action(m, lower_action(n, v)));
          CHECK(upper_action(monoid_mul(m, n), v) == upper_action(n, upper_action(m, v)));
          CHECK(lower_action(m, upper_action(n, v)) == upper_action(n, lower_action(m, v)));
        }
}
