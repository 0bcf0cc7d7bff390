#include "xq/monoid.hpp"

#include <stdexcept>

namespace xq {

namespace {

using M = MonoidElement;

std::size_t idx(MonoidElement m) { return static_cast<std::size_t>(m); }

std::string pair_string(Z2Pair v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::vector<Z2Pair> all_pairs() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

}  // namespace

const char* to_string(MonoidElement m) {
  switch (m) {
    case M::I: return "I";
    case M::T: return "T";
    case M::P1: return "P'";
    case M::P2: return "P''";
  }
  return "?";
}

std::optional<MonoidElement> parse_monoid_element(const std::string& s) {
  for (MonoidElement m : kMonoidElements)
    if (s == to_string(m)) return m;
  return std::nullopt;
}

const MonoidTable& monoid_M_table() {
  static const MonoidTable table = {{
      {M::I, M::T, M::P1, M::P2},
      {M::T, M::I, M::P1, M::P2},
      {M::P1, M::P2, M::P1, M::P2},
      {M::P2, M::P1, M::P1, M::P2},
  }};
  return table;
}

MonoidElement monoid_mul(MonoidElement m, MonoidElement n) { return monoid_M_table()[idx(m)][idx(n)]; }

Z2Pair operator+(Z2Pair u, Z2Pair v) {
  return {static_cast<std::uint8_t>(u.x ^ v.x), static_cast<std::uint8_t>(u.y ^ v.y)};
}

Z2Pair lower_action(MonoidElement m, Z2Pair v) {
  switch (m) {
    case M::I: return v;
    case M::T: return {v.y, v.x};
    case M::P1: return {v.x, v.x};
    case M::P2: return {v.y, v.y};
  }
  throw std::logic_error("unknown monoid element");
}

Z2Pair upper_action(MonoidElement m, Z2Pair v) {
  switch (m) {
    case M::I:
    case M::T: return v;
    case M::P1:
    case M::P2: return {};
  }
  throw std::logic_error("unknown monoid element");
}

std::string to_string(const ExtMonoidElement& u) {
  return std::string("(") + to_string(u.m) + "," + pair_string(u.v) + ")";
}

ExtMonoidElement mbar_compose(const ExtMonoidElement& u, const ExtMonoidElement& v) {
  return {monoid_mul(u.m, v.m), lower_action(u.m, v.v) + upper_action(v.m, u.v)};
}

std::vector<ExtMonoidElement> mbar_elements() {
  std::vector<ExtMonoidElement> out;
  for (MonoidElement m : kMonoidElements)
    for (Z2Pair v : all_pairs()) out.push_back({m, v});
  return out;
}

std::size_t mbar_index(const ExtMonoidElement& u) { return 4 * idx(u.m) + 2 * u.v.x + u.v.y; }

std::vector<ExtMonoidElement> mbar_units() {
  const ExtMonoidElement one{};
  const auto all = mbar_elements();
  std::vector<ExtMonoidElement> out;
  for (const auto& u : all)
    for (const auto& v : all)
      if (mbar_compose(u, v) == one && mbar_compose(v, u) == one) {
        out.push_back(u);
        break;
      }
  return out;
}

SemidirectElement semidirect_mul(const SemidirectElement& a, const SemidirectElement& b) {
  const Z2Pair moved = a.s ? Z2Pair{b.v.y, b.v.x} : b.v;
  return {static_cast<std::uint8_t>(a.s ^ b.s), a.v + moved};
}

SemidirectElement unit_to_semidirect(const ExtMonoidElement& u) {
  if (u.m != M::I && u.m != M::T) throw std::invalid_argument(to_string(u) + " is not a unit");
  return {static_cast<std::uint8_t>(u.m == M::T ? 1 : 0), u.v};
}

Report mbar_check_structure() {
  Report rep("split linear extension Mbar = M x (Z2 + Z2)");
  const auto all = mbar_elements();
  const ExtMonoidElement one{};

  std::optional<std::string> bad;
  for (MonoidElement a : kMonoidElements)
    for (MonoidElement b : kMonoidElements)
      for (MonoidElement c : kMonoidElements)
        if (!bad && monoid_mul(monoid_mul(a, b), c) != monoid_mul(a, monoid_mul(b, c)))
          bad = std::string(to_string(a)) + " " + to_string(b) + " " + to_string(c);
  rep.record("M.associative", "M is associative (64 triples)", bad);

  bad.reset();
  for (MonoidElement a : kMonoidElements)
    for (MonoidElement b : kMonoidElements)
      for (Z2Pair v : all_pairs())
        for (Z2Pair w : all_pairs()) {
          if (bad) break;
          const MonoidElement ab = monoid_mul(a, b);
          if (lower_action(ab, v) != lower_action(a, lower_action(b, v)))
            bad = std::string("(ab)_* at a = ") + to_string(a) + ", b = " + to_string(b);
          else if (upper_action(ab, v) != upper_action(b, upper_action(a, v)))
            bad = std::string("(ab)^* at a = ") + to_string(a) + ", b = " + to_string(b);
          else if (lower_action(a, upper_action(b, v)) != upper_action(b, lower_action(a, v)))
            bad = std::string("a_* b^* != b^* a_* at a = ") + to_string(a) + ", b = " + to_string(b);
          else if (lower_action(a, v + w) != lower_action(a, v) + lower_action(a, w) ||
                   upper_action(a, v + w) != upper_action(a, v) + upper_action(a, w))
            bad = std::string("additivity at ") + to_string(a);
        }
  rep.record("V.bimodule", "Z2 + Z2 is an M-bimodule", bad);

  bad.reset();
  std::size_t triples = 0;
  for (const auto& u : all)
    for (const auto& v : all)
      for (const auto& w : all) {
        ++triples;
        if (!bad && mbar_compose(mbar_compose(u, v), w) != mbar_compose(u, mbar_compose(v, w)))
          bad = to_string(u) + " " + to_string(v) + " " + to_string(w);
      }
  rep.record("Mbar.associative", "Mbar is associative (" + std::to_string(triples) + " triples)", bad);

  bad.reset();
  for (const auto& u : all)
    if (!bad && (mbar_compose(one, u) != u || mbar_compose(u, one) != u)) bad = to_string(u);
  rep.record("Mbar.identity", "(I,(0,0)) is a two-sided identity", bad);

  const auto units = mbar_units();
  bad.reset();
  if (units.size() != 8) bad = std::to_string(units.size()) + " units";
  for (const auto& u : all) {
    const bool is_unit = u.m == M::I || u.m == M::T;
    bool listed = false;
    for (const auto& w : units) listed = listed || w == u;
    if (!bad && is_unit != listed) bad = to_string(u);
  }
  rep.record("units.count", "exactly the 8 elements over I and T are units", bad);

  bad.reset();
  for (const auto& u : units)
    for (const auto& v : units) {
      const auto uv = mbar_compose(u, v);
      bool listed = false;
      for (const auto& w : units) listed = listed || w == uv;
      if (!bad && !listed) bad = to_string(u) + " o " + to_string(v);
    }
  rep.record("units.closed", "units are closed under composition", bad);

  bad.reset();
  std::size_t compared = 0;
  for (const auto& u : units)
    for (const auto& v : units) {
      ++compared;
      if (!bad && unit_to_semidirect(mbar_compose(u, v)) !=
                      semidirect_mul(unit_to_semidirect(u), unit_to_semidirect(v)))
        bad = to_string(u) + " o " + to_string(v);
    }
  for (std::size_t i = 0; i < units.size() && !bad; ++i)
    for (std::size_t j = i + 1; j < units.size(); ++j)
      if (unit_to_semidirect(units[i]) == unit_to_semidirect(units[j]))
        bad = "not injective: " + to_string(units[i]) + ", " + to_string(units[j]);
  rep.record("units.semidirect",
             "(T^s, v) -> (s, v) is an isomorphism onto Z2 x| (Z2 + Z2) (" +
                 std::to_string(compared) + " products compared)",
             bad);
  return rep;
}

}  // namespace xq
