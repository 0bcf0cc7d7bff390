#pragma once

// The monoid M = {I, T, P', P''} of canonical self-maps of S^2 x S^2, its
// bimodule V = Z2 + Z2 and the split linear extension Mbar = M x V.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xq/report.hpp"

namespace xq {

enum class MonoidElement : std::uint8_t { I, T, P1, P2 };  // P1 = P', P2 = P''

inline constexpr std::array<MonoidElement, 4> kMonoidElements = {
    MonoidElement::I, MonoidElement::T, MonoidElement::P1, MonoidElement::P2};

const char* to_string(MonoidElement m);
std::optional<MonoidElement> parse_monoid_element(const std::string& s);

/// Row m, column m' holds m m'.
using MonoidTable = std::array<std::array<MonoidElement, 4>, 4>;
const MonoidTable& monoid_M_table();
MonoidElement monoid_mul(MonoidElement m, MonoidElement n);

/// (x, y) in Z2 + Z2, entries 0 or 1.
struct Z2Pair {
  std::uint8_t x = 0, y = 0;
  friend bool operator==(const Z2Pair&, const Z2Pair&) = default;
};

Z2Pair operator+(Z2Pair u, Z2Pair v);
/// m_* and m^*: the left and right actions on V.
Z2Pair lower_action(MonoidElement m, Z2Pair v);
Z2Pair upper_action(MonoidElement m, Z2Pair v);

struct ExtMonoidElement {
  MonoidElement m = MonoidElement::I;
  Z2Pair v;
  friend bool operator==(const ExtMonoidElement&, const ExtMonoidElement&) = default;
};

std::string to_string(const ExtMonoidElement& u);

/// (m, v) o (m', v') = (m m', m_* v' + m'^* v)
ExtMonoidElement mbar_compose(const ExtMonoidElement& u, const ExtMonoidElement& v);
/// All 16 elements, ordered by m then (x, y).
std::vector<ExtMonoidElement> mbar_elements();
std::size_t mbar_index(const ExtMonoidElement& u);
/// Elements with a two-sided inverse, in mbar_elements() order.
std::vector<ExtMonoidElement> mbar_units();

/// Element (s, (x, y)) of Z2 x| (Z2 + Z2), the generator of Z2 swapping
/// coordinates: (s, v)(s', v') = (s + s', v + sigma^s v').
struct SemidirectElement {
  std::uint8_t s = 0;
  Z2Pair v;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement semidirect_mul(const SemidirectElement& a, const SemidirectElement& b);
/// (T^s, v) -> (s, v)
SemidirectElement unit_to_semidirect(const ExtMonoidElement& u);

/// Exhaustive checks: associativity on all triples, two-sided identity,
/// bimodule axioms, unit count and closure, and the isomorphism of the unit
/// group with the semidirect product (full table comparison).
Report mbar_check_structure();

}  // namespace xq
