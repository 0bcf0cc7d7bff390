#pragma once

#include <cstddef>
#include <vector>

#include "xq/group.hpp"
#include "xq/report.hpp"

namespace xq {

/// Right action of `acting` on `acted` by automorphisms, stored as the
/// automorphism of each acting generator and of its inverse; arbitrary
/// elements act letter by letter: x^(m + m') = (x^m)^m'.
class GroupAction {
 public:
  enum class Style { trivial, conjugation, table };

  GroupAction(Group acting, Group acted, std::vector<GroupHom> forward,
              std::vector<GroupHom> inverse);

  static GroupAction trivial(const Group& acting, const Group& acted);
  /// x^m = -m + x + m on a group acting on itself.
  static GroupAction conjugation(const Group& g);

  Style style() const { return style_; }
  const Group& acting() const { return acting_; }
  const Group& acted() const { return acted_; }
  const GroupHom& forward(std::size_t i) const { return forward_.at(i); }
  const GroupHom& inverse(std::size_t i) const { return inverse_.at(i); }

  /// x^m
  Element act(const Element& x, const Element& m) const;
  /// Matrix of x -> x^m on a vector-represented acted group (columns = images).
  IntMatrix matrix_of(const Element& m) const;

  /// Action axioms: each table entry is an automorphism with the stated
  /// inverse, the acting relators act trivially, and (sampled)
  /// x^(a+b) = (x^a)^b and (x+y)^a = x^a + y^a.
  Report check(const SamplingOptions& opts) const;

 private:
  Group acting_;
  Group acted_;
  std::vector<GroupHom> forward_;
  std::vector<GroupHom> inverse_;
  Style style_ = Style::table;
};

}  // namespace xq
