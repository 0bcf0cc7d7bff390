#pragma once

// Group descriptors, elements and homomorphisms given on generators.
//
// Additive notation throughout: op(x, y) is "x + y" even when the group is not
// commutative.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "xq/integer.hpp"
#include "xq/lattice.hpp"
#include "xq/nil2.hpp"
#include "xq/word.hpp"

namespace xq {

enum class GroupKind { free, free_abelian, cyclic, free_nil2, fg_abelian };

const char* to_string(GroupKind kind);
std::optional<GroupKind> parse_group_kind(const std::string& s);

/// Free groups use words, free nil(2)-groups collected normal forms, and every
/// abelian kind a coefficient vector modulo the relation lattice. Vectors are
/// kept as given (not reduced); equality is decided modulo the relations.
using Element = std::variant<Word, Nil2Element, IntVector>;

using Rng = std::mt19937_64;

class Group {
 public:
  static Group free(std::size_t rank);
  static Group free_abelian(std::size_t rank);
  static Group cyclic(const Integer& order);
  static Group free_nil2(std::size_t rank);
  static Group fg_abelian(std::size_t rank, IntMatrix relations);

  GroupKind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  /// Relator rows (abelian kinds only; cyclic groups report [[order]]).
  const IntMatrix& relations() const { return relations_; }
  const Integer& order() const;  // cyclic only

  bool vector_represented() const;
  bool is_abelian() const;
  bool is_trivial() const;

  Group& with_names(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }
  std::string generator_name(std::size_t i) const;

  Element identity() const;
  Element generator(std::size_t i) const;
  Element op(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, const Integer& k) const;
  /// (x, y) = -x - y + x + y
  Element commutator(const Element& x, const Element& y) const;
  Element sum(const std::vector<Element>& xs) const;

  bool equal(const Element& x, const Element& y) const;
  bool is_identity(const Element& x) const;
  /// Unique representative: reduced word, normal form, or Hermite-reduced vector.
  Element canonical(const Element& x) const;

  /// Image in the free abelian group on the generators (exponent sums).
  IntVector abelianize(const Element& x) const;
  /// A word in the generators whose value is x.
  Word to_word(const Element& x) const;
  Element from_word(const Word& w) const;

  /// Throws if x does not have the shape of an element of this group.
  void validate(const Element& x) const;
  bool same_descriptor(const Group& other) const;

  Element random_element(Rng& rng, std::size_t max_length) const;
  std::string format(const Element& x) const;

  const HermiteForm& hermite() const { return *hnf_; }

 private:
  Group(GroupKind kind, std::size_t rank, IntMatrix relations);

  GroupKind kind_ = GroupKind::free;
  std::size_t rank_ = 0;
  IntMatrix relations_;
  std::shared_ptr<const HermiteForm> hnf_;
  std::vector<std::string> names_;
};

/// Is x - y in the row lattice of the relations of G?
bool fgab_equal(const Group& g, const IntVector& x, const IntVector& y);

/// Homomorphism determined by the images of the source generators.
class GroupHom {
 public:
  GroupHom(Group source, Group target, std::vector<Element> images);

  static GroupHom identity(const Group& g);
  static GroupHom zero(const Group& source, const Group& target);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(std::size_t i) const { return images_.at(i); }

  Element apply(const Element& x) const;
  Element apply(const Word& w) const;
  /// this after other: x -> this(other(x)).
  GroupHom after(const GroupHom& other) const;
  bool is_zero() const;
  /// Generator-wise equality of two homomorphisms with matching descriptors.
  bool equals(const GroupHom& other) const;

  /// Reason the generator images fail to define a homomorphism, if any:
  /// relators of abelian sources must map to zero with commuting images, and
  /// images of nil(2) sources must have trivial triple commutators.
  std::optional<std::string> well_defined_defect() const;

  /// Matrix whose column i is the image of generator i (vector targets only).
  IntMatrix matrix() const;

 private:
  Group source_;
  Group target_;
  std::vector<Element> images_;
};

/// Generators of g followed by their inverses, interleaved.
std::vector<Element> signed_generators(const Group& g);

/// Uniform random integer in [lo, hi]; portable across standard libraries.
long random_int(Rng& rng, long lo, long hi);

}  // namespace xq
