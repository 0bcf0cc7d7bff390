#include "xq/group.hpp"

#include <sstream>
#include <stdexcept>

namespace xq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* element_shape(const Element& x) {
  switch (x.index()) {
    case 0: return "word";
    case 1: return "nil(2) normal form";
    default: return "coefficient vector";
  }
}

}  // namespace

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::free: return "free";
    case GroupKind::free_abelian: return "free_abelian";
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::free_nil2: return "free_nil2";
    case GroupKind::fg_abelian: return "fg_abelian";
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(const std::string& s) {
  for (GroupKind k : {GroupKind::free, GroupKind::free_abelian, GroupKind::cyclic,
                      GroupKind::free_nil2, GroupKind::fg_abelian})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

long random_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Group::Group(GroupKind kind, std::size_t rank, IntMatrix relations)
    : kind_(kind), rank_(rank), relations_(std::move(relations)) {
  for (const auto& r : relations_)
    if (r.size() != rank_)
      throw std::invalid_argument("relation has width " + std::to_string(r.size()) +
                                  " but the group has rank " + std::to_string(rank_));
  hnf_ = std::make_shared<const HermiteForm>(hermite_form(relations_, rank_));
}

Group Group::free(std::size_t rank) { return Group(GroupKind::free, rank, {}); }
Group Group::free_abelian(std::size_t rank) { return Group(GroupKind::free_abelian, rank, {}); }
Group Group::free_nil2(std::size_t rank) { return Group(GroupKind::free_nil2, rank, {}); }

Group Group::cyclic(const Integer& order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  return Group(GroupKind::cyclic, 1, {{order}});
}

Group Group::fg_abelian(std::size_t rank, IntMatrix relations) {
  return Group(GroupKind::fg_abelian, rank, std::move(relations));
}

const Integer& Group::order() const {
  if (kind_ != GroupKind::cyclic) throw std::logic_error("order() is only defined for cyclic groups");
  return relations_.at(0).at(0);
}

bool Group::vector_represented() const {
  return kind_ == GroupKind::free_abelian || kind_ == GroupKind::cyclic ||
         kind_ == GroupKind::fg_abelian;
}

bool Group::is_abelian() const { return vector_represented() || rank_ <= 1; }

bool Group::is_trivial() const {
  if (rank_ == 0) return true;
  if (!vector_represented()) return false;
  for (std::size_t i = 0; i < rank_; ++i)
    if (!in_lattice(*hnf_, unit_vector(rank_, i))) return false;
  return true;
}

Group& Group::with_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != rank_)
    throw std::invalid_argument("generator name list does not match the rank");
  names_ = std::move(names);
  return *this;
}

std::string Group::generator_name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "g" + std::to_string(i + 1);
}

void Group::validate(const Element& x) const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(std::string("element (") + element_shape(x) +
                                ") does not belong to a " + to_string(kind_) + " group of rank " +
                                std::to_string(rank_) + ": " + why);
  };
  switch (kind_) {
    case GroupKind::free: {
      const Word* w = std::get_if<Word>(&x);
      if (!w) fail("expected a word");
      for (const Letter& l : *w)
        if (l.gen >= rank_ || (l.sign != 1 && l.sign != -1)) fail("bad letter");
      break;
    }
    case GroupKind::free_nil2: {
      const Nil2Element* e = std::get_if<Nil2Element>(&x);
      if (!e) fail("expected a nil(2) normal form");
      if (e->rank() != rank_) fail("wrong generator count");
      break;
    }
    default: {
      const IntVector* v = std::get_if<IntVector>(&x);
      if (!v) fail("expected a coefficient vector");
      if (v->size() != rank_) fail("wrong vector length");
    }
  }
}

bool Group::same_descriptor(const Group& other) const {
  return kind_ == other.kind_ && rank_ == other.rank_ && hnf_->rows == other.hnf_->rows;
}

Element Group::identity() const {
  switch (kind_) {
    case GroupKind::free: return Word{};
    case GroupKind::free_nil2: return Nil2Element(rank_);
    default: return zero_vector(rank_);
  }
}

Element Group::generator(std::size_t i) const {
  if (i >= rank_) throw std::out_of_range("generator index out of range");
  switch (kind_) {
    case GroupKind::free: return Word{{i, 1}};
    case GroupKind::free_nil2: return Nil2Element::generator(rank_, i);
    default: return unit_vector(rank_, i);
  }
}

Element Group::op(const Element& x, const Element& y) const {
  validate(x);
  validate(y);
  switch (kind_) {
    case GroupKind::free: return word_concat(std::get<Word>(x), std::get<Word>(y));
    case GroupKind::free_nil2: return nil2_op(std::get<Nil2Element>(x), std::get<Nil2Element>(y));
    default: return add(std::get<IntVector>(x), std::get<IntVector>(y));
  }
}

Element Group::inv(const Element& x) const {
  validate(x);
  switch (kind_) {
    case GroupKind::free: return word_inverse(std::get<Word>(x));
    case GroupKind::free_nil2: return nil2_inv(std::get<Nil2Element>(x));
    default: return neg(std::get<IntVector>(x));
  }
}

Element Group::pow(const Element& x, const Integer& k) const {
  validate(x);
  switch (kind_) {
    case GroupKind::free_nil2: return nil2_pow(std::get<Nil2Element>(x), k);
    case GroupKind::free: {
      const Word base = k < 0 ? word_inverse(std::get<Word>(x)) : std::get<Word>(x);
      Word out;
      for (Integer e = abs(k); e > 0; --e) out.insert(out.end(), base.begin(), base.end());
      return word_reduce(out);
    }
    default: return scale(k, std::get<IntVector>(x));
  }
}

Element Group::commutator(const Element& x, const Element& y) const {
  return op(op(inv(x), inv(y)), op(x, y));
}

Element Group::sum(const std::vector<Element>& xs) const {
  Element acc = identity();
  for (const auto& x : xs) acc = op(acc, x);
  return acc;
}

Element Group::canonical(const Element& x) const {
  validate(x);
  if (vector_represented()) return reduce_mod(*hnf_, std::get<IntVector>(x));
  if (kind_ == GroupKind::free) return word_reduce(std::get<Word>(x));
  return x;
}

bool Group::equal(const Element& x, const Element& y) const {
  if (vector_represented()) {
    validate(x);
    validate(y);
    return fgab_equal(*this, std::get<IntVector>(x), std::get<IntVector>(y));
  }
  return canonical(x) == canonical(y);
}

bool Group::is_identity(const Element& x) const { return equal(x, identity()); }

IntVector Group::abelianize(const Element& x) const {
  validate(x);
  return std::visit(overloaded{
                        [&](const Word& w) {
                          IntVector v = zero_vector(rank_);
                          for (const Letter& l : w) v[l.gen] += l.sign;
                          return v;
                        },
                        [](const Nil2Element& e) { return xq::abelianize(e); },
                        [](const IntVector& v) { return v; },
                    },
                    x);
}

Word Group::to_word(const Element& x) const {
  validate(x);
  return std::visit(overloaded{
                        [](const Word& w) { return w; },
                        [](const Nil2Element& e) { return nil2_to_word(e); },
                        [](const IntVector& v) {
                          Word w;
                          for (std::size_t i = 0; i < v.size(); ++i) {
                            const int sign = v[i] < 0 ? -1 : 1;
                            for (Integer k = abs(v[i]); k > 0; --k) w.push_back({i, sign});
                          }
                          return w;
                        },
                    },
                    x);
}

Element Group::from_word(const Word& w) const {
  for (const Letter& l : w)
    if (l.gen >= rank_) throw std::out_of_range("generator index out of range in word");
  switch (kind_) {
    case GroupKind::free: return word_reduce(w);
    case GroupKind::free_nil2: return nil2_normalize(w, rank_);
    default: {
      IntVector v = zero_vector(rank_);
      for (const Letter& l : w) v[l.gen] += l.sign;
      return v;
    }
  }
}

Element Group::random_element(Rng& rng, std::size_t max_length) const {
  if (rank_ == 0) return identity();
  const auto len = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(max_length)));
  Word w;
  for (std::size_t k = 0; k < len; ++k)
    w.push_back({static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(rank_) - 1)),
                 random_int(rng, 0, 1) ? 1 : -1});
  return from_word(w);
}

std::string Group::format(const Element& x) const {
  validate(x);
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Integer& c, const std::string& sym) {
    if (c == 0) return;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    const Integer a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << sym;
    first = false;
  };
  std::visit(overloaded{
                 [&](const Word& w) {
                   for (const Letter& l : w) term(l.sign, generator_name(l.gen));
                 },
                 [&](const Nil2Element& e) {
                   for (std::size_t i = 0; i < rank_; ++i) term(e.base()[i], generator_name(i));
                   for (std::size_t i = 0; i < rank_; ++i)
                     for (std::size_t j = i + 1; j < rank_; ++j)
                       term(e.comm_at(i, j),
                            "(" + generator_name(i) + "," + generator_name(j) + ")");
                 },
                 [&](const IntVector& v) {
                   for (std::size_t i = 0; i < rank_; ++i) term(v[i], generator_name(i));
                 },
             },
             x);
  return first ? "0" : os.str();
}

bool fgab_equal(const Group& g, const IntVector& x, const IntVector& y) {
  if (!g.vector_represented()) throw std::invalid_argument("fgab_equal needs an abelian group");
  if (x.size() != g.rank() || y.size() != g.rank())
    throw std::invalid_argument("vector length does not match the group rank");
  return in_lattice(g.hermite(), sub(x, y));
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(Group source, Group target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank())
    throw std::invalid_argument("homomorphism needs " + std::to_string(source_.rank()) +
                                " generator images, got " + std::to_string(images_.size()));
  for (const auto& im : images_) target_.validate(im);
}

GroupHom GroupHom::identity(const Group& g) {
  std::vector<Element> ims;
  for (std::size_t i = 0; i < g.rank(); ++i) ims.push_back(g.generator(i));
  return GroupHom(g, g, std::move(ims));
}

GroupHom GroupHom::zero(const Group& source, const Group& target) {
  return GroupHom(source, target, std::vector<Element>(source.rank(), target.identity()));
}

Element GroupHom::apply(const Word& w) const {
  Element acc = target_.identity();
  for (const Letter& l : w) {
    if (l.gen >= images_.size()) throw std::out_of_range("generator index out of range");
    acc = target_.op(acc, l.sign > 0 ? images_[l.gen] : target_.inv(images_[l.gen]));
  }
  return acc;
}

Element GroupHom::apply(const Element& x) const {
  if (target_.vector_represented()) {
    // Linear in the abelianized source.
    const IntVector a = source_.abelianize(x);
    IntVector acc = zero_vector(target_.rank());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) axpy(acc, a[i], std::get<IntVector>(images_[i]));
    return acc;
  }
  if (const auto* e = std::get_if<Nil2Element>(&x)) {
    source_.validate(x);
    Element acc = target_.identity();
    for (std::size_t i = 0; i < e->rank(); ++i)
      if (e->base()[i] != 0) acc = target_.op(acc, target_.pow(images_[i], e->base()[i]));
    for (std::size_t i = 0; i < e->rank(); ++i)
      for (std::size_t j = i + 1; j < e->rank(); ++j)
        if (e->comm_at(i, j) != 0)
          acc = target_.op(
              acc, target_.pow(target_.commutator(images_[i], images_[j]), e->comm_at(i, j)));
    return acc;
  }
  if (const auto* v = std::get_if<IntVector>(&x)) {
    source_.validate(x);
    Element acc = target_.identity();
    for (std::size_t i = 0; i < v->size(); ++i)
      if ((*v)[i] != 0) acc = target_.op(acc, target_.pow(images_[i], (*v)[i]));
    return acc;
  }
  return apply(source_.to_word(x));
}

GroupHom GroupHom::after(const GroupHom& other) const {
  if (!other.target().same_descriptor(source_))
    throw std::invalid_argument("cannot compose: target and source differ");
  std::vector<Element> ims;
  for (const auto& im : other.images()) ims.push_back(apply(im));
  return GroupHom(other.source(), target_, std::move(ims));
}

bool GroupHom::is_zero() const {
  for (const auto& im : images_)
    if (!target_.is_identity(im)) return false;
  return true;
}

bool GroupHom::equals(const GroupHom& other) const {
  if (!source_.same_descriptor(other.source_) || !target_.same_descriptor(other.target_))
    return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!target_.equal(images_[i], other.images_[i])) return false;
  return true;
}

std::optional<std::string> GroupHom::well_defined_defect() const {
  const std::size_t n = source_.rank();
  const bool abelian_source = source_.is_abelian();
  if (abelian_source && !target_.is_abelian()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!target_.is_identity(target_.commutator(images_[i], images_[j])))
          return "images of " + source_.generator_name(i) + " and " + source_.generator_name(j) +
                 " do not commute";
  }
  if (source_.vector_represented()) {
    for (const auto& rel : source_.relations()) {
      Element acc = target_.identity();
      for (std::size_t i = 0; i < n; ++i)
        if (rel[i] != 0) acc = target_.op(acc, target_.pow(images_[i], rel[i]));
      if (!target_.is_identity(acc))
        return "relator " + to_string(rel) + " maps to " + target_.format(acc);
    }
  }
  if (source_.kind() == GroupKind::free_nil2 && !target_.is_abelian() &&
      target_.kind() != GroupKind::free_nil2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Element t =
              target_.commutator(target_.commutator(images_[i], images_[j]), images_[k]);
          if (!target_.is_identity(t)) return "images generate a group of class > 2";
        }
  }
  return std::nullopt;
}

IntMatrix GroupHom::matrix() const {
  if (!target_.vector_represented()) throw std::logic_error("matrix() needs a vector target");
  IntMatrix m(target_.rank(), zero_vector(source_.rank()));
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const IntVector& v = std::get<IntVector>(images_[j]);
    for (std::size_t i = 0; i < v.size(); ++i) m[i][j] = v[i];
  }
  return m;
}

std::vector<Element> signed_generators(const Group& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.push_back(g.generator(i));
    out.push_back(g.inv(g.generator(i)));
  }
  return out;
}

}  // namespace xq
