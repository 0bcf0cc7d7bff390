#include "xq/io.hpp"

#include <algorithm>
#include <regex>

namespace xq {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

[[noreturn]] void semantic(const std::string& pointer, const std::string& what) {
  throw ParseError(pointer.empty() ? "/" : pointer, what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) semantic(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) semantic(child(pointer, key), "missing required field \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& pointer, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) semantic(pointer, "expected an array");
  if (size && j.size() != *size)
    semantic(pointer, "expected an array of length " + std::to_string(*size) + ", found " +
                          std::to_string(j.size()));
  return j;
}

std::string string_at(const Json& j, const std::string& pointer) {
  if (!j.is_string()) semantic(pointer, "expected a string");
  return j.get<std::string>();
}

std::size_t size_at(const Json& j, const std::string& pointer) {
  const Integer v = decode_integer(j, pointer);
  if (v < 0) semantic(pointer, "expected a non-negative integer, found " + to_string(v));
  if (v > 1000000) semantic(pointer, "value " + to_string(v) + " is too large");
  return static_cast<std::size_t>(v.get_ui());
}

IntVector vector_at(const Json& j, const std::string& pointer, std::optional<std::size_t> size = {}) {
  array_at(j, pointer, size);
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_integer(j[i], child(pointer, i)));
  return out;
}

Json encode_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode_integer(x));
  return out;
}

// Runs a constructor, turning its validation errors into a positioned one.
template <class F>
auto guarded(const std::string& pointer, F make) -> decltype(make()) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    semantic(pointer, e.what());
  } catch (const std::out_of_range& e) {
    semantic(pointer, e.what());
  }
}

std::vector<Element> images_at(const Group& target, const Json& j, std::size_t count,
                               const std::string& pointer) {
  array_at(j, pointer, count);
  std::vector<Element> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(decode_element(target, j[i], child(pointer, i)));
  return out;
}

Json encode_action(const GroupAction& a) {
  switch (a.style()) {
    case GroupAction::Style::trivial: return {{"type", "trivial"}};
    case GroupAction::Style::conjugation: return {{"type", "conjugation"}};
    case GroupAction::Style::table: break;
  }
  Json fwd = Json::array(), inv = Json::array();
  for (std::size_t i = 0; i < a.acting().rank(); ++i) {
    fwd.push_back(encode_hom(a.forward(i)));
    inv.push_back(encode_hom(a.inverse(i)));
  }
  return {{"type", "table"}, {"forward", fwd}, {"inverse", inv}};
}

GroupAction decode_action(const Group& acting, const Group& acted, const Json& j,
                          const std::string& pointer) {
  const std::string type = string_at(field(j, "type", pointer), child(pointer, "type"));
  if (type == "trivial") return GroupAction::trivial(acting, acted);
  if (type == "conjugation") {
    if (!acting.same_descriptor(acted))
      semantic(pointer, "conjugation needs the acting and acted groups to coincide");
    return GroupAction::conjugation(acted);
  }
  if (type != "table") semantic(child(pointer, "type"), "unknown action type \"" + type + "\"");
  const std::string fp = child(pointer, "forward"), ip = child(pointer, "inverse");
  const Json& fwd = array_at(field(j, "forward", pointer), fp, acting.rank());
  const Json& inv = array_at(field(j, "inverse", pointer), ip, acting.rank());
  std::vector<GroupHom> f, g;
  for (std::size_t i = 0; i < acting.rank(); ++i) {
    f.push_back(decode_hom(acted, acted, fwd[i], child(fp, i)));
    g.push_back(decode_hom(acted, acted, inv[i], child(ip, i)));
  }
  return guarded(pointer, [&] { return GroupAction(acting, acted, f, g); });
}

Json encode_omega(const OmegaTable& omega) {
  Json out = Json::array();
  for (const auto& row : omega) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(encode_vector(v));
    out.push_back(r);
  }
  return out;
}

OmegaTable decode_omega(const Group& q2, const Group& q3, const Json& j, const std::string& pointer) {
  const std::size_t n = q2.abelianize(q2.identity()).size();
  array_at(j, pointer, n);
  OmegaTable out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rp = child(pointer, i);
    array_at(j[i], rp, n);
    for (std::size_t k = 0; k < n; ++k) out[i].push_back(vector_at(j[i][k], child(rp, k), q3.rank()));
  }
  return out;
}

Json encode_precrossed(const PreCrossedModule& m) {
  return {{"m1", encode_group(m.m1())},
          {"m2", encode_group(m.m2())},
          {"d", encode_hom(m.d)},
          {"action", encode_action(m.action)}};
}

PreCrossedModule decode_precrossed(const Json& j, const std::string& p) {
  const Group m1 = decode_group(field(j, "m1", p), child(p, "m1"));
  const Group m2 = decode_group(field(j, "m2", p), child(p, "m2"));
  GroupHom d = decode_hom(m2, m1, field(j, "d", p), child(p, "d"));
  GroupAction a = decode_action(m1, m2, field(j, "action", p), child(p, "action"));
  return guarded(p, [&] { return PreCrossedModule(d, a); });
}

Json encode_xc3(const CrossedComplex3& x) {
  Json under = Json::array();
  for (const auto& u : x.under) under.push_back(encode_element(x.m2(), u));
  return {{"m1", encode_group(x.m1())},          {"m2", encode_group(x.m2())},
          {"m3", encode_group(x.m3())},          {"d2", encode_hom(x.d2())},
          {"d3", encode_hom(x.d3)},              {"action2", encode_action(x.module.action)},
          {"action3", encode_action(x.action3)}, {"under", under}};
}

CrossedComplex3 decode_xc3(const Json& j, const std::string& p) {
  const Group m1 = decode_group(field(j, "m1", p), child(p, "m1"));
  const Group m2 = decode_group(field(j, "m2", p), child(p, "m2"));
  const Group m3 = decode_group(field(j, "m3", p), child(p, "m3"));
  GroupHom d2 = decode_hom(m2, m1, field(j, "d2", p), child(p, "d2"));
  GroupHom d3 = decode_hom(m3, m2, field(j, "d3", p), child(p, "d3"));
  GroupAction a2 = decode_action(m1, m2, field(j, "action2", p), child(p, "action2"));
  GroupAction a3 = decode_action(m1, m3, field(j, "action3", p), child(p, "action3"));
  std::vector<Element> under;
  if (j.contains("under")) {
    const std::string up = child(p, "under");
    const Json& u = array_at(j["under"], up);
    for (std::size_t k = 0; k < u.size(); ++k) under.push_back(decode_element(m2, u[k], child(up, k)));
  }
  PreCrossedModule module = guarded(p, [&] { return PreCrossedModule(d2, a2); });
  return CrossedComplex3{module, d3, a3, under};
}

Json encode_qm(const QuadraticModule& q) {
  return {{"q1", encode_group(q.q1())},
          {"q2", encode_group(q.q2())},
          {"q3", encode_group(q.q3())},
          {"d2", encode_hom(q.module.d)},
          {"d3", encode_hom(q.d3)},
          {"action2", encode_action(q.module.action)},
          {"action3", encode_action(q.action3)},
          {"omega", encode_omega(q.omega)}};
}

QuadraticModule decode_qm(const Json& j, const std::string& p) {
  const Group q1 = decode_group(field(j, "q1", p), child(p, "q1"));
  const Group q2 = decode_group(field(j, "q2", p), child(p, "q2"));
  const Group q3 = decode_group(field(j, "q3", p), child(p, "q3"));
  if (!q3.vector_represented()) semantic(child(p, "q3"), "Q3 must be an abelian group");
  GroupHom d2 = decode_hom(q2, q1, field(j, "d2", p), child(p, "d2"));
  GroupHom d3 = decode_hom(q3, q2, field(j, "d3", p), child(p, "d3"));
  GroupAction a2 = decode_action(q1, q2, field(j, "action2", p), child(p, "action2"));
  GroupAction a3 = decode_action(q1, q3, field(j, "action3", p), child(p, "action3"));
  OmegaTable omega = decode_omega(q2, q3, field(j, "omega", p), child(p, "omega"));
  PreCrossedModule module = guarded(p, [&] { return PreCrossedModule(d2, a2); });
  return QuadraticModule{module, d3, a3, omega};
}

QCMorphism decode_qc_maps(const ReducedQuadraticComplex4& s, const ReducedQuadraticComplex4& t,
                          const Json& j, const std::string& p) {
  return {decode_hom(s.q2(), t.q2(), field(j, "f2", p), child(p, "f2")),
          decode_hom(s.q3(), t.q3(), field(j, "f3", p), child(p, "f3")),
          decode_hom(s.q4(), t.q4(), field(j, "f4", p), child(p, "f4"))};
}

Xc3Morphism decode_xc3_maps(const CrossedComplex3& s, const CrossedComplex3& t, const Json& j,
                            const std::string& p) {
  return {decode_hom(s.m1(), t.m1(), field(j, "f1", p), child(p, "f1")),
          decode_hom(s.m2(), t.m2(), field(j, "f2", p), child(p, "f2")),
          decode_hom(s.m3(), t.m3(), field(j, "f3", p), child(p, "f3"))};
}

const std::vector<std::string>& full_kinds() {
  static const std::vector<std::string> k = {"group", "precrossed", "crossed", "xc3",
                                             "qm",    "rqm",        "rqc4",    "bundle"};
  return k;
}

const std::vector<std::string>& deferred_kinds() {
  static const std::vector<std::string> k = {"rq_morphism", "xc3_morphism", "rq_homotopy",
                                             "xc3_homotopy"};
  return k;
}

bool listed(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void shape_check_deferred(const std::string& kind, const Json& body) {
  if (!body.is_object()) semantic("", "expected an object");
  if (kind == "rq_morphism" || kind == "xc3_morphism") {
    string_at(field(body, "source", ""), "/source");
    string_at(field(body, "target", ""), "/target");
    for (const char* key : kind == "rq_morphism" ? std::vector<const char*>{"f2", "f3", "f4"}
                                                 : std::vector<const char*>{"f1", "f2", "f3"})
      array_at(field(body, key, ""), std::string("/") + key);
    return;
  }
  for (const char* key : kind == "rq_homotopy" ? std::vector<const char*>{"alpha2", "alpha3"}
                                               : std::vector<const char*>{"alpha"}) {
    const std::string p = std::string("/") + key;
    const Json& a = array_at(field(body, key, ""), p);
    for (std::size_t i = 0; i < a.size(); ++i) vector_at(a[i], child(p, i));
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& expectation)
    : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + expectation),
      kind_(Kind::syntax),
      line_(line),
      column_(column) {}

ParseError::ParseError(std::string pointer, const std::string& expectation)
    : std::runtime_error("invalid value at " + pointer + ": " + expectation),
      kind_(Kind::semantic),
      pointer_(std::move(pointer)) {}

Json encode_integer(const Integer& x) {
  static const Integer limit = Integer(1) << 53;
  if (abs(x) <= limit) return Json(x.get_si());
  return Json(x.get_str());
}

Integer decode_integer(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    static const std::regex decimal("-?(0|[1-9][0-9]*)");
    const std::string s = j.get<std::string>();
    if (std::regex_match(s, decimal)) return Integer(s);
    semantic(pointer, "expected a decimal integer string, found \"" + s + "\"");
  }
  semantic(pointer, "expected an integer");
}

Json encode_group(const Group& g) {
  Json out = {{"type", to_string(g.kind())}};
  if (g.kind() == GroupKind::cyclic)
    out["order"] = encode_integer(g.order());
  else
    out["rank"] = g.rank();
  if (g.kind() == GroupKind::fg_abelian) {
    Json rels = Json::array();
    for (const auto& r : g.relations()) rels.push_back(encode_vector(r));
    out["relations"] = rels;
  }
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

Group decode_group(const Json& j, const std::string& p) {
  const std::string tp = child(p, "type");
  const std::string type = string_at(field(j, "type", p), tp);
  const auto kind = parse_group_kind(type);
  if (!kind) semantic(tp, "unknown group type \"" + type + "\"");
  Group g = [&] {
    if (*kind == GroupKind::cyclic) {
      const Integer order = decode_integer(field(j, "order", p), child(p, "order"));
      if (order < 0) semantic(child(p, "order"), "expected a non-negative order");
      return Group::cyclic(order);
    }
    const std::size_t rank = size_at(field(j, "rank", p), child(p, "rank"));
    switch (*kind) {
      case GroupKind::free: return Group::free(rank);
      case GroupKind::free_abelian: return Group::free_abelian(rank);
      case GroupKind::free_nil2: return Group::free_nil2(rank);
      default: break;
    }
    const std::string rp = child(p, "relations");
    const Json& rels = array_at(field(j, "relations", p), rp);
    IntMatrix rows;
    for (std::size_t k = 0; k < rels.size(); ++k) rows.push_back(vector_at(rels[k], child(rp, k), rank));
    return Group::fg_abelian(rank, rows);
  }();
  if (j.contains("names")) {
    const std::string np = child(p, "names");
    const Json& names = array_at(j["names"], np, g.rank());
    std::vector<std::string> v;
    for (std::size_t k = 0; k < names.size(); ++k) v.push_back(string_at(names[k], child(np, k)));
    g.with_names(v);
  }
  return g;
}

Json encode_element(const Group& g, const Element& x) {
  g.validate(x);
  if (const auto* w = std::get_if<Word>(&x)) {
    Json letters = Json::array();
    for (const Letter& l : *w) {
      if (!letters.empty() && letters.back()[0] == l.gen &&
          (letters.back()[1].get<long>() > 0) == (l.sign > 0))
        letters.back()[1] = letters.back()[1].get<long>() + l.sign;
      else
        letters.push_back(Json::array({l.gen, l.sign}));
    }
    return {{"word", letters}};
  }
  if (const auto* e = std::get_if<Nil2Element>(&x))
    return {{"base", encode_vector(e->base())}, {"comm", encode_vector(e->comm())}};
  return encode_vector(std::get<IntVector>(x));
}

Element decode_element(const Group& g, const Json& j, const std::string& p) {
  switch (g.kind()) {
    case GroupKind::free: {
      const std::string wp = child(p, "word");
      const Json& letters = array_at(field(j, "word", p), wp);
      std::vector<std::pair<std::size_t, long>> powers;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        const std::string lp = child(wp, k);
        array_at(letters[k], lp, 2);
        const std::size_t gen = size_at(letters[k][0], child(lp, 0));
        if (gen >= g.rank()) semantic(child(lp, 0), "generator index out of range");
        const Integer e = decode_integer(letters[k][1], child(lp, 1));
        if (!e.fits_slong_p() || abs(e) > 1000000) semantic(child(lp, 1), "exponent too large");
        powers.emplace_back(gen, e.get_si());
      }
      return word_from_powers(powers);
    }
    case GroupKind::free_nil2: {
      IntVector base = vector_at(field(j, "base", p), child(p, "base"), g.rank());
      IntVector comm = vector_at(field(j, "comm", p), child(p, "comm"), commutator_count(g.rank()));
      return Nil2Element(std::move(base), std::move(comm));
    }
    default: return vector_at(j, p, g.rank());
  }
}

Json encode_hom(const GroupHom& h) {
  Json out = Json::array();
  for (const auto& im : h.images()) out.push_back(encode_element(h.target(), im));
  return out;
}

GroupHom decode_hom(const Group& source, const Group& target, const Json& j, const std::string& p) {
  std::vector<Element> ims = images_at(target, j, source.rank(), p);
  return guarded(p, [&] { return GroupHom(source, target, ims); });
}

Json encode_rqm(const ReducedQuadraticModule& q) {
  return {{"q2", encode_group(q.q2())},
          {"q3", encode_group(q.q3())},
          {"d3", encode_hom(q.d3)},
          {"omega", encode_omega(q.omega)}};
}

ReducedQuadraticModule decode_rqm(const Json& j, const std::string& p) {
  const Group q2 = decode_group(field(j, "q2", p), child(p, "q2"));
  if (q2.kind() != GroupKind::free_nil2) semantic(child(p, "q2"), "Q2 must be a free nil(2)-group");
  const Group q3 = decode_group(field(j, "q3", p), child(p, "q3"));
  if (!q3.vector_represented()) semantic(child(p, "q3"), "Q3 must be an abelian group");
  GroupHom d3 = decode_hom(q3, q2, field(j, "d3", p), child(p, "d3"));
  OmegaTable omega = decode_omega(q2, q3, field(j, "omega", p), child(p, "omega"));
  return guarded(p, [&] { return ReducedQuadraticModule(d3, omega); });
}

Json encode_rqc4(const ReducedQuadraticComplex4& q) {
  Json out = encode_rqm(q.rqm);
  out["q4"] = encode_group(q.q4());
  out["d4"] = encode_hom(q.d4);
  if (q.under)
    out["under"] = {{"base", encode_rqm(q.under->base)},
                    {"q2", encode_hom(q.under->q2)},
                    {"q3", encode_hom(q.under->q3)}};
  return out;
}

ReducedQuadraticComplex4 decode_rqc4(const Json& j, const std::string& p) {
  ReducedQuadraticModule rqm = decode_rqm(j, p);
  const Group q4 = decode_group(field(j, "q4", p), child(p, "q4"));
  if (!q4.vector_represented()) semantic(child(p, "q4"), "Q4 must be an abelian group");
  GroupHom d4 = decode_hom(q4, rqm.q3(), field(j, "d4", p), child(p, "d4"));
  std::optional<UnderStructure> under;
  if (j.contains("under")) {
    const std::string up = child(p, "under");
    const Json& u = j["under"];
    ReducedQuadraticModule base = decode_rqm(field(u, "base", up), child(up, "base"));
    GroupHom q2 = decode_hom(base.q2(), rqm.q2(), field(u, "q2", up), child(up, "q2"));
    GroupHom q3 = decode_hom(base.q3(), rqm.q3(), field(u, "q3", up), child(up, "q3"));
    under = UnderStructure{base, q2, q3};
  }
  return guarded(p, [&] { return ReducedQuadraticComplex4(rqm, d4, under); });
}

const NamedStructure& Bundle::structure(const std::string& name) const {
  auto it = structures.find(name);
  if (it == structures.end()) throw std::invalid_argument("no structure named \"" + name + "\"");
  return it->second;
}

MorphismEntry decode_morphism(const Bundle& b, const std::string& kind, const Json& j,
                              const std::string& p) {
  const std::string sp = child(p, "source"), tp = child(p, "target");
  const std::string source = string_at(field(j, "source", p), sp);
  const std::string target = string_at(field(j, "target", p), tp);
  auto find = [&](const std::string& name, const std::string& ptr) -> const NamedStructure& {
    auto it = b.structures.find(name);
    if (it == b.structures.end()) semantic(ptr, "no structure named \"" + name + "\"");
    return it->second;
  };
  const NamedStructure& s = find(source, sp);
  const NamedStructure& t = find(target, tp);
  if (s.kind != t.kind) semantic(tp, "source and target have different kinds");
  if (s.kind == "rqc4" && kind != "xc3_morphism")
    return {source, target,
            decode_qc_maps(std::get<ReducedQuadraticComplex4>(s.value),
                           std::get<ReducedQuadraticComplex4>(t.value), j, p)};
  if (s.kind == "xc3" && kind != "rq_morphism")
    return {source, target,
            decode_xc3_maps(std::get<CrossedComplex3>(s.value), std::get<CrossedComplex3>(t.value), j, p)};
  semantic(sp, "morphisms are supported between rqc4 or xc3 structures only");
}

Json encode_morphism(const Bundle& b, const MorphismEntry& m) {
  (void)b;
  Json out = {{"source", m.source}, {"target", m.target}};
  if (const auto* q = std::get_if<QCMorphism>(&m.map)) {
    out["f2"] = encode_hom(q->f2);
    out["f3"] = encode_hom(q->f3);
    out["f4"] = encode_hom(q->f4);
  } else {
    const auto& x = std::get<Xc3Morphism>(m.map);
    out["f1"] = encode_hom(x.f1);
    out["f2"] = encode_hom(x.f2);
    out["f3"] = encode_hom(x.f3);
  }
  return out;
}

Json encode_rq_homotopy(const QCHomotopy& h) {
  Json a2 = Json::array(), a3 = Json::array();
  for (const auto& v : h.alpha2) a2.push_back(encode_vector(v));
  for (const auto& im : h.alpha3.images()) a3.push_back(encode_vector(std::get<IntVector>(im)));
  return {{"alpha2", a2}, {"alpha3", a3}};
}

QCHomotopy decode_rq_homotopy(const Json& j, const ReducedQuadraticComplex4& s,
                              const ReducedQuadraticComplex4& t, const std::string& p) {
  const std::string ap = child(p, "alpha2");
  const Json& a2 = array_at(field(j, "alpha2", p), ap, s.q2().rank());
  QCHomotopy h{{}, GroupHom::zero(s.q3(), t.q4())};
  for (std::size_t i = 0; i < a2.size(); ++i) h.alpha2.push_back(vector_at(a2[i], child(ap, i), t.q3().rank()));
  h.alpha3 = decode_hom(s.q3(), t.q4(), field(j, "alpha3", p), child(p, "alpha3"));
  return h;
}

Json encode_xc3_homotopy(const Xc3Homotopy& h) {
  Json a = Json::array();
  for (const auto& v : h.alpha) a.push_back(encode_vector(v));
  return {{"alpha", a}};
}

Xc3Homotopy decode_xc3_homotopy(const Json& j, const CrossedComplex3& s, const CrossedComplex3& t,
                                const std::string& p) {
  if (!t.m3().vector_represented()) semantic(p, "M3' must be abelian");
  const std::string ap = child(p, "alpha");
  const Json& a = array_at(field(j, "alpha", p), ap, s.m2().rank());
  Xc3Homotopy h;
  for (std::size_t i = 0; i < a.size(); ++i) h.alpha.push_back(vector_at(a[i], child(ap, i), t.m3().rank()));
  return h;
}

Structure decode_structure(const std::string& kind, const Json& body, const std::string& p) {
  if (!body.is_object()) semantic(p, "expected an object");
  if (kind == "group") return decode_group(body, p);
  if (kind == "precrossed" || kind == "crossed") return decode_precrossed(body, p);
  if (kind == "xc3") return decode_xc3(body, p);
  if (kind == "qm") return decode_qm(body, p);
  if (kind == "rqm") return decode_rqm(body, p);
  if (kind == "rqc4") return decode_rqc4(body, p);
  semantic(child(p, "kind"), "unknown structure kind \"" + kind + "\"");
}

Json encode_structure(const Structure& s) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Group>) return encode_group(v);
        else if constexpr (std::is_same_v<T, PreCrossedModule>) return encode_precrossed(v);
        else if constexpr (std::is_same_v<T, CrossedComplex3>) return encode_xc3(v);
        else if constexpr (std::is_same_v<T, QuadraticModule>) return encode_qm(v);
        else if constexpr (std::is_same_v<T, ReducedQuadraticModule>) return encode_rqm(v);
        else return encode_rqc4(v);
      },
      s);
}

Bundle decode_bundle(const Json& j, const std::string& p) {
  Bundle b;
  const std::string sp = child(p, "structures");
  const Json& ss = field(j, "structures", p);
  if (!ss.is_object()) semantic(sp, "expected an object mapping names to structures");
  for (const auto& [name, body] : ss.items()) {
    const std::string np = child(sp, name);
    const std::string kind = string_at(field(body, "kind", np), child(np, "kind"));
    if (kind == "bundle" || !listed(full_kinds(), kind))
      semantic(child(np, "kind"), "unsupported structure kind \"" + kind + "\" in a bundle");
    Json inner = body;
    inner.erase("kind");
    b.structures.emplace(name, NamedStructure{kind, decode_structure(kind, inner, np)});
  }
  if (j.contains("morphisms")) {
    const std::string mp = child(p, "morphisms");
    const Json& ms = j["morphisms"];
    if (!ms.is_object()) semantic(mp, "expected an object mapping names to morphisms");
    for (const auto& [name, body] : ms.items())
      b.morphisms.emplace(name, decode_morphism(b, "", body, child(mp, name)));
  }
  return b;
}

Json encode_bundle(const Bundle& b) {
  Json ss = Json::object(), ms = Json::object();
  for (const auto& [name, s] : b.structures) {
    Json body = encode_structure(s.value);
    body["kind"] = s.kind;
    ss[name] = body;
  }
  for (const auto& [name, m] : b.morphisms) ms[name] = encode_morphism(b, m);
  return {{"structures", ss}, {"morphisms", ms}};
}

StructureFile make_structure_file(const std::string& kind, Json body) {
  StructureFile f;
  f.kind = kind;
  f.body = std::move(body);
  return f;
}

StructureFile parse_structure(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find(": syntax error"); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(line, column, what);
  }
  if (!doc.is_object()) semantic("", "expected a JSON object at the top level");
  StructureFile f;
  f.version = string_at(field(doc, "version", ""), "/version");
  if (f.version != kFormatVersion)
    semantic("/version", "unsupported version \"" + f.version + "\" (expected \"" + kFormatVersion + "\")");
  f.kind = string_at(field(doc, "kind", ""), "/kind");
  Json body = doc;
  body.erase("version");
  body.erase("kind");
  if (f.kind == "bundle") {
    f.body = encode_bundle(decode_bundle(body, ""));
  } else if (listed(full_kinds(), f.kind)) {
    f.body = encode_structure(decode_structure(f.kind, body, ""));
  } else if (listed(deferred_kinds(), f.kind)) {
    shape_check_deferred(f.kind, body);
    f.body = std::move(body);
  } else {
    semantic("/kind", "unknown structure kind \"" + f.kind + "\"");
  }
  return f;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize_structure(const StructureFile& f) {
  Json doc = f.body;
  doc["version"] = f.version;
  doc["kind"] = f.kind;
  return canonical_dump(doc);
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json entry = {{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"sampled", c.sampled}};
    if (c.witness) entry["witness"] = *c.witness;
    checks.push_back(entry);
  }
  Json out = {{"subject", r.subject()}, {"passed", r.passed()}, {"checks", checks}};
  if (r.sampling)
    out["sampling"] = {{"seed", r.sampling->seed},
                       {"depth", r.sampling->depth},
                       {"max_length", r.sampling->max_length}};
  return out;
}

}  // namespace xq
