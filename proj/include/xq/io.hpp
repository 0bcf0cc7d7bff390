#pragma once

// JSON structure files: parsing with positioned diagnostics, validation by
// construction, and canonical serialization (sorted keys, two-space indent).
//
// Integers are JSON numbers when |x| <= 2^53 and decimal strings otherwise;
// either form is accepted on input.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "xq/crossed.hpp"
#include "xq/quadratic.hpp"
#include "xq/report.hpp"
#include "xq/rq_homotopy.hpp"

namespace xq {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, semantic };

  /// Syntax error at a 1-based line and column.
  ParseError(std::size_t line, std::size_t column, const std::string& expectation);
  /// Semantic error at a JSON pointer such as "/q2/rank".
  ParseError(std::string pointer, const std::string& expectation);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& pointer() const { return pointer_; }

 private:
  Kind kind_;
  std::size_t line_ = 0, column_ = 0;
  std::string pointer_;
};

Json encode_integer(const Integer& x);
Integer decode_integer(const Json& j, const std::string& pointer);

Json encode_group(const Group& g);
Group decode_group(const Json& j, const std::string& pointer);
Json encode_element(const Group& g, const Element& x);
Element decode_element(const Group& g, const Json& j, const std::string& pointer);
/// A homomorphism is the array of its generator images.
Json encode_hom(const GroupHom& h);
GroupHom decode_hom(const Group& source, const Group& target, const Json& j,
                    const std::string& pointer);

Json encode_rqm(const ReducedQuadraticModule& q);
ReducedQuadraticModule decode_rqm(const Json& j, const std::string& pointer);
Json encode_rqc4(const ReducedQuadraticComplex4& q);
ReducedQuadraticComplex4 decode_rqc4(const Json& j, const std::string& pointer);

/// Morphism between two named structures of a bundle.
struct MorphismEntry {
  std::string source, target;
  std::variant<QCMorphism, Xc3Morphism> map;
};

struct Bundle;
using Structure = std::variant<Group, PreCrossedModule, CrossedComplex3, ReducedQuadraticModule,
                               ReducedQuadraticComplex4, QuadraticModule>;

struct NamedStructure {
  std::string kind;
  Structure value;
};

struct Bundle {
  std::map<std::string, NamedStructure> structures;
  std::map<std::string, MorphismEntry> morphisms;

  const NamedStructure& structure(const std::string& name) const;
};

/// kind "rq_morphism" / "xc3_morphism": a morphism file referring to the
/// structures of a bundle by name.
MorphismEntry decode_morphism(const Bundle& b, const std::string& kind, const Json& body,
                              const std::string& pointer);
Json encode_morphism(const Bundle& b, const MorphismEntry& m);

Json encode_rq_homotopy(const QCHomotopy& h);
QCHomotopy decode_rq_homotopy(const Json& body, const ReducedQuadraticComplex4& source,
                              const ReducedQuadraticComplex4& target, const std::string& pointer);
Json encode_xc3_homotopy(const Xc3Homotopy& h);
Xc3Homotopy decode_xc3_homotopy(const Json& body, const CrossedComplex3& source,
                                const CrossedComplex3& target, const std::string& pointer);

/// Kinds: group, precrossed, crossed, xc3, qm, rqm, rqc4, bundle (validated in
/// full), and rq_morphism, xc3_morphism, rq_homotopy, xc3_homotopy (validated
/// in shape; they are resolved against a bundle when used).
struct StructureFile {
  std::string version = kFormatVersion;
  std::string kind;
  Json body;  // canonical payload: every top-level key except version and kind
};

/// Throws ParseError.
StructureFile parse_structure(const std::string& text);
/// Canonical text, ending with a newline.
std::string serialize_structure(const StructureFile& f);

StructureFile make_structure_file(const std::string& kind, Json body);

/// Decoders for the fully validated kinds.
Structure decode_structure(const std::string& kind, const Json& body, const std::string& pointer);
Json encode_structure(const Structure& s);
Bundle decode_bundle(const Json& body, const std::string& pointer);
Json encode_bundle(const Bundle& b);

Json report_to_json(const Report& r);

/// Canonical JSON text of any value (sorted keys, indent 2, trailing newline).
std::string canonical_dump(const Json& j);

}  // namespace xq
