#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vlang/error.hpp"
#include "vlang/schema.hpp"

namespace vlang {

class AstNode;

/// A field value of a generic abstract-syntax tree. Immutable once built;
/// child nodes are shared, so copies are cheap.
class AstValue {
 public:
  enum class Kind { kIdent, kNode, kList, kOption, kStereotypes };

  static AstValue Ident(std::string name, SourcePos pos = {});
  static AstValue Node(AstNode node);
  static AstValue List(std::vector<AstValue> items = {});
  static AstValue Absent();
  static AstValue Present(AstValue value);
  static AstValue Stereotypes(std::set<std::string> names = {});

  Kind kind() const { return kind_; }
  const std::string& ident() const;
  const AstNode& node() const;
  /// Elements of a list, or zero/one element of an option.
  const std::vector<AstValue>& items() const;
  const std::set<std::string>& stereotypes() const;
  SourcePos pos() const { return pos_; }

  /// Structural equality; source positions are ignored.
  friend bool operator==(const AstValue& a, const AstValue& b);

 private:
  AstValue() = default;

  Kind kind_ = Kind::kIdent;
  std::string ident_;
  std::shared_ptr<const AstNode> node_;
  std::vector<AstValue> items_;
  std::set<std::string> stereotypes_;
  SourcePos pos_;
};

class AstNode {
 public:
  AstNode(std::string datatype, std::map<std::string, AstValue> fields,
          SourcePos pos = {});

  const std::string& datatype() const { return datatype_; }
  const std::map<std::string, AstValue>& fields() const { return fields_; }
  SourcePos pos() const { return pos_; }

  const AstValue* Find(std::string_view label) const;
  /// Throws Error(kInvalidModel) if the label is missing.
  const AstValue& at(std::string_view label) const;

  /// Copy with one field replaced (or added).
  AstNode With(const std::string& label, AstValue value) const;

  friend bool operator==(const AstNode& a, const AstNode& b);

 private:
  std::string datatype_;
  std::map<std::string, AstValue> fields_;
  SourcePos pos_;
};

/// Canonical one-line rendering, e.g.
///   CDDefinition(Name=D, classes=[CDCClass(Name=A, scl=[B], stereotypes={})])
/// Options print as `-` (absent) or `?value`.
std::string ToText(const AstNode& node);
std::string ToText(const AstValue& value);

/// Lists every way `node` fails to conform to `schema` (empty if it conforms).
std::vector<std::string> ConformanceErrors(const AstNode& node,
                                           const AstSchema& schema);
inline bool Conforms(const AstNode& node, const AstSchema& schema) {
  return ConformanceErrors(node, schema).empty();
}

/// Builds a node of `datatype` whose fields all hold their empty value
/// (empty list, absent option, empty stereotype set). Ident and node fields
/// must be supplied in `given`.
AstNode MakeNode(const AstSchema& schema, const std::string& datatype,
                 std::map<std::string, AstValue> given, SourcePos pos = {});

}  // namespace vlang
