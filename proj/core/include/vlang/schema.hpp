#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlang/grammar.hpp"

namespace vlang {

/// Type of one datatype field. List and option carry exactly one element
/// type in `element`.
struct FieldType {
  enum class Kind { kIdent, kNode, kList, kOption, kStereotypes };

  Kind kind = Kind::kIdent;
  std::string target;              // datatype name for kNode
  std::vector<FieldType> element;  // one entry for kList / kOption

  static FieldType Ident() { return {Kind::kIdent, {}, {}}; }
  static FieldType Node(std::string target) {
    return {Kind::kNode, std::move(target), {}};
  }
  static FieldType ListOf(FieldType t) { return {Kind::kList, {}, {std::move(t)}}; }
  static FieldType OptionOf(FieldType t) {
    return {Kind::kOption, {}, {std::move(t)}};
  }
  static FieldType Stereotypes() { return {Kind::kStereotypes, {}, {}}; }

  friend bool operator==(const FieldType&, const FieldType&) = default;
};

/// Compact form used in diagnostics, e.g. "ListOf(Node CDCClass)".
std::string ToString(const FieldType& type);

struct Field {
  std::string label;
  FieldType type;
  friend bool operator==(const Field&, const Field&) = default;
};

struct Datatype {
  std::string name;
  std::string constructor;
  std::vector<Field> fields;  // in order of first occurrence in the production
  bool sugar = false;

  const Field* Find(std::string_view label) const;
  friend bool operator==(const Datatype&, const Datatype&) = default;
};

struct AstSchema {
  std::string grammar_name;
  std::string start;
  std::vector<Datatype> datatypes;  // production order

  const Datatype* Find(std::string_view name) const;
};

/// One datatype per production: labeled nonterminals become fields, starred
/// or repeated labels become lists, optional ones options, terminals vanish
/// and a stereotype slot adds a `stereotypes` set.
AstSchema DeriveSchema(const GrammarDef& grammar);

/// Renders the schema as an abstract-syntax theory:
///
///   theory CDSimpAS imports GeneralAS
///   begin
///   datatype CDCClass = CDCClass IDENT "IDENT list"
///   datatype CDDefinition = CDDefinition IDENT "CDCClass list"
///   end
///
/// Datatypes appear after everything they reference.
std::string DumpSchema(const AstSchema& schema);

}  // namespace vlang
