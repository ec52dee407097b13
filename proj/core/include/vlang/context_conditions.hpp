#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vlang/ast.hpp"

namespace vlang {

struct CcViolation {
  std::string condition;
  SourcePos pos;
  std::string message;

  friend auto operator<=>(const CcViolation&, const CcViolation&) = default;
};

/// "<condition> <line>:<col> <message>"
std::string ToString(const CcViolation& v);

/// A well-formedness rule over minimal abstract syntax. Optional conditions
/// are switched on per configuration; the others always apply.
struct ContextCondition {
  std::string id;
  std::string description;
  bool optional = false;
  std::function<std::vector<CcViolation>(const AstNode&)> check;
};

class ContextConditionRegistry {
 public:
  /// Throws Error(kDuplicate) if the id is taken.
  void Register(ContextCondition condition);

  const ContextCondition* Find(const std::string& id) const;
  const std::map<std::string, ContextCondition>& all() const {
    return conditions_;
  }

  /// Runs every mandatory condition plus the optional ones named in
  /// `active`. Throws Error(kUnknownId) for an unregistered id. The result
  /// is sorted by (condition id, position, message).
  std::vector<CcViolation> Check(const AstNode& node,
                                 const std::set<std::string>& active) const;

 private:
  std::map<std::string, ContextCondition> conditions_;
};

inline constexpr char kCcUniqueClassNames[] = "CC-unique-class-names";
inline constexpr char kCcSupersDeclared[] = "CC-supers-declared";
inline constexpr char kCcSingleInheritance[] = "CC-single-inheritance-syntactic";

/// Conditions for the bundled class-diagram language.
const ContextConditionRegistry& ClassDiagramConditions();

}  // namespace vlang
