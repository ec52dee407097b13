#include "vlang/context_conditions.hpp"

#include <algorithm>

#include "vlang/error.hpp"

namespace vlang {

std::string ToString(const CcViolation& v) {
  return v.condition + " " + ToString(v.pos) + " " + v.message;
}

void ContextConditionRegistry::Register(ContextCondition condition) {
  std::string id = condition.id;
  if (!conditions_.emplace(id, std::move(condition)).second) {
    throw Error(ErrorKind::kDuplicate,
                "context condition '" + id + "' registered twice");
  }
}

const ContextCondition* ContextConditionRegistry::Find(
    const std::string& id) const {
  auto it = conditions_.find(id);
  return it == conditions_.end() ? nullptr : &it->second;
}

std::vector<CcViolation> ContextConditionRegistry::Check(
    const AstNode& node, const std::set<std::string>& active) const {
  for (const std::string& id : active) {
    if (Find(id) == nullptr) {
      throw Error(ErrorKind::kUnknownId,
                  "unknown context condition '" + id + "'");
    }
  }
  std::vector<CcViolation> out;
  for (const auto& [id, cc] : conditions_) {
    if (cc.optional && active.count(id) == 0) continue;
    auto found = cc.check(node);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Class nodes of a minimal class diagram; empty for any other language.
std::vector<const AstNode*> Classes(const AstNode& root) {
  std::vector<const AstNode*> out;
  if (root.datatype() != "CDDefinition") return out;
  const AstValue* classes = root.Find("classes");
  if (classes == nullptr) return out;
  for (const AstValue& v : classes->items()) out.push_back(&v.node());
  return out;
}

std::vector<std::string> Supers(const AstNode& cls) {
  std::vector<std::string> out;
  if (const AstValue* scl = cls.Find("scl")) {
    for (const AstValue& s : scl->items()) out.push_back(s.ident());
  }
  return out;
}

ContextConditionRegistry MakeClassDiagramConditions() {
  ContextConditionRegistry reg;
  reg.Register({kCcUniqueClassNames, "class names are unique within a diagram",
                false, [](const AstNode& root) {
                  std::vector<CcViolation> out;
                  std::set<std::string> seen;
                  for (const AstNode* c : Classes(root)) {
                    const AstValue& name = c->at("Name");
                    if (!seen.insert(name.ident()).second) {
                      out.push_back({kCcUniqueClassNames, name.pos(),
                                     "duplicate class name '" + name.ident() +
                                         "'"});
                    }
                  }
                  return out;
                }});
  reg.Register({kCcSupersDeclared,
                "every super-class is declared in the same diagram", true,
                [](const AstNode& root) {
                  std::vector<CcViolation> out;
                  std::set<std::string> declared;
                  for (const AstNode* c : Classes(root)) {
                    declared.insert(c->at("Name").ident());
                  }
                  for (const AstNode* c : Classes(root)) {
                    for (const AstValue& s : c->at("scl").items()) {
                      if (declared.count(s.ident()) == 0) {
                        out.push_back({kCcSupersDeclared, s.pos(),
                                       "class '" + c->at("Name").ident() +
                                           "' extends undeclared class '" +
                                           s.ident() + "'"});
                      }
                    }
                  }
                  return out;
                }});
  reg.Register({kCcSingleInheritance, "every class has at most one super-class",
                true, [](const AstNode& root) {
                  std::vector<CcViolation> out;
                  for (const AstNode* c : Classes(root)) {
                    auto supers = Supers(*c);
                    if (supers.size() > 1) {
                      const AstValue& name = c->at("Name");
                      out.push_back({kCcSingleInheritance, name.pos(),
                                     "class '" + name.ident() + "' has " +
                                         std::to_string(supers.size()) +
                                         " super-classes"});
                    }
                  }
                  return out;
                }});
  return reg;
}

}  // namespace

const ContextConditionRegistry& ClassDiagramConditions() {
  static const auto* reg =
      new ContextConditionRegistry(MakeClassDiagramConditions());
  return *reg;
}

}  // namespace vlang
