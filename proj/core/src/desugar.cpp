#include "vlang/desugar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace vlang {
namespace {

using ExpandFn =
    std::function<std::vector<AstNode>(const AstSchema&, const AstNode&)>;

struct Rule {
  std::string produces;  // datatype of the expansion
  ExpandFn expand;
};

const std::map<std::string, Rule, std::less<>>& Rules() {
  static const auto* rules = new std::map<std::string, Rule, std::less<>>{
      {"CDClasses",
       {"CDCClass",
        [](const AstSchema& schema, const AstNode& sugar) {
          std::vector<AstNode> out;
          for (const AstValue& name : sugar.at("names").items()) {
            out.push_back(MakeNode(schema, "CDCClass", {{"Name", name}},
                                   name.pos()));
          }
          return out;
        }}},
  };
  return *rules;
}

bool IsSugar(const AstSchema& schema, const std::string& datatype) {
  const Datatype* d = schema.Find(datatype);
  return d != nullptr && d->sugar;
}

AstValue DesugarValue(const AstSchema& schema, const AstValue& v);

AstNode DesugarNode(const AstSchema& schema, const AstNode& node) {
  std::map<std::string, AstValue> fields;
  for (const auto& [label, value] : node.fields()) {
    fields.emplace(label, DesugarValue(schema, value));
  }

  // Pull abbreviation nodes out of list fields and expand them.
  std::map<std::string, std::vector<AstNode>> expansions;
  for (auto& [label, value] : fields) {
    if (value.kind() != AstValue::Kind::kList) continue;
    std::vector<AstValue> kept;
    bool changed = false;
    for (const AstValue& item : value.items()) {
      if (item.kind() == AstValue::Kind::kNode &&
          IsSugar(schema, item.node().datatype())) {
        auto rule = Rules().find(item.node().datatype());
        if (rule == Rules().end()) {
          throw Error(ErrorKind::kInvalidModel,
                      "no desugaring rule for " + item.node().datatype());
        }
        auto nodes = rule->second.expand(schema, item.node());
        auto& bucket = expansions[rule->second.produces];
        bucket.insert(bucket.end(), nodes.begin(), nodes.end());
        changed = true;
      } else {
        kept.push_back(item);
      }
    }
    if (changed) value = AstValue::List(std::move(kept));
  }
  if (expansions.empty()) return AstNode(node.datatype(), std::move(fields), node.pos());

  const Datatype* d = schema.Find(node.datatype());
  for (auto& [produced, nodes] : expansions) {
    const Field* target = nullptr;
    for (const Field& f : d->fields) {
      if (f.type == FieldType::ListOf(FieldType::Node(produced))) {
        target = &f;
        break;
      }
    }
    if (target == nullptr) {
      throw Error(ErrorKind::kInvalidModel,
                  node.datatype() + " has no list of " + produced +
                      " to receive expanded abbreviations");
    }
    std::vector<AstValue> items = fields.at(target->label).items();
    for (AstNode& n : nodes) items.push_back(AstValue::Node(std::move(n)));
    fields.insert_or_assign(target->label, AstValue::List(std::move(items)));
  }
  return AstNode(node.datatype(), std::move(fields), node.pos());
}

AstValue DesugarValue(const AstSchema& schema, const AstValue& v) {
  switch (v.kind()) {
    case AstValue::Kind::kNode:
      return AstValue::Node(DesugarNode(schema, v.node()));
    case AstValue::Kind::kList: {
      std::vector<AstValue> items;
      for (const AstValue& item : v.items()) {
        items.push_back(DesugarValue(schema, item));
      }
      return AstValue::List(std::move(items));
    }
    case AstValue::Kind::kOption:
      return v.items().empty()
                 ? v
                 : AstValue::Present(DesugarValue(schema, v.items()[0]));
    default:
      return v;
  }
}

bool MinimalValue(const AstSchema& schema, const AstValue& v) {
  switch (v.kind()) {
    case AstValue::Kind::kNode: return IsMinimal(schema, v.node());
    case AstValue::Kind::kList:
    case AstValue::Kind::kOption:
      for (const AstValue& item : v.items()) {
        if (!MinimalValue(schema, item)) return false;
      }
      return true;
    default:
      return true;
  }
}

}  // namespace

bool HasBuiltinDesugaring(std::string_view datatype) {
  return Rules().find(datatype) != Rules().end();
}

AstNode DesugarToMinimal(const AstSchema& schema, const AstNode& node) {
  if (IsSugar(schema, node.datatype())) {
    throw Error(ErrorKind::kInvalidModel,
                "an abbreviation cannot be the root of a model");
  }
  return DesugarNode(schema, node);
}

bool IsMinimal(const AstSchema& schema, const AstNode& node) {
  if (IsSugar(schema, node.datatype())) return false;
  for (const auto& [_, value] : node.fields()) {
    if (!MinimalValue(schema, value)) return false;
  }
  return true;
}

}  // namespace vlang
