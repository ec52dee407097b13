#include "vlang/ast.hpp"

namespace vlang {

AstValue AstValue::Ident(std::string name, SourcePos pos) {
  AstValue v;
  v.kind_ = Kind::kIdent;
  v.ident_ = std::move(name);
  v.pos_ = pos;
  return v;
}

AstValue AstValue::Node(AstNode node) {
  AstValue v;
  v.kind_ = Kind::kNode;
  v.pos_ = node.pos();
  v.node_ = std::make_shared<const AstNode>(std::move(node));
  return v;
}

AstValue AstValue::List(std::vector<AstValue> items) {
  AstValue v;
  v.kind_ = Kind::kList;
  v.items_ = std::move(items);
  return v;
}

AstValue AstValue::Absent() {
  AstValue v;
  v.kind_ = Kind::kOption;
  return v;
}

AstValue AstValue::Present(AstValue value) {
  AstValue v;
  v.kind_ = Kind::kOption;
  v.pos_ = value.pos();
  v.items_.push_back(std::move(value));
  return v;
}

AstValue AstValue::Stereotypes(std::set<std::string> names) {
  AstValue v;
  v.kind_ = Kind::kStereotypes;
  v.stereotypes_ = std::move(names);
  return v;
}

const std::string& AstValue::ident() const {
  if (kind_ != Kind::kIdent) {
    throw Error(ErrorKind::kInvalidModel, "value is not an identifier");
  }
  return ident_;
}

const AstNode& AstValue::node() const {
  if (kind_ != Kind::kNode) {
    throw Error(ErrorKind::kInvalidModel, "value is not a node");
  }
  return *node_;
}

const std::vector<AstValue>& AstValue::items() const {
  if (kind_ != Kind::kList && kind_ != Kind::kOption) {
    throw Error(ErrorKind::kInvalidModel, "value is not a list or option");
  }
  return items_;
}

const std::set<std::string>& AstValue::stereotypes() const {
  if (kind_ != Kind::kStereotypes) {
    throw Error(ErrorKind::kInvalidModel, "value is not a stereotype set");
  }
  return stereotypes_;
}

bool operator==(const AstValue& a, const AstValue& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case AstValue::Kind::kIdent: return a.ident_ == b.ident_;
    case AstValue::Kind::kNode: return *a.node_ == *b.node_;
    case AstValue::Kind::kList:
    case AstValue::Kind::kOption: return a.items_ == b.items_;
    case AstValue::Kind::kStereotypes: return a.stereotypes_ == b.stereotypes_;
  }
  return false;
}

AstNode::AstNode(std::string datatype, std::map<std::string, AstValue> fields,
                 SourcePos pos)
    : datatype_(std::move(datatype)), fields_(std::move(fields)), pos_(pos) {}

const AstValue* AstNode::Find(std::string_view label) const {
  auto it = fields_.find(std::string(label));
  return it == fields_.end() ? nullptr : &it->second;
}

const AstValue& AstNode::at(std::string_view label) const {
  const AstValue* v = Find(label);
  if (v == nullptr) {
    throw Error(ErrorKind::kInvalidModel,
                datatype_ + " has no field '" + std::string(label) + "'");
  }
  return *v;
}

AstNode AstNode::With(const std::string& label, AstValue value) const {
  AstNode copy = *this;
  copy.fields_.insert_or_assign(label, std::move(value));
  return copy;
}

bool operator==(const AstNode& a, const AstNode& b) {
  return a.datatype_ == b.datatype_ && a.fields_ == b.fields_;
}

std::string ToText(const AstValue& value) {
  switch (value.kind()) {
    case AstValue::Kind::kIdent: return value.ident();
    case AstValue::Kind::kNode: return ToText(value.node());
    case AstValue::Kind::kList: {
      std::string out = "[";
      bool first = true;
      for (const AstValue& item : value.items()) {
        if (!first) out += ", ";
        first = false;
        out += ToText(item);
      }
      return out + "]";
    }
    case AstValue::Kind::kOption:
      return value.items().empty() ? "-" : "?" + ToText(value.items()[0]);
    case AstValue::Kind::kStereotypes: {
      std::string out = "{";
      bool first = true;
      for (const std::string& s : value.stereotypes()) {
        if (!first) out += ", ";
        first = false;
        out += s;
      }
      return out + "}";
    }
  }
  return "";
}

std::string ToText(const AstNode& node) {
  std::string out = node.datatype() + "(";
  bool first = true;
  for (const auto& [label, value] : node.fields()) {
    if (!first) out += ", ";
    first = false;
    out += label + "=" + ToText(value);
  }
  return out + ")";
}

namespace {

void CheckValue(const AstValue& v, const FieldType& t, const AstSchema& schema,
                const std::string& where, std::vector<std::string>& errors);

void CheckNode(const AstNode& node, const AstSchema& schema,
               const std::string& where, std::vector<std::string>& errors) {
  const Datatype* d = schema.Find(node.datatype());
  if (d == nullptr) {
    errors.push_back(where + ": unknown datatype " + node.datatype());
    return;
  }
  for (const Field& f : d->fields) {
    const AstValue* v = node.Find(f.label);
    if (v == nullptr) {
      errors.push_back(where + ": " + d->name + " lacks field " + f.label);
      continue;
    }
    CheckValue(*v, f.type, schema, where + "." + f.label, errors);
  }
  for (const auto& [label, _] : node.fields()) {
    if (d->Find(label) == nullptr) {
      errors.push_back(where + ": " + d->name + " has unexpected field " +
                       label);
    }
  }
}

void CheckValue(const AstValue& v, const FieldType& t, const AstSchema& schema,
                const std::string& where, std::vector<std::string>& errors) {
  auto mismatch = [&] {
    errors.push_back(where + ": expected " + ToString(t));
  };
  switch (t.kind) {
    case FieldType::Kind::kIdent:
      if (v.kind() != AstValue::Kind::kIdent) mismatch();
      return;
    case FieldType::Kind::kNode:
      if (v.kind() != AstValue::Kind::kNode) return mismatch();
      if (v.node().datatype() != t.target) return mismatch();
      CheckNode(v.node(), schema, where, errors);
      return;
    case FieldType::Kind::kList:
      if (v.kind() != AstValue::Kind::kList) return mismatch();
      for (std::size_t i = 0; i < v.items().size(); ++i) {
        CheckValue(v.items()[i], t.element.at(0), schema,
                   where + "[" + std::to_string(i) + "]", errors);
      }
      return;
    case FieldType::Kind::kOption:
      if (v.kind() != AstValue::Kind::kOption) return mismatch();
      if (!v.items().empty()) {
        CheckValue(v.items()[0], t.element.at(0), schema, where + "?", errors);
      }
      return;
    case FieldType::Kind::kStereotypes:
      if (v.kind() != AstValue::Kind::kStereotypes) mismatch();
      return;
  }
}

}  // namespace

std::vector<std::string> ConformanceErrors(const AstNode& node,
                                           const AstSchema& schema) {
  std::vector<std::string> errors;
  CheckNode(node, schema, node.datatype(), errors);
  return errors;
}

AstNode MakeNode(const AstSchema& schema, const std::string& datatype,
                 std::map<std::string, AstValue> given, SourcePos pos) {
  const Datatype* d = schema.Find(datatype);
  if (d == nullptr) {
    throw Error(ErrorKind::kInvalidModel, "unknown datatype " + datatype);
  }
  std::map<std::string, AstValue> fields;
  for (const Field& f : d->fields) {
    auto it = given.find(f.label);
    if (it != given.end()) {
      fields.emplace(f.label, std::move(it->second));
      continue;
    }
    switch (f.type.kind) {
      case FieldType::Kind::kList: fields.emplace(f.label, AstValue::List()); break;
      case FieldType::Kind::kOption: fields.emplace(f.label, AstValue::Absent()); break;
      case FieldType::Kind::kStereotypes:
        fields.emplace(f.label, AstValue::Stereotypes());
        break;
      default:
        throw Error(ErrorKind::kInvalidModel,
                    datatype + "." + f.label + " needs a value");
    }
  }
  return AstNode(datatype, std::move(fields), pos);
}

}  // namespace vlang
