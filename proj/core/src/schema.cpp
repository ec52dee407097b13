#include "vlang/schema.hpp"

#include <map>
#include <set>

namespace vlang {

std::string ToString(const FieldType& type) {
  switch (type.kind) {
    case FieldType::Kind::kIdent: return "Ident";
    case FieldType::Kind::kNode: return "Node " + type.target;
    case FieldType::Kind::kList: return "ListOf(" + ToString(type.element.at(0)) + ")";
    case FieldType::Kind::kOption:
      return "OptionOf(" + ToString(type.element.at(0)) + ")";
    case FieldType::Kind::kStereotypes: return "StereotypeSet";
  }
  return "?";
}

const Field* Datatype::Find(std::string_view label) const {
  for (const Field& f : fields) {
    if (f.label == label) return &f;
  }
  return nullptr;
}

const Datatype* AstSchema::Find(std::string_view name) const {
  for (const Datatype& d : datatypes) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

namespace {

struct Occurrence {
  FieldType base;
  int count = 0;
  bool repeated = false;  // under a star
  bool optional = false;  // under an option and never mandatory
  bool mandatory = false;
};

void Collect(const std::vector<Element>& elems, bool in_star, bool in_option,
             std::vector<std::string>& order,
             std::map<std::string, Occurrence>& occ) {
  for (const Element& e : elems) {
    bool star = in_star || e.cardinality == Cardinality::kStar;
    bool opt = in_option || e.cardinality == Cardinality::kOptional;
    auto note = [&](const std::string& label, FieldType base) {
      auto [it, fresh] = occ.try_emplace(label);
      if (fresh) {
        order.push_back(label);
        it->second.base = std::move(base);
      }
      Occurrence& o = it->second;
      ++o.count;
      o.repeated = o.repeated || star;
      if (opt) {
        o.optional = true;
      } else {
        o.mandatory = true;
      }
    };
    if (const auto* r = std::get_if<NonterminalRef>(&e.node)) {
      note(r->label, r->target == kIdentToken ? FieldType::Ident()
                                              : FieldType::Node(r->target));
    } else if (const auto* g = std::get_if<Group>(&e.node)) {
      Collect(g->elements, star, opt, order, occ);
    } else if (std::holds_alternative<StereotypeSlot>(e.node)) {
      note(std::string(kStereotypeLabel), FieldType::Stereotypes());
    }
  }
}

}  // namespace

AstSchema DeriveSchema(const GrammarDef& grammar) {
  AstSchema schema;
  schema.grammar_name = grammar.name();
  schema.start = grammar.start_name();
  for (const Production& p : grammar.productions()) {
    std::vector<std::string> order;
    std::map<std::string, Occurrence> occ;
    Collect(p.elements, false, false, order, occ);

    Datatype d{p.name, p.name, {}, p.sugar};
    for (const std::string& label : order) {
      const Occurrence& o = occ.at(label);
      FieldType t = o.base;
      if (t.kind != FieldType::Kind::kStereotypes) {
        if (o.repeated || o.count > 1) {
          t = FieldType::ListOf(std::move(t));
        } else if (o.optional && !o.mandatory) {
          t = FieldType::OptionOf(std::move(t));
        }
      }
      d.fields.push_back({label, std::move(t)});
    }
    schema.datatypes.push_back(std::move(d));
  }
  return schema;
}

namespace {

std::string Render(const FieldType& t) {
  switch (t.kind) {
    case FieldType::Kind::kIdent: return "IDENT";
    case FieldType::Kind::kNode: return t.target;
    case FieldType::Kind::kList: return Render(t.element.at(0)) + " list";
    case FieldType::Kind::kOption: return Render(t.element.at(0)) + " option";
    case FieldType::Kind::kStereotypes: return "STEREOTYPE set";
  }
  return "?";
}

std::string RenderArg(const FieldType& t) {
  std::string s = Render(t);
  return s.find(' ') == std::string::npos ? s : "\"" + s + "\"";
}

void References(const FieldType& t, std::set<std::string>& out) {
  if (t.kind == FieldType::Kind::kNode) out.insert(t.target);
  for (const FieldType& e : t.element) References(e, out);
}

void Emit(const AstSchema& schema, const Datatype& d,
          std::set<std::string>& done, std::string& out) {
  if (!done.insert(d.name).second) return;
  // Visit in field order so the result does not depend on name sorting.
  for (const Field& f : d.fields) {
    std::set<std::string> these;
    References(f.type, these);
    for (const std::string& r : these) {
      if (const Datatype* dep = schema.Find(r)) Emit(schema, *dep, done, out);
    }
  }
  out += "datatype " + d.name + " = " + d.constructor;
  for (const Field& f : d.fields) out += " " + RenderArg(f.type);
  out += "\n";
}

}  // namespace

std::string DumpSchema(const AstSchema& schema) {
  std::string out =
      "theory " + schema.grammar_name + "AS imports GeneralAS\nbegin\n";
  std::set<std::string> done;
  for (const Datatype& d : schema.datatypes) Emit(schema, d, done, out);
  out += "end\n";
  return out;
}

}  // namespace vlang
