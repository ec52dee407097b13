#include "vlang/system_model.hpp"

#include <algorithm>

#include "vlang/error.hpp"
#include "vlang/text.hpp"

namespace vlang {

bool SystemModel::HasClass(std::string_view c) const {
  return classes.find(std::string(c)) != classes.end();
}

bool SystemModel::IsSub(const std::string& a, const std::string& b) const {
  return sub.count({a, b}) > 0;
}

bool SystemModel::HasAttribute(const std::string& owner,
                               const std::string& name,
                               const std::string& target) const {
  auto it = attrs.find(owner);
  return it != attrs.end() && it->second.count(Attribute{name, target}) > 0;
}

std::size_t SystemModel::InstancesOf(const std::string& cls) const {
  std::size_t n = 0;
  for (const auto& [_, c] : class_of) {
    if (c == cls) ++n;
  }
  return n;
}

std::vector<std::string> StructuralErrors(const SystemModel& sm) {
  std::vector<std::string> errors;
  for (const auto& [a, b] : sm.sub) {
    if (!sm.HasClass(a) || !sm.HasClass(b)) {
      errors.push_back("sub pair (" + a + "," + b + ") leaves the class set");
    }
  }
  for (const auto& [owner, set] : sm.attrs) {
    if (!sm.HasClass(owner)) errors.push_back("attribute owner " + owner + " unknown");
    if (set.empty()) errors.push_back("empty attribute entry for " + owner);
    std::set<std::string> names;
    for (const Attribute& a : set) {
      if (!sm.HasClass(a.target)) {
        errors.push_back("attribute " + owner + "." + a.name + " targets unknown " +
                         a.target);
      }
      if (!names.insert(a.name).second) {
        errors.push_back("attribute name " + owner + "." + a.name + " repeated");
      }
    }
  }
  std::set<std::string> ids(sm.objects.begin(), sm.objects.end());
  if (ids.size() != sm.objects.size()) errors.push_back("repeated object id");
  for (const std::string& o : sm.objects) {
    auto it = sm.class_of.find(o);
    if (it == sm.class_of.end()) {
      errors.push_back("object " + o + " has no class");
    } else if (!sm.HasClass(it->second)) {
      errors.push_back("object " + o + " has unknown class " + it->second);
    }
  }
  for (const auto& [o, _] : sm.class_of) {
    if (ids.count(o) == 0) errors.push_back("class_of mentions unknown object " + o);
  }
  return errors;
}

std::string ObjectId(std::size_t index) { return "o" + std::to_string(index); }

std::string Dump(const SystemModel& sm) {
  std::vector<std::string> parts;
  std::string out = "CLASSES {" +
                    Join({sm.classes.begin(), sm.classes.end()}, ", ") + "}\n";
  for (const auto& [a, b] : sm.sub) parts.push_back("(" + a + "," + b + ")");
  out += "SUB {" + Join(parts, ", ") + "}\n";
  parts.clear();
  for (const auto& [owner, set] : sm.attrs) {
    for (const Attribute& a : set) {
      parts.push_back(owner + "." + a.name + ":" + a.target);
    }
  }
  out += "ATTRS {" + Join(parts, ", ") + "}\n";
  out += "OBJECTS {" + Join(sm.objects, ", ") + "}\n";
  parts.clear();
  for (const std::string& o : sm.objects) {
    auto it = sm.class_of.find(o);
    parts.push_back(o + ":" + (it == sm.class_of.end() ? "?" : it->second));
  }
  out += "CLASSOF {" + Join(parts, ", ") + "}\n";
  return out;
}

bool SubReflexive(const SystemModel& sm) {
  return std::all_of(sm.classes.begin(), sm.classes.end(),
                     [&](const std::string& c) { return sm.IsSub(c, c); });
}

bool SubTransitive(const SystemModel& sm) {
  for (const auto& [a, b] : sm.sub) {
    for (auto it = sm.sub.lower_bound({b, std::string()});
         it != sm.sub.end() && it->first == b; ++it) {
      if (!sm.IsSub(a, it->second)) return false;
    }
  }
  return true;
}

bool EvalValidBase(const SystemModel& sm) {
  return StructuralErrors(sm).empty() && SubReflexive(sm) && SubTransitive(sm);
}

bool ValidSingleInheritance(const SystemModel& sm) {
  for (const std::string& c1 : sm.classes) {
    for (const std::string& c2 : sm.classes) {
      if (!sm.IsSub(c1, c2)) continue;
      for (const std::string& c3 : sm.classes) {
        if (sm.IsSub(c1, c3) && !sm.IsSub(c2, c3) && !sm.IsSub(c3, c2)) {
          return false;
        }
      }
    }
  }
  return true;
}

void DomainVariantRegistry::Register(const std::string& feature,
                                     SystemPredicate predicate) {
  if (!predicates_.emplace(feature, std::move(predicate)).second) {
    throw Error(ErrorKind::kDuplicate,
                "predicate " + ValidName(feature) + " registered twice");
  }
}

bool DomainVariantRegistry::Has(const std::string& feature) const {
  return predicates_.count(feature) > 0;
}

const SystemPredicate& DomainVariantRegistry::Get(
    const std::string& feature) const {
  auto it = predicates_.find(feature);
  if (it == predicates_.end()) {
    throw Error(ErrorKind::kNameConvention,
                "feature " + feature + " provides no predicate " +
                    ValidName(feature));
  }
  return it->second;
}

std::vector<std::string> DomainVariantRegistry::features() const {
  std::vector<std::string> out;
  for (const auto& [f, _] : predicates_) out.push_back(f);
  return out;
}

const DomainVariantRegistry& BundledDomainVariants() {
  static const auto* reg = [] {
    auto* r = new DomainVariantRegistry;
    r->Register("SingleInheritance", ValidSingleInheritance);
    return r;
  }();
  return *reg;
}

bool EvalVariantPredicate(const DomainVariantRegistry& registry,
                          const std::string& feature, const SystemModel& sm) {
  return registry.Get(feature)(sm);
}

Validity::Validity() : names_{"valid-base"}, predicates_{EvalValidBase} {}

Validity::Validity(std::string name, SystemPredicate predicate,
                   bool implies_base)
    : names_{std::move(name)},
      predicates_{std::move(predicate)},
      implies_base_(implies_base) {}

bool Validity::operator()(const SystemModel& sm) const {
  return std::all_of(predicates_.begin(), predicates_.end(),
                     [&](const SystemPredicate& p) { return p(sm); });
}

Validity ComposedValid(const std::set<std::string>& domain_features,
                       const DomainVariantRegistry& registry) {
  Validity v;
  for (const std::string& f : domain_features) {  // std::set: sorted
    v.predicates_.push_back(registry.Get(f));
    v.names_.push_back(ValidName(f));
  }
  return v;
}

}  // namespace vlang
