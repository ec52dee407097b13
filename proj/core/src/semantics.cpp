#include "vlang/semantics.hpp"

#include "vlang/error.hpp"
#include "vlang/text.hpp"

namespace vlang {

bool MapSuperDirect(const std::string& cls,
                    const std::vector<std::string>& supers,
                    const SystemModel& sm) {
  for (const std::string& s : supers) {
    if (!sm.HasClass(s) || !sm.IsSub(cls, s)) return false;
  }
  return true;
}

std::string DelegateAttribute(const std::string& super) { return "dlg_" + super; }

bool MapSuperDelegate(const std::string& cls,
                      const std::vector<std::string>& supers,
                      const SystemModel& sm) {
  if (supers.empty()) return true;
  if (!sm.IsSub(cls, supers[0])) return false;
  for (std::size_t i = 1; i < supers.size(); ++i) {
    const std::string& s = supers[i];
    if (!sm.HasClass(s) || !sm.HasAttribute(cls, DelegateAttribute(s), s)) {
      return false;
    }
  }
  return true;
}

void MappingVariantRegistry::Register(MappingVariant variant) {
  std::string feature = variant.feature;
  if (!variants_.emplace(feature, std::move(variant)).second) {
    throw Error(ErrorKind::kDuplicate,
                "mapping variant " + feature + " registered twice");
  }
}

bool MappingVariantRegistry::Has(const std::string& feature) const {
  return variants_.count(feature) > 0;
}

const MappingVariant& MappingVariantRegistry::Get(
    const std::string& feature) const {
  auto it = variants_.find(feature);
  if (it == variants_.end()) {
    throw Error(ErrorKind::kNameConvention,
                "mapping feature " + feature + " has no registered function");
  }
  return it->second;
}

std::set<std::string> MappingVariantRegistry::functions() const {
  std::set<std::string> out;
  for (const auto& [_, v] : variants_) out.insert(v.function);
  return out;
}

const MappingVariantRegistry& BundledMappingVariants() {
  static const auto* reg = [] {
    auto* r = new MappingVariantRegistry;
    r->Register({kMapSuperDirect, kSuperClassesFunction, MapSuperDirect,
                 [](const std::string&, const std::vector<std::string>&) {
                   return std::set<AttrCandidate>{};
                 }});
    r->Register({kMapSuperDelegate, kSuperClassesFunction, MapSuperDelegate,
                 [](const std::string& cls,
                    const std::vector<std::string>& supers) {
                   std::set<AttrCandidate> out;
                   for (std::size_t i = 1; i < supers.size(); ++i) {
                     out.insert({cls, DelegateAttribute(supers[i]), supers[i]});
                   }
                   return out;
                 }});
    return r;
  }();
  return *reg;
}

std::string_view ToString(Language language) {
  return language == Language::kClassDiagram ? "class-diagram" : "assertions";
}

Language DetectLanguage(const AstNode& root) {
  if (root.datatype() == "CDDefinition") return Language::kClassDiagram;
  if (root.datatype() == "Assertions") return Language::kAssertions;
  throw Error(ErrorKind::kInvalidModel,
              "no semantics for models rooted at " + root.datatype());
}

Model Model::FromAst(AstNode minimal_ast) {
  Language lang = DetectLanguage(minimal_ast);
  return Model{lang, std::move(minimal_ast)};
}

SemanticsConfig SemanticsConfig::FromConfigurations(
    const std::vector<FeatureDiagram>& diagrams,
    const std::vector<Configuration>& configs, Bounds bounds) {
  std::vector<Configuration> merged = MergeConfigurations(configs);
  auto violations = ValidateConfigurations(diagrams, merged);
  if (!violations.empty()) {
    std::vector<std::string> lines;
    for (const FmViolation& v : violations) lines.push_back(v.ToString());
    throw Error(ErrorKind::kConfiguration,
                "configurations do not validate:\n" + Join(lines, "\n"));
  }
  SemanticsConfig out;
  out.bounds = std::move(bounds);
  for (const Configuration& c : merged) {
    for (const FeatureDiagram& d : diagrams) {
      if (d.name != c.diagram) continue;
      for (const std::string& f : c.selected) {
        const Feature* feat = d.FindFeature(f);
        if (feat->kind == FeatureKind::kSemanticDomain) {
          out.domain_features.insert(f);
        } else if (feat->kind == FeatureKind::kSemanticMapping) {
          out.mapping_features.insert(f);
        }
      }
    }
  }
  return out;
}

Validity SemanticsConfig::validity() const {
  return ComposedValid(domain_features, *domain_registry);
}

const MappingVariant& SemanticsConfig::super_mapping() const {
  const MappingVariant* found = nullptr;
  for (const std::string& f : mapping_features) {
    const MappingVariant& v = mapping_registry->Get(f);
    if (v.function != kSuperClassesFunction) continue;
    if (found != nullptr) {
      throw Error(ErrorKind::kConfiguration,
                  std::string(kSuperClassesFunction) + " bound twice, by " +
                      found->feature + " and " + v.feature);
    }
    found = &v;
  }
  if (found == nullptr) {
    throw Error(ErrorKind::kUnboundFunction,
                std::string(kSuperClassesFunction) +
                    " is declared but no mapping variant defines it");
  }
  return *found;
}

namespace {

std::vector<std::string> IdentList(const AstValue* list) {
  std::vector<std::string> out;
  if (list == nullptr) return out;
  for (const AstValue& v : list->items()) out.push_back(v.ident());
  return out;
}

std::vector<const AstNode*> ListNodes(const AstNode& n, const char* label) {
  std::vector<const AstNode*> out;
  if (const AstValue* v = n.Find(label)) {
    for (const AstValue& item : v->items()) out.push_back(&item.node());
  }
  return out;
}

std::set<std::string> StereotypesOf(const AstNode& cls) {
  const AstValue* v = cls.Find(kStereotypeLabel);
  return v == nullptr ? std::set<std::string>{} : v->stereotypes();
}

}  // namespace

bool MapClass(const AstNode& cls, const SystemModel& sm,
              const SuperMapping& variant) {
  const std::string& name = cls.at("Name").ident();
  if (!sm.HasClass(name)) return false;
  if (!variant(name, IdentList(cls.Find("scl")), sm)) return false;
  for (const std::string& s : StereotypesOf(cls)) {
    if (s == kSingletonStereotype && sm.InstancesOf(name) > 1) return false;
  }
  return true;
}

bool MapDiagram(const AstNode& diagram, const SystemModel& sm,
                const SuperMapping& variant) {
  for (const AstNode* c : ListNodes(diagram, "classes")) {
    if (!MapClass(*c, sm, variant)) return false;
  }
  return true;
}

bool MapAssertions(const AstNode& assertions, const SystemModel& sm) {
  for (const AstNode* s : ListNodes(assertions, "stmts")) {
    const std::string& a = s->at("sub").ident();
    const std::string& b = s->at("sup").ident();
    bool negated = !s->at("neg").items().empty();
    if (!sm.HasClass(a) || !sm.HasClass(b)) return false;
    if (sm.IsSub(a, b) == negated) return false;
  }
  return true;
}

bool MapModel(const Model& model, const SystemModel& sm,
              const SemanticsConfig& config) {
  switch (model.language) {
    case Language::kClassDiagram:
      return MapDiagram(model.ast, sm, config.super_mapping().map);
    case Language::kAssertions:
      return MapAssertions(model.ast, sm);
  }
  return false;
}

std::set<std::string> MentionedClasses(const Model& model) {
  std::set<std::string> out;
  if (model.language == Language::kClassDiagram) {
    for (const AstNode* c : ListNodes(model.ast, "classes")) {
      out.insert(c->at("Name").ident());
      for (const std::string& s : IdentList(c->Find("scl"))) out.insert(s);
    }
  } else {
    for (const AstNode* s : ListNodes(model.ast, "stmts")) {
      out.insert(s->at("sub").ident());
      out.insert(s->at("sup").ident());
    }
  }
  return out;
}

std::set<AttrCandidate> DemandedAttributes(const Model& model,
                                           const SemanticsConfig& config) {
  std::set<AttrCandidate> out;
  if (model.language != Language::kClassDiagram) return out;
  const MappingVariant& v = config.super_mapping();
  for (const AstNode* c : ListNodes(model.ast, "classes")) {
    auto more = v.demands(c->at("Name").ident(), IdentList(c->Find("scl")));
    out.insert(more.begin(), more.end());
  }
  return out;
}

std::vector<std::string> StereotypeWarnings(const Model& model) {
  std::vector<std::string> out;
  if (model.language != Language::kClassDiagram) return out;
  for (const AstNode* c : ListNodes(model.ast, "classes")) {
    for (const std::string& s : StereotypesOf(*c)) {
      if (s != kSingletonStereotype) {
        out.push_back("warning: class " + c->at("Name").ident() +
                      ": stereotype <<" + s + ">> has no semantics and is "
                      "ignored");
      }
    }
  }
  return out;
}

Universe JointUniverse(const std::vector<Model>& models,
                       const SemanticsConfig& config) {
  Universe u;
  u.bounds = config.bounds;
  for (const Model& m : models) {
    auto classes = MentionedClasses(m);
    u.required_classes.insert(classes.begin(), classes.end());
    auto attrs = DemandedAttributes(m, config);
    u.bounds.attr_candidates.insert(attrs.begin(), attrs.end());
  }
  return u;
}

SemanticsSet::SemanticsSet(Model model, SemanticsConfig config,
                           Universe universe)
    : model_(std::move(model)),
      config_(std::move(config)),
      universe_(std::move(universe)),
      validity_(config_.validity()) {
  // Resolve the mapping eagerly so configuration errors surface here.
  if (model_.language == Language::kClassDiagram) config_.super_mapping();
}

bool SemanticsSet::Contains(const SystemModel& sm) const {
  return universe_.Contains(sm) && validity_(sm) &&
         MapModel(model_, sm, config_);
}

std::size_t SemanticsSet::ForEach(const SystemVisitor& visit) const {
  std::size_t n = 0;
  EnumerateSystems(universe_, validity_, [&](const SystemModel& sm) {
    if (!MapModel(model_, sm, config_)) return true;
    ++n;
    return visit(sm);
  });
  return n;
}

std::size_t SemanticsSet::Count() const {
  return ForEach([](const SystemModel&) { return true; });
}

std::vector<SystemModel> SemanticsSet::Members(std::size_t limit) const {
  std::vector<SystemModel> out;
  if (limit == 0) return out;
  ForEach([&](const SystemModel& sm) {
    out.push_back(sm);
    return out.size() < limit;
  });
  return out;
}

SemanticsSet ComputeSem(const Model& model, const SemanticsConfig& config) {
  return SemanticsSet(model, config, JointUniverse({model}, config));
}

std::string SemReport(const SemanticsSet& sem, std::size_t witnesses) {
  std::vector<SystemModel> shown;
  std::size_t count = sem.ForEach([&](const SystemModel& sm) {
    if (shown.size() < witnesses) shown.push_back(sm);
    return true;
  });
  std::string out = "SEM count=" + std::to_string(count) +
                    " bounds=" + ToString(sem.universe()) + "\n";
  for (std::size_t i = 0; i < shown.size(); ++i) {
    out += "WITNESS " + std::to_string(i + 1) + "\n" + Dump(shown[i]);
  }
  return out;
}

}  // namespace vlang
