#include "vlang/feature_model.hpp"

#include <algorithm>
#include <map>

#include "vlang/text.hpp"

namespace vlang {

namespace {

constexpr std::pair<FeatureKind, std::string_view> kKindNames[] = {
    {FeatureKind::kPresentation, "presentation"},
    {FeatureKind::kSyntacticStereotype, "syntactic-stereotype"},
    {FeatureKind::kSyntacticLanguageParameter, "syntactic-language-parameter"},
    {FeatureKind::kSyntacticContextCondition, "syntactic-context-condition"},
    {FeatureKind::kSemanticDomain, "semantic-domain"},
    {FeatureKind::kSemanticMapping, "semantic-mapping"},
};

}  // namespace

std::string_view ToString(FeatureKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<FeatureKind> ParseFeatureKind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view ToString(Relation r) {
  return r == Relation::kRequires ? "requires" : "excludes";
}

const Feature* FeatureDiagram::FindFeature(std::string_view feature) const {
  for (const VariationPoint& vp : variation_points) {
    for (const Feature& f : vp.features) {
      if (f.name == feature) return &f;
    }
  }
  return nullptr;
}

const VariationPoint* FeatureDiagram::OwnerOf(std::string_view feature) const {
  for (const VariationPoint& vp : variation_points) {
    for (const Feature& f : vp.features) {
      if (f.name == feature) return &vp;
    }
  }
  return nullptr;
}

std::vector<std::string> FeatureDiagram::FeatureNames() const {
  std::vector<std::string> out;
  for (const VariationPoint& vp : variation_points) {
    for (const Feature& f : vp.features) out.push_back(f.name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Configuration> MergeConfigurations(
    const std::vector<Configuration>& configs) {
  std::map<std::string, std::set<std::string>> names, selected;
  for (const Configuration& c : configs) {
    names[c.diagram].insert(c.name);
    selected[c.diagram].insert(c.selected.begin(), c.selected.end());
  }
  std::vector<Configuration> out;
  for (auto& [diagram, sel] : selected) {
    const auto& n = names[diagram];
    out.push_back({Join({n.begin(), n.end()}, "+"), diagram, std::move(sel)});
  }
  return out;
}

std::string FmViolation::ToString() const {
  return "VIOLATION " + diagram + " " + rule + " " + details;
}

std::optional<FeatureRef> ResolveFeature(
    const std::vector<FeatureDiagram>& diagrams, const FeatureRef& ref) {
  for (const FeatureDiagram& d : diagrams) {
    if (!ref.diagram.empty() && ref.diagram != d.name) continue;
    if (d.FindFeature(ref.feature) != nullptr) {
      return FeatureRef{d.name, ref.feature};
    }
  }
  return std::nullopt;
}

std::vector<FmViolation> ValidateConfigurations(
    const std::vector<FeatureDiagram>& diagrams,
    const std::vector<Configuration>& merged) {
  std::map<std::string, const FeatureDiagram*> by_name;
  std::map<std::string, std::string> feature_home;
  for (const FeatureDiagram& d : diagrams) {
    if (!by_name.emplace(d.name, &d).second) {
      throw Error(ErrorKind::kDuplicate,
                  "feature diagram '" + d.name + "' defined twice");
    }
    for (const std::string& f : d.FeatureNames()) {
      auto [it, fresh] = feature_home.emplace(f, d.name);
      if (!fresh) {
        throw Error(ErrorKind::kDuplicate,
                    "feature '" + f + "' declared in both " + it->second +
                        " and " + d.name);
      }
    }
  }

  std::vector<FmViolation> out;
  std::set<FeatureRef> selected;
  for (const Configuration& c : merged) {
    auto it = by_name.find(c.diagram);
    if (it == by_name.end()) {
      throw Error(ErrorKind::kUnknownDiagram,
                  "configuration '" + c.name + "' refers to unknown diagram '" +
                      c.diagram + "'");
    }
    const FeatureDiagram& d = *it->second;
    for (const std::string& f : c.selected) {
      if (d.FindFeature(f) == nullptr) {
        out.push_back({d.name, "unknown-feature", f});
      } else {
        selected.insert({d.name, f});
      }
    }
    for (const VariationPoint& vp : d.variation_points) {
      if (vp.xor_group) {
        std::vector<std::string> chosen;
        for (const Feature& f : vp.features) {
          if (c.selected.count(f.name)) chosen.push_back(f.name);
        }
        if (chosen.size() != 1) {
          std::sort(chosen.begin(), chosen.end());
          out.push_back({d.name, "xor",
                         vp.name + " selected=" + std::to_string(chosen.size()) +
                             " expected=1 {" + Join(chosen, ", ") + "}"});
        }
        continue;
      }
      for (const Feature& f : vp.features) {
        if (f.modality == Modality::kMandatory && !c.selected.count(f.name)) {
          out.push_back({d.name, "mandatory", vp.name + "." + f.name});
        }
      }
    }
  }

  for (const FeatureDiagram& d : diagrams) {
    for (const CrossConstraint& c : d.constraints) {
      // An unqualified source names a feature of the declaring diagram
      // first, then any diagram in scope.
      FeatureRef src_ref = c.source;
      std::optional<FeatureRef> src;
      if (src_ref.diagram.empty() && d.FindFeature(src_ref.feature)) {
        src = FeatureRef{d.name, src_ref.feature};
      } else {
        src = ResolveFeature(diagrams, src_ref);
      }
      std::optional<FeatureRef> dst = ResolveFeature(diagrams, c.target);
      if (!src || !dst) {
        const FeatureRef& bad = !src ? c.source : c.target;
        throw Error(ErrorKind::kUnresolved,
                    "constraint in " + d.name + " names unknown feature '" +
                        bad.ToString() + "'",
                    c.pos);
      }
      bool has_src = selected.count(*src) > 0;
      bool has_dst = selected.count(*dst) > 0;
      bool violated = c.relation == Relation::kRequires ? has_src && !has_dst
                                                        : has_src && has_dst;
      if (violated) {
        out.push_back({d.name, std::string(ToString(c.relation)),
                       src->ToString() + " " + std::string(ToString(c.relation)) +
                           " " + dst->ToString()});
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const FmViolation& a, const FmViolation& b) {
              return a.ToString() < b.ToString();
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vlang
