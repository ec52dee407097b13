#include "vlang/generator.hpp"

#include <algorithm>
#include <utility>

#include "vlang/error.hpp"
#include "vlang/text.hpp"

namespace vlang {

namespace {

bool HasKind(const FeatureDiagram& d, FeatureKind kind) {
  for (const VariationPoint& vp : d.variation_points) {
    for (const Feature& f : vp.features) {
      if (f.kind == kind) return true;
    }
  }
  return false;
}

// (vp, feature) pairs of selected features of `kind`, sorted.
std::vector<std::pair<std::string, std::string>> Selected(
    const FeatureDiagram& d, const Configuration& c, FeatureKind kind) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const VariationPoint& vp : d.variation_points) {
    for (const Feature& f : vp.features) {
      if (f.kind == kind && c.selected.count(f.name)) {
        out.emplace_back(vp.name, f.name);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string Render(const TheoryDoc& doc) {
  std::string out = "theory " + doc.name + " imports " + doc.name + kBaseSuffix;
  for (const std::string& i : doc.imports) out += " " + Quote(i);
  out += "\n";
  if (doc.body.empty()) return out + "begin end\n";
  out += "begin\n";
  for (const std::string& line : doc.body) out += line + "\n";
  return out + "end\n";
}

TheoryDoc GenerateDomainTheory(const FeatureDiagram& diagram,
                               const Configuration& config,
                               const DomainVariantRegistry& registry) {
  TheoryDoc doc{kDomainTheoryName, {}, {}};
  std::set<std::string> features;
  for (const auto& [vp, f] :
       Selected(diagram, config, FeatureKind::kSemanticDomain)) {
    registry.Get(f);  // name convention
    doc.imports.push_back(vp + "/" + f);
    features.insert(f);
  }
  // Same conjunct order as the executable predicate.
  Validity valid = ComposedValid(features, registry);
  std::string line = "valid sm ==";
  for (std::size_t i = 0; i < valid.conjuncts().size(); ++i) {
    line += (i == 0 ? " " : " ^ ") + valid.conjuncts()[i] + " sm";
  }
  doc.body.push_back("constdefs " + Quote(line));
  return doc;
}

TheoryDoc GenerateMappingTheory(const FeatureDiagram& diagram,
                                const Configuration& config,
                                const std::string& language,
                                const MappingVariantRegistry& registry) {
  TheoryDoc doc{language + kSemSuffix, {}, {}};
  for (const VariationPoint& vp : diagram.variation_points) {
    if (!vp.xor_group) continue;
    bool mapping = false, chosen = false;
    for (const Feature& f : vp.features) {
      if (f.kind != FeatureKind::kSemanticMapping) continue;
      mapping = true;
      chosen = chosen || config.selected.count(f.name) > 0;
    }
    if (mapping && !chosen) {
      std::string fn = registry.Has(vp.features.front().name)
                           ? registry.Get(vp.features.front().name).function
                           : vp.name;
      throw Error(ErrorKind::kUnboundFunction,
                  fn + " stays unbound: no variant of " + vp.name +
                      " is selected");
    }
  }
  for (const auto& [vp, f] :
       Selected(diagram, config, FeatureKind::kSemanticMapping)) {
    registry.Get(f);
    doc.imports.push_back(vp + "/" + f);
  }
  return doc;
}

std::vector<TheoryDoc> GenerateTheories(
    const std::vector<FeatureDiagram>& diagrams,
    const std::vector<Configuration>& configs,
    const std::optional<std::string>& language,
    const DomainVariantRegistry& domain, const MappingVariantRegistry& mapping) {
  std::vector<Configuration> merged = MergeConfigurations(configs);
  auto violations = ValidateConfigurations(diagrams, merged);
  if (!violations.empty()) {
    std::vector<std::string> lines;
    for (const FmViolation& v : violations) lines.push_back(v.ToString());
    throw Error(ErrorKind::kConfiguration,
                "configurations do not validate:\n" + Join(lines, "\n"));
  }
  std::vector<TheoryDoc> out;
  for (const Configuration& c : merged) {
    const FeatureDiagram* d = nullptr;
    for (const FeatureDiagram& x : diagrams) {
      if (x.name == c.diagram) d = &x;
    }
    if (HasKind(*d, FeatureKind::kSemanticDomain)) {
      out.push_back(GenerateDomainTheory(*d, c, domain));
    }
    if (HasKind(*d, FeatureKind::kSemanticMapping)) {
      std::string lang;
      if (language) {
        lang = *language;
      } else {
        for (const VariationPoint& vp : d->variation_points) {
          for (const Feature& f : vp.features) {
            if (f.kind == FeatureKind::kSemanticMapping && lang.empty()) {
              lang = vp.attached_theory;
            }
          }
        }
        std::string_view suffix = kSemSuffix;
        if (lang.size() > suffix.size() && lang.ends_with(suffix)) {
          lang.resize(lang.size() - suffix.size());
        }
      }
      out.push_back(GenerateMappingTheory(*d, c, lang, mapping));
    }
  }
  return out;
}

}  // namespace vlang
