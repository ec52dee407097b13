#pragma once

// Feature diagrams describing the variants of a language definition, the
// configurations that select among them, and their validation.
//
//   featurediagram CDSimpSemVar {
//     vp vMapSuperClasses for theory CDSimpSem {
//       xor {
//         feature MapSuperCDirect kind semantic-mapping;
//         feature MapSuperCDelegate kind semantic-mapping;
//       }
//     }
//     constraint MapSuperCDirect excludes SystemModelVar.SingleInheritance;
//   }
//
//   configuration CDConf for CDSimpSemVar { select MapSuperCDelegate; }

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vlang/error.hpp"

namespace vlang {

enum class Modality { kOptional, kMandatory, kXorMember };

/// Variability classification of a feature.
enum class FeatureKind {
  kPresentation,
  kSyntacticStereotype,
  kSyntacticLanguageParameter,
  kSyntacticContextCondition,
  kSemanticDomain,
  kSemanticMapping,
};

std::string_view ToString(FeatureKind kind);
std::optional<FeatureKind> ParseFeatureKind(std::string_view text);

struct Feature {
  std::string name;
  Modality modality = Modality::kOptional;
  FeatureKind kind = FeatureKind::kPresentation;
  SourcePos pos;
};

struct VariationPoint {
  std::string name;
  std::string attached_theory;
  bool xor_group = false;  // members form one exactly-one group
  std::vector<Feature> features;
  SourcePos pos;
};

/// `diagram` is empty for an unqualified reference.
struct FeatureRef {
  std::string diagram;
  std::string feature;

  std::string ToString() const {
    return diagram.empty() ? feature : diagram + "." + feature;
  }
  friend auto operator<=>(const FeatureRef&, const FeatureRef&) = default;
};

enum class Relation { kRequires, kExcludes };
std::string_view ToString(Relation r);

struct CrossConstraint {
  FeatureRef source;
  Relation relation = Relation::kRequires;
  FeatureRef target;
  SourcePos pos;
};

struct FeatureDiagram {
  std::string name;
  std::vector<VariationPoint> variation_points;
  std::vector<CrossConstraint> constraints;

  const Feature* FindFeature(std::string_view feature) const;
  /// Variation point owning `feature`, or nullptr.
  const VariationPoint* OwnerOf(std::string_view feature) const;
  std::vector<std::string> FeatureNames() const;  // sorted
};

struct Configuration {
  std::string name;
  std::string diagram;
  std::set<std::string> selected;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Parses one or more featurediagram blocks.
std::vector<FeatureDiagram> ParseFeatureDiagrams(std::string_view source);
/// Parses a text holding exactly one featurediagram block.
FeatureDiagram ParseFeatureDiagram(std::string_view source);

std::vector<Configuration> ParseConfigurations(std::string_view source);
Configuration ParseConfiguration(std::string_view source);

/// Unions the selections of configurations naming the same diagram. The
/// result holds one configuration per diagram, sorted by diagram name; a
/// merged configuration is named after its sources joined by '+'.
std::vector<Configuration> MergeConfigurations(
    const std::vector<Configuration>& configs);

struct FmViolation {
  std::string diagram;
  std::string rule;  // unknown-feature | mandatory | xor | requires | excludes
  std::string details;

  /// "VIOLATION <diagram> <rule> <details>"
  std::string ToString() const;
  friend auto operator<=>(const FmViolation&, const FmViolation&) = default;
};

/// Checks merged configurations against the diagrams in scope: selected
/// features exist, mandatory features and exactly one member of each xor
/// group are selected in every configured diagram, and every cross
/// constraint of every diagram holds over the union of all selections.
///
/// Returns the violations sorted by their rendered line (empty means ok).
/// Throws Error(kUnknownDiagram) for a configuration naming a diagram not in
/// scope, Error(kDuplicate) for diagram or feature names that clash across
/// diagrams and Error(kUnresolved) for a constraint naming no feature.
std::vector<FmViolation> ValidateConfigurations(
    const std::vector<FeatureDiagram>& diagrams,
    const std::vector<Configuration>& merged);

/// Resolves a (possibly unqualified) reference; nullopt if nothing matches.
std::optional<FeatureRef> ResolveFeature(
    const std::vector<FeatureDiagram>& diagrams, const FeatureRef& ref);

}  // namespace vlang
