#pragma once

// Composed theory documents for a configuration. Output is plain text in a
// prover-like surface syntax, e.g.
//
//   theory SystemModel imports SystemModel-base "vObject/SingleInheritance"
//   begin
//   constdefs "valid sm == valid-base sm ^ valid-SingleInheritance sm"
//   end

#include <optional>
#include <string>
#include <vector>

#include "vlang/feature_model.hpp"
#include "vlang/semantics.hpp"
#include "vlang/system_model.hpp"

namespace vlang {

inline constexpr char kDomainTheoryName[] = "SystemModel";
inline constexpr char kBaseSuffix[] = "-base";
inline constexpr char kSemSuffix[] = "Sem";

struct TheoryDoc {
  std::string name;
  /// Variant imports "<vp>/<Feature>", sorted; the "<name>-base" import is
  /// implicit.
  std::vector<std::string> imports;
  std::vector<std::string> body;  // empty renders as "begin end"

  std::string FileName() const { return name + ".thy.txt"; }
};

/// LF-terminated text.
std::string Render(const TheoryDoc& doc);

/// Theory SystemModel for the semantic-domain features selected in
/// `config`. Throws Error(kNameConvention) naming valid-<F> for a feature
/// without a registered predicate.
TheoryDoc GenerateDomainTheory(
    const FeatureDiagram& diagram, const Configuration& config,
    const DomainVariantRegistry& registry = BundledDomainVariants());

/// Theory <language>Sem for the semantic-mapping features selected in
/// `config`. Throws Error(kNameConvention) for an unregistered feature and
/// Error(kUnboundFunction) naming the mapping function when an xor
/// variation point of semantic-mapping features has no selection.
TheoryDoc GenerateMappingTheory(
    const FeatureDiagram& diagram, const Configuration& config,
    const std::string& language,
    const MappingVariantRegistry& registry = BundledMappingVariants());

/// Merges and validates `configs`, then generates one theory per configured
/// diagram that declares semantic-domain or semantic-mapping features, in
/// diagram order. The mapping theory is named after `language`, or after its
/// variation point's theory without the "Sem" suffix when absent.
///
/// Throws Error(kConfiguration) listing violations when validation fails.
std::vector<TheoryDoc> GenerateTheories(
    const std::vector<FeatureDiagram>& diagrams,
    const std::vector<Configuration>& configs,
    const std::optional<std::string>& language = std::nullopt,
    const DomainVariantRegistry& domain = BundledDomainVariants(),
    const MappingVariantRegistry& mapping = BundledMappingVariants());

}  // namespace vlang
