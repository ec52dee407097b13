#pragma once

// Bounded refinement, consistency and equivalence checks. Every verdict is
// relative to the universe it was computed over, which it records.

#include <optional>
#include <string>
#include <vector>

#include "vlang/semantics.hpp"
#include "vlang/system_model.hpp"

namespace vlang {

enum class AnalysisKind { kRefine, kConsistent, kEquiv };
std::string_view ToString(AnalysisKind kind);

struct AnalysisVerdict {
  AnalysisKind kind = AnalysisKind::kRefine;
  bool holds = false;
  std::optional<SystemModel> witness;         // consistency
  std::optional<SystemModel> counterexample;  // refinement, equivalence
  Universe universe;
};

/// sem(refined) ⊆ sem(abstract) over the joint universe of both models. On
/// failure the counterexample is the first member of the difference in
/// canonical order.
AnalysisVerdict CheckRefinement(const Model& refined, const Model& abstract,
                                const SemanticsConfig& config);

/// Intersection of all semantics sets is nonempty; the witness is its first
/// member in canonical order. Models may come from different languages.
AnalysisVerdict CheckConsistency(const std::vector<Model>& models,
                                 const SemanticsConfig& config);

/// Refinement in both directions, m1 -> m2 first.
AnalysisVerdict CheckEquivalence(const Model& m1, const Model& m2,
                                 const SemanticsConfig& config);

/// "RESULT holds=<b> kind=<k> bounds=<universe>", then "WITNESS" or
/// "COUNTEREXAMPLE" and a system dump when present.
std::string Report(const AnalysisVerdict& verdict);

}  // namespace vlang
