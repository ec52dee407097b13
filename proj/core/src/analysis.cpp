#include "vlang/analysis.hpp"

namespace vlang {

std::string_view ToString(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::kRefine:
      return "refine";
    case AnalysisKind::kConsistent:
      return "consistent";
    case AnalysisKind::kEquiv:
      return "equiv";
  }
  return "?";
}

namespace {

AnalysisVerdict RefineOver(const Model& refined, const Model& abstract,
                           const SemanticsConfig& config,
                           const Universe& universe) {
  AnalysisVerdict v{AnalysisKind::kRefine, true, std::nullopt, std::nullopt,
                    universe};
  SemanticsSet lhs(refined, config, universe);
  lhs.ForEach([&](const SystemModel& sm) {
    if (MapModel(abstract, sm, config)) return true;
    v.holds = false;
    v.counterexample = sm;
    return false;
  });
  return v;
}

}  // namespace

AnalysisVerdict CheckRefinement(const Model& refined, const Model& abstract,
                                const SemanticsConfig& config) {
  return RefineOver(refined, abstract, config,
                    JointUniverse({refined, abstract}, config));
}

AnalysisVerdict CheckConsistency(const std::vector<Model>& models,
                                 const SemanticsConfig& config) {
  Universe universe = JointUniverse(models, config);
  AnalysisVerdict v{AnalysisKind::kConsistent, false, std::nullopt,
                    std::nullopt, universe};
  EnumerateSystems(universe, config.validity(), [&](const SystemModel& sm) {
    for (const Model& m : models) {
      if (!MapModel(m, sm, config)) return true;
    }
    v.holds = true;
    v.witness = sm;
    return false;
  });
  return v;
}

AnalysisVerdict CheckEquivalence(const Model& m1, const Model& m2,
                                 const SemanticsConfig& config) {
  Universe universe = JointUniverse({m1, m2}, config);
  AnalysisVerdict v = RefineOver(m1, m2, config, universe);
  if (v.holds) v = RefineOver(m2, m1, config, universe);
  v.kind = AnalysisKind::kEquiv;
  return v;
}

std::string Report(const AnalysisVerdict& verdict) {
  std::string out = std::string("RESULT holds=") +
                    (verdict.holds ? "true" : "false") +
                    " kind=" + std::string(ToString(verdict.kind)) +
                    " bounds=" + ToString(verdict.universe) + "\n";
  if (verdict.witness) out += "WITNESS\n" + Dump(*verdict.witness);
  if (verdict.counterexample) {
    out += "COUNTEREXAMPLE\n" + Dump(*verdict.counterexample);
  }
  return out;
}

}  // namespace vlang
