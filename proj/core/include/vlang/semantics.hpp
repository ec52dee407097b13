#pragma once

// Set-valued semantics of the bundled languages over the bounded system
// model. A model denotes the set of valid systems its mapping predicate
// accepts; the semantics is loose, so systems may contain anything the
// model does not mention.
//
// Class diagrams (root CDDefinition):
//   class C extends S1, ..., Sk  ->  C is a class, the configured
//                                    super-class mapping holds, and every
//                                    stereotype's constraint holds.
// Subclass assertions (root Assertions):
//   sub A B;     ->  A, B are classes and sub(A, B)
//   no sub A B;  ->  A, B are classes and not sub(A, B)

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vlang/ast.hpp"
#include "vlang/feature_model.hpp"
#include "vlang/system_model.hpp"

namespace vlang {

/// mSuperClasses: (class, declared supers, system) -> bool
using SuperMapping = std::function<bool(
    const std::string&, const std::vector<std::string>&, const SystemModel&)>;

/// Every declared super is a class and a (transitive) superclass.
bool MapSuperDirect(const std::string& cls,
                    const std::vector<std::string>& supers,
                    const SystemModel& sm);

/// The first declared super is a superclass; every further super S is a
/// class reached through the attribute dlg_S : S of `cls`.
bool MapSuperDelegate(const std::string& cls,
                      const std::vector<std::string>& supers,
                      const SystemModel& sm);

std::string DelegateAttribute(const std::string& super);

inline constexpr char kSuperClassesFunction[] = "mSuperClasses";
inline constexpr char kMapSuperDirect[] = "MapSuperCDirect";
inline constexpr char kMapSuperDelegate[] = "MapSuperCDelegate";
inline constexpr char kSingletonStereotype[] = "singleton";

struct MappingVariant {
  std::string feature;
  std::string function;  // the declared mapping function it defines
  SuperMapping map;
  /// Attributes a class needs for the mapping to be satisfiable; used to
  /// seed attribute candidates.
  std::function<std::set<AttrCandidate>(const std::string&,
                                        const std::vector<std::string>&)>
      demands;
};

class MappingVariantRegistry {
 public:
  /// Throws Error(kDuplicate).
  void Register(MappingVariant variant);
  bool Has(const std::string& feature) const;
  /// Throws Error(kNameConvention) if `feature` has no registered function.
  const MappingVariant& Get(const std::string& feature) const;
  /// Function names some registered variant defines.
  std::set<std::string> functions() const;

 private:
  std::map<std::string, MappingVariant> variants_;
};

/// MapSuperCDirect and MapSuperCDelegate, both defining mSuperClasses.
const MappingVariantRegistry& BundledMappingVariants();

enum class Language { kClassDiagram, kAssertions };

std::string_view ToString(Language language);

/// Determined by the root datatype; throws Error(kInvalidModel) otherwise.
Language DetectLanguage(const AstNode& root);

/// A minimal (desugared) model of one of the bundled languages.
struct Model {
  Language language;
  AstNode ast;

  static Model FromAst(AstNode minimal_ast);
};

/// Resolved semantic variants plus enumeration bounds.
struct SemanticsConfig {
  std::set<std::string> domain_features;
  std::set<std::string> mapping_features;
  Bounds bounds;
  const DomainVariantRegistry* domain_registry = &BundledDomainVariants();
  const MappingVariantRegistry* mapping_registry = &BundledMappingVariants();

  /// Merges and validates `configs` against `diagrams`, then collects the
  /// selected semantic-domain and semantic-mapping features. Throws
  /// Error(kConfiguration) listing the violations if validation fails.
  static SemanticsConfig FromConfigurations(
      const std::vector<FeatureDiagram>& diagrams,
      const std::vector<Configuration>& configs, Bounds bounds);

  Validity validity() const;
  /// The selected variant defining mSuperClasses. Throws
  /// Error(kUnboundFunction) when none is selected.
  const MappingVariant& super_mapping() const;
};

bool MapClass(const AstNode& cls, const SystemModel& sm,
              const SuperMapping& variant);
bool MapDiagram(const AstNode& diagram, const SystemModel& sm,
                const SuperMapping& variant);
bool MapAssertions(const AstNode& assertions, const SystemModel& sm);

/// Mapping predicate of `model` under `config` (validity not included).
bool MapModel(const Model& model, const SystemModel& sm,
              const SemanticsConfig& config);

/// Class names the model mentions, supers and assertion operands included.
std::set<std::string> MentionedClasses(const Model& model);

/// Attributes the selected super-class mapping needs for this model.
std::set<AttrCandidate> DemandedAttributes(const Model& model,
                                           const SemanticsConfig& config);

/// One warning per stereotype the semantics does not interpret.
std::vector<std::string> StereotypeWarnings(const Model& model);

/// Search space shared by several models: every mentioned class is
/// required and every demanded attribute is a candidate, on top of
/// `config.bounds`.
Universe JointUniverse(const std::vector<Model>& models,
                       const SemanticsConfig& config);

/// sem(m) restricted to a universe. Membership can be queried without
/// enumerating; enumeration is in canonical order.
class SemanticsSet {
 public:
  SemanticsSet(Model model, SemanticsConfig config, Universe universe);

  const Model& model() const { return model_; }
  const SemanticsConfig& config() const { return config_; }
  const Universe& universe() const { return universe_; }
  const Validity& validity() const { return validity_; }

  bool Contains(const SystemModel& sm) const;
  std::size_t ForEach(const SystemVisitor& visit) const;
  std::size_t Count() const;
  std::vector<SystemModel> Members(
      std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

 private:
  Model model_;
  SemanticsConfig config_;
  Universe universe_;
  Validity validity_;
};

/// sem(m) over the universe JointUniverse({m}, config).
SemanticsSet ComputeSem(const Model& model, const SemanticsConfig& config);

/// "SEM count=<n> bounds=<universe>" followed by up to `witnesses` members,
/// each introduced by "WITNESS <i>".
std::string SemReport(const SemanticsSet& sem, std::size_t witnesses);

}  // namespace vlang
