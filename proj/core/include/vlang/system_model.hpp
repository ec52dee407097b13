#pragma once

// The bounded semantic domain: a structural fragment of an object-oriented
// system model with classes, a subclassing relation, attributes and an
// object population.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vlang {

struct Attribute {
  std::string name;
  std::string target;  // class name
  friend auto operator<=>(const Attribute&, const Attribute&) = default;
};

struct SystemModel {
  std::set<std::string> classes;
  std::set<std::pair<std::string, std::string>> sub;  // (subclass, superclass)
  std::map<std::string, std::set<Attribute>> attrs;   // no empty entries
  std::vector<std::string> objects;                   // o1 ... on
  std::map<std::string, std::string> class_of;

  bool HasClass(std::string_view c) const;
  bool IsSub(const std::string& a, const std::string& b) const;
  bool HasAttribute(const std::string& owner, const std::string& name,
                    const std::string& target) const;
  std::size_t InstancesOf(const std::string& cls) const;

  friend bool operator==(const SystemModel&, const SystemModel&) = default;
};

/// Violations of the structural invariants: sub, attrs and class_of stay
/// inside `classes`, class_of is total on objects, attribute names are
/// unique per class.
std::vector<std::string> StructuralErrors(const SystemModel& sm);

/// Deterministic text form, one section per line:
///
///   CLASSES {A, B}
///   SUB {(A,A), (A,B), (B,B)}
///   ATTRS {A.dlg_C:C}
///   OBJECTS {o1}
///   CLASSOF {o1:A}
std::string Dump(const SystemModel& sm);

/// Canonical object id for a 1-based index.
std::string ObjectId(std::size_t index);

// ---------------------------------------------------------------------------
// Validity predicates

using SystemPredicate = std::function<bool(const SystemModel&)>;

/// Reflexive on classes.
bool SubReflexive(const SystemModel& sm);
bool SubTransitive(const SystemModel& sm);

/// Structural invariants, reflexivity and transitivity of sub.
bool EvalValidBase(const SystemModel& sm);

/// If C1 is a subclass of both C2 and C3 then C2 and C3 are related.
bool ValidSingleInheritance(const SystemModel& sm);

/// Prefix binding a domain feature F to its predicate "valid-F".
inline constexpr std::string_view kValidPrefix = "valid-";
inline std::string ValidName(std::string_view feature) {
  return std::string(kValidPrefix) + std::string(feature);
}

/// Feature name -> validity predicate for semantic-domain variants.
class DomainVariantRegistry {
 public:
  /// Registers predicate valid-<feature>. Throws Error(kDuplicate).
  void Register(const std::string& feature, SystemPredicate predicate);

  bool Has(const std::string& feature) const;
  /// Throws Error(kNameConvention) naming valid-<feature> if absent.
  const SystemPredicate& Get(const std::string& feature) const;
  std::vector<std::string> features() const;

 private:
  std::map<std::string, SystemPredicate> predicates_;
};

/// Holds valid-SingleInheritance.
const DomainVariantRegistry& BundledDomainVariants();

bool EvalVariantPredicate(const DomainVariantRegistry& registry,
                          const std::string& feature, const SystemModel& sm);

/// valid-base conjoined with valid-F for every selected domain feature F,
/// in sorted feature order.
class Validity {
 public:
  /// Bare valid-base.
  Validity();
  /// Arbitrary predicate; `implies_base` promises pred(sm) => valid-base(sm),
  /// which lets enumeration skip relations that are not preorders.
  Validity(std::string name, SystemPredicate predicate, bool implies_base);

  bool operator()(const SystemModel& sm) const;
  /// Conjunct names, e.g. {"valid-base", "valid-SingleInheritance"}.
  const std::vector<std::string>& conjuncts() const { return names_; }
  bool implies_base() const { return implies_base_; }

  friend Validity ComposedValid(const std::set<std::string>& domain_features,
                                const DomainVariantRegistry& registry);

 private:
  std::vector<std::string> names_;
  std::vector<SystemPredicate> predicates_;
  bool implies_base_ = true;
};

/// Throws Error(kNameConvention) for a feature without a registered predicate.
Validity ComposedValid(const std::set<std::string>& domain_features,
                       const DomainVariantRegistry& registry =
                           BundledDomainVariants());

// ---------------------------------------------------------------------------
// Bounded enumeration

struct AttrCandidate {
  std::string owner;
  std::string name;
  std::string target;
  friend auto operator<=>(const AttrCandidate&, const AttrCandidate&) = default;
};

struct Bounds {
  std::vector<std::string> extra_classes;
  std::size_t max_objects = 0;
  std::set<AttrCandidate> attr_candidates;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// The search space of one enumeration: mandatory classes plus bounds.
struct Universe {
  std::set<std::string> required_classes;
  Bounds bounds;

  /// Whether `sm` lies inside this universe (class set, attribute
  /// candidates, object count and canonical object ids).
  bool Contains(const SystemModel& sm) const;
  friend bool operator==(const Universe&, const Universe&) = default;
};

/// "classes={A,B} extra={} max-objects=1 attrs={D.dlg_C:C}"
std::string ToString(const Universe& universe);

/// Visitor returning false to stop the enumeration early.
using SystemVisitor = std::function<bool(const SystemModel&)>;

/// Calls `visit` once for every system in `universe` satisfying `valid`, in
/// canonical order:
///
///   1. class set: required plus a subset of the remaining extras, subsets
///      ordered as binary numbers over the sorted extras;
///   2. sub: bitmask over the pairs of sorted classes in row-major order,
///      ascending;
///   3. attrs: bitmask over the applicable sorted candidates, ascending;
///   4. object count 0..max, then the class of o1, o2, ... as a
///      non-decreasing sequence of class indices, lexicographically.
///
/// Objects are interchangeable, so each population appears once, with
/// classes assigned to o1..on in sorted order. Returns the number of
/// systems visited.
std::size_t EnumerateSystems(const Universe& universe, const Validity& valid,
                             const SystemVisitor& visit);

std::vector<SystemModel> EnumerateAll(const Universe& universe,
                                      const Validity& valid);

}  // namespace vlang
