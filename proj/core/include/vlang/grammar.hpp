#pragma once

// Language-definition grammars: an extended context-free notation in the
// MontiCore style, restricted so that every grammar maps to exactly one
// datatype per production.
//
//   grammar CDSimp {
//     CDDefinition = "classdiagram" Name:IDENT "{" (classes:CDCClass)* "}";
//     CDCClass = <<?>> "class" Name:IDENT
//                (("extends" | "ext") scl:IDENT ("," scl:IDENT)*)? ";";
//   }

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vlang/error.hpp"

namespace vlang {

/// Name of the built-in identifier token.
inline constexpr std::string_view kIdentToken = "IDENT";
/// Field label a stereotype slot contributes to its production's datatype.
inline constexpr std::string_view kStereotypeLabel = "stereotypes";

enum class Cardinality { kOnce, kOptional, kStar };

struct Element;

struct Terminal {
  std::string text;
  friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// Presentation option: any alternative is accepted and read as `canonical`.
struct TerminalSynonyms {
  std::string canonical;
  std::vector<std::string> alternatives;
  friend bool operator==(const TerminalSynonyms&,
                         const TerminalSynonyms&) = default;
};

struct NonterminalRef {
  std::string label;   // explicit "label:" prefix, or derived from target
  std::string target;  // production name or IDENT
  bool explicit_label = false;
  friend bool operator==(const NonterminalRef&,
                         const NonterminalRef&) = default;
};

struct Group {
  std::vector<Element> elements;
  friend bool operator==(const Group&, const Group&) = default;
};

/// Position where zero or more <<name>> annotations are accepted.
struct StereotypeSlot {
  friend bool operator==(const StereotypeSlot&,
                         const StereotypeSlot&) = default;
};

struct Element {
  std::variant<Terminal, TerminalSynonyms, NonterminalRef, Group,
               StereotypeSlot>
      node;
  Cardinality cardinality = Cardinality::kOnce;
  SourcePos pos;

  friend bool operator==(const Element& a, const Element& b) {
    return a.node == b.node && a.cardinality == b.cardinality;
  }
};

struct Production {
  std::string name;
  std::vector<Element> elements;
  bool sugar = false;  // abbreviation, removed by desugaring
  SourcePos pos;
};

class GrammarDef {
 public:
  GrammarDef() = default;
  GrammarDef(std::string name, std::vector<Production> productions,
             std::string start = {});

  const std::string& name() const { return name_; }
  const std::vector<Production>& productions() const { return productions_; }
  const std::string& start_name() const { return start_; }

  const Production& start() const;
  /// nullptr if no production has that name.
  const Production* Find(std::string_view name) const;

  /// Every terminal text the grammar mentions, synonyms included, plus the
  /// stereotype brackets when the grammar has a stereotype slot.
  std::set<std::string> Terminals() const;
  bool HasStereotypeSlot() const;

 private:
  std::string name_;
  std::vector<Production> productions_;
  std::string start_;
};

/// Checks the grammar invariants; throws Error on the first violation.
void ValidateGrammar(const GrammarDef& grammar);

/// Parses and validates a .mclang grammar text.
GrammarDef ParseGrammar(std::string_view source);

/// Terminals that look like identifiers become reserved keywords; the rest
/// must be punctuation (no letters, digits, whitespace or quotes).
bool IsKeywordTerminal(std::string_view text);
bool IsPunctuationTerminal(std::string_view text);

}  // namespace vlang
