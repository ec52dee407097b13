#include "vlang/grammar.hpp"

#include <algorithm>
#include <map>

#include "vlang/desugar.hpp"
#include "vlang/text.hpp"

namespace vlang {

GrammarDef::GrammarDef(std::string name, std::vector<Production> productions,
                       std::string start)
    : name_(std::move(name)),
      productions_(std::move(productions)),
      start_(std::move(start)) {
  if (start_.empty() && !productions_.empty()) start_ = productions_[0].name;
}

const Production& GrammarDef::start() const {
  const Production* p = Find(start_);
  if (p == nullptr) {
    throw Error(ErrorKind::kInvalidGrammar,
                "start production '" + start_ + "' is undefined");
  }
  return *p;
}

const Production* GrammarDef::Find(std::string_view name) const {
  for (const Production& p : productions_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

template <typename Fn>
void Walk(const std::vector<Element>& elements, Fn&& fn) {
  for (const Element& e : elements) {
    fn(e);
    if (const auto* g = std::get_if<Group>(&e.node)) Walk(g->elements, fn);
  }
}

}  // namespace

std::set<std::string> GrammarDef::Terminals() const {
  std::set<std::string> out;
  for (const Production& p : productions_) {
    Walk(p.elements, [&](const Element& e) {
      if (const auto* t = std::get_if<Terminal>(&e.node)) {
        out.insert(t->text);
      } else if (const auto* s = std::get_if<TerminalSynonyms>(&e.node)) {
        out.insert(s->canonical);
        out.insert(s->alternatives.begin(), s->alternatives.end());
      } else if (std::holds_alternative<StereotypeSlot>(e.node)) {
        out.insert("<<");
        out.insert(">>");
      }
    });
  }
  return out;
}

bool GrammarDef::HasStereotypeSlot() const {
  bool found = false;
  for (const Production& p : productions_) {
    Walk(p.elements, [&](const Element& e) {
      found = found || std::holds_alternative<StereotypeSlot>(e.node);
    });
  }
  return found;
}

bool IsKeywordTerminal(std::string_view text) { return IsIdentifier(text); }

bool IsPunctuationTerminal(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x21 || u > 0x7e) return false;
    if (IsIdentPart(c) || c == '"' || c == '\'') return false;
  }
  return true;
}

namespace {

enum class LabelKind { kIdent, kNode, kStereotypes };

struct LabelUse {
  LabelKind kind;
  std::string target;
  SourcePos pos;
};

class GrammarValidator {
 public:
  explicit GrammarValidator(const GrammarDef& g) : g_(g) {}

  void Run() {
    if (!IsIdentifier(g_.name())) {
      throw Error(ErrorKind::kInvalidGrammar,
                  "grammar name '" + g_.name() + "' is not an identifier");
    }
    if (g_.productions().empty()) {
      throw Error(ErrorKind::kInvalidGrammar,
                  "grammar " + g_.name() +
                      " has no productions (start production undefined)");
    }
    std::set<std::string> names;
    for (const Production& p : g_.productions()) {
      if (p.name == kIdentToken || !IsIdentifier(p.name)) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "invalid production name '" + p.name + "'", p.pos);
      }
      if (!names.insert(p.name).second) {
        throw Error(ErrorKind::kDuplicate,
                    "duplicate production name '" + p.name + "'", p.pos);
      }
    }
    g_.start();  // throws when undefined

    for (const Production& p : g_.productions()) {
      slots_ = 0;
      labels_.clear();
      CheckSequence(p, p.elements);
      if (p.sugar && !HasBuiltinDesugaring(p.name)) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "no built-in desugaring for abbreviation production '" +
                        p.name + "'",
                    p.pos);
      }
    }
    CheckLeftRecursion();
  }

 private:
  void CheckTerminalText(const std::string& text, SourcePos pos) {
    if (text.empty()) {
      throw Error(ErrorKind::kInvalidGrammar, "empty terminal", pos);
    }
    if (!IsKeywordTerminal(text) && !IsPunctuationTerminal(text)) {
      throw Error(ErrorKind::kInvalidGrammar,
                  "terminal \"" + text +
                      "\" must be a keyword or pure punctuation",
                  pos);
    }
    if (text == "<<" || text == ">>") {
      throw Error(ErrorKind::kInvalidGrammar,
                  "terminal \"" + text + "\" is reserved for stereotypes",
                  pos);
    }
  }

  void UseLabel(const std::string& label, LabelKind kind, std::string target,
                SourcePos pos, const Production& p) {
    auto it = labels_.find(label);
    if (it == labels_.end()) {
      labels_.emplace(label, LabelUse{kind, std::move(target), pos});
      return;
    }
    if (it->second.kind != kind || it->second.target != target ||
        kind == LabelKind::kStereotypes) {
      throw Error(ErrorKind::kInvalidGrammar,
                  "label '" + label + "' is used with conflicting types in "
                  "production " + p.name,
                  pos);
    }
  }

  void CheckSequence(const Production& p, const std::vector<Element>& elems) {
    for (const Element& e : elems) CheckElement(p, e);
  }

  void CheckElement(const Production& p, const Element& e) {
    if (const auto* t = std::get_if<Terminal>(&e.node)) {
      CheckTerminalText(t->text, e.pos);
      RequireOnce(e, "terminal");
    } else if (const auto* s = std::get_if<TerminalSynonyms>(&e.node)) {
      RequireOnce(e, "synonym group");
      if (s->alternatives.empty()) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "synonym group needs at least two alternatives", e.pos);
      }
      std::set<std::string> seen{s->canonical};
      CheckTerminalText(s->canonical, e.pos);
      for (const std::string& alt : s->alternatives) {
        CheckTerminalText(alt, e.pos);
        if (!seen.insert(alt).second) {
          throw Error(ErrorKind::kInvalidGrammar,
                      "synonym alternative \"" + alt + "\" repeated", e.pos);
        }
      }
    } else if (const auto* r = std::get_if<NonterminalRef>(&e.node)) {
      if (r->target != kIdentToken && g_.Find(r->target) == nullptr) {
        throw Error(ErrorKind::kUnresolved,
                    "unresolved nonterminal '" + r->target + "'", e.pos);
      }
      if (!IsIdentifier(r->label)) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "invalid label '" + r->label + "'", e.pos);
      }
      if (r->target == kIdentToken) {
        UseLabel(r->label, LabelKind::kIdent, {}, e.pos, p);
      } else {
        UseLabel(r->label, LabelKind::kNode, r->target, e.pos, p);
      }
    } else if (const auto* g = std::get_if<Group>(&e.node)) {
      if (g->elements.empty()) {
        throw Error(ErrorKind::kInvalidGrammar, "empty group", e.pos);
      }
      CheckSequence(p, g->elements);
    } else {
      RequireOnce(e, "stereotype slot");
      if (++slots_ > 1) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "production " + p.name + " has more than one stereotype "
                    "slot",
                    e.pos);
      }
      UseLabel(std::string(kStereotypeLabel), LabelKind::kStereotypes, {},
               e.pos, p);
    }
  }

  static void RequireOnce(const Element& e, std::string_view what) {
    if (e.cardinality != Cardinality::kOnce) {
      throw Error(ErrorKind::kInvalidGrammar,
                  std::string(what) + " cannot carry '?' or '*'", e.pos);
    }
  }

  // A production that can reach itself without consuming a token would make
  // recursive descent loop forever.
  void CheckLeftRecursion() {
    std::map<std::string, bool> nullable;
    for (const Production& p : g_.productions()) nullable[p.name] = false;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Production& p : g_.productions()) {
        if (!nullable[p.name] && SequenceNullable(p.elements, nullable)) {
          nullable[p.name] = true;
          changed = true;
        }
      }
    }
    std::map<std::string, std::set<std::string>> calls;
    for (const Production& p : g_.productions()) {
      LeadingCalls(p.elements, nullable, calls[p.name]);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    std::map<std::string, int> state;
    for (const Production& p : g_.productions()) Visit(p.name, calls, state);
  }

  void Visit(const std::string& name,
             const std::map<std::string, std::set<std::string>>& calls,
             std::map<std::string, int>& state) {
    int& s = state[name];
    if (s == 2) return;
    if (s == 1) {
      throw Error(ErrorKind::kInvalidGrammar,
                  "production '" + name + "' is left-recursive",
                  g_.Find(name)->pos);
    }
    s = 1;
    for (const std::string& next : calls.at(name)) Visit(next, calls, state);
    state[name] = 2;
  }

  static bool ElementNullable(const Element& e,
                              const std::map<std::string, bool>& nullable) {
    if (e.cardinality != Cardinality::kOnce) return true;
    if (const auto* r = std::get_if<NonterminalRef>(&e.node)) {
      return r->target != kIdentToken && nullable.at(r->target);
    }
    if (const auto* g = std::get_if<Group>(&e.node)) {
      return SequenceNullable(g->elements, nullable);
    }
    return std::holds_alternative<StereotypeSlot>(e.node);
  }

  static bool SequenceNullable(const std::vector<Element>& elems,
                               const std::map<std::string, bool>& nullable) {
    return std::all_of(elems.begin(), elems.end(), [&](const Element& e) {
      return ElementNullable(e, nullable);
    });
  }

  static void LeadingCalls(const std::vector<Element>& elems,
                           const std::map<std::string, bool>& nullable,
                           std::set<std::string>& out) {
    for (const Element& e : elems) {
      if (const auto* r = std::get_if<NonterminalRef>(&e.node)) {
        if (r->target != kIdentToken) out.insert(r->target);
      } else if (const auto* g = std::get_if<Group>(&e.node)) {
        LeadingCalls(g->elements, nullable, out);
      }
      if (!ElementNullable(e, nullable)) return;
    }
  }

  const GrammarDef& g_;
  int slots_ = 0;
  std::map<std::string, LabelUse> labels_;
};

}  // namespace

void ValidateGrammar(const GrammarDef& grammar) {
  GrammarValidator(grammar).Run();
}

}  // namespace vlang
