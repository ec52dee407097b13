#include "vlang/model_parser.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "vlang/text.hpp"

namespace vlang {
namespace {

enum class TokKind { kIdent, kKeyword, kPunct, kEnd };

struct Token {
  TokKind kind;
  std::string text;
  SourcePos pos;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case TokKind::kIdent: return "identifier '" + t.text + "'";
    case TokKind::kKeyword:
    case TokKind::kPunct: return "'" + t.text + "'";
    case TokKind::kEnd: return "end of input";
  }
  return t.text;
}

std::vector<Token> Tokenize(std::string_view src,
                            const std::set<std::string>& terminals) {
  std::set<std::string> keywords;
  std::vector<std::string> puncts;
  for (const std::string& t : terminals) {
    if (IsKeywordTerminal(t)) {
      keywords.insert(t);
    } else {
      puncts.push_back(t);
    }
  }
  // Longest match first.
  std::stable_sort(puncts.begin(), puncts.end(),
                   [](const std::string& a, const std::string& b) {
                     return a.size() > b.size();
                   });

  std::vector<Token> out;
  std::size_t at = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++at) {
      if (src[at] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (true) {
    while (at < src.size()) {
      if (IsSpace(src[at])) {
        advance(1);
      } else if (src.substr(at, 2) == "//") {
        while (at < src.size() && src[at] != '\n') advance(1);
      } else {
        break;
      }
    }
    SourcePos pos{line, col};
    if (at >= src.size()) {
      out.push_back({TokKind::kEnd, "", pos});
      return out;
    }
    if (IsIdentStart(src[at])) {
      std::size_t begin = at;
      std::size_t end = at;
      while (end < src.size() && IsIdentPart(src[end])) ++end;
      std::string word(src.substr(begin, end - begin));
      advance(end - begin);
      TokKind kind = keywords.count(word) ? TokKind::kKeyword : TokKind::kIdent;
      out.push_back({kind, std::move(word), pos});
      continue;
    }
    bool matched = false;
    for (const std::string& p : puncts) {
      if (src.substr(at, p.size()) == p) {
        advance(p.size());
        out.push_back({TokKind::kPunct, p, pos});
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::string shown(1, src[at]);
      throw Error(ErrorKind::kTokenize, "illegal character '" + shown + "'",
                  pos);
    }
  }
}

// Values collected while matching one production; undone on backtracking
// by truncating to a saved size.
struct Entry {
  std::string label;
  AstValue value;
};

constexpr int kMaxDepth = 1000;

class Interpreter {
 public:
  Interpreter(const GrammarDef& g, const AstSchema& s, std::vector<Token> toks)
      : g_(g), schema_(s), toks_(std::move(toks)) {}

  AstNode Run() {
    std::optional<AstNode> root = ParseProduction(g_.start());
    if (!root) ThrowExpected();
    if (toks_[pos_].kind != TokKind::kEnd) {
      NoteExpected(pos_, "end of input");
      const Token& t = toks_[pos_];
      if (farthest_ == pos_) ThrowExpected();
      throw Error(ErrorKind::kSyntax,
                  "trailing input starting with " + Describe(t), t.pos);
    }
    return std::move(*root);
  }

 private:
  [[noreturn]] void ThrowExpected() const {
    const Token& t = toks_[farthest_];
    std::string expected;
    for (const std::string& e : expected_) {
      if (!expected.empty()) expected += ", ";
      expected += e;
    }
    throw Error(ErrorKind::kSyntax,
                "expected one of {" + expected + "}, found " + Describe(t),
                t.pos);
  }

  void NoteExpected(std::size_t at, std::string what) {
    if (at > farthest_) {
      farthest_ = at;
      expected_.clear();
    }
    if (at == farthest_) expected_.insert(std::move(what));
  }

  bool MatchText(const std::vector<std::string>& texts) {
    const Token& t = toks_[pos_];
    if (t.kind == TokKind::kKeyword || t.kind == TokKind::kPunct) {
      if (std::find(texts.begin(), texts.end(), t.text) != texts.end()) {
        ++pos_;
        return true;
      }
    }
    for (const std::string& text : texts) NoteExpected(pos_, "'" + text + "'");
    return false;
  }

  std::optional<AstNode> ParseProduction(const Production& p) {
    if (++depth_ > kMaxDepth) {
      throw Error(ErrorKind::kSyntax, "nesting too deep", toks_[pos_].pos);
    }
    SourcePos start = toks_[pos_].pos;
    std::vector<Entry> acc;
    bool ok = MatchSequence(p.elements, acc);
    --depth_;
    if (!ok) return std::nullopt;
    return Build(p, start, std::move(acc));
  }

  AstNode Build(const Production& p, SourcePos start, std::vector<Entry> acc) {
    const Datatype& d = *schema_.Find(p.name);
    std::map<std::string, AstValue> fields;
    for (const Field& f : d.fields) {
      std::vector<AstValue> values;
      for (Entry& e : acc) {
        if (e.label == f.label) values.push_back(std::move(e.value));
      }
      switch (f.type.kind) {
        case FieldType::Kind::kIdent:
        case FieldType::Kind::kNode:
          // A mandatory single field is always filled once by a successful
          // match.
          fields.emplace(f.label, std::move(values.at(0)));
          break;
        case FieldType::Kind::kList:
          fields.emplace(f.label, AstValue::List(std::move(values)));
          break;
        case FieldType::Kind::kOption:
          fields.emplace(f.label, values.empty()
                                      ? AstValue::Absent()
                                      : AstValue::Present(std::move(values[0])));
          break;
        case FieldType::Kind::kStereotypes: {
          std::set<std::string> names;
          for (const AstValue& v : values) names.insert(v.ident());
          fields.emplace(f.label, AstValue::Stereotypes(std::move(names)));
          break;
        }
      }
    }
    return AstNode(p.name, std::move(fields), start);
  }

  bool MatchSequence(const std::vector<Element>& elems,
                     std::vector<Entry>& acc) {
    for (const Element& e : elems) {
      if (!MatchElement(e, acc)) return false;
    }
    return true;
  }

  bool MatchElement(const Element& e, std::vector<Entry>& acc) {
    switch (e.cardinality) {
      case Cardinality::kOnce: return MatchOnce(e, acc);
      case Cardinality::kOptional: {
        std::size_t saved_pos = pos_, saved_acc = acc.size();
        if (!MatchOnce(e, acc)) {
          pos_ = saved_pos;
          acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(saved_acc), acc.end());
        }
        return true;
      }
      case Cardinality::kStar:
        for (;;) {
          std::size_t saved_pos = pos_, saved_acc = acc.size();
          if (!MatchOnce(e, acc) || pos_ == saved_pos) {
            pos_ = saved_pos;
            acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(saved_acc), acc.end());
            return true;
          }
        }
    }
    return false;
  }

  bool MatchOnce(const Element& e, std::vector<Entry>& acc) {
    if (const auto* t = std::get_if<Terminal>(&e.node)) {
      return MatchText({t->text});
    }
    if (const auto* s = std::get_if<TerminalSynonyms>(&e.node)) {
      std::vector<std::string> texts{s->canonical};
      texts.insert(texts.end(), s->alternatives.begin(), s->alternatives.end());
      return MatchText(texts);
    }
    if (const auto* r = std::get_if<NonterminalRef>(&e.node)) {
      if (r->target == kIdentToken) {
        const Token& t = toks_[pos_];
        if (t.kind != TokKind::kIdent) {
          NoteExpected(pos_, "IDENT");
          return false;
        }
        acc.push_back({r->label, AstValue::Ident(t.text, t.pos)});
        ++pos_;
        return true;
      }
      std::optional<AstNode> child = ParseProduction(*g_.Find(r->target));
      if (!child) return false;
      acc.push_back({r->label, AstValue::Node(std::move(*child))});
      return true;
    }
    if (const auto* g = std::get_if<Group>(&e.node)) {
      return MatchSequence(g->elements, acc);
    }
    // Stereotype slot: zero or more <<name>>.
    for (;;) {
      std::size_t saved = pos_;
      if (!MatchText({"<<"})) return true;
      const Token& name = toks_[pos_];
      if (name.kind != TokKind::kIdent) {
        NoteExpected(pos_, "IDENT");
        pos_ = saved;
        return true;
      }
      ++pos_;
      if (!MatchText({">>"})) {
        pos_ = saved;
        return true;
      }
      acc.push_back({std::string(kStereotypeLabel),
                     AstValue::Ident(name.text, name.pos)});
    }
  }

  const GrammarDef& g_;
  const AstSchema& schema_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t farthest_ = 0;
  std::set<std::string> expected_;
  int depth_ = 0;
};

}  // namespace

ModelParser::ModelParser(GrammarDef grammar)
    : grammar_(std::move(grammar)), schema_(DeriveSchema(grammar_)) {}

AstNode ModelParser::Parse(std::string_view source) const {
  return Interpreter(grammar_, schema_, Tokenize(source, grammar_.Terminals()))
      .Run();
}

AstNode ParseModel(const GrammarDef& grammar, std::string_view source) {
  return ModelParser(grammar).Parse(source);
}

}  // namespace vlang
