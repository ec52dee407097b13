#include <string>
#include <vector>

#include "vlang/grammar.hpp"
#include "vlang/text.hpp"

namespace vlang {
namespace {

enum class Tok { kIdent, kString, kPunct, kSlot, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class GrammarLexer {
 public:
  explicit GrammarLexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipTrivia();
      SourcePos pos{line_, col_};
      if (at_ >= src_.size()) {
        out.push_back({Tok::kEnd, "end of input", pos});
        return out;
      }
      char c = src_[at_];
      if (IsIdentStart(c)) {
        std::size_t begin = at_;
        while (at_ < src_.size() && IsIdentPart(src_[at_])) Advance();
        out.push_back({Tok::kIdent, std::string(src_.substr(begin, at_ - begin)),
                       pos});
      } else if (c == '"') {
        out.push_back({Tok::kString, ReadString(pos), pos});
      } else if (src_.substr(at_, 5) == "<<?>>") {
        for (int i = 0; i < 5; ++i) Advance();
        out.push_back({Tok::kSlot, "<<?>>", pos});
      } else if (std::string_view("{}()=;:|?*").find(c) !=
                 std::string_view::npos) {
        Advance();
        out.push_back({Tok::kPunct, std::string(1, c), pos});
      } else {
        throw Error(ErrorKind::kSyntax,
                    std::string("unexpected character '") + c + "'", pos);
      }
    }
  }

 private:
  void Advance() {
    if (src_[at_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++at_;
  }

  void SkipTrivia() {
    while (at_ < src_.size()) {
      if (IsSpace(src_[at_])) {
        Advance();
      } else if (src_.substr(at_, 2) == "//") {
        while (at_ < src_.size() && src_[at_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  std::string ReadString(SourcePos pos) {
    Advance();  // opening quote
    std::string text;
    while (at_ < src_.size() && src_[at_] != '"') {
      char c = src_[at_];
      if (c == '\n') break;
      if (c == '\\' && at_ + 1 < src_.size()) {
        Advance();
        c = src_[at_];
      }
      text += c;
      Advance();
    }
    if (at_ >= src_.size() || src_[at_] != '"') {
      throw Error(ErrorKind::kSyntax, "unterminated string literal", pos);
    }
    Advance();
    return text;
  }

  std::string_view src_;
  std::size_t at_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string Uncapitalize(std::string s) {
  if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = char(s[0] - 'A' + 'a');
  return s;
}

class GrammarParser {
 public:
  explicit GrammarParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  GrammarDef Run() {
    ExpectWord("grammar");
    std::string name = ExpectIdent("grammar name");
    ExpectPunct("{");
    std::vector<Production> productions;
    while (!IsPunct("}")) {
      if (Peek().kind == Tok::kEnd) Fail("'}' closing the grammar");
      productions.push_back(ParseProduction());
    }
    ExpectPunct("}");
    if (Peek().kind != Tok::kEnd) Fail("end of input after grammar");
    return GrammarDef(std::move(name), std::move(productions));
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool IsPunct(std::string_view p, std::size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kPunct && Peek(ahead).text == p;
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    const Token& t = Peek();
    std::string found = t.kind == Tok::kString ? "\"" + t.text + "\"" : t.text;
    throw Error(ErrorKind::kSyntax,
                "expected " + expected + ", found '" + found + "'", t.pos);
  }

  void ExpectPunct(std::string_view p) {
    if (!IsPunct(p)) Fail("'" + std::string(p) + "'");
    Next();
  }
  void ExpectWord(std::string_view w) {
    if (Peek().kind != Tok::kIdent || Peek().text != w) {
      Fail("'" + std::string(w) + "'");
    }
    Next();
  }
  std::string ExpectIdent(const std::string& what) {
    if (Peek().kind != Tok::kIdent) Fail(what);
    return Next().text;
  }

  Production ParseProduction() {
    Production p;
    p.pos = Peek().pos;
    if (Peek().kind == Tok::kIdent && Peek().text == "sugar" &&
        Peek(1).kind == Tok::kIdent) {
      Next();
      p.sugar = true;
    }
    p.name = ExpectIdent("production name");
    ExpectPunct("=");
    p.elements = ParseSequence();
    ExpectPunct(";");
    return p;
  }

  std::vector<Element> ParseSequence() {
    std::vector<Element> out;
    while (!IsPunct(";") && !IsPunct(")") && !IsPunct("|") &&
           Peek().kind != Tok::kEnd) {
      out.push_back(ParseElement());
    }
    return out;
  }

  Element ParseElement() {
    Element e;
    e.pos = Peek().pos;
    const Token& t = Peek();
    if (t.kind == Tok::kString) {
      e.node = Terminal{Next().text};
    } else if (t.kind == Tok::kSlot) {
      Next();
      e.node = StereotypeSlot{};
    } else if (t.kind == Tok::kIdent) {
      NonterminalRef ref;
      std::string first = Next().text;
      if (IsPunct(":")) {
        Next();
        ref.label = first;
        ref.target = ExpectIdent("nonterminal after ':'");
        ref.explicit_label = true;
      } else {
        ref.target = first;
        ref.label = Uncapitalize(first);
      }
      e.node = std::move(ref);
    } else if (IsPunct("(")) {
      Next();
      e.node = ParseParenthesized(e.pos);
    } else {
      Fail("grammar element");
    }
    if (IsPunct("?")) {
      Next();
      e.cardinality = Cardinality::kOptional;
    } else if (IsPunct("*")) {
      Next();
      e.cardinality = Cardinality::kStar;
    }
    return e;
  }

  // "(" seq ")" is a group; "(" "a" | "b" ... ")" is a synonym group.
  std::variant<Terminal, TerminalSynonyms, NonterminalRef, Group,
               StereotypeSlot>
  ParseParenthesized(SourcePos open) {
    std::vector<std::vector<Element>> branches;
    branches.push_back(ParseSequence());
    while (IsPunct("|")) {
      Next();
      branches.push_back(ParseSequence());
    }
    ExpectPunct(")");
    if (branches.size() == 1) return Group{std::move(branches[0])};

    TerminalSynonyms syn;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const auto& b = branches[i];
      const Terminal* term =
          b.size() == 1 && b[0].cardinality == Cardinality::kOnce
              ? std::get_if<Terminal>(&b[0].node)
              : nullptr;
      if (term == nullptr) {
        throw Error(ErrorKind::kInvalidGrammar,
                    "alternation is only permitted among single terminals",
                    b.empty() ? open : b[0].pos);
      }
      if (i == 0) {
        syn.canonical = term->text;
      } else {
        syn.alternatives.push_back(term->text);
      }
    }
    return syn;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

GrammarDef ParseGrammar(std::string_view source) {
  GrammarDef g = GrammarParser(GrammarLexer(source).Run()).Run();
  ValidateGrammar(g);
  return g;
}

}  // namespace vlang
