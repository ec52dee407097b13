#include <map>
#include <set>

#include "vlang/feature_model.hpp"
#include "vlang/text.hpp"

namespace vlang {
namespace {

enum class Tok { kWord, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

// Words may contain '-' so that kinds like "semantic-domain" read as one
// token; names are checked to be plain identifiers afterwards.
std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t at = 0, line = 1, col = 1;
  auto advance = [&] {
    if (src[at] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++at;
  };
  for (;;) {
    while (at < src.size()) {
      if (IsSpace(src[at])) {
        advance();
      } else if (src.substr(at, 2) == "//") {
        while (at < src.size() && src[at] != '\n') advance();
      } else {
        break;
      }
    }
    SourcePos pos{line, col};
    if (at >= src.size()) {
      out.push_back({Tok::kEnd, "end of input", pos});
      return out;
    }
    char c = src[at];
    if (IsIdentStart(c)) {
      std::string word;
      while (at < src.size() && (IsIdentPart(src[at]) || src[at] == '-')) {
        word += src[at];
        advance();
      }
      out.push_back({Tok::kWord, std::move(word), pos});
    } else if (c == '{' || c == '}' || c == ';' || c == '.') {
      advance();
      out.push_back({Tok::kPunct, std::string(1, c), pos});
    } else {
      throw Error(ErrorKind::kSyntax,
                  std::string("unexpected character '") + c + "'", pos);
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lex(src)) {}

  std::vector<FeatureDiagram> Diagrams() {
    std::vector<FeatureDiagram> out;
    do {
      out.push_back(Diagram());
    } while (!AtEnd());
    return out;
  }

  std::vector<Configuration> Configurations() {
    std::vector<Configuration> out;
    do {
      out.push_back(Config());
    } while (!AtEnd());
    return out;
  }

 private:
  bool AtEnd() const { return Peek().kind == Tok::kEnd; }
  const Token& Peek() const { return toks_[at_]; }
  const Token& Next() {
    const Token& t = toks_[at_];
    if (at_ + 1 < toks_.size()) ++at_;
    return t;
  }
  bool IsWord(std::string_view w) const {
    return Peek().kind == Tok::kWord && Peek().text == w;
  }
  bool IsPunct(std::string_view p) const {
    return Peek().kind == Tok::kPunct && Peek().text == p;
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    throw Error(ErrorKind::kSyntax,
                "expected " + expected + ", found '" + Peek().text + "'",
                Peek().pos);
  }
  void Word(std::string_view w) {
    if (!IsWord(w)) Fail("'" + std::string(w) + "'");
    Next();
  }
  void Punct(std::string_view p) {
    if (!IsPunct(p)) Fail("'" + std::string(p) + "'");
    Next();
  }
  std::string Name(const std::string& what) {
    if (Peek().kind != Tok::kWord || !IsIdentifier(Peek().text)) Fail(what);
    return Next().text;
  }

  FeatureDiagram Diagram() {
    Word("featurediagram");
    FeatureDiagram d;
    d.name = Name("diagram name");
    Punct("{");
    std::set<std::string> vps, features;
    while (!IsPunct("}")) {
      if (IsWord("vp")) {
        VariationPoint vp = Vp();
        if (!vps.insert(vp.name).second) {
          throw Error(ErrorKind::kDuplicate,
                      "duplicate variation point '" + vp.name + "'", vp.pos);
        }
        for (const Feature& f : vp.features) {
          if (!features.insert(f.name).second) {
            throw Error(ErrorKind::kDuplicate,
                        "duplicate feature '" + f.name + "' in diagram " +
                            d.name,
                        f.pos);
          }
        }
        d.variation_points.push_back(std::move(vp));
      } else if (IsWord("constraint")) {
        d.constraints.push_back(Constraint());
      } else {
        Fail("'vp', 'constraint' or '}'");
      }
    }
    Punct("}");
    return d;
  }

  VariationPoint Vp() {
    VariationPoint vp;
    vp.pos = Peek().pos;
    Word("vp");
    vp.name = Name("variation point name");
    Word("for");
    Word("theory");
    vp.attached_theory = Name("theory name");
    Punct("{");
    if (IsWord("xor")) {
      SourcePos xor_pos = Next().pos;
      vp.xor_group = true;
      Punct("{");
      while (!IsPunct("}")) {
        vp.features.push_back(FeatureDecl(Modality::kXorMember));
      }
      Punct("}");
      if (vp.features.size() < 2) {
        throw Error(ErrorKind::kSyntax,
                    "xor group in '" + vp.name + "' needs at least 2 members",
                    xor_pos);
      }
    } else {
      while (!IsPunct("}")) {
        if (IsWord("optional")) {
          Next();
          vp.features.push_back(FeatureDecl(Modality::kOptional));
        } else if (IsWord("mandatory")) {
          Next();
          vp.features.push_back(FeatureDecl(Modality::kMandatory));
        } else if (IsWord("xor")) {
          throw Error(ErrorKind::kSyntax,
                      "an xor group must be the only member of its variation "
                      "point",
                      Peek().pos);
        } else {
          Fail("'optional', 'mandatory', 'xor' or '}'");
        }
      }
    }
    Punct("}");
    return vp;
  }

  Feature FeatureDecl(Modality modality) {
    Feature f;
    f.pos = Peek().pos;
    f.modality = modality;
    Word("feature");
    f.name = Name("feature name");
    Word("kind");
    if (Peek().kind != Tok::kWord) Fail("feature kind");
    auto kind = ParseFeatureKind(Peek().text);
    if (!kind) Fail("feature kind");
    Next();
    f.kind = *kind;
    Punct(";");
    return f;
  }

  FeatureRef Ref() {
    FeatureRef r;
    std::string first = Name("feature reference");
    if (IsPunct(".")) {
      Next();
      r.diagram = std::move(first);
      r.feature = Name("feature name after '.'");
    } else {
      r.feature = std::move(first);
    }
    return r;
  }

  CrossConstraint Constraint() {
    CrossConstraint c;
    c.pos = Peek().pos;
    Word("constraint");
    c.source = Ref();
    if (IsWord("requires")) {
      c.relation = Relation::kRequires;
    } else if (IsWord("excludes")) {
      c.relation = Relation::kExcludes;
    } else {
      Fail("'requires' or 'excludes'");
    }
    Next();
    c.target = Ref();
    Punct(";");
    return c;
  }

  Configuration Config() {
    Word("configuration");
    Configuration c;
    c.name = Name("configuration name");
    Word("for");
    c.diagram = Name("diagram name");
    Punct("{");
    while (!IsPunct("}")) {
      Word("select");
      c.selected.insert(Name("feature name"));
      Punct(";");
    }
    Punct("}");
    return c;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

std::vector<FeatureDiagram> ParseFeatureDiagrams(std::string_view source) {
  return Parser(source).Diagrams();
}

FeatureDiagram ParseFeatureDiagram(std::string_view source) {
  auto all = ParseFeatureDiagrams(source);
  if (all.size() != 1) {
    throw Error(ErrorKind::kSyntax, "expected exactly one featurediagram, got " +
                                        std::to_string(all.size()));
  }
  return std::move(all[0]);
}

std::vector<Configuration> ParseConfigurations(std::string_view source) {
  return Parser(source).Configurations();
}

Configuration ParseConfiguration(std::string_view source) {
  auto all = ParseConfigurations(source);
  if (all.size() != 1) {
    throw Error(ErrorKind::kSyntax, "expected exactly one configuration, got " +
                                        std::to_string(all.size()));
  }
  return std::move(all[0]);
}

}  // namespace vlang
