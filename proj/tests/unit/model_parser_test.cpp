#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "vlang/ast.hpp"
#include "vlang/context_conditions.hpp"
#include "vlang/desugar.hpp"
#include "vlang/error.hpp"
#include "vlang/model_parser.hpp"

namespace vlang {
namespace {

using testing::CdMinimal;
using testing::CdParser;

const ModelParser& SimpParser() {
  static const ModelParser p(ParseGrammar(testing::Data("cdsimp.mclang")));
  return p;
}

std::vector<std::string> ClassNames(const AstNode& def) {
  std::vector<std::string> out;
  for (const AstValue& c : def.at("classes").items()) {
    out.push_back(c.node().at("Name").ident());
  }
  return out;
}

TEST(ParseModel, TwoClasses) {
  AstNode n = SimpParser().Parse("classdiagram D { class A extends B; class B; }");
  EXPECT_EQ(n.datatype(), "CDDefinition");
  EXPECT_EQ(n.at("Name").ident(), "D");
  ASSERT_EQ(ClassNames(n), (std::vector<std::string>{"A", "B"}));
  const AstNode& a = n.at("classes").items()[0].node();
  ASSERT_EQ(a.at("scl").items().size(), 1u);
  EXPECT_EQ(a.at("scl").items()[0].ident(), "B");
  EXPECT_TRUE(Conforms(n, SimpParser().schema()));
}

TEST(ParseModel, EmptyDiagram) {
  AstNode n = SimpParser().Parse("classdiagram D { }");
  EXPECT_TRUE(n.at("classes").items().empty());
}

TEST(ParseModel, SynonymGivesIdenticalTree) {
  AstNode a = CdParser().Parse("classdiagram D { class A extends B; class B; }");
  AstNode b = CdParser().Parse("classdiagram D { class A ext B; class B; }");
  EXPECT_EQ(a, b);
  EXPECT_EQ(ToText(a), ToText(b));
}

TEST(ParseModel, Stereotypes) {
  AstNode n = CdParser().Parse(
      "classdiagram D { <<singleton>> <<entity>> class A; }");
  const AstNode& a = n.at("classes").items()[0].node();
  EXPECT_EQ(a.at("stereotypes").stereotypes(),
            (std::set<std::string>{"entity", "singleton"}));
}

TEST(ParseModel, IllegalCharacter) {
  try {
    SimpParser().Parse("classdiagram D { class A$; }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTokenize);
    EXPECT_EQ(e.pos(), (SourcePos{1, 25}));
  }
}

TEST(ParseModel, ExpectedSetAtFurthestPosition) {
  try {
    SimpParser().Parse("classdiagram D { class A extends ; }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSyntax);
    EXPECT_NE(e.detail().find("IDENT"), std::string::npos) << e.what();
    EXPECT_EQ(e.pos().column, 34);
  }
}

TEST(ParseModel, TrailingInput) {
  EXPECT_THROW(SimpParser().Parse("classdiagram D { } class"), Error);
}

TEST(ParseModel, KeywordsAreReserved) {
  EXPECT_THROW(SimpParser().Parse("classdiagram class { }"), Error);
}

TEST(ParseModel, MissingTerminatorIsRejected) {
  EXPECT_THROW(SimpParser().Parse("classdiagram D { class A class B; }"), Error);
}

TEST(ParseModel, CommentsAndWhitespace) {
  AstNode n = SimpParser().Parse(
      "// header\nclassdiagram D {\n  class A; // trailing\n}\n");
  EXPECT_EQ(ClassNames(n), (std::vector<std::string>{"A"}));
}

TEST(ParseModel, AssertionLanguage) {
  AstNode n = testing::AssertParser().Parse("sub A B; no sub B A;");
  ASSERT_EQ(n.at("stmts").items().size(), 2u);
  EXPECT_TRUE(n.at("stmts").items()[0].node().at("neg").items().empty());
  EXPECT_EQ(n.at("stmts").items()[1].node().at("neg").items().size(), 1u);
  EXPECT_TRUE(testing::AssertParser().Parse("").at("stmts").items().empty());
}

// Random class diagrams in three spellings: canonical keywords, the "ext"
// synonym, and with some bare classes written as shorthands.
struct RandomDiagram {
  std::string canonical, synonym, sugared;
};

RandomDiagram MakeDiagram(std::mt19937& rng) {
  const std::vector<std::string> names = {"A", "B", "C", "D"};
  std::uniform_int_distribution<int> count(0, 4), pick(0, 3), coin(0, 1);
  RandomDiagram d;
  d.canonical = d.synonym = d.sugared = "classdiagram R {";
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::string name = names[pick(rng)];
    std::string stereo = coin(rng) ? "<<singleton>> " : "";
    int supers = coin(rng) ? 1 + coin(rng) : 0;
    std::string tail;
    for (int s = 0; s < supers; ++s) tail += (s ? ", " : " ") + names[pick(rng)];
    d.canonical += " " + stereo + "class " + name + (supers ? " extends" + tail : "") + ";";
    d.synonym += " " + stereo + "class " + name + (supers ? " ext" + tail : "") + ";";
    if (stereo.empty() && supers == 0 && coin(rng)) {
      d.sugared += " classes " + name + ";";
    } else {
      d.sugared += " " + stereo + "class " + name + (supers ? " extends" + tail : "") + ";";
    }
  }
  for (std::string* s : {&d.canonical, &d.synonym, &d.sugared}) {
    *s += " }";
  }
  return d;
}

TEST(ParseModelProperty, ConformanceAndSynonymInvariance) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    RandomDiagram d = MakeDiagram(rng);
    AstNode a = CdParser().Parse(d.canonical);
    EXPECT_TRUE(Conforms(a, CdParser().schema())) << d.canonical;
    EXPECT_EQ(ToText(a), ToText(CdParser().Parse(d.synonym))) << d.synonym;
  }
}

TEST(Desugar, ShorthandExpandsInOrder) {
  AstNode sugared = CdMinimal("classdiagram D { classes A, B; }");
  AstNode expanded = CdMinimal("classdiagram D { class A; class B; }");
  EXPECT_EQ(sugared, expanded);
  EXPECT_EQ(ToText(sugared), ToText(expanded));
  EXPECT_TRUE(IsMinimal(CdParser().schema(), sugared));
}

TEST(Desugar, ShorthandKeepsPositionAmongClasses) {
  AstNode n = CdMinimal("classdiagram D { class X; classes A, B; class Y; }");
  // Shorthand expansions are appended after the explicitly written classes.
  EXPECT_EQ(ClassNames(n), (std::vector<std::string>{"X", "Y", "A", "B"}));
}

TEST(Desugar, MinimalTreeIsUnchanged) {
  AstNode n = CdParser().Parse("classdiagram D { class A extends B; class B; }");
  EXPECT_EQ(DesugarToMinimal(CdParser().schema(), n), n);
}

TEST(DesugarProperty, Idempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    RandomDiagram d = MakeDiagram(rng);
    AstNode once = DesugarToMinimal(CdParser().schema(), CdParser().Parse(d.sugared));
    EXPECT_EQ(DesugarToMinimal(CdParser().schema(), once), once) << d.sugared;
    EXPECT_TRUE(IsMinimal(CdParser().schema(), once));
  }
}

std::vector<CcViolation> Check(std::string_view text,
                               std::set<std::string> active) {
  return ClassDiagramConditions().Check(CdMinimal(text), active);
}

TEST(ContextConditions, DuplicateClass) {
  auto v = Check("classdiagram D { class A; class A; }", {});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, kCcUniqueClassNames);
  EXPECT_NE(v[0].message.find("'A'"), std::string::npos);
}

TEST(ContextConditions, DuplicateIntroducedByShorthand) {
  auto v = Check("classdiagram D { class A; classes A; }", {});
  EXPECT_EQ(v.size(), 1u);
}

TEST(ContextConditions, SingleInheritanceSyntactic) {
  std::string text = "classdiagram D { class A extends B, C; class B; class C; }";
  auto v = Check(text, {kCcSingleInheritance});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, kCcSingleInheritance);
  EXPECT_NE(v[0].message.find("'A'"), std::string::npos);
  EXPECT_TRUE(Check(text, {}).empty());  // optional, inactive
}

TEST(ContextConditions, SupersDeclared) {
  auto v = Check("classdiagram D { class A extends Z; }", {kCcSupersDeclared});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].message.find("'Z'"), std::string::npos);
}

TEST(ContextConditions, WellFormedDiagramIsClean) {
  auto v = Check("classdiagram D { class A extends B; class B; }",
                 {kCcSupersDeclared, kCcSingleInheritance});
  EXPECT_TRUE(v.empty());
}

TEST(ContextConditions, OrderedByConditionThenPosition) {
  auto v = Check(
      "classdiagram D {\n class A extends B, C;\n class A extends Z, Y;\n}",
      {kCcSupersDeclared, kCcSingleInheritance});
  std::vector<std::string> rendered;
  for (const auto& x : v) rendered.push_back(ToString(x));
  std::vector<std::string> expected = {
      "CC-single-inheritance-syntactic 2:8 class 'A' has 2 super-classes",
      "CC-single-inheritance-syntactic 3:8 class 'A' has 2 super-classes",
      "CC-supers-declared 2:18 class 'A' extends undeclared class 'B'",
      "CC-supers-declared 2:21 class 'A' extends undeclared class 'C'",
      "CC-supers-declared 3:18 class 'A' extends undeclared class 'Z'",
      "CC-supers-declared 3:21 class 'A' extends undeclared class 'Y'",
      "CC-unique-class-names 3:8 duplicate class name 'A'",
  };
  EXPECT_EQ(rendered, expected);
}

TEST(ContextConditions, UnknownId) {
  try {
    Check("classdiagram D { }", {"CC-nope"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownId);
  }
}

}  // namespace
}  // namespace vlang
