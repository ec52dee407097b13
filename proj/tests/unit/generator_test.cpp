#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "vlang/error.hpp"
#include "vlang/generator.hpp"

namespace vlang {
namespace {

using testing::Data;
using testing::GoldenPath;

struct Bundled {
  std::vector<FeatureDiagram> diagrams =
      ParseFeatureDiagrams(Data("variants.fd"));
  const FeatureDiagram& domain() const { return diagrams[0]; }
  const FeatureDiagram& mapping() const { return diagrams[1]; }
};

TEST(GenerateDomainTheory, SingleInheritanceGolden) {
  Bundled p;
  TheoryDoc doc = GenerateDomainTheory(
      p.domain(), {"SMConf", "SystemModelVar", {"SingleInheritance"}});
  EXPECT_EQ(doc.FileName(), "SystemModel.thy.txt");
  EXPECT_EQ(Render(doc), ReadFile(GoldenPath("SystemModel.thy.txt")));
}

TEST(GenerateDomainTheory, EmptySelection) {
  Bundled p;
  EXPECT_EQ(Render(GenerateDomainTheory(p.domain(), {"E", "SystemModelVar", {}})),
            "theory SystemModel imports SystemModel-base\n"
            "begin\n"
            "constdefs \"valid sm == valid-base sm\"\n"
            "end\n");
}

TEST(GenerateDomainTheory, NameConvention) {
  auto d = ParseFeatureDiagram(
      "featurediagram G { vp vGhost for theory Object { optional feature "
      "Ghost kind semantic-domain; } }");
  try {
    GenerateDomainTheory(d, {"c", "G", {"Ghost"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNameConvention);
    EXPECT_NE(e.detail().find("valid-Ghost"), std::string::npos);
  }
}

TEST(GenerateDomainTheory, ConjunctsFollowExecutablePredicate) {
  DomainVariantRegistry reg;
  reg.Register("Zeta", [](const SystemModel&) { return true; });
  reg.Register("Alpha", [](const SystemModel&) { return true; });
  auto d = ParseFeatureDiagram(
      "featurediagram G { vp vB for theory O { optional feature Zeta kind "
      "semantic-domain; } vp vA for theory O { optional feature Alpha kind "
      "semantic-domain; } }");
  TheoryDoc doc = GenerateDomainTheory(d, {"c", "G", {"Alpha", "Zeta"}}, reg);
  EXPECT_EQ(doc.imports, (std::vector<std::string>{"vA/Alpha", "vB/Zeta"}));
  std::string line;
  Validity valid = ComposedValid({"Alpha", "Zeta"}, reg);
  for (const auto& c : valid.conjuncts()) {
    line += (line.empty() ? "" : " ^ ") + c + " sm";
  }
  EXPECT_EQ(doc.body[0], "constdefs \"valid sm == " + line + "\"");
}

TEST(GenerateMappingTheory, DelegateGolden) {
  Bundled p;
  TheoryDoc doc = GenerateMappingTheory(
      p.mapping(), {"CDConf", "CDSimpSemVar", {"MapSuperCDelegate"}}, "CDSimp");
  EXPECT_EQ(Render(doc), ReadFile(GoldenPath("CDSimpSem.thy.txt")));
}

TEST(GenerateMappingTheory, Direct) {
  Bundled p;
  TheoryDoc doc = GenerateMappingTheory(
      p.mapping(), {"c", "CDSimpSemVar", {"MapSuperCDirect"}}, "CDSimp");
  EXPECT_EQ(Render(doc),
            "theory CDSimpSem imports CDSimpSem-base "
            "\"vMapSuperClasses/MapSuperCDirect\"\nbegin end\n");
}

TEST(GenerateMappingTheory, UnboundFunction) {
  Bundled p;
  try {
    GenerateMappingTheory(p.mapping(), {"c", "CDSimpSemVar", {}}, "CDSimp");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnboundFunction);
    EXPECT_NE(e.detail().find("mSuperClasses"), std::string::npos);
  }
}

TEST(GenerateTheories, BundledConfiguration) {
  Bundled p;
  auto cs = ParseConfigurations(Data("sm.conf"));
  cs.push_back(ParseConfiguration(Data("cd.conf")));
  auto docs = GenerateTheories(p.diagrams, cs);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(Render(docs[0]), ReadFile(GoldenPath("CDSimpSem.thy.txt")));
  EXPECT_EQ(Render(docs[1]), ReadFile(GoldenPath("SystemModel.thy.txt")));
  // Deterministic.
  EXPECT_EQ(Render(GenerateTheories(p.diagrams, cs)[1]), Render(docs[1]));
}

TEST(GenerateTheories, RejectsInvalidConfiguration) {
  Bundled p;
  try {
    GenerateTheories(p.diagrams, ParseConfigurations(Data("bad.conf")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfiguration);
    EXPECT_NE(e.detail().find("excludes"), std::string::npos);
  }
}

// Generation succeeds exactly when validation passes and every selected
// feature is registered.
TEST(GenerateTheoriesProperty, SucceedsIffValidAndRegistered) {
  Bundled p;
  std::vector<std::pair<std::string, std::string>> all = {
      {"SystemModelVar", "SingleInheritance"},
      {"CDSimpSemVar", "MapSuperCDirect"},
      {"CDSimpSemVar", "MapSuperCDelegate"}};
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<Configuration> cs = {{"a", "SystemModelVar", {}},
                                     {"b", "CDSimpSemVar", {}}};
    for (unsigned i = 0; i < 3; ++i) {
      if (m >> i & 1) (i == 0 ? cs[0] : cs[1]).selected.insert(all[i].second);
    }
    bool valid = ValidateConfigurations(p.diagrams, cs).empty();
    bool generated = true;
    try {
      GenerateTheories(p.diagrams, cs);
    } catch (const Error&) {
      generated = false;
    }
    EXPECT_EQ(generated, valid) << m;
  }
}

}  // namespace
}  // namespace vlang
