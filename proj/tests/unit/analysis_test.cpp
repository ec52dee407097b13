#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "vlang/analysis.hpp"

namespace vlang {
namespace {

using testing::Asserts;
using testing::Cd;
using testing::Config;

constexpr char kRefined[] = "classdiagram R { class A extends B; class B; }";
constexpr char kAbstract[] = "classdiagram M { class A; class B; }";

SemanticsConfig Direct(std::size_t objects = 0) {
  return Config({}, {kMapSuperDirect}, objects);
}

TEST(CheckRefinement, AddedConstraintRefines) {
  auto v = CheckRefinement(Cd(kRefined), Cd(kAbstract), Direct());
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.counterexample);
  EXPECT_EQ(v.universe.required_classes, (std::set<std::string>{"A", "B"}));
}

TEST(CheckRefinement, Reflexive) {
  EXPECT_TRUE(CheckRefinement(Cd(kRefined), Cd(kRefined), Direct()).holds);
}

TEST(CheckRefinement, ReverseFailsWithReflexiveOnly) {
  auto v = CheckRefinement(Cd(kAbstract), Cd(kRefined), Direct());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(Dump(*v.counterexample),
            "CLASSES {A, B}\nSUB {(A,A), (B,B)}\nATTRS {}\nOBJECTS {}\n"
            "CLASSOF {}\n");
}

TEST(CheckConsistency, Cases) {
  auto ok = CheckConsistency({Cd(kRefined), Asserts("sub A B;")}, Direct());
  EXPECT_TRUE(ok.holds);
  ASSERT_TRUE(ok.witness);
  EXPECT_EQ(ok.witness->sub,
            (std::set<std::pair<std::string, std::string>>{
                {"A", "A"}, {"A", "B"}, {"B", "B"}}));
  EXPECT_TRUE(ok.witness->objects.empty());

  auto bad = CheckConsistency({Cd(kRefined), Asserts("no sub A B;")}, Direct(1));
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.witness);

  auto empty = CheckConsistency({Cd("classdiagram E { }")}, Direct(1));
  EXPECT_TRUE(empty.holds);
  EXPECT_EQ(*empty.witness, SystemModel{});
}

TEST(CheckEquivalence, Cases) {
  EXPECT_TRUE(CheckEquivalence(Cd("classdiagram S { classes A, B; }"),
                               Cd(kAbstract), Direct(1))
                  .holds);
  EXPECT_TRUE(CheckEquivalence(Cd("classdiagram X { class B; class A; }"),
                               Cd(kAbstract), Direct(1))
                  .holds);
  auto v = CheckEquivalence(Cd(kRefined), Cd(kAbstract), Direct());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.kind, AnalysisKind::kEquiv);
  EXPECT_FALSE(v.counterexample->IsSub("A", "B"));
}

TEST(Report, Format) {
  auto v = CheckRefinement(Cd(kAbstract), Cd(kRefined), Direct());
  EXPECT_EQ(Report(v),
            "RESULT holds=false kind=refine bounds=classes={A,B} extra={} "
            "max-objects=0 attrs={}\n"
            "COUNTEREXAMPLE\n"
            "CLASSES {A, B}\nSUB {(A,A), (B,B)}\nATTRS {}\nOBJECTS {}\n"
            "CLASSOF {}\n");
}

std::string RandomDiagram(std::mt19937& rng) {
  const char* names[] = {"A", "B", "C"};
  std::uniform_int_distribution<int> n(0, 3), pick(0, 2), coin(0, 2);
  std::string text = "classdiagram R {";
  for (int i = n(rng); i > 0; --i) {
    text += coin(rng) == 0 ? " <<singleton>>" : "";
    text += std::string(" class ") + names[pick(rng)];
    for (int s = 0, k = coin(rng); s < k; ++s) {
      text += std::string(s ? ", " : " extends ") + names[pick(rng)];
    }
    text += ";";
  }
  return text + " }";
}

TEST(AnalysisProperty, ReflexiveAndTransitive) {
  std::mt19937 rng(41);
  for (const char* variant : {kMapSuperDirect, kMapSuperDelegate}) {
    SemanticsConfig c = Config({}, {variant}, 1);
    for (int i = 0; i < 25; ++i) {
      Model a = Cd(RandomDiagram(rng)), b = Cd(RandomDiagram(rng)),
            d = Cd(RandomDiagram(rng));
      EXPECT_TRUE(CheckRefinement(a, a, c).holds);
      // Over a shared universe refinement is set inclusion, hence
      // transitive.
      Universe u = JointUniverse({a, b, d}, c);
      auto incl = [&](const Model& x, const Model& y) {
        bool ok = true;
        SemanticsSet(x, c, u).ForEach([&](const SystemModel& sm) {
          ok = MapModel(y, sm, c);
          return ok;
        });
        return ok;
      };
      if (incl(a, b) && incl(b, d)) EXPECT_TRUE(incl(a, d));
    }
  }
}

TEST(AnalysisProperty, EquivalenceIsMutualRefinement) {
  std::mt19937 rng(43);
  SemanticsConfig c = Direct(1);
  for (int i = 0; i < 40; ++i) {
    Model a = Cd(RandomDiagram(rng)), b = Cd(RandomDiagram(rng));
    bool both = CheckRefinement(a, b, c).holds && CheckRefinement(b, a, c).holds;
    EXPECT_EQ(CheckEquivalence(a, b, c).holds, both);
  }
}

TEST(AnalysisProperty, SingleModelConsistencyIsNonEmptiness) {
  std::mt19937 rng(47);
  for (const char* variant : {kMapSuperDirect, kMapSuperDelegate}) {
    SemanticsConfig c = Config({"SingleInheritance"}, {variant}, 1);
    for (int i = 0; i < 30; ++i) {
      Model m = Cd(RandomDiagram(rng));
      EXPECT_EQ(CheckConsistency({m}, c).holds, ComputeSem(m, c).Count() > 0);
    }
  }
}

TEST(AnalysisProperty, WitnessIsStable) {
  auto a = CheckConsistency({Cd(kRefined), Asserts("sub A B;")}, Direct(1));
  auto b = CheckConsistency({Cd(kRefined), Asserts("sub A B;")}, Direct(1));
  EXPECT_EQ(Report(a), Report(b));
}

TEST(AnalysisProperty, ConsistencySurvivesLargerBounds) {
  SemanticsConfig small = Direct(0), large = Direct(2);
  large.bounds.extra_classes = {"X"};
  auto models = std::vector<Model>{Cd(kRefined), Asserts("sub A B;")};
  EXPECT_TRUE(CheckConsistency(models, small).holds);
  EXPECT_TRUE(CheckConsistency(models, large).holds);
}

}  // namespace
}  // namespace vlang
