#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vlang/error.hpp"
#include "vlang/feature_model.hpp"

namespace vlang {
namespace {

std::vector<FeatureDiagram> BundledDiagrams() {
  return ParseFeatureDiagrams(testing::Data("variants.fd"));
}

std::vector<std::string> Lines(const std::vector<FmViolation>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.ToString());
  return out;
}

std::vector<FmViolation> Validate(const std::vector<Configuration>& cs) {
  return ValidateConfigurations(BundledDiagrams(), MergeConfigurations(cs));
}

Configuration Conf(std::string name, std::string diagram,
                   std::set<std::string> selected) {
  return {std::move(name), std::move(diagram), std::move(selected)};
}

TEST(ParseFeatureDiagram, DomainDiagram) {
  auto ds = BundledDiagrams();
  ASSERT_EQ(ds.size(), 2u);
  const FeatureDiagram& sm = ds[0];
  EXPECT_EQ(sm.name, "SystemModelVar");
  ASSERT_EQ(sm.variation_points.size(), 2u);
  EXPECT_EQ(sm.variation_points[0].name, "vObject");
  EXPECT_EQ(sm.variation_points[0].attached_theory, "Object");
  ASSERT_EQ(sm.variation_points[0].features.size(), 1u);
  const Feature& si = sm.variation_points[0].features[0];
  EXPECT_EQ(si.name, "SingleInheritance");
  EXPECT_EQ(si.modality, Modality::kOptional);
  EXPECT_EQ(si.kind, FeatureKind::kSemanticDomain);
  EXPECT_EQ(sm.variation_points[1].name, "vType");
  EXPECT_TRUE(sm.variation_points[1].features.empty());
}

TEST(ParseFeatureDiagram, MappingDiagram) {
  const FeatureDiagram cd = BundledDiagrams()[1];
  ASSERT_EQ(cd.variation_points.size(), 1u);
  EXPECT_TRUE(cd.variation_points[0].xor_group);
  EXPECT_EQ(cd.variation_points[0].features.size(), 2u);
  ASSERT_EQ(cd.constraints.size(), 1u);
  EXPECT_EQ(cd.constraints[0].relation, Relation::kExcludes);
  EXPECT_EQ(cd.constraints[0].source.ToString(), "MapSuperCDirect");
  EXPECT_EQ(cd.constraints[0].target.ToString(),
            "SystemModelVar.SingleInheritance");
}

TEST(ParseFeatureDiagram, SingleMemberXorIsRejected) {
  EXPECT_THROW(ParseFeatureDiagram(
                   "featurediagram X { vp v for theory T { xor { feature A "
                   "kind presentation; } } }"),
               Error);
}

TEST(ParseFeatureDiagram, DuplicateFeature) {
  try {
    ParseFeatureDiagram(
        "featurediagram X { vp v for theory T { optional feature A kind "
        "presentation; mandatory feature A kind presentation; } }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDuplicate);
  }
}

TEST(ParseFeatureDiagram, UnknownKind) {
  EXPECT_THROW(ParseFeatureDiagram("featurediagram X { vp v for theory T { "
                                   "optional feature A kind magic; } }"),
               Error);
}

TEST(ParseConfiguration, Selection) {
  Configuration c = ParseConfiguration(testing::Data("sm.conf"));
  EXPECT_EQ(c.name, "SMConf");
  EXPECT_EQ(c.diagram, "SystemModelVar");
  EXPECT_EQ(c.selected, (std::set<std::string>{"SingleInheritance"}));
  EXPECT_TRUE(ParseConfiguration("configuration E for D { }").selected.empty());
  EXPECT_EQ(ParseConfiguration("configuration E for D { select A; select A; }")
                .selected.size(),
            1u);
  EXPECT_THROW(ParseConfiguration("configuration E D { }"), Error);
}

TEST(MergeConfigurations, UnionPerDiagram) {
  auto merged = MergeConfigurations(
      {Conf("a", "SystemModelVar", {"A"}), Conf("b", "SystemModelVar", {"B"})});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].selected, (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(merged[0].name, "a+b");
}

TEST(MergeConfigurations, SingleAndDistinct) {
  Configuration one = Conf("a", "D1", {"A"});
  EXPECT_EQ(MergeConfigurations({one}), std::vector<Configuration>{one});
  Configuration two = Conf("b", "D2", {"B"});
  EXPECT_EQ(MergeConfigurations({two, one}),
            (std::vector<Configuration>{one, two}));
}

TEST(MergeConfigurationsProperty, CommutativeAndAssociative) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 2), f(0, 4), n(0, 3);
  auto random_conf = [&] {
    Configuration c{"c", "D" + std::to_string(d(rng)), {}};
    for (int i = n(rng); i > 0; --i) c.selected.insert("F" + std::to_string(f(rng)));
    return c;
  };
  auto selections = [](const std::vector<Configuration>& cs) {
    std::vector<std::pair<std::string, std::set<std::string>>> out;
    for (const auto& c : MergeConfigurations(cs)) out.emplace_back(c.diagram, c.selected);
    return out;
  };
  for (int i = 0; i < 300; ++i) {
    Configuration a = random_conf(), b = random_conf(), c = random_conf();
    EXPECT_EQ(selections({a, b}), selections({b, a}));
    auto ab = MergeConfigurations({a, b});
    ab.push_back(c);
    auto bc = MergeConfigurations({b, c});
    bc.insert(bc.begin(), a);
    EXPECT_EQ(selections(ab), selections(bc));
    EXPECT_EQ(selections(ab), selections({a, b, c}));
  }
}

TEST(ValidateConfigurations, ReferenceSelectionIsOk) {
  EXPECT_TRUE(Validate({Conf("s", "SystemModelVar", {"SingleInheritance"}),
                        Conf("c", "CDSimpSemVar", {"MapSuperCDelegate"})})
                  .empty());
}

TEST(ValidateConfigurations, ExcludesViolation) {
  auto v = Validate(ParseConfigurations(testing::Data("bad.conf")));
  EXPECT_EQ(Lines(v),
            std::vector<std::string>{
                "VIOLATION CDSimpSemVar excludes "
                "CDSimpSemVar.MapSuperCDirect excludes "
                "SystemModelVar.SingleInheritance"});
}

TEST(ValidateConfigurations, XorBothSelected) {
  auto v = Validate(
      {Conf("c", "CDSimpSemVar", {"MapSuperCDirect", "MapSuperCDelegate"})});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "xor");
}

TEST(ValidateConfigurations, UnknownFeatureAndDiagram) {
  auto v = Validate({Conf("c", "SystemModelVar", {"Ghost"})});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "unknown-feature");
  try {
    Validate({Conf("c", "Nowhere", {})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownDiagram);
  }
}

TEST(ValidateConfigurations, RequiresAndMandatory) {
  auto ds = ParseFeatureDiagrams(
      "featurediagram X { vp v for theory T { mandatory feature M kind "
      "presentation; optional feature A kind presentation; optional feature "
      "B kind presentation; } constraint A requires B; }");
  auto v = ValidateConfigurations(ds, {Conf("c", "X", {"A"})});
  EXPECT_EQ(Lines(v), (std::vector<std::string>{
                          "VIOLATION X mandatory v.M",
                          "VIOLATION X requires X.A requires X.B"}));
  EXPECT_TRUE(ValidateConfigurations(ds, {Conf("c", "X", {"A", "B", "M"})}).empty());
}

// All 2^n selections over the two bundled diagrams, each diagram
// configured. The validator must agree with the direct evaluation.
TEST(ValidateConfigurationsOracle, AllSubsetsOfBundledDiagrams) {
  auto ds = BundledDiagrams();
  std::vector<std::pair<std::string, std::string>> features;
  for (const auto& d : ds)
    for (const auto& f : d.FeatureNames()) features.emplace_back(d.name, f);
  ASSERT_EQ(features.size(), 3u);
  std::vector<std::set<std::string>> accepted;
  for (unsigned m = 0; m < (1u << features.size()); ++m) {
    std::vector<Configuration> cs = {Conf("a", ds[0].name, {}),
                                     Conf("b", ds[1].name, {})};
    std::set<std::string> selection;
    for (std::size_t i = 0; i < features.size(); ++i) {
      if (!(m >> i & 1)) continue;
      selection.insert(features[i].second);
      (features[i].first == ds[0].name ? cs[0] : cs[1])
          .selected.insert(features[i].second);
    }
    bool ok = ValidateConfigurations(ds, MergeConfigurations(cs)).empty();
    EXPECT_EQ(ok, oracle::SelectionOk(ds, selection)) << m;
    if (ok) accepted.push_back(selection);
  }
  // Frozen from the oracle: exactly one mapping variant, never direct
  // together with single inheritance.
  std::vector<std::set<std::string>> expected = {
      {"MapSuperCDelegate"},
      {"MapSuperCDirect"},
      {"MapSuperCDelegate", "SingleInheritance"}};
  std::sort(accepted.begin(), accepted.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(accepted, expected);
}

// Random diagrams with up to 8 features and random constraints.
TEST(ValidateConfigurationsOracle, RandomDiagrams) {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<int> nf(2, 8), coin(0, 3), rel(0, 1);
    int n = nf(rng);
    std::string src = "featurediagram R { vp v0 for theory T {";
    std::vector<std::string> names;
    int i = 0;
    for (; i < n && coin(rng) != 0; ++i) {
      names.push_back("F" + std::to_string(i));
      src += std::string(coin(rng) == 1 ? " mandatory" : " optional") +
             " feature F" + std::to_string(i) + " kind presentation;";
    }
    src += " }";
    if (n - i >= 2) {
      src += " vp v1 for theory U { xor {";
      for (; i < n; ++i) {
        names.push_back("F" + std::to_string(i));
        src += " feature F" + std::to_string(i) + " kind presentation;";
      }
      src += " } }";
    }
    if (names.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    for (int c = coin(rng); c > 0; --c) {
      src += " constraint " + names[pick(rng)] +
             (rel(rng) ? " requires " : " excludes ") + names[pick(rng)] + ";";
    }
    src += " }";
    auto ds = ParseFeatureDiagrams(src);
    for (unsigned m = 0; m < (1u << names.size()); ++m) {
      std::set<std::string> sel;
      for (std::size_t k = 0; k < names.size(); ++k)
        if (m >> k & 1) sel.insert(names[k]);
      bool ok = ValidateConfigurations(ds, {Conf("c", "R", sel)}).empty();
      ASSERT_EQ(ok, oracle::SelectionOk(ds, sel)) << src << " mask " << m;
    }
  }
}

}  // namespace
}  // namespace vlang
