#pragma once

#include <filesystem>
#include <set>
#include <string>

#include "vlang/desugar.hpp"
#include "vlang/grammar.hpp"
#include "vlang/model_parser.hpp"
#include "vlang/semantics.hpp"
#include "vlang/text.hpp"

namespace vlang::testing {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(VLANG_TEST_DATA_DIR) / name;
}
inline std::filesystem::path GoldenPath(const std::string& name) {
  return std::filesystem::path(VLANG_TEST_GOLDEN_DIR) / name;
}
inline std::string Data(const std::string& name) {
  return ReadFile(DataPath(name));
}

inline const ModelParser& CdParser() {
  static const ModelParser p(ParseGrammar(Data("cd.mclang")));
  return p;
}
inline const ModelParser& AssertParser() {
  static const ModelParser p(ParseGrammar(Data("assert.mclang")));
  return p;
}

inline AstNode CdMinimal(std::string_view text) {
  return DesugarToMinimal(CdParser().schema(), CdParser().Parse(text));
}
inline Model Cd(std::string_view text) { return Model::FromAst(CdMinimal(text)); }
inline Model Asserts(std::string_view text) {
  return Model::FromAst(AssertParser().Parse(text));
}

/// A configuration assembled directly, bypassing feature-model validation.
inline SemanticsConfig Config(std::set<std::string> domain,
                              std::set<std::string> mapping,
                              std::size_t max_objects = 0) {
  SemanticsConfig c;
  c.domain_features = std::move(domain);
  c.mapping_features = std::move(mapping);
  c.bounds.max_objects = max_objects;
  return c;
}

inline constexpr char kDiamond[] =
    "classdiagram Diamond { class D extends B, C; class B extends A; "
    "class C extends A; class A; }";

}  // namespace vlang::testing
