#pragma once

#include <string_view>

#include "vlang/ast.hpp"
#include "vlang/grammar.hpp"
#include "vlang/schema.hpp"

namespace vlang {

/// Interprets a grammar directly as a recursive-descent parser.
///
/// Sequences are matched left to right. Optional and starred parts are
/// greedy and are the only places that backtrack: an attempt that fails
/// part-way is undone completely, and a star stops at the first iteration
/// that fails or consumes nothing. Any synonym alternative is read as its
/// canonical terminal, so it leaves no trace in the tree.
///
/// Throws Error(kTokenize) for characters no token can start with and
/// Error(kSyntax) for everything else, the latter naming the set of tokens
/// expected at the furthest position reached.
class ModelParser {
 public:
  /// `grammar` must already be valid; it is copied.
  explicit ModelParser(GrammarDef grammar);

  const GrammarDef& grammar() const { return grammar_; }
  const AstSchema& schema() const { return schema_; }

  AstNode Parse(std::string_view source) const;

 private:
  GrammarDef grammar_;
  AstSchema schema_;
};

/// Convenience wrapper around ModelParser.
AstNode ParseModel(const GrammarDef& grammar, std::string_view source);

}  // namespace vlang
