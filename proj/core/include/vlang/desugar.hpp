#pragma once

#include <string_view>

#include "vlang/ast.hpp"
#include "vlang/schema.hpp"

namespace vlang {

/// True if the library ships an expansion rule for abbreviation datatype
/// `datatype`. Only productions with such a rule may be marked `sugar`.
///
/// Built in:
///   CDClasses   "classes A, B;"  ->  one CDCClass per name, no supers and
///               no stereotypes, in declaration order.
bool HasBuiltinDesugaring(std::string_view datatype);

/// Replaces every abbreviation node by its primitive expansion. Expanded
/// nodes are appended, in order, to the parent's list field holding their
/// datatype, and the list that held the abbreviations is left empty, so the
/// result equals what parsing the expanded text would produce.
///
/// Idempotent. The result contains no instance of a sugar datatype.
AstNode DesugarToMinimal(const AstSchema& schema, const AstNode& node);

/// True if no node in the tree has a datatype marked sugar in `schema`.
bool IsMinimal(const AstSchema& schema, const AstNode& node);

}  // namespace vlang
