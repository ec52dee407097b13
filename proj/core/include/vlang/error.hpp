#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vlang {

/// 1-based line/column of a character in a source text.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool valid() const { return line > 0; }
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

std::string ToString(SourcePos pos);

enum class ErrorKind {
  kSyntax,
  kTokenize,
  kDuplicate,
  kUnresolved,
  kInvalidGrammar,
  kUnknownId,
  kUnknownDiagram,
  kNameConvention,
  kUnboundFunction,
  kInvalidModel,
  kConfiguration,
  kIo,
};

std::string_view ToString(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error. The
/// message already includes the position when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourcePos pos = {});

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string detail_;
};

}  // namespace vlang
