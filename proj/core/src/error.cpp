#include "vlang/error.hpp"

namespace vlang {

std::string ToString(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "syntax error";
    case ErrorKind::kTokenize: return "tokenization error";
    case ErrorKind::kDuplicate: return "duplicate name";
    case ErrorKind::kUnresolved: return "unresolved reference";
    case ErrorKind::kInvalidGrammar: return "invalid grammar";
    case ErrorKind::kUnknownId: return "unknown identifier";
    case ErrorKind::kUnknownDiagram: return "unknown diagram";
    case ErrorKind::kNameConvention: return "name convention violation";
    case ErrorKind::kUnboundFunction: return "unbound function";
    case ErrorKind::kInvalidModel: return "invalid model";
    case ErrorKind::kConfiguration: return "configuration error";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

namespace {

std::string Compose(ErrorKind kind, const std::string& message, SourcePos pos) {
  std::string out(ToString(kind));
  if (pos.valid()) out += " at " + ToString(pos);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, SourcePos pos)
    : std::runtime_error(Compose(kind, message, pos)),
      kind_(kind),
      pos_(pos),
      detail_(std::move(message)) {}

}  // namespace vlang
