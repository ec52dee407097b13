#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vlang {

// Locale-independent character classes shared by every lexer in the library.
inline bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool IsIdentPart(char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9') || c == '_';
}
inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

/// True if `text` is a letter followed by letters, digits or underscores.
bool IsIdentifier(std::string_view text);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

/// Splits on `sep`, trimming whitespace and dropping empty pieces.
std::vector<std::string> SplitList(std::string_view text, char sep = ',');

/// Reads a whole file; throws vlang::Error(kIo) on failure.
std::string ReadFile(const std::filesystem::path& path);

/// Writes `content` verbatim (binary mode, so LF stays LF).
void WriteFile(const std::filesystem::path& path, std::string_view content);

}  // namespace vlang
