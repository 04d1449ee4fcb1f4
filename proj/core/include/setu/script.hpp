#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setu {

enum class Script { telugu, devanagari, latin, common, mixed, other };

enum class TokenKind { word, separator, punct };

std::string_view script_name(Script s);
std::string_view token_kind_name(TokenKind k);

/// One surface unit of a tokenization. `surface` equals the normalized input
/// sliced at [begin, end); offsets count codepoints, not bytes.
struct Token {
  std::string surface;
  TokenKind kind = TokenKind::word;
  Script script = Script::common;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

/// Canonical composition (NFC). Total and idempotent; applied at every
/// ingestion boundary so dictionary keys compare by plain string equality.
std::string normalize(std::string_view text);

/// Classifies by the letters present: a single named block, `common` when no
/// letters occur, `mixed` when letters of two or more blocks co-occur, and
/// `other` for letters of any single block outside Telugu / Devanagari /
/// Basic Latin + Latin-1.
Script detect_script(std::string_view text);

/// Whitespace (White_Space property) plus the sentence punctuation set
/// , . ! ? ; : ( ) " ' and the Devanagari dandas U+0964 / U+0965.
/// ZWJ / ZWNJ are word characters.
bool is_delimiter(char32_t cp);
bool is_punct_delimiter(char32_t cp);

/// Splits NFC text into tokens: maximal non-delimiter runs become words,
/// maximal whitespace runs become one separator each, and every punctuation
/// delimiter becomes its own single-codepoint token. Lossless: concatenating
/// the surfaces restores the input. Throws std::invalid_argument when the
/// input is not NFC (callers must normalize first).
std::vector<Token> tokenize(std::string_view text);

/// Surfaces of the word-kind tokens, in order.
std::vector<std::string> word_surfaces(std::span<const Token> tokens);

}  // namespace setu
