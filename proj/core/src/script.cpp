#include "setu/script.hpp"

#include <stdexcept>

#include <unicode/uchar.h>

#include "setu/unicode.hpp"

namespace setu {

namespace {

// Block bucket used for script classification. Basic Latin and Latin-1 are
// merged; every other block keeps its own identity so that e.g. Greek mixed
// with Cyrillic still counts as two blocks.
int letter_block(char32_t cp) {
  if (cp >= 0x0C00 && cp <= 0x0C7F) return -1;  // Telugu
  if (cp >= 0x0900 && cp <= 0x097F) return -2;  // Devanagari
  if (cp < 0x100) return -3;                    // Basic Latin / Latin-1
  return static_cast<int>(ublock_getCode(static_cast<UChar32>(cp)));
}

}  // namespace

std::string_view script_name(Script s) {
  switch (s) {
    case Script::telugu: return "telugu";
    case Script::devanagari: return "devanagari";
    case Script::latin: return "latin";
    case Script::common: return "common";
    case Script::mixed: return "mixed";
    case Script::other: return "other";
  }
  return "other";
}

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::word: return "word";
    case TokenKind::separator: return "separator";
    case TokenKind::punct: return "punct";
  }
  return "word";
}

std::string normalize(std::string_view text) { return uni::to_nfc(text); }

Script detect_script(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  bool any_letter = false;
  int block = 0;
  for (char32_t cp : cps) {
    if (!uni::is_letter(cp)) continue;
    const int b = letter_block(cp);
    if (!any_letter) {
      any_letter = true;
      block = b;
    } else if (b != block) {
      return Script::mixed;
    }
  }
  if (!any_letter) return Script::common;
  switch (block) {
    case -1: return Script::telugu;
    case -2: return Script::devanagari;
    case -3: return Script::latin;
    default: return Script::other;
  }
}

bool is_punct_delimiter(char32_t cp) {
  switch (cp) {
    case U',':
    case U'.':
    case U'!':
    case U'?':
    case U';':
    case U':':
    case U'(':
    case U')':
    case U'"':
    case U'\'':
    case U'।':  // danda
    case U'॥':  // double danda
      return true;
    default:
      return false;
  }
}

bool is_delimiter(char32_t cp) {
  return uni::is_white_space(cp) || is_punct_delimiter(cp);
}

std::vector<Token> tokenize(std::string_view text) {
  if (!uni::is_nfc(text)) {
    throw std::invalid_argument("tokenize requires NFC input");
  }
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<Token> tokens;

  auto flush = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    if (begin == end) return;
    Token t;
    t.surface = uni::encode_utf8(std::u32string_view(cps).substr(begin, end - begin));
    t.kind = kind;
    t.script = detect_script(t.surface);
    t.begin = begin;
    t.end = end;
    tokens.push_back(std::move(t));
  };

  std::size_t run_start = 0;
  TokenKind run_kind = TokenKind::word;
  bool in_run = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_punct_delimiter(cp)) {
      if (in_run) flush(run_start, i, run_kind);
      in_run = false;
      flush(i, i + 1, TokenKind::punct);
      continue;
    }
    const TokenKind kind =
        uni::is_white_space(cp) ? TokenKind::separator : TokenKind::word;
    if (in_run && kind == run_kind) continue;
    if (in_run) flush(run_start, i, run_kind);
    run_start = i;
    run_kind = kind;
    in_run = true;
  }
  if (in_run) flush(run_start, cps.size(), run_kind);
  return tokens;
}

std::vector<std::string> word_surfaces(std::span<const Token> tokens) {
  std::vector<std::string> words;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::word) words.push_back(t.surface);
  }
  return words;
}

}  // namespace setu
