#pragma once

#include <string>
#include <string_view>

namespace setu::uni {

/// Decodes UTF-8 to codepoints. Throws std::invalid_argument on malformed
/// input (truncated sequences, overlong encodings, surrogates).
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

void append_utf8(std::string& out, char32_t cp);

/// Canonical composition (Unicode NFC).
std::string to_nfc(std::string_view text);

bool is_nfc(std::string_view text);

/// Unicode general category L*.
bool is_letter(char32_t cp);

/// Unicode White_Space property.
bool is_white_space(char32_t cp);

}  // namespace setu::uni
