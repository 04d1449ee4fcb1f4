#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "setu/script.hpp"

namespace setu {

/// Romanization table: ASCII keys to target-script text. Keys are matched
/// longest-first; the key sets for vowels and vowel signs coincide (the
/// inherent vowel's sign is empty).
struct TranslitScheme {
  Script target_script = Script::other;
  std::map<std::string, std::string, std::less<>> consonants;
  std::map<std::string, std::string, std::less<>> vowels;       // independent forms
  std::map<std::string, std::string, std::less<>> vowel_signs;  // combining forms
  std::map<std::string, std::string, std::less<>> misc;         // standalone signs
  std::string virama;
  std::size_t max_key_len = 0;
};

/// Loads the `roman_key<TAB>kind<TAB>text` scheme format, kind one of
/// C (consonant), V (independent vowel), VS (vowel sign), MISC. The reserved
/// MISC key `virama` supplies the virama and is not matched in input.
/// Every V key must have a VS row (which may map to nothing, as the inherent
/// vowel does). Throws DataError on violations.
TranslitScheme load_scheme(std::istream& in);

/// Built-in ITRANS-style tables for Telugu and Devanagari.
/// Throws std::invalid_argument for any other script.
const TranslitScheme& builtin_scheme(Script target);

/// Longest-match left-to-right conversion of ASCII roman text into the
/// scheme's script. A consonant consumes a following vowel key as its vowel
/// sign (the inherent vowel leaves no sign) and takes the virama when no
/// vowel follows; an independent vowel form appears elsewhere; unmatched
/// characters copy through unchanged. The result is NFC.
/// Throws std::invalid_argument on non-ASCII input.
std::string transliterate(const TranslitScheme& scheme, std::string_view roman);

}  // namespace setu
