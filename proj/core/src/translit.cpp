#include "setu/translit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "setu/errors.hpp"
#include "setu/unicode.hpp"
#include "tsv.hpp"

namespace setu {

namespace {

#include "translit_schemes.inc"

constexpr std::string_view kViramaKey = "virama";

bool is_ascii_key(std::string_view key) {
  if (key.empty()) return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7F;
  });
}

Script script_of_text(const std::string& text) {
  for (char32_t cp : uni::decode_utf8(text)) {
    if (cp >= 0x0C00 && cp <= 0x0C7F) return Script::telugu;
    if (cp >= 0x0900 && cp <= 0x097F) return Script::devanagari;
  }
  return Script::other;
}

// Longest key of `m` starting at roman[pos..]; nullptr when none matches.
const std::pair<const std::string, std::string>* longest_key(
    const std::map<std::string, std::string, std::less<>>& m,
    std::string_view roman, std::size_t pos, std::size_t max_len) {
  const std::size_t limit = std::min(max_len, roman.size() - pos);
  for (std::size_t len = limit; len >= 1; --len) {
    const auto it = m.find(roman.substr(pos, len));
    if (it != m.end()) return &*it;
    if (len == 1) break;
  }
  return nullptr;
}

}  // namespace

TranslitScheme load_scheme(std::istream& in) {
  TranslitScheme scheme;
  detail::for_each_tsv_row(in, 3, [&](std::size_t line_no,
                                      std::vector<std::string>& fields) {
    const std::string& key = fields[0];
    const std::string& kind = fields[1];
    std::string& text = fields[2];
    if (!is_ascii_key(key)) {
      throw DataError("roman key must be non-empty printable ASCII: '" + key + "'",
                      line_no);
    }

    std::map<std::string, std::string, std::less<>>* table = nullptr;
    bool allow_empty = false;
    if (kind == "C") {
      table = &scheme.consonants;
    } else if (kind == "V") {
      table = &scheme.vowels;
    } else if (kind == "VS") {
      table = &scheme.vowel_signs;
      allow_empty = true;
    } else if (kind == "MISC") {
      if (key == kViramaKey) {
        if (text.empty()) throw DataError("virama text must not be empty", line_no);
        if (!scheme.virama.empty()) throw DataError("duplicate virama row", line_no);
        scheme.virama = std::move(text);
        return;
      }
      table = &scheme.misc;
    } else {
      throw DataError("unknown kind '" + kind + "' (expected C, V, VS or MISC)",
                      line_no);
    }

    if (!allow_empty && text.empty()) {
      throw DataError("empty text for key '" + key + "'", line_no);
    }
    if (!table->emplace(key, std::move(text)).second) {
      throw DataError("duplicate " + kind + " key '" + key + "'", line_no);
    }
    scheme.max_key_len = std::max(scheme.max_key_len, key.size());
  });

  if (scheme.virama.empty()) {
    throw DataError("scheme is missing the MISC 'virama' row");
  }
  for (const auto& [key, text] : scheme.vowels) {
    if (!scheme.vowel_signs.contains(key)) {
      throw DataError("vowel '" + key + "' has no vowel-sign (VS) row");
    }
  }
  scheme.target_script = script_of_text(scheme.virama);
  return scheme;
}

const TranslitScheme& builtin_scheme(Script target) {
  static const TranslitScheme telugu = [] {
    std::istringstream in{std::string(kTeluguSchemeTsv)};
    return load_scheme(in);
  }();
  static const TranslitScheme devanagari = [] {
    std::istringstream in{std::string(kDevanagariSchemeTsv)};
    return load_scheme(in);
  }();
  switch (target) {
    case Script::telugu: return telugu;
    case Script::devanagari: return devanagari;
    default:
      throw std::invalid_argument("no built-in scheme for script '" +
                                  std::string(script_name(target)) + "'");
  }
}

std::string transliterate(const TranslitScheme& scheme, std::string_view roman) {
  for (char c : roman) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      throw std::invalid_argument("transliterate requires ASCII input");
    }
  }

  std::string out;
  out.reserve(roman.size() * 3);
  std::size_t pos = 0;
  while (pos < roman.size()) {
    const auto* consonant = longest_key(scheme.consonants, roman, pos, scheme.max_key_len);
    const auto* vowel = longest_key(scheme.vowels, roman, pos, scheme.max_key_len);
    const auto* misc = longest_key(scheme.misc, roman, pos, scheme.max_key_len);

    // Longest match wins across kinds; consonants beat vowels beat misc on ties.
    const std::size_t c_len = consonant ? consonant->first.size() : 0;
    const std::size_t v_len = vowel ? vowel->first.size() : 0;
    const std::size_t m_len = misc ? misc->first.size() : 0;
    const std::size_t best = std::max({c_len, v_len, m_len});

    if (best == 0) {
      out.push_back(roman[pos]);
      ++pos;
      continue;
    }
    if (c_len == best) {
      out += consonant->second;
      pos += c_len;
      if (const auto* sign = longest_key(scheme.vowel_signs, roman, pos, scheme.max_key_len)) {
        out += sign->second;
        pos += sign->first.size();
      } else {
        out += scheme.virama;
      }
    } else if (v_len == best) {
      out += vowel->second;
      pos += v_len;
    } else {
      out += misc->second;
      pos += m_len;
    }
  }
  return uni::to_nfc(out);
}

}  // namespace setu
