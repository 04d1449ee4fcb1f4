#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "setu/unicode.hpp"

using namespace setu;

// Generated with CPython unicodedata (UCD 13.0.0): pairs of (input, NFC(input)).
// Covers composition, exclusion-listed decompositions, singleton mappings,
// Hangul, and canonical reordering; every codepoint is normalization-stable
// across UCD versions.
static const std::pair<std::string_view, std::string_view> kNfcOracle[] = {
    {"", ""},
    {"नी", "नी"},
    {"क़", "क़"},
    {"क़", "क़"},
    {"ై", "ై"},
    {"ై", "ై"},
    {"é", "é"},
    {"Å", "Å"},
    {"각", "각"},
    {"각", "각"},
    {"á̖", "á̖"},
    {"á̖", "á̖"},
    {"ড়", "ড়"},
    {"ড়", "ড়"},
    {"q̣̇", "q̣̇"},
    {"Ḕ", "Ḕ"},
    {"Ḕ", "Ḕ"},
    {"ą́", "ą́"},
    {"క్‌క", "క్‌క"},
    {"क्‍ष", "क्‍ष"},
    {"ನಿ", "ನಿ"},
    {"ḍ̇", "ḍ̇"},
    {"Ώ", "Ώ"},
    {"ﬁ", "ﬁ"},
    {"఑कఆऴఒ,", "఑कఆऴఒ,"},
    {"दఝఅथడझऀఐउᅡ",
     "दఝఅथడझऀఐउᅡ"},
    {"ᄃᄀहషऄఅऌేश",
     "ᄃᄀहషऄఅऌేश"},
    {"ळ̣̖ఆృ", "ळ̣̖ఆృ"},
    {"్ఆऒधᅲ ", "్ఆऒधᅲ "},
    {"ఐञథ ढ", "ఐञథ ढ"},
    {"!न", "!न"},
    {"ెᅣ", "ెᅣ"},
    {"ఓइइᅳऴᄁఌ",
     "ఓइइᅳऴᄁఌ"},
    {"ऩఛऺᅩऋᄐెోొమళक",
     "ऩఛऺᅩऋᄐెోొమళक"},
    {"ఝडᄌपైషण̣హటऎᅡ",
     "ఝडᄌपైషण̣హటऎᅡ"},
    {"ᄏనऊऎ", "ᄏనऊऎ"},
    {"ऄतరᅵుేᅵశअव",
     "ऄतరᅵుేᅵశअव"},
    {"చफञदऒँबसయँ఩",
     "చफञदऒँबसయँ఩"},
    {"चभఢऩ", "चभఢऩ"},
    {"ౌబइదఢᄑऀभ",
     "ౌబइదఢᄑऀभ"},
};

TEST_CASE("to_nfc matches the reference normalizer") {
  for (const auto& [input, expected] : kNfcOracle) {
    CAPTURE(input);
    CHECK(uni::to_nfc(input) == expected);
  }
}

TEST_CASE("to_nfc is idempotent on the oracle corpus") {
  for (const auto& [input, expected] : kNfcOracle) {
    const std::string once = uni::to_nfc(input);
    CHECK(uni::to_nfc(once) == once);
    CHECK(uni::is_nfc(once));
  }
}

TEST_CASE("is_nfc agrees with to_nfc") {
  for (const auto& [input, expected] : kNfcOracle) {
    CAPTURE(input);
    CHECK(uni::is_nfc(input) == (std::string_view(uni::to_nfc(input)) == input));
  }
}

TEST_CASE("decode/encode round-trips codepoints") {
  const std::string_view samples[] = {
      "", "ascii only", "అా", "\U0001F600 mixed क",
  };
  for (std::string_view s : samples) {
    CHECK(uni::encode_utf8(uni::decode_utf8(s)) == s);
  }
}

TEST_CASE("decode_utf8 rejects malformed input") {
  CHECK_THROWS_AS(uni::decode_utf8("\xC0\xAF"), std::invalid_argument);   // overlong
  CHECK_THROWS_AS(uni::decode_utf8("\xE0\x80"), std::invalid_argument);   // truncated
  CHECK_THROWS_AS(uni::decode_utf8("\xED\xA0\x80"), std::invalid_argument);  // surrogate
  CHECK_THROWS_AS(uni::decode_utf8("\xFF"), std::invalid_argument);
  CHECK_THROWS_AS(uni::decode_utf8("ok\x80"), std::invalid_argument);  // stray tail
}

TEST_CASE("idempotence holds over random mixed strings") {
  std::mt19937 rng(7401);
  static constexpr char32_t kPool[] = {
      0x0C15, 0x0C3E, 0x0C46, 0x0C56, 0x0C4D, 0x0915, 0x093C, 0x0940,
      0x094D, 0x0301, 0x0316, 0x0323, 'a',    'e',    'q',    ' ',
      0x200C, 0x200D, 0x1100, 0x1161, 0x11A8, 0x212B, 0x0958, 0x09DC,
  };
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string cps;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) cps.push_back(kPool[pick(rng)]);
    const std::string input = uni::encode_utf8(cps);
    const std::string once = uni::to_nfc(input);
    CHECK(uni::to_nfc(once) == once);
  }
}

TEST_CASE("classification predicates") {
  CHECK(uni::is_letter(U'a'));
  CHECK(uni::is_letter(0x0C05));  // Telugu A
  CHECK(uni::is_letter(0x0928));  // Devanagari NA
  CHECK_FALSE(uni::is_letter(U'3'));
  CHECK_FALSE(uni::is_letter(0x0C66));  // Telugu digit zero
  CHECK_FALSE(uni::is_letter(0x0964));  // danda
  CHECK_FALSE(uni::is_letter(0x200C));  // ZWNJ

  CHECK(uni::is_white_space(U' '));
  CHECK(uni::is_white_space(U'\t'));
  CHECK(uni::is_white_space(0x00A0));  // NBSP
  CHECK(uni::is_white_space(0x2028));
  CHECK_FALSE(uni::is_white_space(0x200C));  // ZWNJ is a word character
  CHECK_FALSE(uni::is_white_space(U'a'));
}
