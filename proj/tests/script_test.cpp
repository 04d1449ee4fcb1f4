#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "fixtures.hpp"
#include "setu/script.hpp"
#include "setu/unicode.hpp"

using namespace setu;

TEST_CASE("normalize basics") {
  CHECK(normalize("") == "");
  CHECK(normalize("नी") == "नी");
  // Decomposed Devanagari composes; the exclusion-listed form decomposes.
  CHECK(normalize("ऩ") == "ऩ");
  CHECK(normalize("क़") == "क़");
  CHECK(normalize(normalize("Ḕ")) == normalize("Ḕ"));
}

TEST_CASE("detect_script per block") {
  CHECK(detect_script("నేను") == Script::telugu);
  CHECK(detect_script("मी") == Script::devanagari);
  CHECK(detect_script("రాము123 कर") == Script::mixed);
  CHECK(detect_script("hello") == Script::latin);
  CHECK(detect_script("café") == Script::latin);  // Latin-1 letter
  CHECK(detect_script("") == Script::common);
  CHECK(detect_script("123, !?") == Script::common);
  CHECK(detect_script("Ωμ") == Script::other);   // Greek
  CHECK(detect_script("abcనేను") == Script::mixed);
  CHECK(detect_script("నేను 123") == Script::telugu);  // digits don't count
}

TEST_CASE("tokenize the award sentence") {
  const std::string text = normalize(fixtures::kAwardTelugu);
  const auto tokens = tokenize(text);

  std::size_t words = 0, seps = 0;
  std::vector<std::string> word_list;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::word) {
      ++words;
      word_list.push_back(t.surface);
      CHECK(t.script == Script::telugu);
    } else if (t.kind == TokenKind::separator) {
      ++seps;
    }
  }
  CHECK(words == 9);
  CHECK(seps == 8);
  CHECK(tokens.size() == 17);
  REQUIRE(word_list.size() == fixtures::kAwardTeluguWords.size());
  for (std::size_t i = 0; i < word_list.size(); ++i) {
    CHECK(word_list[i] == fixtures::kAwardTeluguWords[i]);
  }
}

TEST_CASE("tokenize empty input") { CHECK(tokenize("").empty()); }

TEST_CASE("tokenize splits punctuation into single-codepoint tokens") {
  // Hand-derived: word, comma, separator, word.
  const auto tokens = tokenize("मी, जेवन");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].surface == "मी");
  CHECK(tokens[0].kind == TokenKind::word);
  CHECK(tokens[1].surface == ",");
  CHECK(tokens[1].kind == TokenKind::punct);
  CHECK(tokens[2].surface == " ");
  CHECK(tokens[2].kind == TokenKind::separator);
  CHECK(tokens[3].surface == "जेवन");
  CHECK(tokens[3].kind == TokenKind::word);
}

TEST_CASE("adjacent punctuation never merges") {
  const auto tokens = tokenize("అయ్యో!?");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[1].surface == "!");
  CHECK(tokens[2].surface == "?");
  CHECK(tokens[1].kind == TokenKind::punct);
  CHECK(tokens[2].kind == TokenKind::punct);
}

TEST_CASE("danda is a delimiter, ZWNJ is not") {
  const auto tokens = tokenize("रामु।");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[1].kind == TokenKind::punct);
  CHECK(tokens[1].surface == "।");

  const auto zwnj = tokenize("క్‌క");
  REQUIRE(zwnj.size() == 1);
  CHECK(zwnj[0].kind == TokenKind::word);
}

TEST_CASE("tokenize rejects non-NFC input") {
  CHECK_THROWS_AS(tokenize("ై"), std::invalid_argument);
}

TEST_CASE("whitespace runs collapse into one separator token") {
  const auto tokens = tokenize("a  \t b");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[1].kind == TokenKind::separator);
  CHECK(tokens[1].surface == "  \t ");
}

namespace {

std::string random_mixed_text(std::mt19937& rng) {
  static constexpr char32_t kPool[] = {
      0x0C15, 0x0C1A, 0x0C3E, 0x0C46, 0x0C56, 0x0C4D, 0x0915, 0x092E,
      0x093E, 0x0940, 0x094D, 0x093C, 'a',    'z',    'Q',    '7',
      ',',    '.',    '!',    '?',    '(',    ')',    0x0964, 0x0965,
      ' ',    '\t',   '\n',   0x00A0, 0x200C, 0x200D, 0x0301, 0x0323,
  };
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  std::u32string cps;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) cps.push_back(kPool[pick(rng)]);
  return setu::uni::encode_utf8(cps);
}

}  // namespace

TEST_CASE("tokenization is lossless and contiguous over random text") {
  std::mt19937 rng(99021);
  for (int iter = 0; iter < 1500; ++iter) {
    const std::string norm = normalize(random_mixed_text(rng));
    const auto tokens = tokenize(norm);

    std::string rebuilt;
    std::size_t expected_begin = 0;
    for (const auto& t : tokens) {
      CHECK(t.begin == expected_begin);
      CHECK(t.begin < t.end);
      CHECK_FALSE(t.surface.empty());
      expected_begin = t.end;
      rebuilt += t.surface;

      const auto cps = uni::decode_utf8(t.surface);
      if (t.kind == TokenKind::separator) {
        for (char32_t cp : cps) CHECK(uni::is_white_space(cp));
      } else if (t.kind == TokenKind::word) {
        for (char32_t cp : cps) CHECK_FALSE(is_delimiter(cp));
      } else {
        CHECK(cps.size() == 1);
        CHECK(is_punct_delimiter(cps[0]));
      }
    }
    CHECK(rebuilt == norm);
    CHECK(expected_begin == uni::decode_utf8(norm).size());

    // Determinism.
    CHECK(tokenize(norm) == tokens);
  }
}

TEST_CASE("token spans slice the normalized input") {
  const std::string text = normalize("మీరు ఎలా, ఉన్నారు?");
  const auto cps = uni::decode_utf8(text);
  for (const auto& t : tokenize(text)) {
    const std::string sliced =
        uni::encode_utf8(std::u32string(cps.begin() + t.begin, cps.begin() + t.end));
    CHECK(sliced == t.surface);
  }
}
