#pragma once

// Shared seed-data fixtures used across test binaries. All strings are NFC.

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "setu/eval.hpp"
#include "setu/lexicon.hpp"
#include "setu/proverbs.hpp"
#include "setu/tagger.hpp"

namespace fixtures {

inline constexpr std::string_view kAwardTelugu =
    "సచిన్ టెండూల్కర్ కి భారత్ రత్న పురస్కారం తో సన్మానం చేశారు";
inline constexpr std::string_view kAwardMarathi =
    "सचिन तेंडुलकर ला भारत रत्न पुरस्कार नी सन्मानित केल्यागेले";

inline constexpr std::array<std::string_view, 9> kAwardTeluguWords = {
    "సచిన్", "టెండూల్కర్", "కి",      "భారత్",    "రత్న",
    "పురస్కారం", "తో",       "సన్మానం", "చేశారు"};

// (telugu, marathi, pos) word pairs behind the award sentence.
inline constexpr std::array<std::array<std::string_view, 3>, 9> kAwardPairs = {{
    {"సచిన్", "सचिन", "NNP"},
    {"టెండూల్కర్", "तेंडुलकर", "NNP"},
    {"కి", "ला", "PSP"},
    {"భారత్", "भारत", "NNP"},
    {"రత్న", "रत्न", "NN"},
    {"పురస్కారం", "पुरस्कार", "NN"},
    {"తో", "नी", "PSP"},
    {"సన్మానం", "सन्मानित", "NN"},
    {"చేశారు", "केल्यागेले", "VB"},
}};

inline constexpr std::string_view kMealTelugu = "నేను అన్నము తింటున్నాను";
inline constexpr std::string_view kMealMarathi = "मी जेवन खातआहे";

inline constexpr std::string_view kSchoolTelugu = "రాము బడికి వెళ్ళాడు";
inline constexpr std::string_view kSchoolMarathi = "रामु शाकेत जातो";

inline std::string award_dict_tsv() {
  std::string out;
  for (const auto& [te, mr, pos] : kAwardPairs) {
    out += std::string(te) + "\t" + std::string(mr) + "\t" + std::string(pos) + "\n";
  }
  return out;
}

inline setu::Lexicon lexicon_from_tsv(std::string_view tsv, std::string src = "te",
                                      std::string tgt = "mr") {
  std::istringstream in{std::string(tsv)};
  return std::move(setu::load_lexicon(in, std::move(src), std::move(tgt)).lexicon);
}

inline setu::PosLexicon pos_lexicon_from_tsv(std::string_view tsv,
                                             std::string lang = "te") {
  std::istringstream in{std::string(tsv)};
  return std::move(setu::load_pos_lexicon(in, std::move(lang)).lexicon);
}

inline setu::ProverbStore store_from_tsv(std::string_view tsv, std::string src = "te",
                                         std::string tgt = "mr") {
  std::istringstream in{std::string(tsv)};
  return std::move(setu::load_proverbs(in, std::move(src), std::move(tgt)).store);
}

inline setu::ParallelCorpus corpus_from_tsv(std::string_view tsv, std::string src = "te",
                                            std::string tgt = "mr") {
  std::istringstream in{std::string(tsv)};
  return setu::load_corpus(in, std::move(src), std::move(tgt));
}

inline setu::Lexicon award_lexicon() { return lexicon_from_tsv(award_dict_tsv()); }

inline setu::ProverbStore empty_store(std::string src = "te", std::string tgt = "mr") {
  return setu::ProverbStore(std::move(src), std::move(tgt));
}

inline std::string data_dir() {
#ifdef SETU_DATA_DIR
  return SETU_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace fixtures
