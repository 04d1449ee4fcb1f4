#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setu/lexicon.hpp"
#include "setu/proverbs.hpp"
#include "setu/tagger.hpp"

namespace setu {

/// What to do with a word missing from the dictionary.
enum class OovPolicy {
  passthrough,  // copy the source surface unchanged
  mark,         // copy it wrapped in white corner brackets
  fail,         // abort, reporting every unknown word
};

std::string_view oov_policy_name(OovPolicy p);
std::optional<OovPolicy> parse_oov_policy(std::string_view name);

enum class Mechanism { proverb, word, passthrough, punct };

std::string_view mechanism_name(Mechanism m);

/// Alignment record for one output unit. `word_begin`/`word_end` index the
/// sentence's word-token subsequence; punctuation units carry an empty range
/// positioned between the neighbouring words. Marked OOV units report
/// mechanism `passthrough`, same as unmarked ones.
struct TranslationUnit {
  std::size_t word_begin = 0;
  std::size_t word_end = 0;
  std::string source_text;  // proverb units: source words joined by spaces
  std::string target_text;
  Mechanism mechanism = Mechanism::word;
  PosTag pos;  // dictionary tag for word units, else UNK / PUNCT

  bool operator==(const TranslationUnit&) const = default;
};

struct TranslationResult {
  std::string output_text;
  std::vector<TranslationUnit> units;
  std::size_t unknown_count = 0;
};

/// The full direct-transfer pipeline: normalize, tokenize, substitute proverb
/// occurrences as whole units, translate remaining words via the lexicon,
/// copy punctuation, and reassemble without any reordering. Separators are
/// preserved verbatim between single-token units; the gaps around a proverb
/// unit collapse to single spaces.
///
/// Throws std::invalid_argument when lex and store disagree on the language
/// pair, and UnknownWordError under OovPolicy::fail with unknown words.
TranslationResult translate(const Lexicon& lex, const ProverbStore& store,
                            std::string_view text,
                            OovPolicy policy = OovPolicy::passthrough);

struct TaggedTranslation {
  TranslationResult translation;
  std::vector<TaggedToken> tags;
};

/// Runs translate() and tag_sentence() over one shared tokenization.
/// Requires plex.lang() == lex.src_lang().
TaggedTranslation translate_tagged(const Lexicon& lex, const ProverbStore& store,
                                   const PosLexicon& plex, std::string_view text,
                                   OovPolicy policy = OovPolicy::passthrough);

}  // namespace setu
