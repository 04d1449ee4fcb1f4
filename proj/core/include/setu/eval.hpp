#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "setu/lexicon.hpp"
#include "setu/proverbs.hpp"
#include "setu/translator.hpp"

namespace setu {

struct CorpusRow {
  std::string source;
  std::string reference;

  bool operator==(const CorpusRow&) const = default;
};

struct ParallelCorpus {
  std::string src_lang;
  std::string tgt_lang;
  std::vector<CorpusRow> rows;
};

/// Loads the `source<TAB>reference` format ('#' comments, NFC on load).
/// An empty stream loads fine; evaluate() is what rejects an empty corpus.
ParallelCorpus load_corpus(std::istream& in, std::string src_lang,
                           std::string tgt_lang);

struct SentenceEval {
  bool exact = false;
  std::size_t matched_tokens = 0;    // positions where output word == reference word
  std::size_t output_tokens = 0;     // word tokens in the translation output
  std::size_t reference_tokens = 0;  // word tokens in the reference
  std::size_t source_tokens = 0;     // word tokens in the source
  std::size_t unknowns = 0;          // passthrough units

  bool operator==(const SentenceEval&) const = default;
};

/// Aggregates are plain recombinations of per_sentence: exact-row fraction,
/// mean per-row token accuracy, and total unknowns over total source words.
struct EvalReport {
  double sentence_exact_rate = 0.0;
  double token_accuracy = 0.0;
  double oov_rate = 0.0;
  std::vector<SentenceEval> per_sentence;
};

/// Runs translate() over every row in order. Exactness compares NFC,
/// whitespace-collapsed strings; per-row token accuracy is
/// matched / max(|output words|, |reference words|) (1.0 when both sides are
/// empty). Throws DataError on an empty corpus and std::invalid_argument on
/// language-pair mismatch.
EvalReport evaluate(const Lexicon& lex, const ProverbStore& store,
                    OovPolicy policy, const ParallelCorpus& corpus);

/// Trims and squeezes every whitespace run to one space; used for the
/// exact-match comparison.
std::string collapse_whitespace(std::string_view text);

}  // namespace setu
