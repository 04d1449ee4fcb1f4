#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "setu/lexicon.hpp"
#include "setu/script.hpp"

namespace setu {

/// Monolingual word -> POS mapping. Immutable after load.
class PosLexicon {
 public:
  explicit PosLexicon(std::string lang) : lang_(std::move(lang)) {}

  const std::string& lang() const { return lang_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Tag for an NFC word surface, or nullptr when absent.
  const PosTag* find(std::string_view surface) const;

 private:
  friend struct PosLexiconBuilder;

  std::string lang_;
  std::unordered_map<std::string, PosTag> entries_;
};

struct PosLexiconLoadResult {
  PosLexicon lexicon;
  std::vector<std::string> warnings;
};

/// Loads the `word<TAB>pos` format ('#' comments, NFC on load). A repeated
/// word keeps its first tag and adds a warning.
PosLexiconLoadResult load_pos_lexicon(std::istream& in, std::string lang);

struct TaggedToken {
  Token token;
  PosTag tag;

  bool operator==(const TaggedToken&) const = default;
};

/// Tags word tokens by dictionary lookup: unknown words get "UNK",
/// punctuation gets "PUNCT", separators are dropped. A pure per-surface
/// function; order and word count are preserved.
std::vector<TaggedToken> tag_sentence(const PosLexicon& plex,
                                      std::span<const Token> tokens);

}  // namespace setu
