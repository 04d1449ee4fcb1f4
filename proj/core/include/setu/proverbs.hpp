#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace setu {

struct ProverbEntry {
  std::vector<std::string> source_words;  // non-empty, NFC single words
  std::string target_text;                // NFC, non-empty, rendered as one unit
  std::size_t rank = 0;

  bool operator==(const ProverbEntry&) const = default;
};

/// A proverb occurrence inside a sentence, located by word-token indices
/// (end exclusive) over the sentence's word-token subsequence.
struct ProverbMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  const ProverbEntry* entry = nullptr;
};

/// Ordered multi-word phrase table. Sources are matched on word tokens only,
/// so punctuation differences between the stored phrase and the sentence do
/// not matter. Immutable once loaded; matching is pure.
class ProverbStore {
 public:
  ProverbStore(std::string src_lang, std::string tgt_lang);

  const std::string& src_lang() const { return src_lang_; }
  const std::string& tgt_lang() const { return tgt_lang_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<ProverbEntry>& entries() const { return entries_; }

  /// Tokenizes `source_text`, keeps its word tokens as the key sequence, and
  /// stores `target_text` (NFC-normalized) as the whole-unit rendering.
  /// Returns false when the same word sequence is already present.
  /// Throws std::invalid_argument when the source has no words or the target
  /// is empty.
  bool add(std::string_view source_text, std::string_view target_text);

  /// Greedy leftmost-longest scan over word surfaces: at each position the
  /// longest entry matching the next k words wins (length ties break by
  /// lowest rank); the scan resumes after a match, so matches never overlap.
  std::vector<ProverbMatch> find_matches(std::span<const std::string> words) const;

  void serialize(std::ostream& out) const;

 private:
  std::string src_lang_;
  std::string tgt_lang_;
  std::vector<ProverbEntry> entries_;
  // first word -> entry indices sorted by (length desc, rank asc)
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_word_;
};

struct ProverbLoadResult {
  ProverbStore store;
  std::vector<std::string> warnings;
};

/// Loads the `source_proverb<TAB>target_rendering` format ('#' comments, NFC
/// on load). Punctuation inside the source is stripped by tokenization.
/// Duplicate word sequences keep the first entry and add a warning.
ProverbLoadResult load_proverbs(std::istream& in, std::string src_lang,
                                std::string tgt_lang);

}  // namespace setu
