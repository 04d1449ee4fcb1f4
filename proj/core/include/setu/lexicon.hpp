#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace setu {

/// Opaque part-of-speech label: non-empty printable ASCII, no whitespace,
/// at most 8 characters. "UNK" marks absence, "PUNCT" marks punctuation.
class PosTag {
 public:
  PosTag() : value_("UNK") {}
  explicit PosTag(std::string value);

  const std::string& str() const { return value_; }

  static const PosTag& unknown();
  static const PosTag& punct();

  friend bool operator==(const PosTag&, const PosTag&) = default;
  friend auto operator<=>(const PosTag&, const PosTag&) = default;

 private:
  std::string value_;
};

struct LexEntry {
  std::string source;  // single NFC word, no delimiter codepoints
  std::string target;  // NFC, non-empty; may contain spaces
  PosTag pos;
  std::size_t rank = 0;  // load order, unique within a lexicon

  bool operator==(const LexEntry&) const = default;
};

/// Directed bilingual dictionary. Immutable after load; lookups are
/// deterministic and safe to run concurrently.
class Lexicon {
 public:
  Lexicon(std::string src_lang, std::string tgt_lang);

  const std::string& src_lang() const { return src_lang_; }
  const std::string& tgt_lang() const { return tgt_lang_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Rank-lowest entry for the surface, or nullptr. Surface must be NFC.
  const LexEntry* lookup(std::string_view surface) const;

  /// Every sense of the surface in rank order; empty when absent.
  std::vector<const LexEntry*> lookup_all(std::string_view surface) const;

  /// All entries in rank order.
  const std::vector<LexEntry>& entries() const { return entries_; }

  /// Emits the three-column TSV the loader accepts, in rank order.
  void serialize(std::ostream& out) const;

  bool operator==(const Lexicon& other) const;

 private:
  friend struct LexiconBuilder;

  std::string src_lang_;
  std::string tgt_lang_;
  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_source_;
};

struct LexiconLoadResult {
  Lexicon lexicon;
  std::vector<std::string> warnings;
};

/// Loads the `source<TAB>target<TAB>pos` dictionary format. '#' comments and
/// blank lines are ignored; all text is NFC-normalized. Duplicate
/// (source, target, pos) triples are dropped with a warning; a source with
/// several distinct targets keeps every sense. Throws DataError on malformed
/// lines, empty fields, or a source that is not a single word.
LexiconLoadResult load_lexicon(std::istream& in, std::string src_lang,
                               std::string tgt_lang);

/// Derives the opposite-direction dictionary: every (s, t) becomes (t, s),
/// ordered by original rank. Entries whose target is not a single word
/// cannot serve as a reverse key and are skipped with a warning.
LexiconLoadResult reverse(const Lexicon& lex);

}  // namespace setu
