#include "setu/lexicon.hpp"

#include <ostream>
#include <stdexcept>

#include "setu/errors.hpp"
#include "setu/script.hpp"
#include "setu/unicode.hpp"
#include "tsv.hpp"

namespace setu {

namespace {

constexpr std::size_t kMaxTagLength = 8;

// A dictionary key must survive tokenization as exactly one word token.
bool is_single_word(std::string_view surface) {
  if (surface.empty()) return false;
  for (char32_t cp : uni::decode_utf8(surface)) {
    if (is_delimiter(cp)) return false;
  }
  return true;
}

}  // namespace

PosTag::PosTag(std::string value) : value_(std::move(value)) {
  if (value_.empty()) {
    throw std::invalid_argument("POS tag must not be empty");
  }
  if (value_.size() > kMaxTagLength) {
    throw std::invalid_argument("POS tag too long: " + value_);
  }
  for (char c : value_) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7F) {
      throw std::invalid_argument("POS tag must be printable ASCII without whitespace");
    }
  }
}

const PosTag& PosTag::unknown() {
  static const PosTag tag{std::string("UNK")};
  return tag;
}

const PosTag& PosTag::punct() {
  static const PosTag tag{std::string("PUNCT")};
  return tag;
}

struct LexiconBuilder {
  static void insert(Lexicon& lex, LexEntry entry) {
    entry.rank = lex.entries_.size();
    lex.by_source_[entry.source].push_back(entry.rank);
    lex.entries_.push_back(std::move(entry));
  }

  static bool contains_triple(const Lexicon& lex, const LexEntry& e) {
    auto it = lex.by_source_.find(e.source);
    if (it == lex.by_source_.end()) return false;
    for (std::size_t idx : it->second) {
      const LexEntry& have = lex.entries_[idx];
      if (have.target == e.target && have.pos == e.pos) return true;
    }
    return false;
  }
};

Lexicon::Lexicon(std::string src_lang, std::string tgt_lang)
    : src_lang_(std::move(src_lang)), tgt_lang_(std::move(tgt_lang)) {
  if (src_lang_ == tgt_lang_) {
    throw std::invalid_argument("source and target language must differ");
  }
}

const LexEntry* Lexicon::lookup(std::string_view surface) const {
  auto it = by_source_.find(std::string(surface));
  if (it == by_source_.end() || it->second.empty()) return nullptr;
  return &entries_[it->second.front()];
}

std::vector<const LexEntry*> Lexicon::lookup_all(std::string_view surface) const {
  std::vector<const LexEntry*> out;
  auto it = by_source_.find(std::string(surface));
  if (it == by_source_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t idx : it->second) out.push_back(&entries_[idx]);
  return out;
}

void Lexicon::serialize(std::ostream& out) const {
  for (const LexEntry& e : entries_) {
    out << e.source << '\t' << e.target << '\t' << e.pos.str() << '\n';
  }
}

bool Lexicon::operator==(const Lexicon& other) const {
  return src_lang_ == other.src_lang_ && tgt_lang_ == other.tgt_lang_ &&
         entries_ == other.entries_;
}

LexiconLoadResult load_lexicon(std::istream& in, std::string src_lang,
                               std::string tgt_lang) {
  LexiconLoadResult result{Lexicon(std::move(src_lang), std::move(tgt_lang)), {}};
  detail::for_each_tsv_row(in, 3, [&](std::size_t line_no,
                                      std::vector<std::string>& fields) {
    if (fields[0].empty()) throw DataError("empty source field", line_no);
    if (fields[1].empty()) throw DataError("empty target field", line_no);
    if (!is_single_word(fields[0])) {
      throw DataError("source must be a single word without delimiters: '" +
                          fields[0] + "'",
                      line_no);
    }
    LexEntry entry;
    entry.source = std::move(fields[0]);
    entry.target = std::move(fields[1]);
    try {
      entry.pos = PosTag(std::move(fields[2]));
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what(), line_no);
    }
    if (LexiconBuilder::contains_triple(result.lexicon, entry)) {
      result.warnings.push_back("line " + std::to_string(line_no) +
                                ": duplicate entry dropped: " + entry.source +
                                " -> " + entry.target);
      return;
    }
    LexiconBuilder::insert(result.lexicon, std::move(entry));
  });
  return result;
}

LexiconLoadResult reverse(const Lexicon& lex) {
  LexiconLoadResult result{Lexicon(lex.tgt_lang(), lex.src_lang()), {}};
  for (const LexEntry& e : lex.entries()) {
    if (!is_single_word(e.target)) {
      result.warnings.push_back("entry rank " + std::to_string(e.rank) +
                                ": multi-word target cannot be a reverse key: " +
                                e.target);
      continue;
    }
    LexEntry rev;
    rev.source = e.target;
    rev.target = e.source;
    rev.pos = e.pos;
    LexiconBuilder::insert(result.lexicon, std::move(rev));
  }
  return result;
}

}  // namespace setu
