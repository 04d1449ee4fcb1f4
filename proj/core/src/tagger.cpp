#include "setu/tagger.hpp"

#include <istream>

#include "setu/errors.hpp"
#include "setu/unicode.hpp"
#include "tsv.hpp"

namespace setu {

namespace {

bool is_single_word(const std::string& surface) {
  if (surface.empty()) return false;
  for (char32_t cp : uni::decode_utf8(surface)) {
    if (is_delimiter(cp)) return false;
  }
  return true;
}

}  // namespace

struct PosLexiconBuilder {
  static bool insert(PosLexicon& plex, std::string word, PosTag tag) {
    return plex.entries_.emplace(std::move(word), std::move(tag)).second;
  }
};

const PosTag* PosLexicon::find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

PosLexiconLoadResult load_pos_lexicon(std::istream& in, std::string lang) {
  PosLexiconLoadResult result{PosLexicon(std::move(lang)), {}};
  detail::for_each_tsv_row(in, 2, [&](std::size_t line_no,
                                      std::vector<std::string>& fields) {
    if (fields[0].empty()) throw DataError("empty word field", line_no);
    if (!is_single_word(fields[0])) {
      throw DataError("word must be a single word without delimiters: '" +
                          fields[0] + "'",
                      line_no);
    }
    PosTag tag;
    try {
      tag = PosTag(std::move(fields[1]));
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what(), line_no);
    }
    if (!PosLexiconBuilder::insert(result.lexicon, std::move(fields[0]), std::move(tag))) {
      result.warnings.push_back("line " + std::to_string(line_no) +
                                ": duplicate word, first tag kept");
    }
  });
  return result;
}

std::vector<TaggedToken> tag_sentence(const PosLexicon& plex,
                                      std::span<const Token> tokens) {
  std::vector<TaggedToken> out;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::separator:
        break;
      case TokenKind::punct:
        out.push_back({t, PosTag::punct()});
        break;
      case TokenKind::word: {
        const PosTag* tag = plex.find(t.surface);
        out.push_back({t, tag ? *tag : PosTag::unknown()});
        break;
      }
    }
  }
  return out;
}

}  // namespace setu
