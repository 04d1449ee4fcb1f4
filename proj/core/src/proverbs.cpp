#include "setu/proverbs.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "setu/errors.hpp"
#include "setu/script.hpp"
#include "tsv.hpp"

namespace setu {

ProverbStore::ProverbStore(std::string src_lang, std::string tgt_lang)
    : src_lang_(std::move(src_lang)), tgt_lang_(std::move(tgt_lang)) {
  if (src_lang_ == tgt_lang_) {
    throw std::invalid_argument("source and target language must differ");
  }
}

bool ProverbStore::add(std::string_view source_text, std::string_view target_text) {
  const std::vector<Token> tokens = tokenize(normalize(source_text));
  std::vector<std::string> words = word_surfaces(tokens);
  if (words.empty()) {
    throw std::invalid_argument("proverb source contains no words");
  }
  const std::string target = normalize(target_text);
  if (target.empty()) {
    throw std::invalid_argument("proverb target must not be empty");
  }

  if (const auto it = by_first_word_.find(words.front()); it != by_first_word_.end()) {
    for (std::size_t idx : it->second) {
      if (entries_[idx].source_words == words) return false;
    }
  }

  ProverbEntry entry;
  entry.source_words = std::move(words);
  entry.target_text = target;
  entry.rank = entries_.size();

  auto& bucket = by_first_word_[entry.source_words.front()];
  const std::size_t len = entry.source_words.size();
  const auto pos = std::find_if(bucket.begin(), bucket.end(), [&](std::size_t idx) {
    return entries_[idx].source_words.size() < len;
  });
  bucket.insert(pos, entry.rank);
  entries_.push_back(std::move(entry));
  return true;
}

std::vector<ProverbMatch> ProverbStore::find_matches(
    std::span<const std::string> words) const {
  std::vector<ProverbMatch> matches;
  std::size_t i = 0;
  while (i < words.size()) {
    const auto it = by_first_word_.find(words[i]);
    if (it != by_first_word_.end()) {
      bool matched = false;
      for (std::size_t idx : it->second) {
        const ProverbEntry& e = entries_[idx];
        const std::size_t len = e.source_words.size();
        if (i + len > words.size()) continue;
        if (std::equal(e.source_words.begin(), e.source_words.end(),
                       words.begin() + static_cast<std::ptrdiff_t>(i))) {
          matches.push_back({i, i + len, &e});
          i += len;
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    ++i;
  }
  return matches;
}

void ProverbStore::serialize(std::ostream& out) const {
  for (const ProverbEntry& e : entries_) {
    for (std::size_t k = 0; k < e.source_words.size(); ++k) {
      if (k > 0) out << ' ';
      out << e.source_words[k];
    }
    out << '\t' << e.target_text << '\n';
  }
}

ProverbLoadResult load_proverbs(std::istream& in, std::string src_lang,
                                std::string tgt_lang) {
  ProverbLoadResult result{ProverbStore(std::move(src_lang), std::move(tgt_lang)), {}};
  detail::for_each_tsv_row(in, 2, [&](std::size_t line_no,
                                      std::vector<std::string>& fields) {
    bool inserted = false;
    try {
      inserted = result.store.add(fields[0], fields[1]);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what(), line_no);
    }
    if (!inserted) {
      result.warnings.push_back("line " + std::to_string(line_no) +
                                ": duplicate proverb, first entry kept");
    }
  });
  return result;
}

}  // namespace setu
