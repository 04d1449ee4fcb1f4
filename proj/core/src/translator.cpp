#include "setu/translator.hpp"

#include <stdexcept>

#include "setu/errors.hpp"
#include "setu/script.hpp"

namespace setu {

namespace {

// A unit plus the token range it consumes; proverb units absorb interior
// punctuation and separators.
struct PlacedUnit {
  TranslationUnit unit;
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
};

std::string join_words(std::span<const std::string> words, std::size_t begin,
                       std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<PlacedUnit> build_units(const Lexicon& lex, const ProverbStore& store,
                                    const std::vector<Token>& tokens,
                                    OovPolicy policy) {
  std::vector<std::string> words;
  std::vector<std::size_t> word_token_index;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::word) {
      words.push_back(tokens[i].surface);
      word_token_index.push_back(i);
    }
  }

  const std::vector<ProverbMatch> matches = store.find_matches(words);
  std::size_t next_match = 0;

  std::vector<PlacedUnit> placed;
  std::vector<std::string> unknown;

  std::size_t i = 0;  // token index
  std::size_t w = 0;  // word index
  while (i < tokens.size()) {
    const Token& tok = tokens[i];
    if (tok.kind == TokenKind::separator) {
      ++i;
      continue;
    }
    if (tok.kind == TokenKind::punct) {
      PlacedUnit p;
      p.unit.word_begin = w;
      p.unit.word_end = w;
      p.unit.source_text = tok.surface;
      p.unit.target_text = tok.surface;
      p.unit.mechanism = Mechanism::punct;
      p.unit.pos = PosTag::punct();
      p.token_begin = i;
      p.token_end = i + 1;
      placed.push_back(std::move(p));
      ++i;
      continue;
    }

    if (next_match < matches.size() && matches[next_match].begin == w) {
      const ProverbMatch& m = matches[next_match];
      ++next_match;
      const std::size_t last_token = word_token_index[m.end - 1];
      PlacedUnit p;
      p.unit.word_begin = m.begin;
      p.unit.word_end = m.end;
      p.unit.source_text = join_words(words, m.begin, m.end);
      p.unit.target_text = m.entry->target_text;
      p.unit.mechanism = Mechanism::proverb;
      p.unit.pos = PosTag::unknown();
      p.token_begin = i;
      p.token_end = last_token + 1;
      placed.push_back(std::move(p));
      i = last_token + 1;
      w = m.end;
      continue;
    }

    PlacedUnit p;
    p.unit.word_begin = w;
    p.unit.word_end = w + 1;
    p.unit.source_text = tok.surface;
    p.token_begin = i;
    p.token_end = i + 1;
    if (const LexEntry* entry = lex.lookup(tok.surface)) {
      p.unit.target_text = entry->target;
      p.unit.mechanism = Mechanism::word;
      p.unit.pos = entry->pos;
    } else {
      unknown.push_back(tok.surface);
      p.unit.mechanism = Mechanism::passthrough;
      p.unit.pos = PosTag::unknown();
      p.unit.target_text = policy == OovPolicy::mark
                               ? "⟦" + tok.surface + "⟧"
                               : tok.surface;
    }
    placed.push_back(std::move(p));
    ++i;
    ++w;
  }

  if (policy == OovPolicy::fail && !unknown.empty()) {
    throw UnknownWordError(std::move(unknown));
  }
  return placed;
}

// Separators between single-token units are copied verbatim; any gap touching
// a proverb unit becomes a single space. Gaps at the text boundaries follow
// the same rule, with nothing emitted next to a boundary proverb.
std::string assemble(const std::vector<Token>& tokens,
                     const std::vector<PlacedUnit>& placed) {
  auto gap_text = [&](std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) out += tokens[i].surface;
    return out;
  };

  if (placed.empty()) return gap_text(0, tokens.size());

  std::string out;
  if (placed.front().unit.mechanism != Mechanism::proverb) {
    out += gap_text(0, placed.front().token_begin);
  }
  for (std::size_t k = 0; k < placed.size(); ++k) {
    if (k > 0) {
      const PlacedUnit& prev = placed[k - 1];
      const PlacedUnit& cur = placed[k];
      const bool proverb_side = prev.unit.mechanism == Mechanism::proverb ||
                                cur.unit.mechanism == Mechanism::proverb;
      if (proverb_side) {
        if (cur.token_begin > prev.token_end) out += ' ';
      } else {
        out += gap_text(prev.token_end, cur.token_begin);
      }
    }
    out += placed[k].unit.target_text;
  }
  if (placed.back().unit.mechanism != Mechanism::proverb) {
    out += gap_text(placed.back().token_end, tokens.size());
  }
  return out;
}

TranslationResult translate_tokens(const Lexicon& lex, const ProverbStore& store,
                                   const std::vector<Token>& tokens,
                                   OovPolicy policy) {
  std::vector<PlacedUnit> placed = build_units(lex, store, tokens, policy);

  TranslationResult result;
  result.output_text = assemble(tokens, placed);
  result.units.reserve(placed.size());
  for (PlacedUnit& p : placed) {
    if (p.unit.mechanism == Mechanism::passthrough) ++result.unknown_count;
    result.units.push_back(std::move(p.unit));
  }
  return result;
}

void check_language_pair(const Lexicon& lex, const ProverbStore& store) {
  if (lex.src_lang() != store.src_lang() || lex.tgt_lang() != store.tgt_lang()) {
    throw std::invalid_argument("lexicon is " + lex.src_lang() + "->" +
                                lex.tgt_lang() + " but proverb store is " +
                                store.src_lang() + "->" + store.tgt_lang());
  }
}

}  // namespace

std::string_view oov_policy_name(OovPolicy p) {
  switch (p) {
    case OovPolicy::passthrough: return "passthrough";
    case OovPolicy::mark: return "mark";
    case OovPolicy::fail: return "fail";
  }
  return "passthrough";
}

std::optional<OovPolicy> parse_oov_policy(std::string_view name) {
  if (name == "passthrough") return OovPolicy::passthrough;
  if (name == "mark") return OovPolicy::mark;
  if (name == "fail") return OovPolicy::fail;
  return std::nullopt;
}

std::string_view mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::proverb: return "proverb";
    case Mechanism::word: return "word";
    case Mechanism::passthrough: return "passthrough";
    case Mechanism::punct: return "punct";
  }
  return "word";
}

TranslationResult translate(const Lexicon& lex, const ProverbStore& store,
                            std::string_view text, OovPolicy policy) {
  check_language_pair(lex, store);
  const std::string norm = normalize(text);
  const std::vector<Token> tokens = tokenize(norm);
  return translate_tokens(lex, store, tokens, policy);
}

TaggedTranslation translate_tagged(const Lexicon& lex, const ProverbStore& store,
                                   const PosLexicon& plex, std::string_view text,
                                   OovPolicy policy) {
  check_language_pair(lex, store);
  if (plex.lang() != lex.src_lang()) {
    throw std::invalid_argument("POS lexicon language " + plex.lang() +
                                " does not match source language " +
                                lex.src_lang());
  }
  const std::string norm = normalize(text);
  const std::vector<Token> tokens = tokenize(norm);
  TaggedTranslation out;
  out.translation = translate_tokens(lex, store, tokens, policy);
  out.tags = tag_sentence(plex, tokens);
  return out;
}

}  // namespace setu
