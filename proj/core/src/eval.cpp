#include "setu/eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "setu/errors.hpp"
#include "setu/script.hpp"
#include "setu/unicode.hpp"
#include "tsv.hpp"

namespace setu {

namespace {

std::vector<std::string> output_words(std::string_view text) {
  const std::string norm = normalize(text);
  return word_surfaces(tokenize(norm));
}

}  // namespace

ParallelCorpus load_corpus(std::istream& in, std::string src_lang,
                           std::string tgt_lang) {
  ParallelCorpus corpus{std::move(src_lang), std::move(tgt_lang), {}};
  detail::for_each_tsv_row(in, 2, [&](std::size_t line_no,
                                      std::vector<std::string>& fields) {
    if (fields[0].empty()) throw DataError("empty source field", line_no);
    if (fields[1].empty()) throw DataError("empty reference field", line_no);
    corpus.rows.push_back({std::move(fields[0]), std::move(fields[1])});
  });
  return corpus;
}

std::string collapse_whitespace(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (uni::is_white_space(cp)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return uni::encode_utf8(out);
}

EvalReport evaluate(const Lexicon& lex, const ProverbStore& store,
                    OovPolicy policy, const ParallelCorpus& corpus) {
  if (corpus.rows.empty()) {
    throw DataError("empty corpus");
  }
  if (corpus.src_lang != lex.src_lang() || corpus.tgt_lang != lex.tgt_lang()) {
    throw std::invalid_argument("corpus is " + corpus.src_lang + "->" +
                                corpus.tgt_lang + " but lexicon is " +
                                lex.src_lang() + "->" + lex.tgt_lang());
  }

  EvalReport report;
  report.per_sentence.reserve(corpus.rows.size());

  std::size_t exact_rows = 0;
  std::size_t total_unknowns = 0;
  std::size_t total_source_tokens = 0;
  double accuracy_sum = 0.0;

  for (const CorpusRow& row : corpus.rows) {
    const TranslationResult result = translate(lex, store, row.source, policy);

    SentenceEval s;
    s.unknowns = result.unknown_count;
    s.source_tokens = output_words(row.source).size();

    const std::vector<std::string> out_words = output_words(result.output_text);
    const std::vector<std::string> ref_words = output_words(row.reference);
    s.output_tokens = out_words.size();
    s.reference_tokens = ref_words.size();
    const std::size_t overlap = std::min(out_words.size(), ref_words.size());
    for (std::size_t i = 0; i < overlap; ++i) {
      if (out_words[i] == ref_words[i]) ++s.matched_tokens;
    }

    s.exact = collapse_whitespace(result.output_text) ==
              collapse_whitespace(normalize(row.reference));

    const std::size_t denom = std::max(s.output_tokens, s.reference_tokens);
    accuracy_sum += denom == 0
                        ? 1.0
                        : static_cast<double>(s.matched_tokens) /
                              static_cast<double>(denom);
    if (s.exact) ++exact_rows;
    total_unknowns += s.unknowns;
    total_source_tokens += s.source_tokens;
    report.per_sentence.push_back(s);
  }

  const auto n = static_cast<double>(corpus.rows.size());
  report.sentence_exact_rate = static_cast<double>(exact_rows) / n;
  report.token_accuracy = accuracy_sum / n;
  report.oov_rate = total_source_tokens == 0
                        ? 0.0
                        : static_cast<double>(total_unknowns) /
                              static_cast<double>(total_source_tokens);
  return report;
}

}  // namespace setu
