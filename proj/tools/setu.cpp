// setu: rule-based Telugu <-> Marathi translator for SOV-parallel language
// pairs. Subcommands mirror the engine's resources: translate, pos, dict,
// proverbs, translit, eval.
//
// Exit codes: 0 success, 1 usage error, 2 data error (missing or malformed
// resource files), 3 translation failure under --oov fail. Results go to
// stdout, warnings and diagnostics to stderr.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "setu/errors.hpp"
#include "setu/eval.hpp"
#include "setu/lexicon.hpp"
#include "setu/proverbs.hpp"
#include "setu/script.hpp"
#include "setu/tagger.hpp"
#include "setu/translator.hpp"
#include "setu/translit.hpp"

namespace {

using setu::DataError;

void print_warnings(const std::vector<std::string>& warnings, const std::string& path) {
  for (const auto& w : warnings) {
    std::cerr << "warning: " << path << ": " << w << '\n';
  }
}

std::ifstream open_resource(const std::string& path, const char* what) {
  if (path.empty()) {
    throw DataError(std::string("no ") + what +
                    " configured (pass the flag or set the environment variable)");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(std::string("cannot open ") + what + ": " + path);
  }
  return in;
}

setu::Lexicon load_lexicon_file(const std::string& path, const std::string& from,
                                const std::string& to) {
  std::ifstream in = open_resource(path, "dictionary");
  auto result = setu::load_lexicon(in, from, to);
  print_warnings(result.warnings, path);
  return std::move(result.lexicon);
}

setu::ProverbStore load_proverbs_file(const std::string& path, const std::string& from,
                                      const std::string& to) {
  if (path.empty()) {
    return setu::ProverbStore(from, to);  // proverbs are optional
  }
  std::ifstream in = open_resource(path, "proverb table");
  auto result = setu::load_proverbs(in, from, to);
  print_warnings(result.warnings, path);
  return std::move(result.store);
}

setu::PosLexicon load_pos_file(const std::string& path, const std::string& lang) {
  std::ifstream in = open_resource(path, "POS dictionary");
  auto result = setu::load_pos_lexicon(in, lang);
  print_warnings(result.warnings, path);
  return std::move(result.lexicon);
}

setu::OovPolicy to_policy(const std::string& name) {
  const auto policy = setu::parse_oov_policy(name);
  if (!policy) {
    throw CLI::ValidationError("--oov", "expected passthrough, mark or fail");
  }
  return *policy;
}

void for_each_line(std::istream& in, const std::function<void(const std::string&)>& fn) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(line);
  }
}

int run_translate(const std::string& from, const std::string& to,
                  const std::string& dict_path, const std::string& proverbs_path,
                  const std::string& oov, const std::string& format) {
  const setu::Lexicon lex = load_lexicon_file(dict_path, from, to);
  const setu::ProverbStore store = load_proverbs_file(proverbs_path, from, to);
  const setu::OovPolicy policy = to_policy(oov);

  bool first = true;
  for_each_line(std::cin, [&](const std::string& line) {
    const setu::TranslationResult result = setu::translate(lex, store, line, policy);
    if (format == "tsv") {
      if (!first) std::cout << '\n';
      for (const auto& u : result.units) {
        std::cout << u.source_text << '\t' << u.pos.str() << '\t' << u.target_text
                  << '\t' << setu::mechanism_name(u.mechanism) << '\n';
      }
    } else {
      std::cout << result.output_text << '\n';
    }
    std::cout.flush();
    first = false;
  });
  return 0;
}

int run_pos(const std::string& lang, const std::string& pos_dict_path) {
  const setu::PosLexicon plex = load_pos_file(pos_dict_path, lang);

  bool first = true;
  for_each_line(std::cin, [&](const std::string& line) {
    const std::vector<setu::Token> tokens = setu::tokenize(setu::normalize(line));
    if (!first) std::cout << '\n';
    for (const auto& tt : setu::tag_sentence(plex, tokens)) {
      std::cout << tt.token.surface << '\t' << tt.tag.str() << '\n';
    }
    std::cout.flush();
    first = false;
  });
  return 0;
}

int run_dict_check(const std::string& dict_path, const std::string& from,
                   const std::string& to) {
  std::ifstream in = open_resource(dict_path, "dictionary");
  const auto result = setu::load_lexicon(in, from, to);
  print_warnings(result.warnings, dict_path);
  std::cout << "ok: " << result.lexicon.size() << " entries, "
            << result.warnings.size() << " warnings\n";
  return 0;
}

int run_dict_list(const std::string& dict_path, const std::string& from,
                  const std::string& to) {
  load_lexicon_file(dict_path, from, to).serialize(std::cout);
  return 0;
}

int run_dict_lookup(const std::string& dict_path, const std::string& from,
                    const std::string& to, const std::string& word) {
  const setu::Lexicon lex = load_lexicon_file(dict_path, from, to);
  const auto senses = lex.lookup_all(setu::normalize(word));
  if (senses.empty()) {
    std::cerr << "not found: " << word << '\n';
    return 0;
  }
  for (const auto* e : senses) {
    std::cout << e->source << '\t' << e->target << '\t' << e->pos.str() << '\n';
  }
  return 0;
}

int run_proverbs_list(const std::string& proverbs_path, const std::string& from,
                      const std::string& to) {
  std::ifstream in = open_resource(proverbs_path, "proverb table");
  auto result = setu::load_proverbs(in, from, to);
  print_warnings(result.warnings, proverbs_path);
  result.store.serialize(std::cout);
  return 0;
}

int run_proverbs_match(const std::string& proverbs_path, const std::string& from,
                       const std::string& to) {
  std::ifstream in = open_resource(proverbs_path, "proverb table");
  auto result = setu::load_proverbs(in, from, to);
  print_warnings(result.warnings, proverbs_path);

  bool first = true;
  for_each_line(std::cin, [&](const std::string& line) {
    const auto words =
        setu::word_surfaces(setu::tokenize(setu::normalize(line)));
    if (!first) std::cout << '\n';
    for (const auto& m : result.store.find_matches(words)) {
      std::cout << m.begin << '\t' << m.end << '\t';
      for (std::size_t i = m.begin; i < m.end; ++i) {
        if (i > m.begin) std::cout << ' ';
        std::cout << words[i];
      }
      std::cout << '\t' << m.entry->target_text << '\n';
    }
    std::cout.flush();
    first = false;
  });
  return 0;
}

int run_translit(const std::string& lang, const std::string& scheme_path) {
  setu::TranslitScheme custom;
  const setu::TranslitScheme* scheme = nullptr;
  if (!scheme_path.empty()) {
    std::ifstream in = open_resource(scheme_path, "scheme file");
    custom = setu::load_scheme(in);
    scheme = &custom;
  } else if (lang == "te" || lang == "telugu") {
    scheme = &setu::builtin_scheme(setu::Script::telugu);
  } else if (lang == "mr" || lang == "devanagari") {
    scheme = &setu::builtin_scheme(setu::Script::devanagari);
  } else {
    throw DataError("no built-in scheme for language '" + lang +
                    "'; pass --scheme");
  }

  for_each_line(std::cin, [&](const std::string& line) {
    std::cout << setu::transliterate(*scheme, line) << '\n';
    std::cout.flush();
  });
  return 0;
}

void write_report_tsv(std::ostream& out, const setu::EvalReport& report) {
  out << "#row\texact\tmatched_tokens\toutput_tokens\treference_tokens\tsource_tokens\tunknowns\n";
  for (std::size_t i = 0; i < report.per_sentence.size(); ++i) {
    const auto& s = report.per_sentence[i];
    out << (i + 1) << '\t' << (s.exact ? 1 : 0) << '\t' << s.matched_tokens << '\t'
        << s.output_tokens << '\t' << s.reference_tokens << '\t' << s.source_tokens
        << '\t' << s.unknowns << '\n';
  }
}

int run_eval(const std::string& corpus_path, const std::string& from,
             const std::string& to, const std::string& dict_path,
             const std::string& proverbs_path, const std::string& oov,
             const std::string& format, const std::string& report_path) {
  const setu::Lexicon lex = load_lexicon_file(dict_path, from, to);
  const setu::ProverbStore store = load_proverbs_file(proverbs_path, from, to);

  std::ifstream corpus_in = open_resource(corpus_path, "corpus");
  const setu::ParallelCorpus corpus = setu::load_corpus(corpus_in, from, to);
  const setu::EvalReport report = setu::evaluate(lex, store, to_policy(oov), corpus);

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw DataError("cannot write report: " + report_path);
    write_report_tsv(out, report);
  }

  if (format == "tsv") {
    write_report_tsv(std::cout, report);
  } else {
    char buf[64];
    std::cout << "rows: " << report.per_sentence.size() << '\n';
    std::snprintf(buf, sizeof buf, "%.6f", report.sentence_exact_rate);
    std::cout << "sentence_exact_rate: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.6f", report.token_accuracy);
    std::cout << "token_accuracy: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.6f", report.oov_rate);
    std::cout << "oov_rate: " << buf << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule-based translator for SOV-parallel language pairs"};
  app.require_subcommand(1);

  std::string from, to, lang;
  std::string dict_path, pos_dict_path, proverbs_path, scheme_path;
  std::string corpus_path, report_path;
  std::string oov = "passthrough";
  std::string format = "text";

  const auto add_pair = [&](CLI::App* cmd, bool required) {
    auto* f = cmd->add_option("--from", from, "source language code");
    auto* t = cmd->add_option("--to", to, "target language code");
    if (required) {
      f->required();
      t->required();
    } else {
      from = "src";
      to = "tgt";
    }
  };
  const auto add_dict = [&](CLI::App* cmd) {
    cmd->add_option("--dict", dict_path, "bilingual dictionary TSV")
        ->envname("SETU_DICT");
  };
  const auto add_proverbs = [&](CLI::App* cmd) {
    cmd->add_option("--proverbs", proverbs_path, "proverb table TSV")
        ->envname("SETU_PROVERBS");
  };
  const auto add_oov = [&](CLI::App* cmd) {
    cmd->add_option("--oov", oov, "OOV policy: passthrough|mark|fail");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text|tsv");
  };

  auto* translate_cmd =
      app.add_subcommand("translate", "translate stdin line by line");
  add_pair(translate_cmd, true);
  add_dict(translate_cmd);
  add_proverbs(translate_cmd);
  add_oov(translate_cmd);
  add_format(translate_cmd);

  auto* pos_cmd = app.add_subcommand("pos", "tag stdin words by dictionary lookup");
  pos_cmd->add_option("--lang", lang, "language code")->required();
  pos_cmd->add_option("--pos-dict", pos_dict_path, "POS dictionary TSV")
      ->envname("SETU_POS_DICT");

  auto* dict_cmd = app.add_subcommand("dict", "inspect a bilingual dictionary");
  dict_cmd->require_subcommand(1);
  auto* dict_check = dict_cmd->add_subcommand("check", "validate and count entries");
  auto* dict_list = dict_cmd->add_subcommand("list", "print entries as TSV");
  auto* dict_lookup = dict_cmd->add_subcommand("lookup", "print every sense of a word");
  std::string lookup_word;
  dict_lookup->add_option("word", lookup_word, "source-side word")->required();
  for (auto* cmd : {dict_check, dict_list, dict_lookup}) {
    add_pair(cmd, false);
    add_dict(cmd);
  }

  auto* proverbs_cmd = app.add_subcommand("proverbs", "inspect the proverb table");
  proverbs_cmd->require_subcommand(1);
  auto* proverbs_list = proverbs_cmd->add_subcommand("list", "print entries as TSV");
  auto* proverbs_match =
      proverbs_cmd->add_subcommand("match", "report proverb occurrences in stdin lines");
  for (auto* cmd : {proverbs_list, proverbs_match}) {
    add_pair(cmd, false);
    add_proverbs(cmd);
  }

  auto* translit_cmd =
      app.add_subcommand("translit", "romanized input to Telugu or Devanagari");
  translit_cmd->add_option("--lang", lang, "te|mr (selects the built-in scheme)");
  translit_cmd->add_option("--scheme", scheme_path, "custom scheme TSV");

  auto* eval_cmd = app.add_subcommand("eval", "score translations against a parallel corpus");
  eval_cmd->add_option("corpus", corpus_path, "parallel corpus TSV")->required();
  add_pair(eval_cmd, true);
  add_dict(eval_cmd);
  add_proverbs(eval_cmd);
  add_oov(eval_cmd);
  add_format(eval_cmd);
  eval_cmd->add_option("--report", report_path, "write the per-row TSV report here");

  try {
    app.parse(argc, argv);

    if (*translate_cmd) {
      return run_translate(from, to, dict_path, proverbs_path, oov, format);
    }
    if (*pos_cmd) {
      return run_pos(lang, pos_dict_path);
    }
    if (*dict_check) return run_dict_check(dict_path, from, to);
    if (*dict_list) return run_dict_list(dict_path, from, to);
    if (*dict_lookup) return run_dict_lookup(dict_path, from, to, lookup_word);
    if (*proverbs_list) return run_proverbs_list(proverbs_path, from, to);
    if (*proverbs_match) return run_proverbs_match(proverbs_path, from, to);
    if (*translit_cmd) return run_translit(lang, scheme_path);
    if (*eval_cmd) {
      return run_eval(corpus_path, from, to, dict_path, proverbs_path, oov,
                      format, report_path);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const setu::UnknownWordError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
