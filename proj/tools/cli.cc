// Copyright 2026 The aspectlabel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aspectlabel/corpus.h"
#include "aspectlabel/eval.h"
#include "aspectlabel/lexicon.h"
#include "aspectlabel/phrases.h"
#include "aspectlabel/rules.h"
#include "aspectlabel/text.h"
#include "json.hpp"

namespace aspectlabel {
namespace cli {

namespace {

std::ifstream OpenInput(const std::string &path, std::string_view what) {
  if (path.empty()) throw Error(std::string(what) + " path is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + std::string(what) + " '" + path + "'");
  return in;
}

void WriteOutput(const std::string &path, const std::string &content,
                 std::ostream &out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write '" + path + "'");
  file << content;
  if (!file.flush()) throw Error("write failed for '" + path + "'");
}

Corpus ReadConlluFile(const std::string &path) {
  std::ifstream in = OpenInput(path, "corpus");
  return ParseConllu(in);
}

// True when the first content line has the 10 CoNLL-U columns.
bool LooksLikeConllu(const std::string &text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = StripCarriageReturn(raw);
    if (Trim(line).empty() || line.front() == '#') continue;
    return Split(line, '\t').size() == 10;
  }
  return true;
}

// CoNLL-U, or the two-column labelled format (tags ignored).
std::vector<Sentence> ReadSentencesAuto(const std::string &path) {
  std::ifstream in = OpenInput(path, "corpus");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::istringstream stream(text);
  if (LooksLikeConllu(text)) return ParseConllu(stream).sentences;
  std::vector<Sentence> sentences;
  for (LabelledSentence &ls : ReadConll(stream)) {
    sentences.push_back(std::move(ls.sentence));
  }
  return sentences;
}

std::vector<LabelledSentence> ReadLabelledFile(const std::string &path,
                                               std::string_view what) {
  std::ifstream in = OpenInput(path, what);
  return ReadConll(in);
}

SentimentLexicon ReadLexicon(const PipelineConfig &config) {
  std::ifstream pos = OpenInput(config.pos_lex_path, "positive lexicon");
  std::ifstream neg = OpenInput(config.neg_lex_path, "negative lexicon");
  return LoadLexicon(pos, neg);
}

CandidateFilter ReadFilter(const PipelineConfig &config) {
  CandidateFilter filter = CandidateFilter::Default();
  if (!config.stopwords_path.empty()) {
    std::ifstream in = OpenInput(config.stopwords_path, "stopwords");
    LoadStopwords(in, &filter);
  }
  return filter;
}

// The loaded phrase list, or one mined from the corpus when no list is
// given.
PhraseList ReadOrMinePhrases(const PipelineConfig &config,
                             const Corpus &corpus) {
  if (!config.phrases_path.empty()) {
    std::ifstream in = OpenInput(config.phrases_path, "phrase list");
    return LoadPhraseList(in);
  }
  if (corpus.sentences.empty()) return PhraseList(PhraseList::Source::kMined);
  return MinePhrases(corpus, config.min_support, config.max_n);
}

std::vector<LabelledSentence> LabelWithConfig(
    const PipelineConfig &config, const Corpus &corpus,
    std::vector<RuleOutcome> *outcomes) {
  const double q_th = config.ResolvedThreshold();
  PhraseList phrases = ReadOrMinePhrases(config, corpus);
  SentimentLexicon lexicon = ReadLexicon(config);
  CandidateFilter filter = ReadFilter(config);
  return LabelCorpus(corpus, phrases, q_th, lexicon, filter, config.scheme,
                     outcomes);
}

void WriteDebugMatches(const PipelineConfig &config, const Corpus &corpus,
                       const std::vector<RuleOutcome> &outcomes) {
  if (config.debug_matches_path.empty()) return;
  std::string lines;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    lines += MatchesJsonLine(corpus.sentences[i], outcomes[i]);
    lines += '\n';
  }
  WriteOutput(config.debug_matches_path, lines, std::cout);
}

std::string Serialize(const std::vector<LabelledSentence> &labelled) {
  std::ostringstream os;
  WriteConll(labelled, os);
  return os.str();
}

void ToObInPlace(std::vector<LabelledSentence> *labelled) {
  for (LabelledSentence &ls : *labelled) ls = ToOb(std::move(ls));
}

void PrintReport(const EvalReport &report, const std::string &out_path,
                 std::ostream &out) {
  std::string json = report.ToJson() + "\n";
  out << json << report.Summary() << '\n';
  if (!out_path.empty()) WriteOutput(out_path, json, out);
}

template <typename Fn>
int Guarded(std::ostream &err, Fn fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

double PipelineConfig::ResolvedThreshold() const {
  double value = kDefaultQualityThreshold;
  if (preset) {
    if (*preset == "laptop") {
      value = kDefaultQualityThreshold;
    } else if (*preset == "restaurant") {
      value = kRestaurantQualityThreshold;
    } else {
      throw Error("unknown preset '" + *preset + "'");
    }
  }
  if (q_th) value = *q_th;
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error("--qth must be in [0,1]");
  }
  return value;
}

int CmdMine(const PipelineConfig &config, std::ostream &out,
            std::ostream &err) {
  return Guarded(err, [&] {
    if (config.min_support < 1) throw Error("--min-support must be >= 1");
    if (config.max_n < 1) throw Error("--max-n must be >= 1");
    Corpus corpus = ReadConlluFile(config.corpus_path);
    std::ostringstream os;
    if (!corpus.sentences.empty()) {
      WritePhraseList(MinePhrases(corpus, config.min_support, config.max_n),
                      os);
    }
    WriteOutput(config.out_path, os.str(), out);
  });
}

int CmdLabel(const PipelineConfig &config, std::ostream &out,
             std::ostream &err) {
  return Guarded(err, [&] {
    Corpus corpus = ReadConlluFile(config.corpus_path);
    std::vector<RuleOutcome> outcomes;
    std::vector<LabelledSentence> labelled =
        LabelWithConfig(config, corpus, &outcomes);
    WriteOutput(config.out_path, Serialize(labelled), out);
    WriteDebugMatches(config, corpus, outcomes);

    long tokens = 0;
    long spans = 0;
    for (const LabelledSentence &ls : labelled) {
      tokens += static_cast<long>(ls.tags.size());
      spans += static_cast<long>(ExtractSpans(ls).size());
    }
    nlohmann::ordered_json counts;
    counts["sentences"] = labelled.size();
    counts["tokens"] = tokens;
    counts["spans"] = spans;
    // Keep stdout clean when it carries the labelled corpus.
    (config.out_path.empty() ? err : out) << counts.dump() << '\n';
  });
}

int CmdBaseline(const PipelineConfig &config, const std::string &gold_path,
                std::ostream &out, std::ostream &err) {
  return Guarded(err, [&] {
    Corpus corpus = ReadConlluFile(config.corpus_path);
    std::vector<LabelledSentence> gold = ReadLabelledFile(gold_path, "gold");
    if (gold.size() != corpus.sentences.size()) {
      throw Error("gold has " + std::to_string(gold.size()) +
                  " sentences, corpus has " +
                  std::to_string(corpus.sentences.size()));
    }
    for (size_t i = 0; i < gold.size(); ++i) {
      const Sentence &parsed = corpus.sentences[i];
      if (gold[i].sentence.size() != parsed.size()) {
        throw Error("sentence '" + parsed.id + "': gold has " +
                    std::to_string(gold[i].sentence.size()) +
                    " tokens, corpus has " + std::to_string(parsed.size()));
      }
      gold[i].sentence = parsed;
    }
    PipelineConfig iob_config = config;
    iob_config.scheme = LabelScheme::kIob;
    std::vector<RuleOutcome> outcomes;
    std::vector<LabelledSentence> predicted =
        LabelWithConfig(iob_config, corpus, &outcomes);
    WriteDebugMatches(config, corpus, outcomes);
    if (config.scheme == LabelScheme::kOb) {
      ToObInPlace(&predicted);
      ToObInPlace(&gold);
    }
    PrintReport(Evaluate(predicted, gold), config.out_path, out);
  });
}

int CmdTrain(const PipelineConfig &config, const std::string &ald_path,
             const std::string &model_path, std::ostream &out,
             std::ostream &err) {
  return Guarded(err, [&] {
    if (model_path.empty()) throw Error("--model path is required");
    std::vector<LabelledSentence> data = ReadLabelledFile(ald_path, "ALD");
    if (data.empty()) throw Error("'" + ald_path + "' has no sentences");
    if (!config.corpus_path.empty()) {
      // Restore parses (lemmas in particular) from the source corpus.
      Corpus corpus = ReadConlluFile(config.corpus_path);
      if (corpus.sentences.size() != data.size()) {
        throw Error("ALD and --corpus differ in sentence count");
      }
      for (size_t i = 0; i < data.size(); ++i) {
        if (corpus.sentences[i].size() != data[i].sentence.size()) {
          throw Error("sentence " + std::to_string(i + 1) +
                      ": ALD and --corpus differ in token count");
        }
        data[i].sentence = corpus.sentences[i];
      }
    }
    if (config.scheme == LabelScheme::kOb) ToObInPlace(&data);
    TrainConfig train = config.train;
    train.scheme = config.scheme;
    TaggerModel model = Train(data, train);
    std::ostringstream os;
    model.Save(os);
    WriteOutput(model_path, os.str(), out);
    nlohmann::ordered_json summary;
    summary["sentences"] = data.size();
    summary["features"] = model.averaged_weights().size();
    summary["scheme"] = std::string(SchemeName(model.scheme()));
    out << summary.dump() << '\n';
  });
}

int CmdPredict(const PipelineConfig &config, const std::string &model_path,
               std::ostream &out, std::ostream &err) {
  return Guarded(err, [&] {
    std::ifstream model_in = OpenInput(model_path, "model");
    TaggerModel model = TaggerModel::Load(model_in);
    std::vector<LabelledSentence> predicted;
    for (Sentence &sentence : ReadSentencesAuto(config.corpus_path)) {
      std::vector<IobTag> tags = model.Predict(sentence);
      predicted.push_back({std::move(sentence), std::move(tags)});
    }
    WriteOutput(config.out_path, Serialize(predicted), out);
  });
}

int CmdEval(const PipelineConfig &config, const std::string &pred_path,
            const std::string &gold_path, bool strict, std::ostream &out,
            std::ostream &err) {
  return Guarded(err, [&] {
    std::vector<LabelledSentence> pred = ReadLabelledFile(pred_path, "pred");
    std::vector<LabelledSentence> gold = ReadLabelledFile(gold_path, "gold");
    if (config.scheme == LabelScheme::kOb) {
      ToObInPlace(&pred);
      ToObInPlace(&gold);
    }
    PrintReport(
        Evaluate(pred, gold, strict ? SpanMode::kStrict : SpanMode::kLenient),
        config.out_path, out);
  });
}

int CmdClean(const std::string &input_path, const std::string &out_path,
             std::ostream &out, std::ostream &err) {
  return Guarded(err, [&] {
    std::ifstream file;
    std::istream *in = &std::cin;
    if (!input_path.empty()) {
      file = OpenInput(input_path, "input");
      in = &file;
    }
    std::string cleaned;
    std::string line;
    while (std::getline(*in, line)) {
      cleaned += CleanReview(line);
      cleaned += '\n';
    }
    WriteOutput(out_path, cleaned, out);
  });
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Automatic aspect-term labelling, tagging and evaluation"};
  app.name("aspectlabel");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "",
                 "Key-value config file; command-line flags override it");

  PipelineConfig config;
  std::string scheme = "iob";
  double q_th = 0.0;
  std::string preset;
  std::string gold_path, pred_path, model_path, ald_path, input_path;
  bool strict = false;
  bool no_shuffle = false;

  auto *qth_opt =
      app.add_option("--qth", q_th, "Quality threshold for phrase pruning");
  auto *preset_opt =
      app.add_option("--preset", preset, "Domain preset (sets --qth)")
          ->check(CLI::IsMember({"laptop", "restaurant"}));
  app.add_option("--scheme", scheme, "Label scheme")
      ->check(CLI::IsMember({"iob", "ob"}));
  app.add_option("--phrases", config.phrases_path,
                 "Quality phrase TSV (mined from --corpus when omitted)");
  app.add_option("--pos-lex", config.pos_lex_path, "Positive opinion words");
  app.add_option("--neg-lex", config.neg_lex_path, "Negative opinion words");
  app.add_option("--stopwords", config.stopwords_path,
                 "Stopword list (built-in English list when omitted)");
  app.add_option("--corpus", config.corpus_path, "Input CoNLL-U corpus");
  app.add_option("--out", config.out_path, "Output file (stdout if omitted)");
  app.add_option("--debug-matches", config.debug_matches_path,
                 "Write per-sentence rule matches as JSON lines");
  app.add_option("--min-support", config.min_support,
                 "Minimum n-gram count for mined phrases");
  app.add_option("--max-n", config.max_n, "Longest mined n-gram");
  app.add_option("--epochs", config.train.epochs, "Training epochs");
  app.add_option("--seed", config.train.seed, "Shuffle seed");
  app.add_flag("--no-shuffle", no_shuffle, "Keep training order fixed");
  app.add_option("--gold", gold_path, "Gold labelled corpus");
  app.add_option("--pred", pred_path, "Predicted labelled corpus");
  app.add_option("--model", model_path, "Tagger model file");
  app.add_option("--ald", ald_path, "Automatically labelled training corpus");
  app.add_option("--input", input_path, "Raw review text, one per line");
  app.add_flag("--strict", strict, "Reject I tags that do not continue a chunk");

  auto *mine = app.add_subcommand("mine", "Mine quality phrases from a corpus");
  auto *label = app.add_subcommand("label", "Label a corpus with the rules");
  auto *baseline =
      app.add_subcommand("baseline", "Score the rules against gold labels");
  auto *train = app.add_subcommand("train", "Train the tagger");
  auto *predict = app.add_subcommand("predict", "Tag a corpus");
  auto *eval = app.add_subcommand("eval", "Span precision/recall/F1");
  auto *clean = app.add_subcommand("clean", "Strip URLs from raw reviews");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  if (qth_opt->count() > 0) config.q_th = q_th;
  if (preset_opt->count() > 0) config.preset = preset;
  config.scheme = *ParseScheme(scheme);
  config.train.shuffle = !no_shuffle;

  if (*mine) return CmdMine(config, out, err);
  if (*label) return CmdLabel(config, out, err);
  if (*baseline) return CmdBaseline(config, gold_path, out, err);
  if (*train) return CmdTrain(config, ald_path, model_path, out, err);
  if (*predict) return CmdPredict(config, model_path, out, err);
  if (*eval) return CmdEval(config, pred_path, gold_path, strict, out, err);
  if (*clean) return CmdClean(input_path, config.out_path, out, err);
  return 1;
}

}  // namespace cli
}  // namespace aspectlabel
