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

// Command-line front end. Subcommands:
//
//   mine      CoNLL-U corpus -> quality phrase TSV
//   label     CoNLL-U corpus -> two-column labelled corpus (ALD)
//   baseline  rules applied to a gold corpus, scored against its gold tags
//   train     labelled corpus -> tagger model
//   predict   model + corpus -> labelled corpus
//   eval      predicted vs gold labelled corpora -> span P/R/F1
//   clean     raw review lines -> URL-free, whitespace-normalized lines
//
// Options may also come from a key-value file given with --config; flags on
// the command line override it.

#ifndef ASPECTLABEL_TOOLS_CLI_H_
#define ASPECTLABEL_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "aspectlabel/labelling.h"
#include "aspectlabel/tagger.h"

namespace aspectlabel {
namespace cli {

struct PipelineConfig {
  std::optional<double> q_th;      // --qth; wins over the preset
  std::optional<std::string> preset;  // "laptop" | "restaurant"
  LabelScheme scheme = LabelScheme::kIob;
  std::string phrases_path;
  std::string pos_lex_path;
  std::string neg_lex_path;
  std::string stopwords_path;  // empty: built-in English list
  std::string corpus_path;
  std::string out_path;  // empty: stdout
  std::string debug_matches_path;
  int min_support = 10;
  int max_n = 3;
  TrainConfig train;

  // --qth, else the preset's threshold, else the default. Throws Error for
  // unknown presets or thresholds outside [0,1].
  double ResolvedThreshold() const;
};

int CmdMine(const PipelineConfig &config, std::ostream &out, std::ostream &err);
int CmdLabel(const PipelineConfig &config, std::ostream &out,
             std::ostream &err);
int CmdBaseline(const PipelineConfig &config, const std::string &gold_path,
                std::ostream &out, std::ostream &err);
int CmdTrain(const PipelineConfig &config, const std::string &ald_path,
             const std::string &model_path, std::ostream &out,
             std::ostream &err);
int CmdPredict(const PipelineConfig &config, const std::string &model_path,
               std::ostream &out, std::ostream &err);
int CmdEval(const PipelineConfig &config, const std::string &pred_path,
            const std::string &gold_path, bool strict, std::ostream &out,
            std::ostream &err);
// Reads `input_path` (stdin when empty) and writes to `out_path` (stdout
// when empty).
int CmdClean(const std::string &input_path, const std::string &out_path,
             std::ostream &out, std::ostream &err);

// Parses argv and dispatches. Returns the process exit status.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace cli
}  // namespace aspectlabel

#endif  // ASPECTLABEL_TOOLS_CLI_H_
