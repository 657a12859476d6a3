// synprobe: treebank <-> label plumbing and the frz/rnd probing experiment.

#ifndef SYNPROBE_PIPELINE_H_
#define SYNPROBE_PIPELINE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "synprobe/embeddings.h"
#include "synprobe/labels.h"
#include "synprobe/metrics.h"
#include "synprobe/probe.h"
#include "synprobe/trees.h"

namespace synprobe {

// Either a dependency or a constituent treebank.
struct Treebank {
  std::vector<DepTree> dep;
  std::vector<ConstTree> constituent;
  bool dependency = true;

  std::size_t size() const { return dependency ? dep.size() : constituent.size(); }
  int length(std::size_t s) const {
    return dependency ? dep[s].size() : constituent[s].size();
  }
  const std::string& id(std::size_t s) const {
    return dependency ? dep[s].id : constituent[s].id;
  }
};

std::vector<LabelSequence> linearize(const Treebank& treebank, Scheme scheme);

// Decodes predicted atoms into trees over the words of `reference`.
Treebank delinearize(const std::vector<LabelSequence>& atoms,
                     const Treebank& reference, Scheme scheme,
                     const std::string& default_deprel);

// Most frequent dependency relation of a treebank ("dep" when empty).
std::string most_frequent_deprel(const Treebank& treebank);

// Sentence/word counts must agree; non-zero id hashes must match the
// treebank's sentence ids. Throws AlignmentError.
void check_alignment(const Treebank& treebank, const EmbeddingTable& embeddings);

struct Evaluation {
  std::string metric;  // "LAS" or "F1"
  double score = 0;
  std::optional<DepScore> dep;
  std::optional<BracketScore> brackets;
  BreakdownTable breakdown;
};

Evaluation evaluate(const Treebank& gold, const Treebank& pred, long min_support);

struct SetupResult {
  Evaluation evaluation;
  double tag_accuracy = 0;
  double train_loss_initial = 0;
  double train_loss_final = 0;
  int classes = 0;
};

struct SetupData {
  EmbeddingTable train;
  EmbeddingTable test;
};

SetupResult run_setup(const Treebank& train, const Treebank& test,
                      const SetupData& data, Scheme scheme,
                      const ProbeConfig& config, long min_support);

// Score of decoding the majority training atom everywhere: what repair alone
// achieves when the probe has learned nothing but the prior.
Evaluation repair_baseline(const Treebank& train, const Treebank& test,
                           Scheme scheme, long min_support);

struct ProbeRun {
  Scheme scheme = Scheme::kRelHead;
  ProbeConfig config;
  long min_support = kDefaultMinSupport;
  Evaluation baseline;
  std::map<std::string, SetupResult> setups;  // "frz", "rnd"
  std::optional<double> ftd_score;            // externally supplied
};

// Trains one probe per provided setup and scores it on the test split.
ProbeRun evaluate_setup_pair(const Treebank& train, const Treebank& test,
                             const std::map<std::string, SetupData>& setups,
                             Scheme scheme, const ProbeConfig& config,
                             long min_support = kDefaultMinSupport);

nlohmann::ordered_json breakdown_json(const BreakdownTable& table);
nlohmann::ordered_json evaluation_json(const Evaluation& evaluation);
// Report object; error reductions appear when both ends are available.
nlohmann::ordered_json report_json(const ProbeRun& run);

}  // namespace synprobe

#endif  // SYNPROBE_PIPELINE_H_
