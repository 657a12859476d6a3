#include "synprobe/pipeline.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "synprobe/const_codec.h"
#include "synprobe/dep_codec.h"

namespace synprobe {
namespace {

// JSON numbers rounded to a fixed precision so reports are easy to diff.
double rounded(double value) { return std::round(value * 1e6) / 1e6; }

}  // namespace

std::vector<LabelSequence> linearize(const Treebank& treebank, Scheme scheme) {
  std::vector<LabelSequence> out;
  out.reserve(treebank.size());
  if (is_dependency(scheme) != treebank.dependency)
    throw std::invalid_argument(std::string("encoding ") +
                                std::string(scheme_name(scheme)) +
                                " does not match the treebank formalism");
  if (treebank.dependency) {
    for (const DepTree& tree : treebank.dep) {
      LabelSequence seq;
      for (const DepLabel& label : encode(dep_encoding(scheme), tree))
        seq.push_back(dep_atom(label));
      out.push_back(std::move(seq));
    }
  } else {
    for (const ConstTree& tree : treebank.constituent) {
      LabelSequence seq;
      for (const ConstLabel& label : encode_levels(tree))
        seq.push_back(const_atom(label));
      out.push_back(std::move(seq));
    }
  }
  return out;
}

Treebank delinearize(const std::vector<LabelSequence>& atoms,
                     const Treebank& reference, Scheme scheme,
                     const std::string& default_deprel) {
  if (atoms.size() != reference.size())
    throw AlignmentError("label and treebank sentence counts differ");
  Treebank out;
  out.dependency = reference.dependency;
  for (std::size_t s = 0; s < atoms.size(); ++s) {
    if (reference.dependency) {
      DepLabels labels;
      for (const std::string& atom : atoms[s]) labels.push_back(parse_dep_atom(atom));
      const DepTree& ref = reference.dep[s];
      DepTree tree = decode(dep_encoding(scheme), labels, default_deprel, ref.forms());
      tree.id = ref.id;
      for (int i = 0; i < tree.size(); ++i) tree.tokens[i].upos = ref.tokens[i].upos;
      out.dep.push_back(std::move(tree));
    } else {
      ConstLabels labels;
      for (const std::string& atom : atoms[s]) labels.push_back(parse_const_label(atom));
      const ConstTree& ref = reference.constituent[s];
      ConstTree tree = decode_levels(labels, ref.words());
      tree.id = ref.id;
      out.constituent.push_back(std::move(tree));
    }
  }
  return out;
}

std::string most_frequent_deprel(const Treebank& treebank) {
  std::map<std::string, long> counts;
  for (const DepTree& tree : treebank.dep)
    for (const Token& t : tree.tokens) ++counts[t.deprel];
  std::string best(kDefaultDeprel);
  long best_count = 0;
  for (const auto& [rel, count] : counts)
    if (count > best_count) {
      best = rel;
      best_count = count;
    }
  return best;
}

void check_alignment(const Treebank& treebank, const EmbeddingTable& embeddings) {
  if (treebank.size() != embeddings.sentences.size())
    throw AlignmentError("treebank has " + std::to_string(treebank.size()) +
                         " sentences, embeddings have " +
                         std::to_string(embeddings.sentences.size()));
  for (std::size_t s = 0; s < treebank.size(); ++s) {
    const EmbeddedSentence& e = embeddings.sentences[s];
    if (e.words != treebank.length(s))
      throw AlignmentError("sentence " + treebank.id(s) + ": " +
                           std::to_string(e.words) + " vectors for " +
                           std::to_string(treebank.length(s)) + " words");
    if (!is_unchecked(e.id_hash) && e.id_hash != sentence_id_hash(treebank.id(s)))
      throw AlignmentError("sentence " + treebank.id(s) +
                           ": embedding id hash does not match");
  }
}

Evaluation evaluate(const Treebank& gold, const Treebank& pred, long min_support) {
  Evaluation out;
  if (gold.dependency) {
    out.metric = "LAS";
    out.dep = las(gold.dep, pred.dep);
    out.score = out.dep->las;
    out.breakdown = f1_by_displacement(gold.dep, pred.dep, min_support);
  } else {
    out.metric = "F1";
    out.brackets = bracket_f1(gold.constituent, pred.constituent);
    out.score = out.brackets->f1;
    out.breakdown = f1_by_span_length(gold.constituent, pred.constituent, min_support);
  }
  return out;
}

SetupResult run_setup(const Treebank& train, const Treebank& test,
                      const SetupData& data, Scheme scheme,
                      const ProbeConfig& config, long min_support) {
  check_alignment(train, data.train);
  check_alignment(test, data.test);
  if (data.train.dim != data.test.dim)
    throw AlignmentError("train and test embeddings differ in dimension");
  const auto train_labels = linearize(train, scheme);
  const auto test_labels = linearize(test, scheme);
  SetupResult result;
  const ProbeModel model = train_linear_probe(data.train, train_labels, config);
  result.classes = model.vocab.size();
  result.train_loss_initial = cross_entropy(
      initial_probe(model.dim, model.vocab, config), data.train, train_labels);
  result.train_loss_final = cross_entropy(model, data.train, train_labels);
  const auto predicted = predict(model, data.test);
  result.tag_accuracy = tag_accuracy(test_labels, predicted);
  const Treebank decoded =
      delinearize(predicted, test, scheme, most_frequent_deprel(train));
  result.evaluation = evaluate(test, decoded, min_support);
  return result;
}

Evaluation repair_baseline(const Treebank& train, const Treebank& test,
                           Scheme scheme, long min_support) {
  const LabelVocab vocab(linearize(train, scheme));
  std::vector<LabelSequence> majority;
  for (std::size_t s = 0; s < test.size(); ++s)
    majority.emplace_back(test.length(s), vocab.size() > 0
                                              ? vocab.atom(vocab.most_frequent())
                                              : std::string());
  return evaluate(test, delinearize(majority, test, scheme, most_frequent_deprel(train)),
                  min_support);
}

ProbeRun evaluate_setup_pair(const Treebank& train, const Treebank& test,
                             const std::map<std::string, SetupData>& setups,
                             Scheme scheme, const ProbeConfig& config,
                             long min_support) {
  ProbeRun run;
  run.scheme = scheme;
  run.config = config;
  run.min_support = min_support;
  run.baseline = repair_baseline(train, test, scheme, min_support);
  for (const auto& [name, data] : setups)
    run.setups[name] = run_setup(train, test, data, scheme, config, min_support);
  return run;
}

nlohmann::ordered_json breakdown_json(const BreakdownTable& table) {
  auto rows = [](const std::vector<BreakdownRow>& in) {
    auto out = nlohmann::ordered_json::array();
    for (const BreakdownRow& r : in)
      out.push_back({{"key", r.key},
                     {"f1", rounded(r.f1)},
                     {"precision", rounded(r.precision)},
                     {"recall", rounded(r.recall)},
                     {"support", r.support},
                     {"predicted", r.predicted}});
    return out;
  };
  return {{"rows", rows(table.rows)},
          {"dropped", rows(table.dropped)},
          {"total_support", table.total_support}};
}

nlohmann::ordered_json evaluation_json(const Evaluation& e) {
  nlohmann::ordered_json out{{"metric", e.metric}, {"score", rounded(e.score)}};
  if (e.dep) {
    out["las"] = rounded(e.dep->las);
    out["uas"] = rounded(e.dep->uas);
    out["correct_both"] = e.dep->correct_both;
    out["correct_head"] = e.dep->correct_head;
    out["total"] = e.dep->total;
  }
  if (e.brackets) {
    out["precision"] = rounded(e.brackets->precision);
    out["recall"] = rounded(e.brackets->recall);
    out["f1"] = rounded(e.brackets->f1);
    out["matched"] = e.brackets->matched;
    out["predicted"] = e.brackets->predicted;
    out["gold"] = e.brackets->gold;
  }
  return out;
}

nlohmann::ordered_json report_json(const ProbeRun& run) {
  nlohmann::ordered_json report;
  report["format"] = "synprobe-report";
  report["version"] = 1;
  report["encoding"] = scheme_name(run.scheme);
  report["formalism"] = is_dependency(run.scheme) ? "dependency" : "constituency";
  report["metric"] = is_dependency(run.scheme) ? "LAS" : "F1";
  report["config"] = {{"learning_rate", run.config.learning_rate},
                      {"epochs", run.config.epochs},
                      {"batch_size", run.config.batch_size},
                      {"optimizer", optimizer_name(run.config.optimizer)},
                      {"seed", run.config.seed},
                      {"min_support", run.min_support}};
  report["baseline"] = evaluation_json(run.baseline);
  auto setups = nlohmann::ordered_json::object();
  for (const auto& [name, result] : run.setups) {
    auto entry = evaluation_json(result.evaluation);
    entry["tag_accuracy"] = rounded(result.tag_accuracy);
    entry["classes"] = result.classes;
    entry["train_loss_initial"] = rounded(result.train_loss_initial);
    entry["train_loss_final"] = rounded(result.train_loss_final);
    entry["breakdown"] = breakdown_json(result.evaluation.breakdown);
    setups[name] = std::move(entry);
  }
  if (run.ftd_score) setups["ftd"] = {{"score", rounded(*run.ftd_score)}, {"external", true}};
  report["setups"] = std::move(setups);

  auto reductions = nlohmann::ordered_json::object();
  auto score = [&](const std::string& name) -> std::optional<double> {
    if (name == "ftd") return run.ftd_score;
    auto it = run.setups.find(name);
    if (it == run.setups.end()) return std::nullopt;
    return it->second.evaluation.score;
  };
  for (const auto& [from, to] : {std::pair<std::string, std::string>{"rnd", "frz"},
                                 std::pair<std::string, std::string>{"frz", "ftd"}}) {
    auto a = score(from), b = score(to);
    if (!a || !b) continue;
    const std::string key = from + "," + to;
    if (*a >= 100.0)
      reductions[key] = nullptr;
    else
      reductions[key] = rounded(error_reduction(*a, *b));
  }
  report["error_reduction"] = std::move(reductions);
  return report;
}

}  // namespace synprobe
