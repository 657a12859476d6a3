#include "synprobe/cli.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "synprobe/const_codec.h"
#include "synprobe/dep_codec.h"
#include "synprobe/embeddings.h"
#include "synprobe/labels.h"
#include "synprobe/metrics.h"
#include "synprobe/pipeline.h"
#include "synprobe/probe.h"
#include "synprobe/synthetic.h"
#include "synprobe/treebank_io.h"

namespace synprobe {
namespace {

// Error in an input file, reported as "path:line: message".
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto with_path(const std::string& path, F&& read) {
  try {
    return read();
  } catch (const ParseError& e) {
    throw DataError(path + ":" + std::to_string(e.line()) +
                    (e.column() > 0 ? ":" + std::to_string(e.column()) : "") + ": " +
                    e.detail());
  } catch (const EmbeddingFormatError& e) {
    throw DataError(path + ": " + e.what());
  }
}

Treebank load_treebank(const std::string& path, bool dependency) {
  const std::string text = read_file(path);
  Treebank tb;
  tb.dependency = dependency;
  with_path(path, [&] {
    if (dependency)
      tb.dep = read_conllu(text).trees;
    else
      tb.constituent = read_brackets(text).trees;
    return 0;
  });
  return tb;
}

EmbeddingTable load_embeddings(const std::string& path) {
  const std::string bytes = read_file(path);
  return with_path(path, [&] { return read_embeddings(bytes); });
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

Scheme require_scheme(const std::string& name) {
  auto scheme = parse_scheme(name);
  if (!scheme) throw CLI::ValidationError("--encoding", "unknown encoding " + name);
  return *scheme;
}

const std::vector<std::string> kEncodings = {"relhead", "2planar", "archybrid",
                                             "constlevels"};

// --- encode / decode --------------------------------------------------------

struct CodecOptions {
  std::string encoding;
  std::string input;
  std::string output;
  std::string default_deprel = std::string(kDefaultDeprel);
};

int cmd_encode(const CodecOptions& opt, std::ostream& out) {
  const Scheme scheme = require_scheme(opt.encoding);
  const Treebank tb = load_treebank(opt.input, is_dependency(scheme));
  std::string text;
  if (tb.dependency) {
    std::vector<DepLabelSentence> sentences;
    for (const DepTree& tree : tb.dep)
      sentences.push_back({tree.forms(), encode(dep_encoding(scheme), tree)});
    text = write_dep_labels(sentences);
  } else {
    std::vector<ConstLabelSentence> sentences;
    for (const ConstTree& tree : tb.constituent)
      sentences.push_back({tree.words(), encode_levels(tree)});
    text = write_const_labels(sentences);
  }
  emit(opt.output, text, out);
  return kExitOk;
}

int cmd_decode(const CodecOptions& opt, std::ostream& out) {
  const Scheme scheme = require_scheme(opt.encoding);
  const std::string text = read_file(opt.input);
  std::string result;
  if (is_dependency(scheme)) {
    auto sentences = with_path(opt.input, [&] { return read_dep_labels(text); });
    std::vector<DepTree> trees;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      DepTree tree = decode(dep_encoding(scheme), sentences[s].labels,
                            opt.default_deprel, sentences[s].forms);
      tree.id = std::to_string(s + 1);
      trees.push_back(std::move(tree));
    }
    result = write_conllu(trees);
  } else {
    auto sentences = with_path(opt.input, [&] { return read_const_labels(text); });
    std::vector<ConstTree> trees;
    for (const auto& s : sentences) trees.push_back(decode_levels(s.labels, s.words));
    result = write_brackets(trees);
  }
  emit(opt.output, result, out);
  return kExitOk;
}

// --- probe --------------------------------------------------------------------

struct ProbeOptions {
  std::string encoding;
  std::string train, test;
  std::string frz_train, frz_test, rnd_train, rnd_test;
  std::vector<std::string> setups;
  std::uint64_t seed = 1;
  int epochs = 20;
  double lr = 2e-3;
  int batch_size = 128;
  long min_support = kDefaultMinSupport;
  std::string optimizer = "adam";
  std::optional<double> ftd_score;
  std::string output;
};

int cmd_probe(const ProbeOptions& opt, std::ostream& out) {
  const Scheme scheme = require_scheme(opt.encoding);
  ProbeConfig config;
  config.seed = opt.seed;
  config.epochs = opt.epochs;
  config.learning_rate = opt.lr;
  config.batch_size = opt.batch_size;
  config.optimizer = *parse_optimizer(opt.optimizer);

  std::set<std::string> wanted(opt.setups.begin(), opt.setups.end());
  if (wanted.empty()) wanted = {"frz", "rnd"};
  std::map<std::string, SetupData> setups;
  auto add = [&](const std::string& name, const std::string& train,
                 const std::string& test) {
    if (!wanted.count(name)) return;
    if (train.empty() || test.empty())
      throw CLI::ValidationError("--" + name + "-train/--" + name + "-test",
                                 "setup " + name + " needs train and test embeddings");
    setups[name] = {load_embeddings(train), load_embeddings(test)};
  };
  add("frz", opt.frz_train, opt.frz_test);
  add("rnd", opt.rnd_train, opt.rnd_test);

  const Treebank train = load_treebank(opt.train, is_dependency(scheme));
  const Treebank test = load_treebank(opt.test, is_dependency(scheme));
  if (train.size() == 0) throw DataError(opt.train + ": training treebank is empty");
  ProbeRun run = evaluate_setup_pair(train, test, setups, scheme, config, opt.min_support);
  run.ftd_score = opt.ftd_score;
  emit(opt.output, report_json(run).dump(2) + "\n", out);
  return kExitOk;
}

// --- eval -----------------------------------------------------------------------

struct EvalOptions {
  std::string formalism;
  std::string gold, pred;
  long min_support = kDefaultMinSupport;
  std::string output;
};

int cmd_eval(const EvalOptions& opt, std::ostream& out) {
  const bool dependency = opt.formalism == "dependency";
  const Treebank gold = load_treebank(opt.gold, dependency);
  const Treebank pred = load_treebank(opt.pred, dependency);
  const Evaluation e = evaluate(gold, pred, opt.min_support);
  nlohmann::ordered_json report;
  report["format"] = "synprobe-eval";
  report["version"] = 1;
  report["formalism"] = opt.formalism;
  report["sentences"] = gold.size();
  report["evaluation"] = evaluation_json(e);
  report["min_support"] = opt.min_support;
  report["breakdown"] = breakdown_json(e.breakdown);
  emit(opt.output, report.dump(2) + "\n", out);
  return kExitOk;
}

// --- synth ----------------------------------------------------------------------

struct SynthOptions {
  std::string encoding = "relhead";
  int sentences = 2000;
  double test_fraction = 0.2;
  int min_length = 3;
  int max_length = 12;
  double sigma = 0.1;
  std::string trees = "local";
  int relations = kSynthRelations;
  std::uint64_t seed = 1;
  std::string output_dir;
};

int cmd_synth(const SynthOptions& opt, std::ostream& out) {
  const Scheme scheme = require_scheme(opt.encoding);
  Rng rng(opt.seed);
  const int n_test = static_cast<int>(opt.sentences * opt.test_fraction);
  Treebank train, test;
  train.dependency = test.dependency = is_dependency(scheme);
  for (int s = 0; s < opt.sentences; ++s) {
    const int n = rng.range(opt.min_length, opt.max_length);
    Treebank& tb = s < opt.sentences - n_test ? train : test;
    const std::string id = "synth-" + std::to_string(s + 1);
    if (tb.dependency) {
      DepTree tree = opt.trees == "uniform" ? random_dep_tree(n, rng, opt.relations)
                                              : local_dep_tree(n, rng, opt.relations);
      tree.id = id;
      tb.dep.push_back(std::move(tree));
    } else {
      ConstTree tree = random_const_tree(n, rng);
      tree.id = id;
      tb.constituent.push_back(std::move(tree));
    }
  }
  const auto train_labels = linearize(train, scheme);
  const auto test_labels = linearize(test, scheme);
  std::set<std::string> atom_set;
  for (const auto* labels : {&train_labels, &test_labels})
    for (const auto& seq : *labels) atom_set.insert(seq.begin(), seq.end());
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  auto ids_of = [](const Treebank& tb) {
    std::vector<std::string> ids;
    for (std::size_t s = 0; s < tb.size(); ++s) ids.push_back(tb.id(s));
    return ids;
  };
  auto lengths_of = [](const Treebank& tb) {
    std::vector<int> lengths;
    for (std::size_t s = 0; s < tb.size(); ++s) lengths.push_back(tb.length(s));
    return lengths;
  };

  namespace fs = std::filesystem;
  fs::create_directories(opt.output_dir);
  const fs::path dir(opt.output_dir);
  const std::string ext = train.dependency ? ".conllu" : ".trees";
  if (train.dependency) {
    write_file((dir / ("train" + ext)).string(), write_conllu(train.dep));
    write_file((dir / ("test" + ext)).string(), write_conllu(test.dep));
  } else {
    write_file((dir / ("train" + ext)).string(), write_brackets(train.constituent));
    write_file((dir / ("test" + ext)).string(), write_brackets(test.constituent));
  }
  // Bracket files carry no ids; their ids are line ordinals on reading.
  auto hashed_ids = [&](const Treebank& tb) {
    return tb.dependency ? ids_of(tb) : std::vector<std::string>{};
  };
  const int dim = static_cast<int>(atoms.size());
  write_file((dir / "frz.train.emb").string(),
             write_embeddings(one_hot_embeddings(train_labels, atoms, opt.sigma, rng,
                                                 hashed_ids(train))));
  write_file((dir / "frz.test.emb").string(),
             write_embeddings(one_hot_embeddings(test_labels, atoms, opt.sigma, rng,
                                                 hashed_ids(test))));
  write_file((dir / "rnd.train.emb").string(),
             write_embeddings(noise_embeddings(lengths_of(train), dim, rng,
                                               hashed_ids(train))));
  write_file((dir / "rnd.test.emb").string(),
             write_embeddings(noise_embeddings(lengths_of(test), dim, rng,
                                               hashed_ids(test))));
  out << "wrote " << train.size() << " train and " << test.size()
      << " test sentences, embedding dimension " << dim << ", to " << opt.output_dir
      << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"synprobe: syntax linearization and linear probing toolkit",
               "synprobe"};
  app.require_subcommand(1);

  CodecOptions enc_opt, dec_opt;
  auto* encode_cmd = app.add_subcommand("encode", "Linearize a treebank into labels");
  encode_cmd->add_option("--encoding", enc_opt.encoding, "Label encoding")
      ->required()
      ->check(CLI::IsMember(kEncodings));
  encode_cmd->add_option("input", enc_opt.input, "CoNLL-U or bracketed treebank")
      ->required()
      ->check(CLI::ExistingFile);
  encode_cmd->add_option("--out", enc_opt.output, "Output label file (default stdout)");

  auto* decode_cmd = app.add_subcommand("decode", "Rebuild trees from a label file");
  decode_cmd->add_option("--encoding", dec_opt.encoding, "Label encoding")
      ->required()
      ->check(CLI::IsMember(kEncodings));
  decode_cmd->add_option("input", dec_opt.input, "Label file")
      ->required()
      ->check(CLI::ExistingFile);
  decode_cmd->add_option("--out", dec_opt.output, "Output treebank (default stdout)");
  decode_cmd->add_option("--default-deprel", dec_opt.default_deprel,
                         "Relation for tokens whose label has none");

  ProbeOptions probe_opt;
  auto* probe_cmd = app.add_subcommand("probe", "Train linear probes and report scores");
  probe_cmd->add_option("--encoding", probe_opt.encoding, "Label encoding")
      ->required()
      ->check(CLI::IsMember(kEncodings));
  probe_cmd->add_option("--train", probe_opt.train, "Training treebank")
      ->required()
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--test", probe_opt.test, "Test treebank")
      ->required()
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--frz-train", probe_opt.frz_train, "frz embeddings, train split")
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--frz-test", probe_opt.frz_test, "frz embeddings, test split")
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--rnd-train", probe_opt.rnd_train, "rnd embeddings, train split")
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--rnd-test", probe_opt.rnd_test, "rnd embeddings, test split")
      ->check(CLI::ExistingFile);
  probe_cmd->add_option("--setup", probe_opt.setups, "Setups to run (default: frz and rnd)")
      ->check(CLI::IsMember({"frz", "rnd"}));
  probe_cmd->add_option("--seed", probe_opt.seed, "Seed for shuffling")->capture_default_str();
  probe_cmd->add_option("--epochs", probe_opt.epochs, "Training epochs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  probe_cmd->add_option("--lr", probe_opt.lr, "Learning rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  probe_cmd->add_option("--batch-size", probe_opt.batch_size, "Mini-batch size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  probe_cmd->add_option("--min-support", probe_opt.min_support,
                        "Drop breakdown keys with fewer gold items")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  probe_cmd->add_option("--optimizer", probe_opt.optimizer, "adam or sgd")
      ->check(CLI::IsMember({"adam", "sgd"}))
      ->capture_default_str();
  probe_cmd->add_option("--ftd-score", probe_opt.ftd_score,
                        "Externally obtained fine-tuned score, for the frz,ftd reduction")
      ->check(CLI::Range(0.0, 100.0));
  probe_cmd->add_option("--out", probe_opt.output, "JSON report (default stdout)");

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "Score predicted trees against gold");
  eval_cmd->add_option("--formalism", eval_opt.formalism, "dependency or constituency")
      ->required()
      ->check(CLI::IsMember({"dependency", "constituency"}));
  eval_cmd->add_option("gold", eval_opt.gold, "Gold treebank")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("pred", eval_opt.pred, "Predicted treebank")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--min-support", eval_opt.min_support,
                       "Drop breakdown keys with fewer gold items")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eval_cmd->add_option("--out", eval_opt.output, "JSON report (default stdout)");

  SynthOptions synth_opt;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Write a synthetic treebank with label-carrying and noise embeddings");
  synth_cmd->add_option("--encoding", synth_opt.encoding, "Encoding the frz vectors carry")
      ->check(CLI::IsMember(kEncodings))
      ->capture_default_str();
  synth_cmd->add_option("--sentences", synth_opt.sentences, "Total sentences")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--test-fraction", synth_opt.test_fraction, "Share held out for test")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth_cmd->add_option("--min-length", synth_opt.min_length, "Shortest sentence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--max-length", synth_opt.max_length, "Longest sentence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--sigma", synth_opt.sigma, "Noise added to the one-hot vectors")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth_cmd->add_option("--trees", synth_opt.trees,
                        "Dependency tree shape: local (short arcs) or uniform")
      ->check(CLI::IsMember({"local", "uniform"}))
      ->capture_default_str();
  synth_cmd->add_option("--relations", synth_opt.relations,
                        "Number of dependency relations to draw from")
      ->check(CLI::Range(1, kSynthRelations))
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_opt.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--out", synth_opt.output_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name() == "--help" ? "" : "", CLI::AppFormatMode::Normal);
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      out << sub->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, error;
    const int code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode_cmd) return cmd_encode(enc_opt, out);
    if (*decode_cmd) return cmd_decode(dec_opt, out);
    if (*probe_cmd) return cmd_probe(probe_opt, out);
    if (*eval_cmd) return cmd_eval(eval_opt, out);
    if (*synth_cmd) {
      if (synth_opt.min_length > synth_opt.max_length)
        throw CLI::ValidationError("--min-length", "exceeds --max-length");
      return cmd_synth(synth_opt, out);
    }
  } catch (const CLI::Error& e) {
    err << "synprobe: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "synprobe: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace synprobe
