#include "synprobe/probe.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "synprobe/binary.h"
#include "synprobe/random.h"

namespace synprobe {
namespace {

constexpr std::string_view kProbeMagic = "PRB1";
constexpr std::uint32_t kProbeVersion = 1;

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;

// In-place softmax; returns log of the normaliser.
double softmax(std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  double sum = 0;
  for (double& v : z) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return top + std::log(sum);
}

struct Sample {
  int sentence;
  int word;
  int label;
};

}  // namespace

LabelVocab::LabelVocab(const std::vector<LabelSequence>& training) {
  std::map<std::string, long> counts;
  for (const auto& seq : training)
    for (const auto& atom : seq) ++counts[atom];
  long best = -1;
  for (const auto& [atom, count] : counts) {
    index_.emplace(atom, static_cast<int>(atoms_.size()));
    // Map order is lexicographic, so strict '>' keeps the smallest atom.
    if (count > best) {
      best = count;
      most_frequent_ = static_cast<int>(atoms_.size());
    }
    atoms_.push_back(atom);
  }
}

LabelVocab::LabelVocab(std::vector<std::string> atoms, int most_frequent)
    : atoms_(std::move(atoms)), most_frequent_(most_frequent) {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    index_.emplace(atoms_[i], static_cast<int>(i));
}

std::optional<int> LabelVocab::index(const std::string& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelVocab build_label_vocab(const std::vector<LabelSequence>& training) {
  return LabelVocab(training);
}

std::string_view optimizer_name(Optimizer optimizer) {
  return optimizer == Optimizer::kAdam ? "adam" : "sgd";
}

std::optional<Optimizer> parse_optimizer(std::string_view name) {
  if (name == "adam") return Optimizer::kAdam;
  if (name == "sgd") return Optimizer::kSgd;
  return std::nullopt;
}

std::vector<double> ProbeModel::logits(std::span<const float> x) const {
  const int classes = vocab.size();
  std::vector<double> z(bias);
  for (int c = 0; c < classes; ++c) {
    const double* w = &weights[static_cast<std::size_t>(c) * dim];
    double acc = 0;
    for (int k = 0; k < dim; ++k) acc += w[k] * x[k];
    z[c] += acc;
  }
  return z;
}

int ProbeModel::classify(std::span<const float> x) const {
  const auto z = logits(x);
  return static_cast<int>(std::max_element(z.begin(), z.end()) - z.begin());
}

ProbeModel initial_probe(int dim, LabelVocab vocab, const ProbeConfig& config) {
  ProbeModel model;
  model.dim = dim;
  model.vocab = std::move(vocab);
  model.weights.assign(static_cast<std::size_t>(model.vocab.size()) * dim, 0.0);
  model.bias.assign(model.vocab.size(), 0.0);
  model.config = config;
  return model;
}

void check_alignment(const EmbeddingTable& embeddings,
                     const std::vector<LabelSequence>& labels) {
  if (embeddings.sentences.size() != labels.size())
    throw AlignmentError("embedding table has " +
                         std::to_string(embeddings.sentences.size()) +
                         " sentences, labels have " + std::to_string(labels.size()));
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (embeddings.sentences[s].words != static_cast<int>(labels[s].size()))
      throw AlignmentError("sentence " + std::to_string(s) + ": " +
                           std::to_string(embeddings.sentences[s].words) +
                           " vectors for " + std::to_string(labels[s].size()) +
                           " words");
}

ProbeModel train_linear_probe(const EmbeddingTable& embeddings,
                              const std::vector<LabelSequence>& labels,
                              const ProbeConfig& config) {
  check_alignment(embeddings, labels);
  if (config.learning_rate <= 0 || config.epochs < 1 || config.batch_size < 1)
    throw std::invalid_argument("probe needs lr > 0, epochs >= 1, batch >= 1");
  ProbeModel model = initial_probe(embeddings.dim, LabelVocab(labels), config);
  const int dim = model.dim;
  const int classes = model.vocab.size();

  std::vector<Sample> samples;
  for (std::size_t s = 0; s < labels.size(); ++s)
    for (std::size_t w = 0; w < labels[s].size(); ++w)
      samples.push_back({static_cast<int>(s), static_cast<int>(w),
                         *model.vocab.index(labels[s][w])});
  if (samples.empty()) return model;

  const std::size_t nw = model.weights.size();
  std::vector<double> grad_w(nw), grad_b(classes);
  std::vector<double> m_w(nw), v_w(nw), m_b(classes), v_b(classes);
  long step = 0;
  auto update = [&](std::vector<double>& param, const std::vector<double>& grad,
                    std::vector<double>& m, std::vector<double>& v) {
    const double lr = config.learning_rate;
    if (config.optimizer == Optimizer::kSgd) {
      for (std::size_t i = 0; i < param.size(); ++i) param[i] -= lr * grad[i];
      return;
    }
    const double c1 = 1 - std::pow(kAdamBeta1, static_cast<double>(step));
    const double c2 = 1 - std::pow(kAdamBeta2, static_cast<double>(step));
    for (std::size_t i = 0; i < param.size(); ++i) {
      m[i] = kAdamBeta1 * m[i] + (1 - kAdamBeta1) * grad[i];
      v[i] = kAdamBeta2 * v[i] + (1 - kAdamBeta2) * grad[i] * grad[i];
      param[i] -= lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + kAdamEpsilon);
    }
  };

  Rng rng(config.seed);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(samples);
    for (std::size_t begin = 0; begin < samples.size();
         begin += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t end =
          std::min(samples.size(), begin + static_cast<std::size_t>(config.batch_size));
      std::fill(grad_w.begin(), grad_w.end(), 0.0);
      std::fill(grad_b.begin(), grad_b.end(), 0.0);
      for (std::size_t k = begin; k < end; ++k) {
        const Sample& sample = samples[k];
        const auto x = embeddings.sentences[sample.sentence].row(sample.word, dim);
        std::vector<double> p = model.logits(x);
        softmax(p);
        p[sample.label] -= 1.0;
        for (int c = 0; c < classes; ++c) {
          grad_b[c] += p[c];
          double* g = &grad_w[static_cast<std::size_t>(c) * dim];
          for (int d = 0; d < dim; ++d) g[d] += p[c] * x[d];
        }
      }
      const double scale = 1.0 / static_cast<double>(end - begin);
      for (double& g : grad_w) g *= scale;
      for (double& g : grad_b) g *= scale;
      ++step;
      update(model.weights, grad_w, m_w, v_w);
      update(model.bias, grad_b, m_b, v_b);
    }
  }
  return model;
}

double cross_entropy(const ProbeModel& model, const EmbeddingTable& embeddings,
                     const std::vector<LabelSequence>& labels) {
  check_alignment(embeddings, labels);
  double total = 0;
  long count = 0;
  for (std::size_t s = 0; s < labels.size(); ++s)
    for (std::size_t w = 0; w < labels[s].size(); ++w) {
      auto label = model.vocab.index(labels[s][w]);
      if (!label) continue;
      auto z = model.logits(embeddings.sentences[s].row(static_cast<int>(w), model.dim));
      const double zy = z[*label];
      total += softmax(z) - zy;
      ++count;
    }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

std::vector<LabelSequence> predict(const ProbeModel& model,
                                   const EmbeddingTable& embeddings) {
  if (embeddings.dim != model.dim)
    throw AlignmentError("probe expects dimension " + std::to_string(model.dim) +
                         ", embeddings have " + std::to_string(embeddings.dim));
  std::vector<LabelSequence> out;
  out.reserve(embeddings.sentences.size());
  for (const EmbeddedSentence& sentence : embeddings.sentences) {
    LabelSequence seq;
    seq.reserve(sentence.words);
    for (int w = 0; w < sentence.words; ++w)
      seq.push_back(model.vocab.atom(model.classify(sentence.row(w, model.dim))));
    out.push_back(std::move(seq));
  }
  return out;
}

double tag_accuracy(const std::vector<LabelSequence>& gold,
                    const std::vector<LabelSequence>& pred) {
  if (gold.size() != pred.size())
    throw AlignmentError("tag accuracy over unaligned sentence lists");
  long correct = 0, total = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw AlignmentError("sentence " + std::to_string(s) + ": lengths differ");
    for (std::size_t w = 0; w < gold[s].size(); ++w) {
      ++total;
      correct += gold[s][w] == pred[s][w];
    }
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

std::string save_probe(const ProbeModel& model) {
  std::string out(kProbeMagic);
  binary::put_u32(out, kProbeVersion);
  binary::put_u32(out, static_cast<std::uint32_t>(model.dim));
  binary::put_u32(out, static_cast<std::uint32_t>(model.vocab.size()));
  for (const std::string& atom : model.vocab.atoms()) {
    binary::put_u32(out, static_cast<std::uint32_t>(atom.size()));
    out += atom;
  }
  binary::put_u32(out, static_cast<std::uint32_t>(model.vocab.most_frequent()));
  binary::put_u64(out, std::bit_cast<std::uint64_t>(model.config.learning_rate));
  binary::put_u32(out, static_cast<std::uint32_t>(model.config.epochs));
  binary::put_u32(out, static_cast<std::uint32_t>(model.config.batch_size));
  binary::put_u64(out, model.config.seed);
  binary::put_u32(out, model.config.optimizer == Optimizer::kAdam ? 0 : 1);
  for (double w : model.weights) binary::put_f32(out, static_cast<float>(w));
  for (double b : model.bias) binary::put_f32(out, static_cast<float>(b));
  return out;
}

ProbeModel load_probe(std::string_view bytes) {
  binary::Reader in(bytes);
  auto fail = [&](const std::string& what) -> ProbeModel {
    throw EmbeddingFormatError("probe file: " + what, in.offset());
  };
  auto magic = in.get_bytes(kProbeMagic.size());
  if (!magic || *magic != kProbeMagic) return fail("missing PRB1 magic");
  auto version = in.get_u32();
  if (!version || *version != kProbeVersion) return fail("unsupported version");
  auto dim = in.get_u32();
  auto classes = in.get_u32();
  if (!dim || !classes) return fail("truncated header");
  std::vector<std::string> atoms;
  for (std::uint32_t c = 0; c < *classes; ++c) {
    auto len = in.get_u32();
    if (!len) return fail("truncated vocabulary");
    auto text = in.get_bytes(*len);
    if (!text) return fail("truncated vocabulary");
    atoms.emplace_back(*text);
  }
  auto most = in.get_u32();
  auto lr = in.get_u64();
  auto epochs = in.get_u32();
  auto batch = in.get_u32();
  auto seed = in.get_u64();
  auto optimizer = in.get_u32();
  if (!most || !lr || !epochs || !batch || !seed || !optimizer)
    return fail("truncated configuration");
  if (*most >= *classes && *classes > 0) return fail("most frequent class out of range");
  ProbeConfig config;
  config.learning_rate = std::bit_cast<double>(*lr);
  config.epochs = static_cast<int>(*epochs);
  config.batch_size = static_cast<int>(*batch);
  config.seed = *seed;
  config.optimizer = *optimizer == 0 ? Optimizer::kAdam : Optimizer::kSgd;
  ProbeModel model = initial_probe(static_cast<int>(*dim),
                                   LabelVocab(std::move(atoms), static_cast<int>(*most)),
                                   config);
  for (double& w : model.weights) {
    auto v = in.get_f32();
    if (!v) return fail("truncated weights");
    w = *v;
  }
  for (double& b : model.bias) {
    auto v = in.get_f32();
    if (!v) return fail("truncated bias");
    b = *v;
  }
  if (!in.done()) return fail("trailing bytes");
  return model;
}

}  // namespace synprobe
