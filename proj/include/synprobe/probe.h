// synprobe: linear probes from word vectors to label atoms.
//
// A probe is one affine map (weights + bias) followed by softmax, trained
// with cross-entropy on mini-batches. Nothing but this layer is learned, so
// its accuracy measures what is linearly decodable from the vectors.

#ifndef SYNPROBE_PROBE_H_
#define SYNPROBE_PROBE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synprobe/embeddings.h"
#include "synprobe/labels.h"

namespace synprobe {

class LabelVocab {
 public:
  LabelVocab() = default;
  // Classes in lexicographic order; `most_frequent` is the modal atom with ties
  // broken lexicographically.
  explicit LabelVocab(const std::vector<LabelSequence>& training);
  LabelVocab(std::vector<std::string> atoms, int most_frequent);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::string& atom(int index) const { return atoms_.at(index); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<int> index(const std::string& atom) const;
  int most_frequent() const { return most_frequent_; }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, int> index_;
  int most_frequent_ = 0;
};

LabelVocab build_label_vocab(const std::vector<LabelSequence>& training);

enum class Optimizer { kAdam, kSgd };

std::string_view optimizer_name(Optimizer optimizer);
std::optional<Optimizer> parse_optimizer(std::string_view name);

struct ProbeConfig {
  double learning_rate = 2e-3;
  int epochs = 20;
  int batch_size = 128;
  std::uint64_t seed = 1;
  Optimizer optimizer = Optimizer::kAdam;
};

struct ProbeModel {
  int dim = 0;
  LabelVocab vocab;
  std::vector<double> weights;  // vocab.size() x dim, row-major
  std::vector<double> bias;     // vocab.size()
  ProbeConfig config;

  // Class scores for one word vector.
  std::vector<double> logits(std::span<const float> x) const;
  int classify(std::span<const float> x) const;  // lowest index wins ties
};

// Zero-initialised model, before any training step.
ProbeModel initial_probe(int dim, LabelVocab vocab, const ProbeConfig& config);

// Throws AlignmentError when sentence or word counts differ.
void check_alignment(const EmbeddingTable& embeddings,
                     const std::vector<LabelSequence>& labels);

// Tokens are shuffled every epoch by a generator seeded from config.seed;
// the model after the last epoch is returned.
ProbeModel train_linear_probe(const EmbeddingTable& embeddings,
                              const std::vector<LabelSequence>& labels,
                              const ProbeConfig& config);

// Mean cross-entropy (nats) of the model over labelled tokens. Tokens whose
// atom is outside the vocabulary are skipped.
double cross_entropy(const ProbeModel& model, const EmbeddingTable& embeddings,
                     const std::vector<LabelSequence>& labels);

// Throws AlignmentError on a dimension mismatch.
std::vector<LabelSequence> predict(const ProbeModel& model,
                                   const EmbeddingTable& embeddings);

// Fraction (percent) of tokens whose predicted atom equals the gold one.
double tag_accuracy(const std::vector<LabelSequence>& gold,
                    const std::vector<LabelSequence>& pred);

// "PRB1" | u32 version | u32 dim | u32 classes | per class: u32 len + bytes |
// u32 most_frequent | u64 bits of the f64 learning rate | u32 epochs | u32 batch | u64 seed |
// u32 optimizer | classes*dim f32 weights | classes f32 bias
std::string save_probe(const ProbeModel& model);
ProbeModel load_probe(std::string_view bytes);

}  // namespace synprobe

#endif  // SYNPROBE_PROBE_H_
