#include "synprobe/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace synprobe {
namespace {

const std::vector<std::string> kDeprels = {"nsubj", "obj", "det", "amod",
                                           "advmod", "case", "nmod", "punct"};
const std::vector<std::string> kPhrases = {"S", "NP", "VP", "PP", "ADJP", "ADVP", "SBAR"};
const std::vector<std::string> kTags = {"DT", "NN", "VBZ", "JJ", "IN", "RB", "PRP"};

const std::string& pick(const std::vector<std::string>& items, Rng& rng) {
  return items[rng.range(0, static_cast<int>(items.size()) - 1)];
}

DepTree with_random_labels(const std::vector<int>& heads, Rng& rng, int relations) {
  relations = std::clamp(relations, 1, static_cast<int>(kDeprels.size()));
  std::vector<std::string> rels;
  for (int h : heads)
    rels.push_back(h == 0 ? "root" : kDeprels[rng.range(0, relations - 1)]);
  return make_dep_tree(heads, rels);
}

// Fills heads for tokens [lo, hi] (1-based) as one projective subtree whose
// root attaches to `parent`.
void projective_span(int lo, int hi, int parent, std::vector<int>& heads, Rng& rng) {
  const int root = rng.range(lo, hi);
  heads[root - 1] = parent;
  auto cut = [&](int from, int to) {
    int start = from;
    while (start <= to) {
      const int end = rng.range(start, to);
      projective_span(start, end, root, heads, rng);
      start = end + 1;
    }
  };
  cut(lo, root - 1);
  cut(root + 1, hi);
}

ConstNode random_const_span(int lo, int hi, Rng& rng, int& word) {
  auto maybe_unary = [&](ConstNode node) {
    while (rng.uniform() < 0.15)
      node = ConstNode::internal(pick(kPhrases, rng), {std::move(node)});
    return node;
  };
  if (lo == hi) {
    ConstNode leaf = ConstNode::leaf(pick(kTags, rng), "w" + std::to_string(++word));
    if (rng.uniform() < 0.3) leaf = ConstNode::internal(pick(kPhrases, rng), {std::move(leaf)});
    return leaf;
  }
  const int len = hi - lo + 1;
  const int parts = rng.range(2, std::min(len, 4));
  std::vector<int> cuts;  // parts - 1 distinct cut points in (lo, hi]
  std::vector<int> candidates(len - 1);
  std::iota(candidates.begin(), candidates.end(), lo + 1);
  rng.shuffle(candidates);
  cuts.assign(candidates.begin(), candidates.begin() + (parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<ConstNode> children;
  int start = lo;
  for (int c : cuts) {
    children.push_back(random_const_span(start, c - 1, rng, word));
    start = c;
  }
  children.push_back(random_const_span(start, hi, rng, word));
  return maybe_unary(ConstNode::internal(pick(kPhrases, rng), std::move(children)));
}

EmbeddedSentence sentence_record(int words, int dim,
                                 const std::vector<std::string>& ids, std::size_t s) {
  EmbeddedSentence out;
  out.words = words;
  out.values.assign(static_cast<std::size_t>(words) * dim, 0.0f);
  if (s < ids.size()) out.id_hash = sentence_id_hash(ids[s]);
  return out;
}

}  // namespace

DepTree random_dep_tree(int n, Rng& rng, int relations) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);
  std::vector<int> heads(n, 0);
  for (int k = 1; k < n; ++k) heads[order[k] - 1] = order[rng.range(0, k - 1)];
  return with_random_labels(heads, rng, relations);
}

DepTree local_dep_tree(int n, Rng& rng, int relations) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);
  std::vector<int> heads(n, 0);
  for (int k = 1; k < n; ++k) {
    double total = 0;
    std::vector<double> weight(k);
    for (int j = 0; j < k; ++j)
      total += weight[j] = std::ldexp(1.0, -std::abs(order[j] - order[k]));
    double pick = rng.uniform() * total;
    int j = 0;
    while (j + 1 < k && (pick -= weight[j]) >= 0) ++j;
    heads[order[k] - 1] = order[j];
  }
  return with_random_labels(heads, rng, relations);
}

DepTree random_projective_tree(int n, Rng& rng, int relations) {
  std::vector<int> heads(n, 0);
  projective_span(1, n, 0, heads, rng);
  return with_random_labels(heads, rng, relations);
}

ConstTree random_const_tree(int n, Rng& rng) {
  int word = 0;
  ConstNode root = random_const_span(1, n, rng, word);
  if (root.is_leaf()) root = ConstNode::internal(pick(kPhrases, rng), {std::move(root)});
  ConstTree tree;
  tree.root = std::move(root);
  return tree;
}

EmbeddingTable one_hot_embeddings(const std::vector<LabelSequence>& labels,
                                  const std::vector<std::string>& atoms,
                                  double sigma, Rng& rng,
                                  const std::vector<std::string>& ids) {
  EmbeddingTable table;
  table.dim = static_cast<int>(atoms.size());
  for (std::size_t s = 0; s < labels.size(); ++s) {
    EmbeddedSentence sentence =
        sentence_record(static_cast<int>(labels[s].size()), table.dim, ids, s);
    for (std::size_t w = 0; w < labels[s].size(); ++w) {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), labels[s][w]);
      const bool found = it != atoms.end() && *it == labels[s][w];
      for (int d = 0; d < table.dim; ++d) {
        const bool hot = found && d == it - atoms.begin();
        sentence.values[w * table.dim + d] =
            static_cast<float>((hot ? 1.0 : 0.0) + sigma * rng.normal());
      }
    }
    table.sentences.push_back(std::move(sentence));
  }
  return table;
}

EmbeddingTable noise_embeddings(const std::vector<int>& lengths, int dim, Rng& rng,
                                const std::vector<std::string>& ids) {
  EmbeddingTable table;
  table.dim = dim;
  for (std::size_t s = 0; s < lengths.size(); ++s) {
    EmbeddedSentence sentence = sentence_record(lengths[s], dim, ids, s);
    for (float& v : sentence.values) v = static_cast<float>(rng.normal());
    table.sentences.push_back(std::move(sentence));
  }
  return table;
}

}  // namespace synprobe
