// synprobe: seeded generators for random trees and synthetic embeddings,
// used by the tests, the acceptance suite and `synprobe synth`.

#ifndef SYNPROBE_SYNTHETIC_H_
#define SYNPROBE_SYNTHETIC_H_

#include <string>
#include <vector>

#include "synprobe/embeddings.h"
#include "synprobe/labels.h"
#include "synprobe/random.h"
#include "synprobe/trees.h"

namespace synprobe {

// Size of the relation inventory non-root tokens draw from (at most 8).
inline constexpr int kSynthRelations = 8;

// Random recursive tree: a random root, then each further token (in random
// order) attaches to a uniformly chosen token already in the tree. Every
// single-rooted tree has non-zero probability.
DepTree random_dep_tree(int n, Rng& rng, int relations = kSynthRelations);

// Random tree favouring short arcs: tokens join in random order, each picking
// a head among the tokens already placed with weight 2^-distance.
DepTree local_dep_tree(int n, Rng& rng, int relations = kSynthRelations);

// Random projective tree: each span picks a head, and the words on either
// side are cut into contiguous dependent subtrees.
DepTree random_projective_tree(int n, Rng& rng, int relations = kSynthRelations);

// Random constituent tree over n words with occasional unary chains.
ConstTree random_const_tree(int n, Rng& rng);

// Per-word vectors: one-hot of the atom's index in the sorted `atoms` plus N(0, sigma)
// noise on every component. Atoms missing from `atoms` get no hot component.
EmbeddingTable one_hot_embeddings(const std::vector<LabelSequence>& labels,
                                  const std::vector<std::string>& atoms,
                                  double sigma, Rng& rng,
                                  const std::vector<std::string>& ids = {});

// Pure N(0, 1) vectors of the given dimension.
EmbeddingTable noise_embeddings(const std::vector<int>& lengths, int dim, Rng& rng,
                                const std::vector<std::string>& ids = {});

}  // namespace synprobe

#endif  // SYNPROBE_SYNTHETIC_H_
