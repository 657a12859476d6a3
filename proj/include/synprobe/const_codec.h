// synprobe: constituent trees as (n, c, u) labels.
//
// For words w_i and w_{i+1}, n_i counts the phrasal nodes they share and c_i
// is the label of the lowest one; the label stores n_i - n_{i-1}. u_i names
// the unary chain sitting directly above w_i. The last word uses n = 1 and
// the root label. Unary chains of phrasal nodes are collapsed into one node
// labeled "A+B" first, so '+' is reserved in nonterminals.

#ifndef SYNPROBE_CONST_CODEC_H_
#define SYNPROBE_CONST_CODEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synprobe/trees.h"

namespace synprobe {

inline constexpr char kChainJoiner = '+';

struct ConstLabel {
  int delta = 0;
  std::string common;
  std::string unary;  // empty = no leaf unary chain

  bool operator==(const ConstLabel&) const = default;
};

using ConstLabels = std::vector<ConstLabel>;

// "delta,common,unary"; the unary field is empty when absent ("2,NP,").
std::string render_const_label(const ConstLabel& label);
// Throws std::invalid_argument when the delta is not an integer or a field is
// missing.
ConstLabel parse_const_label(std::string_view text);

ConstTree collapse_unaries(const ConstTree& tree);
ConstTree restore_unaries(const ConstTree& tree);

ConstLabels encode_levels(const ConstTree& tree);

// Absolute levels: every value clamped to >= 1 and the last forced to 1.
std::vector<int> repair_levels(std::vector<int> absolute);

// Total: any label sequence of the right length yields a well-formed tree
// over `words`. Phrasal nodes left without a label are spliced out.
ConstTree decode_levels(const ConstLabels& labels,
                        const std::vector<Word>& words);

}  // namespace synprobe

#endif  // SYNPROBE_CONST_CODEC_H_
