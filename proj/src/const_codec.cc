#include "synprobe/const_codec.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>

namespace synprobe {
namespace {

constexpr std::string_view kFallbackLabel = "X";

ConstNode collapse(const ConstNode& node) {
  if (node.is_leaf()) return node;
  std::string label = node.label;
  const ConstNode* cur = &node;
  while (cur->children.size() == 1 && !cur->children[0].is_leaf()) {
    cur = &cur->children[0];
    label += kChainJoiner;
    label += cur->label;
  }
  std::vector<ConstNode> children;
  children.reserve(cur->children.size());
  for (const ConstNode& child : cur->children) children.push_back(collapse(child));
  return ConstNode::internal(std::move(label), std::move(children));
}

std::vector<std::string> split_chain(std::string_view label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t end = label.find(kChainJoiner, start);
    if (end == std::string_view::npos) end = label.size();
    if (end > start) parts.emplace_back(label.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

ConstNode restore(const ConstNode& node) {
  if (node.is_leaf()) return node;
  std::vector<ConstNode> children;
  children.reserve(node.children.size());
  for (const ConstNode& child : node.children) children.push_back(restore(child));
  std::vector<std::string> parts = split_chain(node.label);
  if (parts.empty()) parts.push_back(std::string(kFallbackLabel));
  ConstNode out = ConstNode::internal(parts.back(), std::move(children));
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    out = ConstNode::internal(*it, {std::move(out)});
  return out;
}

struct LeafPath {
  std::vector<const ConstNode*> spine;  // phrasal ancestors, root first
  const ConstNode* unary = nullptr;     // node dominating only this leaf
};

void collect_paths(const ConstNode& node, std::vector<const ConstNode*>& spine,
                   std::vector<LeafPath>& out) {
  for (const ConstNode& child : node.children) {
    if (child.is_leaf()) {
      LeafPath path;
      path.spine = spine;
      // A non-root parent with this leaf as its only child is the unary.
      if (node.children.size() == 1 && spine.size() > 1) {
        path.unary = spine.back();
        path.spine.pop_back();
      }
      out.push_back(std::move(path));
    } else {
      spine.push_back(&child);
      collect_paths(child, spine, out);
      spine.pop_back();
    }
  }
}

// Tree under construction by decode_levels.
struct Draft {
  std::string label;
  bool labeled = false;
  std::vector<int> children;  // indices into the arena
  bool leaf = false;
  Word word;
};

std::vector<ConstNode> materialize(const std::vector<Draft>& arena, int index) {
  const Draft& d = arena[index];
  if (d.leaf) return {ConstNode::leaf(d.word.pos, d.word.form)};
  std::vector<ConstNode> children;
  for (int child : d.children) {
    auto expanded = materialize(arena, child);
    std::move(expanded.begin(), expanded.end(), std::back_inserter(children));
  }
  if (!d.labeled) return children;  // splice unlabeled nodes
  return {ConstNode::internal(d.label, std::move(children))};
}

}  // namespace

std::string render_const_label(const ConstLabel& label) {
  return std::to_string(label.delta) + "," + label.common + "," + label.unary;
}

ConstLabel parse_const_label(std::string_view text) {
  const std::size_t first = text.find(',');
  const std::size_t last = text.rfind(',');
  if (first == std::string_view::npos || first == last)
    throw std::invalid_argument("constituent label '" + std::string(text) +
                                "' needs three comma-separated fields");
  ConstLabel label;
  std::string_view delta = text.substr(0, first);
  if (!delta.empty() && delta.front() == '+') delta.remove_prefix(1);
  auto [ptr, ec] =
      std::from_chars(delta.data(), delta.data() + delta.size(), label.delta);
  if (delta.empty() || ec != std::errc() || ptr != delta.data() + delta.size())
    throw std::invalid_argument("constituent label '" + std::string(text) +
                                "' has a non-integer level");
  label.common = std::string(text.substr(first + 1, last - first - 1));
  label.unary = std::string(text.substr(last + 1));
  if (label.common.empty())
    throw std::invalid_argument("constituent label '" + std::string(text) +
                                "' has no common nonterminal");
  return label;
}

ConstTree collapse_unaries(const ConstTree& tree) {
  ConstTree out;
  out.id = tree.id;
  out.root = collapse(tree.root);
  return out;
}

ConstTree restore_unaries(const ConstTree& tree) {
  ConstTree out;
  out.id = tree.id;
  out.root = restore(tree.root);
  return out;
}

ConstLabels encode_levels(const ConstTree& tree) {
  const ConstTree collapsed = collapse_unaries(tree);
  std::vector<const ConstNode*> spine{&collapsed.root};
  std::vector<LeafPath> paths;
  collect_paths(collapsed.root, spine, paths);

  ConstLabels labels;
  labels.reserve(paths.size());
  int previous = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    int level = 1;
    const ConstNode* lowest = &collapsed.root;
    if (i + 1 < paths.size()) {
      const auto& a = paths[i].spine;
      const auto& b = paths[i + 1].spine;
      const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
      level = static_cast<int>(ia - a.begin());
      lowest = a[level - 1];
    }
    ConstLabel label;
    label.delta = level - previous;
    label.common = lowest->label;
    if (paths[i].unary) label.unary = paths[i].unary->label;
    labels.push_back(std::move(label));
    previous = level;
  }
  return labels;
}

std::vector<int> repair_levels(std::vector<int> absolute) {
  for (int& level : absolute) level = std::max(level, 1);
  if (!absolute.empty()) absolute.back() = 1;
  return absolute;
}

ConstTree decode_levels(const ConstLabels& labels,
                        const std::vector<Word>& words) {
  if (labels.size() != words.size() || words.empty())
    throw std::invalid_argument("decode_levels needs one label per word");
  std::vector<int> absolute;
  absolute.reserve(labels.size());
  long sum = 0;
  for (const ConstLabel& label : labels) {
    sum += label.delta;
    // Clamp before narrowing; anything above the word count is unreachable.
    const long cap = static_cast<long>(labels.size()) + 1;
    absolute.push_back(static_cast<int>(std::clamp(sum, -cap, cap)));
  }
  absolute = repair_levels(std::move(absolute));

  std::vector<Draft> arena;
  std::vector<int> spine;
  auto add = [&](Draft d) {
    arena.push_back(std::move(d));
    return static_cast<int>(arena.size()) - 1;
  };
  int previous = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int level = absolute[i];
    const std::size_t needed = static_cast<std::size_t>(std::max(previous, level));
    while (spine.size() < needed) {
      const int node = add(Draft{});
      if (!spine.empty()) arena[spine.back()].children.push_back(node);
      spine.push_back(node);
    }
    Draft leaf;
    leaf.leaf = true;
    leaf.word = words[i];
    int attach = add(std::move(leaf));
    if (!labels[i].unary.empty()) {
      Draft unary;
      unary.label = labels[i].unary;
      unary.labeled = true;
      unary.children.push_back(attach);
      attach = add(std::move(unary));
    }
    arena[spine.back()].children.push_back(attach);
    Draft& shared = arena[spine[level - 1]];
    if (!shared.labeled && !labels[i].common.empty()) {
      shared.label = labels[i].common;
      shared.labeled = true;
    }
    spine.resize(level);
    previous = level;
  }
  Draft& root = arena[spine.front()];
  if (!root.labeled) {
    root.label = std::string(kFallbackLabel);
    root.labeled = true;
  }
  ConstTree tree;
  tree.root = std::move(materialize(arena, spine.front()).front());
  return restore_unaries(tree);
}

}  // namespace synprobe
