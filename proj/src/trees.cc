#include "synprobe/trees.h"

#include <functional>

namespace synprobe {

std::vector<int> DepTree::heads() const {
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.head);
  return out;
}

std::vector<std::string> DepTree::forms() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.form);
  return out;
}

DepTree make_dep_tree(const std::vector<int>& heads,
                      const std::vector<std::string>& deprels,
                      const std::vector<std::string>& forms) {
  DepTree tree;
  tree.tokens.reserve(heads.size());
  for (std::size_t i = 0; i < heads.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i) + 1;
    t.form = i < forms.size() ? forms[i] : "w" + std::to_string(i + 1);
    t.head = heads[i];
    if (i < deprels.size())
      t.deprel = deprels[i];
    else
      t.deprel = heads[i] == 0 ? "root" : "dep";
    tree.tokens.push_back(std::move(t));
  }
  return tree;
}

std::string dep_tree_problem(const DepTree& tree) {
  const int n = tree.size();
  if (n == 0) return "empty tree";
  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    const Token& t = tree.at(i);
    if (t.index != i) return "token " + std::to_string(i) + " has index " +
                             std::to_string(t.index);
    if (t.form.empty()) return "token " + std::to_string(i) + " has no form";
    if (t.head < 0 || t.head > n)
      return "token " + std::to_string(i) + " head out of range";
    if (t.head == i) return "token " + std::to_string(i) + " is its own head";
    if (t.head == 0) ++roots;
  }
  if (roots != 1) return std::to_string(roots) + " roots";
  // Every token must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0 && steps <= n) {
      cur = tree.at(cur).head;
      ++steps;
    }
    if (cur != 0) return "cycle through token " + std::to_string(i);
  }
  return {};
}

std::vector<Word> ConstTree::words() const {
  std::vector<Word> out;
  std::function<void(const ConstNode&)> walk = [&](const ConstNode& node) {
    if (node.is_leaf()) {
      out.push_back({node.form, node.label});
      return;
    }
    for (const ConstNode& child : node.children) walk(child);
  };
  walk(root);
  return out;
}

std::string const_tree_problem(const ConstTree& tree) {
  if (tree.root.is_leaf()) return "root is a leaf";
  std::string problem;
  std::function<void(const ConstNode&)> walk = [&](const ConstNode& node) {
    if (!problem.empty()) return;
    if (node.label.empty()) {
      problem = "node without label";
      return;
    }
    if (node.is_leaf()) {
      if (node.form.empty()) problem = "leaf without form";
      return;
    }
    if (!node.form.empty()) {
      problem = "internal node " + node.label + " carries a form";
      return;
    }
    for (const ConstNode& child : node.children) walk(child);
  };
  walk(tree.root);
  return problem;
}

std::string ParseError::format(const std::string& what, int line, int column) {
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  return out + ": " + what;
}

}  // namespace synprobe
