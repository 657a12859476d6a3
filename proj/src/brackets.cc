#include <optional>

#include "synprobe/treebank_io.h"

namespace synprobe {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// A partially built bracket: its label, child trees and bare atoms.
struct Open {
  std::optional<std::string> label;
  int column = 0;
  std::vector<ConstNode> children;
  std::optional<std::string> atom;
  bool mixed = false;  // atoms and subtrees together, or several atoms
};

ConstNode close_node(Open& open, int line, bool top) {
  if (!open.label && open.children.empty() && !open.atom)
    throw ParseError("empty node", line, open.column);
  if (open.mixed)
    throw ParseError("node mixes words and subtrees", line, open.column);
  if (open.atom) {
    if (!open.label)
      throw ParseError("word '" + *open.atom + "' has no PoS", line,
                       open.column);
    return ConstNode::leaf(std::move(*open.label), std::move(*open.atom));
  }
  if (!open.label) {
    if (top && open.children.size() == 1 && !open.children[0].is_leaf())
      return std::move(open.children[0]);
    throw ParseError("node without label", line, open.column);
  }
  if (open.children.empty())
    throw ParseError("empty node '" + *open.label + "'", line, open.column);
  if (open.label->find('+') != std::string::npos)
    throw ParseError("nonterminal '" + *open.label +
                         "' contains the reserved '+' character",
                     line, open.column);
  return ConstNode::internal(std::move(*open.label), std::move(open.children));
}

}  // namespace

ConstTree parse_bracketed_tree(std::string_view line, int line_number) {
  if (std::size_t bad = find_invalid_utf8(line); bad != std::string_view::npos)
    throw ParseError("invalid UTF-8", line_number, static_cast<int>(bad) + 1);
  std::vector<Open> stack;
  std::optional<ConstNode> result;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int column = static_cast<int>(i) + 1;
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (result)
      throw ParseError("trailing text after tree", line_number, column);
    if (c == '(') {
      stack.push_back(Open{});
      stack.back().column = column;
      ++i;
      continue;
    }
    if (c == ')') {
      if (stack.empty())
        throw ParseError("unbalanced ')'", line_number, column);
      const bool top = stack.size() == 1;
      ConstNode node = close_node(stack.back(), line_number, top);
      stack.pop_back();
      if (top) {
        // A bare pre-terminal gets a placeholder phrasal root.
        if (node.is_leaf()) node = ConstNode::internal("X", {std::move(node)});
        result = std::move(node);
      } else {
        Open& parent = stack.back();
        if (parent.atom) parent.mixed = true;
        parent.children.push_back(std::move(node));
      }
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && !is_space(line[end]) && line[end] != '(' &&
           line[end] != ')')
      ++end;
    std::string atom(line.substr(i, end - i));
    if (stack.empty())
      throw ParseError("text outside brackets", line_number, column);
    Open& open = stack.back();
    if (!open.label && open.children.empty() && !open.atom)
      open.label = std::move(atom);
    else if (open.atom || !open.children.empty())
      open.mixed = true;
    else
      open.atom = std::move(atom);
    i = end;
  }
  if (!stack.empty())
    throw ParseError("unbalanced '(' opened here", line_number,
                     stack.back().column);
  if (!result) throw ParseError("no tree on line", line_number);
  ConstTree tree;
  tree.root = std::move(*result);
  return tree;
}

ReadResult<ConstTree> read_brackets(std::string_view text, OnError policy) {
  ReadResult<ConstTree> result;
  int line_number = 0;
  int ordinal = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    ++ordinal;
    try {
      ConstTree tree = parse_bracketed_tree(line, line_number);
      tree.id = std::to_string(ordinal);
      result.trees.push_back(std::move(tree));
    } catch (const ParseError& e) {
      if (policy == OnError::kAbort) throw;
      result.errors.push_back(e);
    }
  }
  return result;
}

std::string to_bracketed(const ConstNode& node) {
  // Iterative so that very deep trees cannot exhaust the stack.
  std::string out;
  struct Frame {
    const ConstNode* node;
    std::size_t next;
  };
  std::vector<Frame> stack{{&node, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const ConstNode& cur = *top.node;
    if (cur.is_leaf()) {
      out += "(" + cur.label + " " + cur.form + ")";
      stack.pop_back();
      continue;
    }
    if (top.next == 0) out += "(" + cur.label;
    if (top.next == cur.children.size()) {
      out += ")";
      stack.pop_back();
      continue;
    }
    out += ' ';
    const ConstNode* child = &cur.children[top.next++];
    stack.push_back({child, 0});
  }
  return out;
}

std::string write_brackets(const std::vector<ConstTree>& trees) {
  std::string out;
  for (const ConstTree& tree : trees) {
    out += to_bracketed(tree.root);
    out += '\n';
  }
  return out;
}

}  // namespace synprobe
