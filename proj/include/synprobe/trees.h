// synprobe: tree types shared by the codecs, metrics and probes.

#ifndef SYNPROBE_TREES_H_
#define SYNPROBE_TREES_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synprobe {

// One syntactic word of a dependency tree. `head` is 1-based, 0 = root.
struct Token {
  int index = 0;
  std::string form;
  std::string upos = "_";
  int head = 0;
  std::string deprel;

  bool operator==(const Token&) const = default;
};

// Single-rooted labeled dependency tree. `id` is metadata and does not take
// part in equality.
struct DepTree {
  std::string id;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& at(int index) const { return tokens.at(index - 1); }
  std::vector<int> heads() const;
  std::vector<std::string> forms() const;

  bool operator==(const DepTree& other) const {
    return tokens == other.tokens;
  }
};

// Builds a tree over `forms` (or placeholder forms) from 1-based heads.
DepTree make_dep_tree(const std::vector<int>& heads,
                      const std::vector<std::string>& deprels = {},
                      const std::vector<std::string>& forms = {});

// Returns an empty string for a valid tree, otherwise what is wrong.
std::string dep_tree_problem(const DepTree& tree);
inline bool is_valid(const DepTree& tree) {
  return dep_tree_problem(tree).empty();
}

// Constituent node: leaves carry (pos, form), internal nodes a nonterminal.
struct ConstNode {
  std::string label;
  std::string form;
  std::vector<ConstNode> children;

  static ConstNode leaf(std::string pos, std::string word) {
    ConstNode node;
    node.label = std::move(pos);
    node.form = std::move(word);
    return node;
  }
  static ConstNode internal(std::string label, std::vector<ConstNode> kids) {
    ConstNode node;
    node.label = std::move(label);
    node.children = std::move(kids);
    return node;
  }

  bool is_leaf() const { return children.empty(); }
  bool operator==(const ConstNode&) const = default;
};

struct Word {
  std::string form;
  std::string pos;

  bool operator==(const Word&) const = default;
};

struct ConstTree {
  std::string id;
  ConstNode root;

  std::vector<Word> words() const;
  int size() const { return static_cast<int>(words().size()); }

  bool operator==(const ConstTree& other) const { return root == other.root; }
};

// Empty string when the tree is well formed (internal root, leaves only at
// the frontier, non-empty labels and forms).
std::string const_tree_problem(const ConstTree& tree);
inline bool is_valid(const ConstTree& tree) {
  return const_tree_problem(tree).empty();
}

// Error raised by readers; carries a 1-based line and column when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column = 0)
      : std::runtime_error(format(what, line, column)),
        detail_(what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string format(const std::string& what, int line, int column);

  std::string detail_;
  int line_;
  int column_;
};

// Thrown by operations whose inputs are not aligned (metrics, probes).
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace synprobe

#endif  // SYNPROBE_TREES_H_
