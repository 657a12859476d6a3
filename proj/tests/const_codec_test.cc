#include <gtest/gtest.h>

#include <functional>

#include "synprobe/const_codec.h"
#include "synprobe/random.h"
#include "synprobe/synthetic.h"
#include "synprobe/treebank_io.h"

namespace synprobe {
namespace {

ConstTree tree_of(const std::string& text) { return parse_bracketed_tree(text); }

const char* kPaintingTree =
    "(S (NP (DT This) (NN painting)) (VP (VP (VBZ is) (ADJP (JJ great)))))";

std::vector<std::string> rendered(const ConstLabels& labels) {
  std::vector<std::string> out;
  for (const ConstLabel& l : labels) out.push_back(render_const_label(l));
  return out;
}

TEST(ConstCodecTest, PaintingLabels) {
  const ConstLabels labels = encode_levels(tree_of(kPaintingTree));
  ASSERT_EQ(labels.size(), 4u);
  EXPECT_EQ(labels[0], (ConstLabel{2, "NP", ""}));
  EXPECT_EQ(labels[1], (ConstLabel{-1, "S", ""}));
  EXPECT_EQ(labels[2], (ConstLabel{1, "VP+VP", ""}));
  EXPECT_EQ(labels[3], (ConstLabel{-1, "S", "ADJP"}));
  EXPECT_EQ(rendered(labels),
            (std::vector<std::string>{"2,NP,", "-1,S,", "1,VP+VP,", "-1,S,ADJP"}));
}

TEST(ConstCodecTest, PaintingDecodes) {
  const ConstTree tree = tree_of(kPaintingTree);
  EXPECT_EQ(decode_levels(encode_levels(tree), tree.words()), tree);
}

// The reader rejects '+', so collapsed trees are built by hand.
ConstTree collapsed(const std::string& text, const std::string& from, const std::string& to) {
  ConstTree tree = tree_of(text);
  std::function<void(ConstNode&)> rename = [&](ConstNode& node) {
    if (!node.is_leaf() && node.label == from) node.label = to;
    for (ConstNode& child : node.children) rename(child);
  };
  rename(tree.root);
  return tree;
}

TEST(ConstCodecTest, CollapseAndRestore) {
  const ConstTree ab = collapsed("(AB (C x))", "AB", "A+B");
  EXPECT_EQ(collapse_unaries(tree_of("(A (B (C x)))")), ab);
  EXPECT_EQ(restore_unaries(ab), tree_of("(A (B (C x)))"));
  const ConstTree flat = tree_of("(S (NP (D a) (N b)) (V c))");
  EXPECT_EQ(collapse_unaries(flat), flat);
  EXPECT_EQ(restore_unaries(flat), flat);
  EXPECT_EQ(collapse_unaries(tree_of("(S (A (B (X a) (Y b))) (Z c))")),
            collapsed("(S (AB (X a) (Y b)) (Z c))", "AB", "A+B"));
  EXPECT_EQ(collapse_unaries(tree_of("(S (A (B (X a))) (Z c))")),
            collapsed("(S (AB (X a)) (Z c))", "AB", "A+B"));
  EXPECT_EQ(collapse_unaries(tree_of("(S (A (X a)) (Z c))")), tree_of("(S (A (X a)) (Z c))"));
}

TEST(ConstCodecTest, SingleWord) {
  const std::vector<Word> words = {{"w", "P"}};
  EXPECT_EQ(decode_levels({ConstLabel{1, "S", ""}}, words), tree_of("(S (P w))"));
  EXPECT_EQ(encode_levels(tree_of("(S (P w))")), (ConstLabels{{1, "S", ""}}));
  EXPECT_EQ(encode_levels(tree_of("(S (A (P w)))")), (ConstLabels{{1, "S+A", ""}}));
  EXPECT_EQ(encode_levels(tree_of("(S (A (P w)) (B (C (Q v))))")),
            (ConstLabels{{1, "S", "A"}, {0, "S", "B+C"}}));
  EXPECT_EQ(decode_levels({ConstLabel{1, "S", "A+B"}}, words), tree_of("(S (A (B (P w))))"));
}

TEST(ConstCodecTest, RepairLevels) {
  EXPECT_EQ(repair_levels({2, 1, 3, 1}), (std::vector<int>{2, 1, 3, 1}));
  EXPECT_EQ(repair_levels({0, -2, 5}), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(repair_levels({7}), (std::vector<int>{1}));
}

TEST(ConstCodecTest, LabelText) {
  for (const ConstLabel& l : {ConstLabel{2, "NP", ""}, ConstLabel{-3, "S+VP", "ADJP+NP"},
                              ConstLabel{0, "X", "Y"}})
    EXPECT_EQ(parse_const_label(render_const_label(l)), l);
  EXPECT_EQ(render_const_label({-1, "S", "ADJP"}), "-1,S,ADJP");
  EXPECT_EQ(parse_const_label("+2,NP,"), (ConstLabel{2, "NP", ""}));
  EXPECT_THROW(parse_const_label("2,NP"), std::invalid_argument);
  EXPECT_THROW(parse_const_label("x,NP,"), std::invalid_argument);
  EXPECT_THROW(parse_const_label("1,,"), std::invalid_argument);
  EXPECT_THROW(parse_const_label("1"), std::invalid_argument);
}

TEST(ConstCodecTest, RandomTreesRoundTrip) {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const ConstTree tree = random_const_tree(rng.range(1, 15), rng);
    ASSERT_EQ(restore_unaries(collapse_unaries(tree)), tree);
    const ConstLabels labels = encode_levels(tree);
    ASSERT_EQ(static_cast<int>(labels.size()), tree.size());
    int level = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      level += labels[i].delta;
      ASSERT_GE(level, 1);
    }
    ASSERT_EQ(level, 1);
    ASSERT_EQ(decode_levels(labels, tree.words()), tree) << to_bracketed(tree.root);
  }
}

TEST(ConstCodecTest, FuzzedLabelsDecodeToTrees) {
  Rng rng(13);
  const std::vector<std::string> names = {"S", "NP", "VP", "A+B", "PP"};
  for (int k = 0; k < 1000; ++k) {
    const int n = rng.range(1, 12);
    ConstLabels labels;
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) {
      const int r = rng.range(0, 20);
      const int delta = r == 0 ? rng.range(-1000000, 1000000) : rng.range(-4, 4);
      labels.push_back({delta, names[rng.range(0, names.size() - 1)],
                        rng.uniform() < 0.2 ? names[rng.range(0, names.size() - 1)] : ""});
      words.push_back({"w" + std::to_string(i), "T"});
    }
    const ConstTree tree = decode_levels(labels, words);
    ASSERT_TRUE(is_valid(tree)) << const_tree_problem(tree);
    ASSERT_EQ(tree.words(), words);
  }
}

TEST(ConstCodecTest, RejectsLengthMismatch) {
  EXPECT_THROW(decode_levels({ConstLabel{1, "S", ""}}, {}), std::invalid_argument);
}

}  // namespace
}  // namespace synprobe
