#include <gtest/gtest.h>

#include "synprobe/random.h"
#include "synprobe/synthetic.h"
#include "synprobe/treebank_io.h"
#include "test_support.h"

namespace synprobe {
namespace {

std::string row(int id, const std::string& form, int head, const std::string& rel) {
  return std::to_string(id) + "\t" + form + "\t_\tX\t_\t_\t" + std::to_string(head) + "\t" +
         rel + "\t_\t_\n";
}

const char* kPaintingConllu =
    "# sent_id = painting\n"
    "1\tThis\tthis\tDET\t_\t_\t2\tdet\t_\t_\n"
    "2\tpainting\tpainting\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
    "3\tis\tbe\tAUX\t_\t_\t4\tcop\t_\t_\n"
    "4\tgreat\tgreat\tADJ\t_\t_\t0\troot\t_\t_\n"
    "5\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n"
    "\n";

TEST(ConlluTest, ReadsMinimalSentence) {
  const auto trees = read_conllu("1\tHe\t_\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
                                 "2\truns\t_\tVERB\t_\t_\t0\troot\t_\t_\n")
                         .trees;
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0].heads(), (std::vector<int>{2, 0}));
  EXPECT_EQ(trees[0].at(1).form, "He");
  EXPECT_EQ(trees[0].at(1).upos, "PRON");
  EXPECT_EQ(trees[0].at(2).deprel, "root");
  EXPECT_EQ(trees[0].id, "1");
}

TEST(ConlluTest, ReadsPaintingSentence) {
  const auto trees = read_conllu(kPaintingConllu).trees;
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0].heads(), (std::vector<int>{2, 3, 4, 0, 3}));
  EXPECT_EQ(trees[0].id, "painting");
  EXPECT_TRUE(is_valid(trees[0]));
}

TEST(ConlluTest, SkipsMultiwordRangesAndEmptyNodes) {
  const std::string text = row(1, "I", 2, "nsubj") + row(2, "went", 0, "root") +
                           "3-4\tau\t_\t_\t_\t_\t_\t_\t_\t_\n" + row(3, "à", 4, "case") +
                           row(4, "le", 2, "obl") + "4.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_\n\n";
  const auto trees = read_conllu(text).trees;
  ASSERT_EQ(trees.size(), 1u);
  ASSERT_EQ(trees[0].size(), 4);
  EXPECT_EQ(trees[0].at(3).form, "à");
  EXPECT_EQ(trees[0].at(4).form, "le");
  EXPECT_EQ(trees[0].heads(), (std::vector<int>{2, 0, 4, 2}));
}

TEST(ConlluTest, AcceptsCrlfAndMissingFinalBlankLine) {
  const auto trees = read_conllu("1\ta\t_\tX\t_\t_\t0\troot\t_\t_\r\n\r\n"
                                 "1\tb\t_\tX\t_\t_\t0\troot\t_\t_")
                         .trees;
  ASSERT_EQ(trees.size(), 2u);
  EXPECT_EQ(trees[0].at(1).deprel, "root");
  EXPECT_EQ(trees[1].at(1).form, "b");
}

TEST(ConlluTest, ErrorsCarryLineNumbers) {
  struct Case {
    std::string text;
    int line;
  };
  const std::vector<Case> cases = {
      {row(1, "a", 0, "root") + "\n" + row(1, "a", 3, "x") + row(2, "b", 0, "root"), 3},
      {row(1, "a", 0, "root") + row(2, "b", 0, "root"), 1},
      {row(1, "a", 2, "x") + row(2, "b", 1, "x"), 1},
      {"1\ta\t_\tX\t_\t_\tzero\troot\t_\t_\n", 1},
      {"x\ta\t_\tX\t_\t_\t0\troot\t_\t_\n", 1},
      {"1\ta\t_\tX\t_\t_\t0\n", 1},
      {row(1, "a", 0, "root") + row(3, "b", 1, "x"), 2},
      {"1\t\xff\t_\tX\t_\t_\t0\troot\t_\t_\n", 1},
  };
  for (const Case& c : cases) {
    try {
      read_conllu(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << e.what();
      EXPECT_NE(std::string(e.what()).find("line " + std::to_string(c.line)),
                std::string::npos);
    }
  }
}

TEST(ConlluTest, SkipPolicyKeepsGoodSentences) {
  const std::string text = row(1, "a", 0, "root") + "\n" + row(1, "b", 2, "x") +
                           row(2, "c", 1, "x") + "\n" + row(1, "d", 0, "root") + "\n";
  const auto result = read_conllu(text, OnError::kSkip);
  ASSERT_EQ(result.trees.size(), 2u);
  EXPECT_EQ(result.trees[1].at(1).form, "d");
  ASSERT_EQ(result.errors.size(), 1u);
  EXPECT_EQ(result.errors[0].line(), 3);
}

TEST(ConlluTest, EmptyInput) {
  EXPECT_TRUE(read_conllu("").trees.empty());
  EXPECT_EQ(write_conllu({}), "");
}

TEST(ConlluTest, RoundTripsRandomTrees) {
  Rng rng(7);
  std::vector<DepTree> trees;
  for (int s = 0; s < 500; ++s) {
    DepTree tree = random_dep_tree(rng.range(1, 15), rng);
    tree.id = "s" + std::to_string(s);
    trees.push_back(std::move(tree));
  }
  const std::string text = write_conllu(trees);
  EXPECT_EQ(text, write_conllu(trees));
  const auto back = read_conllu(text).trees;
  ASSERT_EQ(back.size(), trees.size());
  for (std::size_t s = 0; s < trees.size(); ++s) {
    EXPECT_EQ(back[s], trees[s]);
    EXPECT_EQ(back[s].id, trees[s].id);
  }
  EXPECT_EQ(write_conllu(back), text);
}

TEST(ConlluTest, NeverCrashesOnGarbage) {
  Rng rng(11);
  const std::string alphabet = "0123456789-.\t\n_#abc \xc3\xa9\xff";
  for (int k = 0; k < 2000; ++k) {
    std::string text;
    const int len = rng.range(0, 120);
    for (int i = 0; i < len; ++i) text += alphabet[rng.range(0, alphabet.size() - 1)];
    try {
      for (const DepTree& tree : read_conllu(text).trees) EXPECT_TRUE(is_valid(tree));
    } catch (const ParseError&) {
    }
    const auto lenient = read_conllu(text, OnError::kSkip);
    for (const DepTree& tree : lenient.trees) EXPECT_TRUE(is_valid(tree));
  }
}

const char* kPaintingTree =
    "(S (NP (DT This) (NN painting)) (VP (VP (VBZ is) (ADJP (JJ great)))))";

TEST(BracketsTest, ReadsPaintingTree) {
  const ConstTree tree = parse_bracketed_tree(kPaintingTree);
  const ConstNode expected = ConstNode::internal(
      "S",
      {ConstNode::internal("NP", {ConstNode::leaf("DT", "This"),
                                  ConstNode::leaf("NN", "painting")}),
       ConstNode::internal(
           "VP", {ConstNode::internal(
                     "VP", {ConstNode::leaf("VBZ", "is"),
                            ConstNode::internal("ADJP", {ConstNode::leaf("JJ", "great")})})})});
  EXPECT_EQ(tree.root, expected);
  EXPECT_EQ(to_bracketed(tree.root), kPaintingTree);
  EXPECT_EQ(tree.words(), (std::vector<Word>{{"This", "DT"}, {"painting", "NN"},
                                             {"is", "VBZ"}, {"great", "JJ"}}));
}

TEST(BracketsTest, SmallShapes) {
  const ConstTree single = parse_bracketed_tree("(X (P w))");
  EXPECT_EQ(single.root, ConstNode::internal("X", {ConstNode::leaf("P", "w")}));

  const ConstTree chain = parse_bracketed_tree("(A (B (C (P w))))");
  EXPECT_EQ(chain.root.label, "A");
  EXPECT_EQ(chain.root.children[0].label, "B");
  EXPECT_EQ(chain.root.children[0].children[0].label, "C");
  EXPECT_TRUE(chain.root.children[0].children[0].children[0].is_leaf());

  EXPECT_EQ(write_brackets({parse_bracketed_tree("(P w)")}), "(X (P w))\n");
}

TEST(BracketsTest, KeepsEscapedBracketsAndUnwrapsEmptyTop) {
  const ConstTree tree = parse_bracketed_tree("( (S (-LRB- -LRB-) (NN x) (-RRB- -RRB-)) )");
  EXPECT_EQ(tree.root.label, "S");
  EXPECT_EQ(tree.words()[0].form, "-LRB-");
  EXPECT_EQ(tree.words()[2].form, "-RRB-");
}

TEST(BracketsTest, ErrorsCarryLineAndColumn) {
  struct Case {
    std::string text;
    int line;
    int column;
  };
  const std::vector<Case> cases = {
      {"(S (NP (DT a))\n", 1, 1},
      {"(S (DT a)))\n", 1, 11},
      {"(S (DT a))\n(S ())\n", 2, 4},
      {"(S (DT a) b)\n", 1, 1},
      {"(A+B (P w))\n", 1, 1},
      {"(S (DT a)) x\n", 1, 12},
      {"x (S (DT a))\n", 1, 1},
  };
  for (const Case& c : cases) {
    try {
      read_brackets(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
  }
}

TEST(BracketsTest, SkipPolicyAndBlankLines) {
  const auto result = read_brackets("(S (P a))\n\n(S (P\n(T (Q b))\n", OnError::kSkip);
  ASSERT_EQ(result.trees.size(), 2u);
  EXPECT_EQ(result.trees[1].root.label, "T");
  ASSERT_EQ(result.errors.size(), 1u);
  EXPECT_EQ(result.errors[0].line(), 3);
}

TEST(BracketsTest, RoundTripsRandomTrees) {
  Rng rng(3);
  std::vector<ConstTree> trees;
  for (int s = 0; s < 500; ++s) trees.push_back(random_const_tree(rng.range(1, 15), rng));
  const std::string text = write_brackets(trees);
  const auto back = read_brackets(text).trees;
  ASSERT_EQ(back.size(), trees.size());
  for (std::size_t s = 0; s < trees.size(); ++s) {
    EXPECT_EQ(back[s], trees[s]);
    EXPECT_TRUE(is_valid(back[s]));
  }
  EXPECT_EQ(write_brackets(back), text);
}

TEST(BracketsTest, DeepTreesDoNotOverflow) {
  std::string text;
  const int depth = 100000;
  for (int i = 0; i < depth; ++i) text += "(A ";
  text += "(P w)";
  for (int i = 0; i < depth; ++i) text += ")";
  const ConstTree tree = parse_bracketed_tree(text);
  EXPECT_EQ(to_bracketed(tree.root), text);
}

TEST(BracketsTest, NeverCrashesOnGarbage) {
  Rng rng(5);
  const std::string alphabet = "()( )ABP+w-\n\t\xff";
  for (int k = 0; k < 5000; ++k) {
    std::string text;
    const int len = rng.range(0, 60);
    for (int i = 0; i < len; ++i) text += alphabet[rng.range(0, alphabet.size() - 1)];
    const auto result = read_brackets(text, OnError::kSkip);
    for (const ConstTree& tree : result.trees) EXPECT_TRUE(is_valid(tree)) << text;
  }
}

TEST(Utf8Test, FindsFirstInvalidByte) {
  EXPECT_EQ(find_invalid_utf8("plain \xc3\xa9 \xe2\x82\xac \xf0\x9f\x98\x80"),
            std::string_view::npos);
  EXPECT_EQ(find_invalid_utf8("ab\xff"), 2u);
  EXPECT_EQ(find_invalid_utf8("a\xc3"), 1u);
  EXPECT_EQ(find_invalid_utf8("\xc0\xaf"), 0u);
  EXPECT_EQ(find_invalid_utf8("\xed\xa0\x80"), 0u);
}

}  // namespace
}  // namespace synprobe
