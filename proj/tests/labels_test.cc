#include <gtest/gtest.h>

#include "synprobe/labels.h"

namespace synprobe {
namespace {

TEST(SchemeTest, Names) {
  for (Scheme s : {Scheme::kRelHead, Scheme::kTwoPlanar, Scheme::kArcHybrid,
                   Scheme::kConstLevels})
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  EXPECT_EQ(scheme_name(Scheme::kTwoPlanar), "2planar");
  EXPECT_FALSE(parse_scheme("bogus"));
  EXPECT_TRUE(is_dependency(Scheme::kArcHybrid));
  EXPECT_FALSE(is_dependency(Scheme::kConstLevels));
  EXPECT_EQ(dep_encoding(Scheme::kRelHead), DepEncoding::kRelHead);
}

TEST(AtomTest, DependencyAtoms) {
  EXPECT_EQ(dep_atom({"+1", "det"}), "+1@det");
  EXPECT_EQ(parse_dep_atom("+1@det"), (DepLabel{"+1", "det"}));
  EXPECT_EQ(parse_dep_atom("<\\/*@obl:tmod"), (DepLabel{"<\\/*", "obl:tmod"}));
  EXPECT_EQ(parse_dep_atom("SH_LA"), (DepLabel{"SH_LA", ""}));
  EXPECT_EQ(parse_dep_atom("@root"), (DepLabel{"", "root"}));
  EXPECT_EQ(const_atom({-1, "S", "ADJP"}), "-1,S,ADJP");
}

TEST(LabelFileTest, DependencyRoundTrip) {
  const std::vector<DepLabelSentence> sentences = {
      {{"This", "painting"}, {{"+1", "det"}, {"-2", "root"}}},
      {{"x"}, {{"", "root"}}},
  };
  const std::string text = write_dep_labels(sentences);
  EXPECT_EQ(text, "This\t+1\tdet\npainting\t-2\troot\n\nx\t\troot\n\n");
  const auto back = read_dep_labels(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].forms, sentences[0].forms);
  EXPECT_EQ(back[0].labels, sentences[0].labels);
  EXPECT_EQ(back[1].labels, sentences[1].labels);
  EXPECT_TRUE(read_dep_labels("").empty());
}

TEST(LabelFileTest, ConstituentRoundTripAndMissingPos) {
  const std::vector<ConstLabelSentence> sentences = {
      {{{"This", "DT"}, {"great", "JJ"}}, {{2, "NP", ""}, {-1, "S", "ADJP"}}},
  };
  const std::string text = write_const_labels(sentences);
  EXPECT_EQ(text, "This\t2,NP,\tDT\ngreat\t-1,S,ADJP\tJJ\n\n");
  const auto back = read_const_labels(text);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].words, sentences[0].words);
  EXPECT_EQ(back[0].labels, sentences[0].labels);

  const auto two_col = read_const_labels("w\t1,S,\n");
  ASSERT_EQ(two_col.size(), 1u);
  EXPECT_EQ(two_col[0].words[0].pos, kUnknownPos);
}

TEST(LabelFileTest, ErrorsCarryLines) {
  auto line_of = [](auto read, const std::string& text) {
    try {
      read(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of(read_dep_labels, "a\t+1\tdet\nb\t-1\n"), 2);
  EXPECT_EQ(line_of(read_dep_labels, "a\t+1\tdet\n\n\tx\ty\n"), 3);
  EXPECT_EQ(line_of(read_const_labels, "a\t1,S,\nb\tnope\n"), 2);
  EXPECT_EQ(line_of(read_const_labels, "a\n"), 1);
}

}  // namespace
}  // namespace synprobe
