#include "synprobe/metrics.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace synprobe {
namespace {

double percent(long num, long den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

struct Counts {
  long gold = 0;
  long predicted = 0;
  long matched = 0;
};

BreakdownTable make_table(const std::map<int, Counts>& by_key, long min_support) {
  BreakdownTable table;
  for (const auto& [key, c] : by_key) {
    if (c.gold == 0) continue;
    BreakdownRow row;
    row.key = key;
    row.precision = percent(c.matched, c.predicted);
    row.recall = percent(c.matched, c.gold);
    row.f1 = f1_score(row.precision, row.recall);
    row.support = c.gold;
    row.predicted = c.predicted;
    table.total_support += c.gold;
    (c.gold >= min_support ? table.rows : table.dropped).push_back(row);
  }
  return table;
}

// Sorted multiset intersection.
std::vector<Span> common_spans(std::vector<Span> a, std::vector<Span> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Span> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void check_leaves(const ConstTree& gold, const ConstTree& pred, std::size_t index) {
  const auto g = gold.words(), p = pred.words();
  const bool same = g.size() == p.size() &&
                    std::equal(g.begin(), g.end(), p.begin(),
                               [](const Word& x, const Word& y) {
                                 return x.form == y.form;
                               });
  if (!same)
    throw AlignmentError("sentence " + std::to_string(index) +
                         ": gold and predicted leaves differ");
}

void check_sizes(std::size_t gold, std::size_t pred) {
  if (gold != pred)
    throw AlignmentError("gold has " + std::to_string(gold) +
                         " sentences, prediction has " + std::to_string(pred));
}

}  // namespace

double f1_score(double precision, double recall) {
  if (precision + recall == 0) return 0.0;
  return 2 * precision * recall / (precision + recall);
}

DepScore las(const std::vector<DepTree>& gold, const std::vector<DepTree>& pred) {
  check_sizes(gold.size(), pred.size());
  DepScore score;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw AlignmentError("sentence " + std::to_string(s) + ": gold has " +
                           std::to_string(gold[s].size()) + " tokens, prediction " +
                           std::to_string(pred[s].size()));
    for (int i = 0; i < gold[s].size(); ++i) {
      const Token& g = gold[s].tokens[i];
      const Token& p = pred[s].tokens[i];
      ++score.total;
      if (g.head != p.head) continue;
      ++score.correct_head;
      if (g.deprel == p.deprel) ++score.correct_both;
    }
  }
  score.las = percent(score.correct_both, score.total);
  score.uas = percent(score.correct_head, score.total);
  return score;
}

std::vector<Span> labeled_spans(const ConstTree& tree) {
  std::vector<Span> spans;
  struct Walker {
    std::vector<Span>& spans;
    int walk(const ConstNode& node, int start, bool is_root) {
      if (node.is_leaf()) return start + 1;
      int end = start;
      for (const ConstNode& child : node.children) end = walk(child, end, false);
      if (!is_root) spans.push_back({node.label, start, end});
      return end;
    }
  };
  Walker{spans}.walk(tree.root, 0, true);
  return spans;
}

BracketScore bracket_f1(const std::vector<ConstTree>& gold,
                        const std::vector<ConstTree>& pred) {
  check_sizes(gold.size(), pred.size());
  BracketScore score;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    check_leaves(gold[s], pred[s], s);
    auto g = labeled_spans(gold[s]);
    auto p = labeled_spans(pred[s]);
    score.gold += static_cast<long>(g.size());
    score.predicted += static_cast<long>(p.size());
    score.matched += static_cast<long>(common_spans(std::move(g), std::move(p)).size());
  }
  score.precision = percent(score.matched, score.predicted);
  score.recall = percent(score.matched, score.gold);
  score.f1 = f1_score(score.precision, score.recall);
  return score;
}

double error_reduction(double a, double b) {
  if (a == 100.0)
    throw std::domain_error("error reduction is undefined from a perfect score");
  return 100.0 * (b - a) / (100.0 - a);
}

BreakdownTable f1_by_displacement(const std::vector<DepTree>& gold,
                                  const std::vector<DepTree>& pred,
                                  long min_support) {
  check_sizes(gold.size(), pred.size());
  std::map<int, Counts> by_key;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw AlignmentError("sentence " + std::to_string(s) +
                           ": token counts differ");
    for (int i = 0; i < gold[s].size(); ++i) {
      const Token& g = gold[s].tokens[i];
      const Token& p = pred[s].tokens[i];
      if (g.head != 0) {
        Counts& c = by_key[g.head - g.index];
        ++c.gold;
        if (p.head == g.head && p.deprel == g.deprel) ++c.matched;
      }
      if (p.head != 0) ++by_key[p.head - p.index].predicted;
    }
  }
  return make_table(by_key, min_support);
}

BreakdownTable f1_by_span_length(const std::vector<ConstTree>& gold,
                                 const std::vector<ConstTree>& pred,
                                 long min_support) {
  check_sizes(gold.size(), pred.size());
  std::map<int, Counts> by_key;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    check_leaves(gold[s], pred[s], s);
    auto g = labeled_spans(gold[s]);
    auto p = labeled_spans(pred[s]);
    for (const Span& span : g) ++by_key[span.end - span.start].gold;
    for (const Span& span : p) ++by_key[span.end - span.start].predicted;
    for (const Span& span : common_spans(std::move(g), std::move(p)))
      ++by_key[span.end - span.start].matched;
  }
  return make_table(by_key, min_support);
}

}  // namespace synprobe
