// synprobe: attachment scores, bracketing F1, error reduction and the
// displacement / span-length breakdowns.

#ifndef SYNPROBE_METRICS_H_
#define SYNPROBE_METRICS_H_

#include <string>
#include <tuple>
#include <vector>

#include "synprobe/trees.h"

namespace synprobe {

struct DepScore {
  double las = 0;
  double uas = 0;
  long correct_both = 0;
  long correct_head = 0;
  long total = 0;
};

// Every token counts, punctuation included. Throws AlignmentError naming the
// first sentence whose lengths differ.
DepScore las(const std::vector<DepTree>& gold, const std::vector<DepTree>& pred);

struct BracketScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  long matched = 0;
  long predicted = 0;
  long gold = 0;
};

// Labeled span (label, start, end) with end exclusive.
struct Span {
  std::string label;
  int start = 0;
  int end = 0;

  auto operator<=>(const Span&) const = default;
};

// Spans of all phrasal nodes except the root node; pre-terminals excluded.
std::vector<Span> labeled_spans(const ConstTree& tree);

// Multiset matching of labeled spans. Throws AlignmentError when a pair does
// not share its leaf sequence.
BracketScore bracket_f1(const std::vector<ConstTree>& gold,
                        const std::vector<ConstTree>& pred);

// Relative error reduction 100 * (b - a) / (100 - a). Throws
// std::domain_error when a == 100.
double error_reduction(double a, double b);

// Harmonic mean in percent; 0 when both are 0.
double f1_score(double precision, double recall);

struct BreakdownRow {
  int key = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  long support = 0;  // gold items with this key
  long predicted = 0;
};

struct BreakdownTable {
  std::vector<BreakdownRow> rows;     // support >= min_support, by key
  std::vector<BreakdownRow> dropped;  // under-supported keys
  long total_support = 0;             // all gold items, kept or not
};

inline constexpr long kDefaultMinSupport = 10;

// Per signed displacement (head - dependent) of labeled non-root arcs.
BreakdownTable f1_by_displacement(const std::vector<DepTree>& gold,
                                  const std::vector<DepTree>& pred,
                                  long min_support = kDefaultMinSupport);

// Per span length (end - start) of labeled spans as in bracket_f1.
BreakdownTable f1_by_span_length(const std::vector<ConstTree>& gold,
                                 const std::vector<ConstTree>& pred,
                                 long min_support = kDefaultMinSupport);

}  // namespace synprobe

#endif  // SYNPROBE_METRICS_H_
