// synprobe: label text files and the single-string label atoms the probe
// classifies.

#ifndef SYNPROBE_LABELS_H_
#define SYNPROBE_LABELS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synprobe/const_codec.h"
#include "synprobe/dep_codec.h"
#include "synprobe/trees.h"

namespace synprobe {

// Every linearization the toolkit knows, dependency and constituent.
enum class Scheme { kRelHead, kTwoPlanar, kArcHybrid, kConstLevels };

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
bool is_dependency(Scheme scheme);
DepEncoding dep_encoding(Scheme scheme);  // precondition: is_dependency

// One label per word, rendered as one string.
using LabelSequence = std::vector<std::string>;

inline constexpr char kAtomJoiner = '@';

std::string dep_atom(const DepLabel& label);
DepLabel parse_dep_atom(std::string_view atom);  // total: no '@' = arc only
std::string const_atom(const ConstLabel& label);

// --- label files ------------------------------------------------------------
//
// Dependency: "form<TAB>arc_part<TAB>rel_part" per token.
// Constituent: "form<TAB>delta,common,unary[<TAB>pos]" per token.
// Sentences are separated by a blank line.

struct DepLabelSentence {
  std::vector<std::string> forms;
  DepLabels labels;
};

struct ConstLabelSentence {
  std::vector<Word> words;
  ConstLabels labels;
};

std::string write_dep_labels(const std::vector<DepLabelSentence>& sentences);
std::string write_const_labels(const std::vector<ConstLabelSentence>& sentences);

// Throw ParseError with the offending line.
std::vector<DepLabelSentence> read_dep_labels(std::string_view text);
std::vector<ConstLabelSentence> read_const_labels(std::string_view text);

// Placeholder PoS for constituent label lines without a third column.
inline constexpr std::string_view kUnknownPos = "XX";

}  // namespace synprobe

#endif  // SYNPROBE_LABELS_H_
