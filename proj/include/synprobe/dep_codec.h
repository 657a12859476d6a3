// synprobe: dependency tree linearizations.
//
// Three encodings map an n-token tree to n labels (arc_part, rel_part):
//   relhead    - signed offset from the token to its head
//   2planar    - bracket strings on two independent planes
//   archybrid  - per-token chunk of the arc-hybrid static oracle
// Every decoder is total: arbitrary well-formed labels are turned into a
// valid tree by repair_tree.

#ifndef SYNPROBE_DEP_CODEC_H_
#define SYNPROBE_DEP_CODEC_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "synprobe/trees.h"

namespace synprobe {

inline constexpr std::string_view kDefaultDeprel = "dep";

struct DepLabel {
  std::string arc_part;
  std::string rel_part;

  bool operator==(const DepLabel&) const = default;
};

using DepLabels = std::vector<DepLabel>;

enum class DepEncoding { kRelHead, kTwoPlanar, kArcHybrid };

std::string_view encoding_name(DepEncoding encoding);
std::optional<DepEncoding> parse_dep_encoding(std::string_view name);

// ---------------------------------------------------------------------------
// Repair

struct PartialArc {
  int head = 0;
  std::string deprel;  // empty = unknown
};

// Turns per-token optional arcs into a valid tree:
//  1. self-loops and out-of-range heads are discarded;
//  2. without a root claimant, the leftmost headless token becomes root (or
//     token 1 if every token has a head);
//  3. with several root claimants, the leftmost stays root and the others
//     attach to it;
//  4. remaining headless tokens attach to the root token;
//  5. each cycle is broken at the member closest to the root token, which
//     is reattached to the root token.
// Missing deprels become `default_deprel`. Forms default to w1..wn.
DepTree repair_tree(const std::vector<std::optional<PartialArc>>& partial,
                    std::string_view default_deprel = kDefaultDeprel,
                    const std::vector<std::string>& forms = {});

// ---------------------------------------------------------------------------
// Head selection

DepLabels encode_rel_head(const DepTree& tree);
DepTree decode_rel_head(const DepLabels& labels,
                        std::string_view default_deprel = kDefaultDeprel,
                        const std::vector<std::string>& forms = {});

// ---------------------------------------------------------------------------
// 2-planar bracketing

// Arc (head, dependent); the root arc is (0, r).
struct Arc {
  int head = 0;
  int dep = 0;

  int left() const { return head < dep ? head : dep; }
  int right() const { return head < dep ? dep : head; }
  bool operator==(const Arc&) const = default;
};

// Arcs cross iff their spans properly interleave; shared endpoints never
// cross.
bool arcs_cross(const Arc& a, const Arc& b);

struct PlaneAssignment {
  std::vector<Arc> arcs;   // every arc of the tree, root arc included
  std::vector<int> plane;  // parallel to `arcs`: 1, 2, or 0 when dropped
  std::vector<Arc> dropped;

  int plane_of(int dep) const;  // 0 when dropped
};

// Greedy 2-coloring of the crossing graph. Arcs are visited by left endpoint
// then length; each new component starts in plane 1 and is propagated
// breadth-first, forcing crossing neighbours onto the opposite plane. An arc
// whose forced plane clashes with an already placed neighbour is dropped.
// Exact whenever the crossing graph is bipartite.
PlaneAssignment assign_planes(const DepTree& tree);

// Bracket strings for one label; each plane matches `<? \* /* >?`.
struct BracketArc {
  std::string plane1;
  std::string plane2;

  bool operator==(const BracketArc&) const = default;
};

// Plane-2 symbols are rendered with a trailing '*': `<\` + `/` -> `<\/*`.
std::string render_brackets(const BracketArc& arc);
// Throws std::invalid_argument on text that is not a bracket label.
BracketArc parse_brackets(std::string_view text);

DepLabels encode_2planar(const DepTree& tree);
DepTree decode_2planar(const DepLabels& labels,
                       std::string_view default_deprel = kDefaultDeprel,
                       const std::vector<std::string>& forms = {});

// ---------------------------------------------------------------------------
// Arc-hybrid transitions

enum class Transition { kShift, kLeftArc, kRightArc };

std::string_view transition_name(Transition t);  // SH, LA, RA

bool is_projective(const DepTree& tree);

// Lifts the shortest non-projective arc (leftmost dependent on ties) to the
// head's head until no arc is non-projective.
DepTree projectivize(const DepTree& tree);

class NonProjectiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Static arc-hybrid oracle; the root arc is left implicit.
// Throws NonProjectiveError on non-projective input.
std::vector<Transition> oracle_arc_hybrid(const DepTree& tree);

// Replays transitions from the initial configuration, skipping any whose
// preconditions fail. Returns per-token heads (0 = unattached).
std::vector<int> replay_arc_hybrid(const std::vector<Transition>& transitions,
                                   int n);

std::string render_transitions(const std::vector<Transition>& chunk);
// Throws std::invalid_argument on unknown transition names.
std::vector<Transition> parse_transitions(std::string_view text);

DepLabels encode_arc_hybrid(const DepTree& tree);
DepTree decode_arc_hybrid(const DepLabels& labels,
                          std::string_view default_deprel = kDefaultDeprel,
                          const std::vector<std::string>& forms = {});

// ---------------------------------------------------------------------------
// Dispatch by encoding

DepLabels encode(DepEncoding encoding, const DepTree& tree);
DepTree decode(DepEncoding encoding, const DepLabels& labels,
               std::string_view default_deprel = kDefaultDeprel,
               const std::vector<std::string>& forms = {});

}  // namespace synprobe

#endif  // SYNPROBE_DEP_CODEC_H_
