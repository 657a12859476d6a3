#include "synprobe/dep_codec.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <charconv>
#include <deque>
#include <numeric>

namespace synprobe {
namespace {

constexpr int kNoHead = -1;

std::vector<std::optional<PartialArc>> partial_from(const std::vector<int>& heads,
                                                    const DepLabels& labels) {
  std::vector<std::optional<PartialArc>> partial;
  partial.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    partial.push_back(PartialArc{heads[i], labels[i].rel_part});
  return partial;
}

std::optional<int> parse_offset(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool is_bracket(char c) { return c == '<' || c == '\\' || c == '/' || c == '>'; }

int rank(char c) {
  switch (c) {
    case '<': return 0;
    case '\\': return 1;
    case '/': return 2;
    default: return 3;
  }
}

bool plane_well_formed(const std::string& plane) {
  int lt = 0, gt = 0;
  for (std::size_t i = 0; i < plane.size(); ++i) {
    if (i > 0 && rank(plane[i]) < rank(plane[i - 1])) return false;
    lt += plane[i] == '<';
    gt += plane[i] == '>';
  }
  return lt <= 1 && gt <= 1;
}

// Brackets of one label, tolerant of malformed text (unknown chars ignored).
BracketArc lenient_brackets(std::string_view text) {
  BracketArc arc;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_bracket(text[i])) continue;
    if (i + 1 < text.size() && text[i + 1] == '*')
      arc.plane2 += text[i];
    else
      arc.plane1 += text[i];
  }
  return arc;
}

std::vector<Transition> lenient_transitions(std::string_view text) {
  std::vector<Transition> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('_', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece == "SH") out.push_back(Transition::kShift);
    else if (piece == "LA") out.push_back(Transition::kLeftArc);
    else if (piece == "RA") out.push_back(Transition::kRightArc);
    start = end + 1;
  }
  return out;
}

// Per plane bracket decoding: `<` and `/` push the previous token, `\` and
// `>` pop the most recent pending one of their kind.
void decode_plane(const std::vector<std::string>& planes,
                  std::vector<int>& heads) {
  const int n = static_cast<int>(planes.size());
  std::vector<int> lefts;   // tokens waiting for a head on their right
  std::vector<int> rights;  // tokens waiting for a dependent on their right
  for (int i = 1; i <= n; ++i) {
    for (char c : planes[i - 1]) {
      switch (c) {
        case '<':
          lefts.push_back(i - 1);
          break;
        case '\\':
          if (!lefts.empty()) {
            const int dep = lefts.back();
            lefts.pop_back();
            if (dep >= 1 && heads[dep - 1] == kNoHead) heads[dep - 1] = i;
          }
          break;
        case '/':
          rights.push_back(i - 1);
          break;
        case '>':
          if (!rights.empty()) {
            const int head = rights.back();
            rights.pop_back();
            if (heads[i - 1] == kNoHead) heads[i - 1] = head;
          }
          break;
        default:
          break;
      }
    }
  }
}

// h is an ancestor of k (or k itself) in `heads` (1-based, 0 = root).
bool dominates(const std::vector<int>& heads, int h, int k) {
  if (h == 0) return true;
  const int n = static_cast<int>(heads.size());
  for (int steps = 0; k != 0 && steps <= n; ++steps) {
    if (k == h) return true;
    k = heads[k - 1];
  }
  return false;
}

bool arc_is_projective(const std::vector<int>& heads, int dep) {
  const int h = heads[dep - 1];
  const int lo = std::min(h, dep), hi = std::max(h, dep);
  for (int k = lo + 1; k < hi; ++k)
    if (!dominates(heads, h, k)) return false;
  return true;
}

}  // namespace

std::string_view encoding_name(DepEncoding encoding) {
  switch (encoding) {
    case DepEncoding::kRelHead: return "relhead";
    case DepEncoding::kTwoPlanar: return "2planar";
    case DepEncoding::kArcHybrid: return "archybrid";
  }
  return "?";
}

std::optional<DepEncoding> parse_dep_encoding(std::string_view name) {
  if (name == "relhead") return DepEncoding::kRelHead;
  if (name == "2planar") return DepEncoding::kTwoPlanar;
  if (name == "archybrid") return DepEncoding::kArcHybrid;
  return std::nullopt;
}

// --- head selection --------------------------------------------------------

DepLabels encode_rel_head(const DepTree& tree) {
  DepLabels labels;
  labels.reserve(tree.tokens.size());
  for (const Token& t : tree.tokens) {
    const int offset = t.head - t.index;
    labels.push_back({(offset > 0 ? "+" : "") + std::to_string(offset),
                      t.deprel});
  }
  return labels;
}

DepTree decode_rel_head(const DepLabels& labels,
                        std::string_view default_deprel,
                        const std::vector<std::string>& forms) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> heads(n, kNoHead);
  for (int i = 1; i <= n; ++i) {
    auto offset = parse_offset(labels[i - 1].arc_part);
    if (!offset || *offset == 0) continue;
    const long head = static_cast<long>(i) + *offset;
    // An offset landing on position 0 is a root claim.
    if (head >= 0 && head <= n) heads[i - 1] = static_cast<int>(head);
  }
  return repair_tree(partial_from(heads, labels), default_deprel, forms);
}

// --- 2-planar --------------------------------------------------------------

bool arcs_cross(const Arc& a, const Arc& b) {
  const int a1 = a.left(), a2 = a.right(), b1 = b.left(), b2 = b.right();
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

int PlaneAssignment::plane_of(int dep) const {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].dep == dep) return plane[i];
  return 0;
}

PlaneAssignment assign_planes(const DepTree& tree) {
  PlaneAssignment out;
  for (const Token& t : tree.tokens) out.arcs.push_back({t.head, t.index});
  std::stable_sort(out.arcs.begin(), out.arcs.end(),
                   [](const Arc& a, const Arc& b) {
                     if (a.left() != b.left()) return a.left() < b.left();
                     return a.right() - a.left() < b.right() - b.left();
                   });
  const std::size_t m = out.arcs.size();
  std::vector<std::vector<std::size_t>> crossing(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (arcs_cross(out.arcs[i], out.arcs[j])) {
        crossing[i].push_back(j);
        crossing[j].push_back(i);
      }

  constexpr int kUnset = -1;
  std::vector<int> plane(m, kUnset);
  // Places `arc` on `p` unless a placed neighbour already holds `p`.
  auto try_place = [&](std::size_t arc, int p) {
    for (std::size_t other : crossing[arc])
      if (plane[other] == p) {
        plane[arc] = 0;
        return false;
      }
    plane[arc] = p;
    return true;
  };
  for (std::size_t seed = 0; seed < m; ++seed) {
    if (plane[seed] != kUnset) continue;
    if (!try_place(seed, 1)) continue;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t next : crossing[cur]) {
        if (plane[next] != kUnset) continue;
        if (try_place(next, 3 - plane[cur])) queue.push_back(next);
      }
    }
  }
  out.plane = plane;
  for (std::size_t i = 0; i < m; ++i)
    if (plane[i] == 0) out.dropped.push_back(out.arcs[i]);
  return out;
}

std::string render_brackets(const BracketArc& arc) {
  std::string out = arc.plane1;
  for (char c : arc.plane2) {
    out += c;
    out += '*';
  }
  return out;
}

BracketArc parse_brackets(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_bracket(c) || c == '.' || c == ' ') continue;
    if (c == '*' && i > 0 && is_bracket(text[i - 1])) continue;
    throw std::invalid_argument("bad bracket label '" + std::string(text) +
                                "'");
  }
  BracketArc arc = lenient_brackets(text);
  if (!plane_well_formed(arc.plane1) || !plane_well_formed(arc.plane2))
    throw std::invalid_argument("bracket label '" + std::string(text) +
                                "' is out of order");
  return arc;
}

DepLabels encode_2planar(const DepTree& tree) {
  const int n = tree.size();
  struct Symbols {
    bool lt = false;
    int backslashes = 0;
    int slashes = 0;
    bool gt = false;
  };
  std::vector<std::array<Symbols, 2>> symbols(n + 1);
  const PlaneAssignment planes = assign_planes(tree);
  for (std::size_t k = 0; k < planes.arcs.size(); ++k) {
    const Arc& arc = planes.arcs[k];
    const int p = planes.plane[k];
    if (arc.head == 0 || p == 0) continue;
    if (arc.dep < arc.head) {
      symbols[arc.dep + 1][p - 1].lt = true;
      symbols[arc.head][p - 1].backslashes++;
    } else {
      symbols[arc.head + 1][p - 1].slashes++;
      symbols[arc.dep][p - 1].gt = true;
    }
  }
  auto render_plane = [](const Symbols& s) {
    std::string out;
    if (s.lt) out += '<';
    out.append(s.backslashes, '\\');
    out.append(s.slashes, '/');
    if (s.gt) out += '>';
    return out;
  };
  DepLabels labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) {
    BracketArc arc{render_plane(symbols[i][0]), render_plane(symbols[i][1])};
    labels.push_back({render_brackets(arc), tree.at(i).deprel});
  }
  return labels;
}

DepTree decode_2planar(const DepLabels& labels,
                       std::string_view default_deprel,
                       const std::vector<std::string>& forms) {
  const std::size_t n = labels.size();
  std::vector<std::string> plane1(n), plane2(n);
  for (std::size_t i = 0; i < n; ++i) {
    BracketArc arc = lenient_brackets(labels[i].arc_part);
    plane1[i] = std::move(arc.plane1);
    plane2[i] = std::move(arc.plane2);
  }
  std::vector<int> heads(n, kNoHead);
  decode_plane(plane1, heads);
  decode_plane(plane2, heads);
  return repair_tree(partial_from(heads, labels), default_deprel, forms);
}

// --- arc-hybrid ------------------------------------------------------------

std::string_view transition_name(Transition t) {
  switch (t) {
    case Transition::kShift: return "SH";
    case Transition::kLeftArc: return "LA";
    case Transition::kRightArc: return "RA";
  }
  return "?";
}

bool is_projective(const DepTree& tree) {
  const std::vector<int> heads = tree.heads();
  for (int d = 1; d <= tree.size(); ++d)
    if (!arc_is_projective(heads, d)) return false;
  return true;
}

DepTree projectivize(const DepTree& tree) {
  DepTree out = tree;
  std::vector<int> heads = tree.heads();
  const int n = tree.size();
  while (true) {
    int best = 0, best_len = 0;
    for (int d = 1; d <= n; ++d) {
      if (heads[d - 1] == 0 || arc_is_projective(heads, d)) continue;
      const int len = std::abs(heads[d - 1] - d);
      if (best == 0 || len < best_len) {
        best = d;
        best_len = len;
      }
    }
    if (best == 0) break;
    // Arcs from the root token are always projective, so the grandparent
    // exists and is a word.
    heads[best - 1] = heads[heads[best - 1] - 1];
  }
  for (int i = 0; i < n; ++i) out.tokens[i].head = heads[i];
  return out;
}

std::vector<Transition> oracle_arc_hybrid(const DepTree& tree) {
  if (!is_projective(tree))
    throw NonProjectiveError("arc-hybrid oracle needs a projective tree");
  const int n = tree.size();
  const std::vector<int> heads = tree.heads();
  std::vector<int> missing(n + 1, 0);  // dependents not yet attached
  for (int h : heads) missing[h]++;
  std::vector<Transition> out;
  std::vector<int> stack;
  int front = 1;
  while (front <= n || stack.size() > 1) {
    if (!stack.empty()) {
      const int top = stack.back();
      const bool complete = missing[top] == 0;
      if (front <= n && heads[top - 1] == front && complete) {
        out.push_back(Transition::kLeftArc);
        missing[front]--;
        stack.pop_back();
        continue;
      }
      if (stack.size() >= 2 && heads[top - 1] == stack[stack.size() - 2] &&
          complete) {
        out.push_back(Transition::kRightArc);
        missing[stack[stack.size() - 2]]--;
        stack.pop_back();
        continue;
      }
    }
    if (front > n)
      throw NonProjectiveError("arc-hybrid oracle is stuck");
    out.push_back(Transition::kShift);
    stack.push_back(front++);
  }
  return out;
}

std::vector<int> replay_arc_hybrid(const std::vector<Transition>& transitions,
                                   int n) {
  std::vector<int> heads(n, 0);
  std::vector<int> stack;
  int front = 1;
  for (Transition t : transitions) {
    switch (t) {
      case Transition::kShift:
        if (front <= n) stack.push_back(front++);
        break;
      case Transition::kLeftArc:
        if (!stack.empty() && front <= n) {
          heads[stack.back() - 1] = front;
          stack.pop_back();
        }
        break;
      case Transition::kRightArc:
        if (stack.size() >= 2) {
          heads[stack.back() - 1] = stack[stack.size() - 2];
          stack.pop_back();
        }
        break;
    }
  }
  return heads;
}

std::string render_transitions(const std::vector<Transition>& chunk) {
  std::string out;
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (i > 0) out += '_';
    out += transition_name(chunk[i]);
  }
  return out;
}

std::vector<Transition> parse_transitions(std::string_view text) {
  std::vector<Transition> out = lenient_transitions(text);
  const auto pieces = 1 + std::count(text.begin(), text.end(), '_');
  if (text.empty() || static_cast<long>(out.size()) != pieces)
    throw std::invalid_argument("bad transition label '" + std::string(text) +
                                "'");
  return out;
}

DepLabels encode_arc_hybrid(const DepTree& tree) {
  const std::vector<Transition> transitions =
      oracle_arc_hybrid(projectivize(tree));
  DepLabels labels;
  labels.reserve(tree.tokens.size());
  std::vector<Transition> chunk;
  auto flush = [&] {
    const int i = static_cast<int>(labels.size()) + 1;
    labels.push_back({render_transitions(chunk), tree.at(i).deprel});
    chunk.clear();
  };
  for (Transition t : transitions) {
    if (t == Transition::kShift && !chunk.empty()) flush();
    chunk.push_back(t);
  }
  if (!chunk.empty()) flush();
  return labels;
}

DepTree decode_arc_hybrid(const DepLabels& labels,
                          std::string_view default_deprel,
                          const std::vector<std::string>& forms) {
  const int n = static_cast<int>(labels.size());
  std::vector<Transition> transitions;
  for (const DepLabel& label : labels) {
    auto chunk = lenient_transitions(label.arc_part);
    transitions.insert(transitions.end(), chunk.begin(), chunk.end());
  }
  std::vector<int> heads = replay_arc_hybrid(transitions, n);
  for (int& h : heads)
    if (h == 0) h = kNoHead;
  return repair_tree(partial_from(heads, labels), default_deprel, forms);
}

// --- dispatch ----------------------------------------------------------------

DepLabels encode(DepEncoding encoding, const DepTree& tree) {
  switch (encoding) {
    case DepEncoding::kRelHead: return encode_rel_head(tree);
    case DepEncoding::kTwoPlanar: return encode_2planar(tree);
    case DepEncoding::kArcHybrid: return encode_arc_hybrid(tree);
  }
  return {};
}

DepTree decode(DepEncoding encoding, const DepLabels& labels,
               std::string_view default_deprel,
               const std::vector<std::string>& forms) {
  switch (encoding) {
    case DepEncoding::kRelHead:
      return decode_rel_head(labels, default_deprel, forms);
    case DepEncoding::kTwoPlanar:
      return decode_2planar(labels, default_deprel, forms);
    case DepEncoding::kArcHybrid:
      return decode_arc_hybrid(labels, default_deprel, forms);
  }
  return {};
}

}  // namespace synprobe
