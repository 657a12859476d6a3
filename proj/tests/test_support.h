// Independent oracles and enumerators for the tests. Nothing here calls the
// code under test.

#ifndef SYNPROBE_TESTS_TEST_SUPPORT_H_
#define SYNPROBE_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "synprobe/trees.h"

namespace synprobe::testing {

// True when `heads` (1-based, 0 = root) is a single-rooted tree.
inline bool oracle_is_tree(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (heads[i] < 0 || heads[i] > n || heads[i] == i + 1) return false;
    roots += heads[i] == 0;
  }
  if (roots != 1) return false;
  for (int i = 1; i <= n; ++i) {
    std::vector<bool> seen(n + 1, false);
    int cur = i;
    while (cur != 0) {
      if (seen[cur]) return false;
      seen[cur] = true;
      cur = heads[cur - 1];
    }
  }
  return true;
}

// Calls `visit` for every single-rooted tree over n tokens.
inline void for_each_tree(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> heads(n, 0);
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      if (oracle_is_tree(heads)) visit(heads);
      return;
    }
    for (int h = 0; h <= n; ++h) {
      if (h == i + 1) continue;
      heads[i] = h;
      fill(i + 1);
    }
  };
  fill(0);
}

// Calls `visit` for every projective single-rooted tree over n tokens, built
// directly from the span recursion (no crossing test involved).
inline void for_each_projective_tree(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> heads(n, 0);
  // Cover [lo, hi] with consecutive subtrees hanging from `parent`.
  std::function<void(int, int, int, const std::function<void()>&)> forest;
  std::function<void(int, int, int, const std::function<void()>&)> subtree =
      [&](int lo, int hi, int parent, const std::function<void()>& next) {
        for (int r = lo; r <= hi; ++r) {
          heads[r - 1] = parent;
          forest(lo, r - 1, r, [&] { forest(r + 1, hi, r, next); });
        }
      };
  forest = [&](int lo, int hi, int parent, const std::function<void()>& next) {
    if (lo > hi) {
      next();
      return;
    }
    for (int end = lo; end <= hi; ++end)
      subtree(lo, end, parent, [&] { forest(end + 1, hi, parent, next); });
  };
  subtree(1, n, 0, [&] { visit(heads); });
}

struct TestArc {
  int head, dep;
  int lo() const { return std::min(head, dep); }
  int hi() const { return std::max(head, dep); }
};

inline std::vector<TestArc> arcs_of(const std::vector<int>& heads) {
  std::vector<TestArc> arcs;
  for (int i = 0; i < static_cast<int>(heads.size()); ++i) arcs.push_back({heads[i], i + 1});
  return arcs;
}

inline bool oracle_cross(const TestArc& a, const TestArc& b) {
  return (a.lo() < b.lo() && b.lo() < a.hi() && a.hi() < b.hi()) ||
         (b.lo() < a.lo() && a.lo() < b.hi() && b.hi() < a.hi());
}

// Exhaustive search over plane assignments, root arc included.
inline bool oracle_two_planar(const std::vector<int>& heads) {
  const auto arcs = arcs_of(heads);
  const int m = static_cast<int>(arcs.size());
  for (long mask = 0; mask < (1L << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        if (((mask >> i) & 1) == ((mask >> j) & 1) && oracle_cross(arcs[i], arcs[j]))
          ok = false;
    if (ok) return true;
  }
  return false;
}

// Projective: no two arcs cross, root arc included.
inline bool oracle_projective(const std::vector<int>& heads) {
  const auto arcs = arcs_of(heads);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (oracle_cross(arcs[i], arcs[j])) return false;
  return true;
}

// Labeled spans of phrasal non-root nodes, as a multiset. Leaves are the
// pre-terminals, so they never count.
inline void oracle_spans(const ConstNode& node, int& pos, bool is_root,
                         std::map<std::tuple<std::string, int, int>, int>& out) {
  if (node.is_leaf()) {
    ++pos;
    return;
  }
  const int start = pos;
  for (const ConstNode& child : node.children) oracle_spans(child, pos, false, out);
  if (!is_root) ++out[{node.label, start, pos}];
}

inline std::map<std::tuple<std::string, int, int>, int> oracle_spans(const ConstTree& tree) {
  std::map<std::tuple<std::string, int, int>, int> out;
  int pos = 0;
  oracle_spans(tree.root, pos, true, out);
  return out;
}

}  // namespace synprobe::testing

#endif  // SYNPROBE_TESTS_TEST_SUPPORT_H_
