#include <algorithm>
#include <cstdlib>

#include "synprobe/dep_codec.h"

namespace synprobe {

DepTree repair_tree(const std::vector<std::optional<PartialArc>>& partial,
                    std::string_view default_deprel,
                    const std::vector<std::string>& forms) {
  const int n = static_cast<int>(partial.size());
  constexpr int kNone = -1;
  std::vector<int> head(n + 1, kNone);
  std::vector<std::string> rel(n + 1);
  for (int i = 1; i <= n; ++i) {
    const auto& arc = partial[i - 1];
    if (!arc) continue;
    rel[i] = arc->deprel;
    if (arc->head >= 0 && arc->head <= n && arc->head != i) head[i] = arc->head;
  }

  int root = 0;
  for (int i = 1; i <= n && root == 0; ++i)
    if (head[i] == 0) root = i;
  if (root == 0) {
    for (int i = 1; i <= n && root == 0; ++i)
      if (head[i] == kNone) root = i;
    if (root == 0 && n > 0) root = 1;
    if (root != 0) head[root] = 0;
  }
  for (int i = 1; i <= n; ++i) {
    if (i == root) continue;
    if (head[i] == 0 || head[i] == kNone) head[i] = root;
  }

  // Cycle breaking over the functional graph i -> head[i].
  std::vector<int> state(n + 1, 0);  // 0 new, 1 on current path, 2 done
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = head[cur];
    }
    if (state[cur] == 1) {
      // `cur` is on the path: the cycle is path[pos(cur)..].
      auto it = std::find(path.begin(), path.end(), cur);
      int best = cur;
      for (auto member = it; member != path.end(); ++member) {
        const int d = std::abs(*member - root);
        const int best_d = std::abs(best - root);
        if (d < best_d || (d == best_d && *member < best)) best = *member;
      }
      head[best] = root;
    }
    for (int node : path) state[node] = 2;
  }

  DepTree tree;
  tree.tokens.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Token t;
    t.index = i;
    t.form = i - 1 < static_cast<int>(forms.size()) ? forms[i - 1]
                                                    : "w" + std::to_string(i);
    t.head = head[i];
    t.deprel = rel[i].empty() ? std::string(default_deprel) : rel[i];
    tree.tokens.push_back(std::move(t));
  }
  return tree;
}

}  // namespace synprobe
