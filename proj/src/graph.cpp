#include "regsep/graph.hpp"

#include <algorithm>
#include <map>

namespace regsep {

namespace {

struct TarjanState {
  const std::vector<std::vector<int>>& succ;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanState(const std::vector<std::vector<int>>& s, int n)
      : succ(s), index(n, -1), low(n, 0), comp(n, -1), on_stack(n, false) {}

  void run(int v0) {
    // Iterative Tarjan to avoid deep recursion on long chains.
    std::vector<std::pair<int, std::size_t>> work;
    work.push_back({v0, 0});
    index[v0] = low[v0] = next_index++;
    stack.push_back(v0);
    on_stack[v0] = true;
    while (!work.empty()) {
      auto& [v, i] = work.back();
      if (i < succ[v].size()) {
        int w = succ[v][i++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          work.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        work.pop_back();
        if (!work.empty()) {
          int parent = work.back().first;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
};

}  // namespace

std::vector<int> strongly_connected_components(int num_nodes,
                                               const std::vector<GraphEdge>& edges,
                                               int* num_components) {
  std::vector<std::vector<int>> succ(num_nodes);
  for (const auto& e : edges) succ[e.src].push_back(e.tgt);
  TarjanState t(succ, num_nodes);
  for (int v = 0; v < num_nodes; ++v)
    if (t.index[v] == -1) t.run(v);
  // Renumber components by smallest member node id for determinism.
  std::vector<int> min_node(t.next_comp, num_nodes);
  for (int v = 0; v < num_nodes; ++v)
    min_node[t.comp[v]] = std::min(min_node[t.comp[v]], v);
  std::vector<int> order(t.next_comp);
  for (int c = 0; c < t.next_comp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_node[a] < min_node[b]; });
  std::vector<int> rename(t.next_comp);
  for (int rank = 0; rank < t.next_comp; ++rank) rename[order[rank]] = rank;
  for (int v = 0; v < num_nodes; ++v) t.comp[v] = rename[t.comp[v]];
  if (num_components) *num_components = t.next_comp;
  return t.comp;
}

bool edge_set_strongly_connected(int num_nodes, const std::vector<GraphEdge>& edges,
                                 const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::vector<GraphEdge> sub;
  sub.reserve(edge_ids.size());
  for (int id : edge_ids) sub.push_back(edges[id]);
  int ncomp = 0;
  std::vector<int> comp = strongly_connected_components(num_nodes, sub, &ncomp);
  int c = comp[sub[0].src];
  for (const auto& e : sub)
    if (comp[e.src] != c || comp[e.tgt] != c) return false;
  return true;
}

bool enumerate_simple_cycles(int num_nodes, const std::vector<GraphEdge>& edges,
                             const std::vector<int>& edge_ids, long long cap,
                             std::vector<std::vector<int>>* out) {
  out->clear();
  // Adjacency restricted to the selected edges, successors in edge-id order.
  std::vector<std::vector<int>> adj(num_nodes);
  std::vector<int> sorted_ids = edge_ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  for (int id : sorted_ids) adj[edges[id].src].push_back(id);

  std::vector<int> touched;
  for (int id : sorted_ids) {
    touched.push_back(edges[id].src);
    touched.push_back(edges[id].tgt);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  // Tiernan-style search: cycles are rooted at their smallest touched node,
  // exploring only nodes >= the root.
  std::vector<bool> on_path(num_nodes, false);
  std::vector<int> path_edges;
  bool ok = true;

  for (int root : touched) {
    struct Frame {
      int node;
      std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({root, 0});
    on_path[root] = true;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.node].size()) {
        int id = adj[f.node][f.next++];
        int w = edges[id].tgt;
        if (w == root) {
          path_edges.push_back(id);
          out->push_back(path_edges);
          path_edges.pop_back();
          if (static_cast<long long>(out->size()) > cap) {
            ok = false;
            break;
          }
        } else if (w > root && !on_path[w]) {
          on_path[w] = true;
          path_edges.push_back(id);
          stack.push_back({w, 0});
        }
      } else {
        on_path[f.node] = false;
        if (!path_edges.empty()) path_edges.pop_back();
        stack.pop_back();
      }
    }
    for (Frame& f : stack) on_path[f.node] = false;
    path_edges.clear();
    if (!ok) return false;
  }

  // Canonical form: rotate so the smallest edge id leads, then sort.
  for (auto& cyc : *out) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i)
      if (cyc[i] < cyc[best]) best = i;
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
  }
  std::sort(out->begin(), out->end());
  return true;
}

}  // namespace regsep
