#pragma once

#include <cstdint>
#include <vector>

namespace regsep {

struct GraphEdge {
  int src;
  int tgt;
};

// Strongly connected components of a directed multigraph given by edges over
// nodes 0..n-1. Returns a component id per node; ids are numbered so that
// the component containing the smallest node id comes first.
std::vector<int> strongly_connected_components(int num_nodes,
                                               const std::vector<GraphEdge>& edges,
                                               int* num_components);

// All simple cycles (no repeated node except the start) of the multigraph
// restricted to the given edge ids. Each cycle is an edge-id sequence; the
// result is sorted lexicographically by edge ids and each cycle is rotated so
// that its smallest edge id comes first. Parallel edges yield distinct
// cycles. `cap` bounds the number of cycles; -1 on overflow via return flag.
bool enumerate_simple_cycles(int num_nodes, const std::vector<GraphEdge>& edges,
                             const std::vector<int>& edge_ids, long long cap,
                             std::vector<std::vector<int>>* out);

// True if the multigraph restricted to the given edge ids is strongly
// connected over the nodes it touches (and touches at least one edge).
bool edge_set_strongly_connected(int num_nodes, const std::vector<GraphEdge>& edges,
                                 const std::vector<int>& edge_ids);

}  // namespace regsep
