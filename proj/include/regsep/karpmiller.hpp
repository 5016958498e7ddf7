#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regsep/vass.hpp"

namespace regsep {

// Counter entry of an extended configuration: a natural number or omega.
// omega + z = omega for every integer z.
struct OmegaNat {
  bool omega = false;
  Int value = 0;  // meaningful iff !omega

  static OmegaNat om() { return {true, 0}; }
  static OmegaNat fin(Int v) { return {false, std::move(v)}; }

  bool operator==(const OmegaNat& o) const {
    return omega == o.omega && (omega || value == o.value);
  }
  // Order with omega on top.
  bool leq(const OmegaNat& o) const {
    if (o.omega) return true;
    if (omega) return false;
    return value <= o.value;
  }
  bool lt(const OmegaNat& o) const { return leq(o) && !(*this == o); }
  std::string to_string() const { return omega ? "w" : value.get_str(); }
};

using ExtConfig = std::vector<OmegaNat>;

struct KmEdge {
  int src;    // graph node id
  int trans;  // index into the VASS transition list
  int tgt;
};

struct KmAcceleration {
  int ancestor;             // tree index of the dominated ancestor
  std::vector<int> raised;  // coordinates raised to omega here
};

struct KmTreeNode {
  int graph_id;
  int parent = -1;        // tree index
  int parent_trans = -1;  // VASS transition labeling the edge from the parent
  std::vector<KmAcceleration> accels;
};

struct KmNode {
  int state;
  ExtConfig counters;
  int first_tree = -1;  // first tree occurrence, used when lifting
};

// Karp-Miller graph of a Buchi VASS: breadth-first tree with ancestor-path
// acceleration, quotiented by extended configuration. Keeps the tree so that
// abstract paths can be replayed as concrete runs.
struct KarpMillerGraph {
  BuchiVass vass;  // the VASS this graph abstracts (owned copy)
  std::vector<KmNode> nodes;
  std::vector<KmEdge> edges;
  std::vector<std::vector<int>> out;  // node -> edge ids, in creation order
  int initial = 0;
  std::vector<int> final_nodes;
  std::vector<KmTreeNode> tree;

  bool node_final(int id) const { return vass.is_final(nodes[id].state); }
  std::string node_to_string(int id) const;
};

struct KmBudget {
  long long max_tree_nodes = 50000;
};

KarpMillerGraph build_km(const BuchiVass& v, const KmBudget& budget = {});

// Largest finite entry over all node counter vectors; 0 if none.
Int km_max_finite(const KarpMillerGraph& km);

// Replays the tree path to `node`, repeating recorded acceleration cycles
// just enough that every omega coordinate reaches at least `demand` (entries
// for finite coordinates must not exceed their exact values). Returns the
// concrete transition sequence from the initial configuration and the reached
// counters. Throws UnliftablePath if the demand cannot be met (bug signal).
struct LiftResult {
  std::vector<int> transitions;
  IntVec reached;
};
LiftResult lift_to_node(const KarpMillerGraph& km, int node, const IntVec& demand);

// Concrete transition sequence realizing one traversal of a cycle of graph
// edges (used to turn abstract lassos into runs); simply the edge labels.
std::vector<int> edge_transitions(const KarpMillerGraph& km, const std::vector<int>& edge_ids);

}  // namespace regsep
