#pragma once

#include <map>
#include <optional>
#include <vector>

#include "regsep/karpmiller.hpp"
#include "regsep/ratlp.hpp"

namespace regsep {

// Integer circulation over a set of Karp-Miller edges: every counted edge is
// used the stated number of times, flow is conserved at every node, and the
// total counter effect is componentwise nonnegative.
struct Circulation {
  std::vector<int> edge_ids;  // sorted
  IntVec counts;              // parallel to edge_ids, all >= 1
  int anchor;                 // a final node on the support
};

// Rational feasibility of the circulation system over the given edges:
//   x_e >= 1 for all e, flow conservation, sum x_e * delta(e) >= 0, and
//   (optionally) at least one unit on letter-reading edges so the induced
//   lasso spells an infinite word. Returns the scaled integer witness.
std::optional<IntVec> circulation_witness(const KarpMillerGraph& km,
                                          const std::vector<int>& edge_ids,
                                          bool require_letter_progress);

// Searches for a nonempty-language witness anchored at the given final node:
// a connected circulation through it with nonnegative effect that reads at
// least one letter. Implements the support-refinement loop over rational
// feasibility checks.
std::optional<Circulation> find_circulation_at(const KarpMillerGraph& km, int final_node);

// True iff some final node carries a circulation as above, i.e. iff the
// omega-language of the underlying VASS is nonempty.
bool live_final_exists(const KarpMillerGraph& km);
std::optional<Circulation> find_any_circulation(const KarpMillerGraph& km);

// Stable final-anchored pieces of the support refinement within the given
// edge set: maximal edge sets whose full circulation (every edge at least
// once, nonnegative effect, a letter) exists and is connected through one of
// the finals. Deterministic order.
std::vector<std::vector<int>> live_cores(const KarpMillerGraph& km,
                                         const std::vector<int>& scc_edges,
                                         const std::vector<int>& finals);

// Deterministic Eulerian circuit of the circulation, starting at its anchor.
// Returns graph edge ids in traversal order.
std::vector<int> euler_circuit(const KarpMillerGraph& km, const Circulation& c);

// Net counter effect and minimum prefix effect of a transition sequence.
void run_effect(const BuchiVass& v, const std::vector<int>& transitions, IntVec* delta,
                IntVec* dip);

// Concrete accepting lasso realizing the circulation: a stem from the initial
// configuration to the anchor (pumped high enough to loop forever) plus one
// Euler traversal of the circulation.
struct Lasso {
  std::vector<int> stem;   // VASS transition indices
  std::vector<int> cycle;  // VASS transition indices, nonneg effect
};
Lasso lasso_from_circulation(const KarpMillerGraph& km, const Circulation& c);

}  // namespace regsep
