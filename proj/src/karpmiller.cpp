#include "regsep/karpmiller.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "regsep/errors.hpp"

namespace regsep {

namespace {

struct ConfigKey {
  int state;
  ExtConfig counters;
  bool operator<(const ConfigKey& o) const {
    if (state != o.state) return state < o.state;
    for (std::size_t i = 0; i < counters.size(); ++i) {
      const OmegaNat& a = counters[i];
      const OmegaNat& b = o.counters[i];
      if (a.omega != b.omega) return !a.omega;
      if (!a.omega && a.value != b.value) return a.value < b.value;
    }
    return false;
  }
};

bool dominated(const ExtConfig& lo, const ExtConfig& hi) {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!lo[i].leq(hi[i])) return false;
  return true;
}

}  // namespace

std::string KarpMillerGraph::node_to_string(int id) const {
  const KmNode& n = nodes[id];
  std::string s = vass.state_names[n.state] + " [";
  for (std::size_t i = 0; i < n.counters.size(); ++i) {
    if (i) s += " ";
    s += n.counters[i].to_string();
  }
  return s + "]";
}

KarpMillerGraph build_km(const BuchiVass& v, const KmBudget& budget) {
  KarpMillerGraph km;
  km.vass = v;

  std::map<ConfigKey, int> graph_ids;
  std::set<std::tuple<int, int, int>> edge_seen;

  auto find_graph_id = [&](int state, const ExtConfig& cfg) {
    auto it = graph_ids.find(ConfigKey{state, cfg});
    return it == graph_ids.end() ? -1 : it->second;
  };
  auto new_graph_node = [&](int state, const ExtConfig& cfg, int tree_idx) {
    int id = static_cast<int>(km.nodes.size());
    km.nodes.push_back({state, cfg, tree_idx});
    graph_ids.emplace(ConfigKey{state, cfg}, id);
    if (v.is_final(state)) km.final_nodes.push_back(id);
    return id;
  };

  auto add_edge = [&](int src, int trans, int tgt) {
    if (edge_seen.insert({src, trans, tgt}).second) km.edges.push_back({src, trans, tgt});
  };

  // Per-state transition index for expansion in declaration order.
  std::vector<std::vector<int>> trans_by_state(v.num_states());
  for (std::size_t i = 0; i < v.transitions.size(); ++i)
    trans_by_state[v.transitions[i].source].push_back(static_cast<int>(i));

  ExtConfig init(v.dimension);
  for (auto& c : init) c = OmegaNat::fin(0);
  km.tree.push_back({-1, -1, -1, {}});
  km.tree[0].graph_id = new_graph_node(v.initial, init, 0);
  km.initial = km.tree[0].graph_id;

  // Per-tree-node control state and configuration (parallel to km.tree).
  std::vector<int> tstate{v.initial};
  std::vector<ExtConfig> tcfg{init};

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    int state = tstate[cur];
    ExtConfig cfg = tcfg[cur];  // copy: tcfg grows while expanding
    for (int ti : trans_by_state[state]) {
      const Transition& t = v.transitions[ti];
      ExtConfig child(cfg);
      bool enabled = true;
      for (int i = 0; i < v.dimension; ++i) {
        if (child[i].omega) continue;
        child[i].value += t.update[i];
        if (child[i].value < 0) {
          enabled = false;
          break;
        }
      }
      if (!enabled) continue;

      // Ancestor-path acceleration, iterated to a fixpoint: raising a
      // coordinate can make further ancestors comparable.
      std::vector<KmAcceleration> accels;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a = cur; a != -1; a = km.tree[a].parent) {
          if (tstate[a] != t.target) continue;
          if (!dominated(tcfg[a], child)) continue;
          std::vector<int> raised;
          for (int i = 0; i < v.dimension; ++i)
            if (!child[i].omega && tcfg[a][i].lt(child[i])) raised.push_back(i);
          if (raised.empty()) continue;
          for (int i : raised) child[i] = OmegaNat::om();
          accels.push_back({a, raised});
          changed = true;
        }
      }

      // Each extended configuration is expanded once, at its first breadth-
      // first occurrence; later arrivals only contribute an edge.
      int existing = find_graph_id(t.target, child);
      if (existing != -1) {
        add_edge(km.tree[cur].graph_id, ti, existing);
        continue;
      }

      if (static_cast<long long>(km.tree.size()) >= budget.max_tree_nodes)
        throw BudgetExceeded("Karp-Miller tree node", static_cast<long long>(km.tree.size()));

      int tree_idx = static_cast<int>(km.tree.size());
      km.tree.push_back({-1, cur, ti, std::move(accels)});
      tstate.push_back(t.target);
      tcfg.push_back(child);
      km.tree[tree_idx].graph_id = new_graph_node(t.target, tcfg[tree_idx], tree_idx);
      add_edge(km.tree[cur].graph_id, ti, km.tree[tree_idx].graph_id);
      queue.push_back(tree_idx);
    }
  }

  km.out.assign(km.nodes.size(), {});
  for (std::size_t e = 0; e < km.edges.size(); ++e)
    km.out[km.edges[e].src].push_back(static_cast<int>(e));
  return km;
}

Int km_max_finite(const KarpMillerGraph& km) {
  Int m = 0;
  for (const auto& n : km.nodes)
    for (const auto& c : n.counters)
      if (!c.omega && c.value > m) m = c.value;
  return m;
}

std::vector<int> edge_transitions(const KarpMillerGraph& km, const std::vector<int>& edge_ids) {
  std::vector<int> ts;
  ts.reserve(edge_ids.size());
  for (int e : edge_ids) ts.push_back(km.edges[e].trans);
  return ts;
}

namespace {

// Net effect and minimum prefix effect of a transition sequence.
void effect_and_dip(const BuchiVass& v, const std::vector<int>& ts, IntVec* delta, IntVec* dip) {
  *delta = zero_vec(v.dimension);
  *dip = zero_vec(v.dimension);
  for (int ti : ts) {
    const Transition& t = v.transitions[ti];
    for (int i = 0; i < v.dimension; ++i) {
      (*delta)[i] += t.update[i];
      if ((*delta)[i] < (*dip)[i]) (*dip)[i] = (*delta)[i];
    }
  }
}

struct LiftItem {
  bool is_cycle;
  int trans = -1;          // plain edge
  std::vector<int> cycle;  // pumping segment, repeated reps times
  std::vector<int> raised;
  Int reps = 0;
  IntVec delta, dip;
};

constexpr long long kMaxLiftedLength = 2000000;

}  // namespace

LiftResult lift_to_node(const KarpMillerGraph& km, int node, const IntVec& demand) {
  const BuchiVass& v = km.vass;
  if (static_cast<int>(demand.size()) != v.dimension)
    throw DimensionMismatch("lift demand arity");

  // Tree path root..target.
  std::vector<int> path;
  for (int t = km.nodes[node].first_tree; t != -1; t = km.tree[t].parent) path.push_back(t);
  std::reverse(path.begin(), path.end());

  // Transition labels along the path, indexed by tree depth.
  std::vector<LiftItem> items;
  std::vector<int> path_trans;  // path_trans[i] labels the edge into path[i]
  path_trans.assign(path.size(), -1);
  for (std::size_t i = 1; i < path.size(); ++i) path_trans[i] = km.tree[path[i]].parent_trans;
  std::vector<int> depth_of(km.tree.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) depth_of[path[i]] = static_cast<int>(i);

  for (std::size_t i = 1; i < path.size(); ++i) {
    LiftItem edge;
    edge.is_cycle = false;
    edge.trans = path_trans[i];
    items.push_back(std::move(edge));
    for (const KmAcceleration& acc : km.tree[path[i]].accels) {
      LiftItem cy;
      cy.is_cycle = true;
      cy.raised = acc.raised;
      int from_depth = depth_of[acc.ancestor];
      if (from_depth < 0) throw InternalInvariantViolation("acceleration ancestor off path");
      for (std::size_t j = from_depth + 1; j <= i; ++j) cy.cycle.push_back(path_trans[j]);
      effect_and_dip(v, cy.cycle, &cy.delta, &cy.dip);
      items.push_back(std::move(cy));
    }
  }

  // Backward demand pass chooses repetition counts.
  IntVec need = demand;
  for (auto& x : need)
    if (x < 0) x = 0;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (!it->is_cycle) {
      const Transition& t = v.transitions[it->trans];
      for (int i = 0; i < v.dimension; ++i) {
        need[i] -= t.update[i];
        if (need[i] < 0) need[i] = 0;
      }
      continue;
    }
    Int reps = 0;
    for (int c : it->raised) {
      if (need[c] <= 0) continue;
      Int r = ceil_div(need[c], it->delta[c]);  // delta >= 1 on raised coords
      if (r > reps) reps = r;
    }
    it->reps = reps;
    if (reps == 0) continue;
    for (int i = 0; i < v.dimension; ++i) {
      Int after = need[i] - reps * it->delta[i];
      Int dip_need = -it->dip[i];
      if (it->delta[i] < 0) dip_need += (reps - 1) * (-it->delta[i]);
      Int m = after > dip_need ? after : dip_need;
      need[i] = m > 0 ? m : Int(0);
    }
  }
  for (int i = 0; i < v.dimension; ++i)
    if (need[i] > 0)
      throw UnliftablePath("demand " + need[i].get_str() + " on coordinate " +
                           std::to_string(i) + " unmet at the root");

  // Forward pass: verify exactly and materialize the run.
  LiftResult out;
  out.reached = zero_vec(v.dimension);
  long long total = 0;
  auto play = [&](int ti) {
    const Transition& t = v.transitions[ti];
    for (int i = 0; i < v.dimension; ++i) {
      out.reached[i] += t.update[i];
      if (out.reached[i] < 0)
        throw UnliftablePath("replay dips below zero on coordinate " + std::to_string(i));
    }
    out.transitions.push_back(ti);
    if (++total > kMaxLiftedLength) throw BudgetExceeded("lifted run length", total);
  };
  for (const LiftItem& it : items) {
    if (!it.is_cycle) {
      play(it.trans);
      continue;
    }
    if (it.reps == 0) continue;
    if (!it.reps.fits_slong_p()) throw BudgetExceeded("acceleration repetitions", kMaxLiftedLength);
    long reps = it.reps.get_si();
    for (long j = 0; j < reps; ++j)
      for (int ti : it.cycle) play(ti);
  }
  for (int i = 0; i < v.dimension; ++i)
    if (out.reached[i] < demand[i])
      throw UnliftablePath("lift reached less than the demanded value on coordinate " +
                           std::to_string(i));
  return out;
}

}  // namespace regsep
