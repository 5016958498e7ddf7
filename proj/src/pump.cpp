#include "regsep/pump.hpp"

#include "regsep/errors.hpp"
#include "regsep/liveness.hpp"

namespace regsep {

BuchiVass build_vbar(const BuchiVass& v) {
  if (!v.alphabet.is_dyck()) throw NotDyckAlphabet();
  const int n = v.alphabet.pairs();
  BuchiVass b;
  b.dimension = v.dimension + n;
  b.alphabet = v.alphabet;
  b.state_names = v.state_names;
  b.initial = v.initial;
  b.finals = v.finals;
  for (const Transition& t : v.transitions) {
    IntVec update = t.update;
    Balance phi = balance(t.label, v.alphabet);
    update.insert(update.end(), phi.begin(), phi.end());
    b.add_transition(t.source, RleWord(), std::move(update), t.target);
  }
  return b;
}

PumpArtifacts build_pump(const BuchiVass& v, const KmBudget& budget) {
  PumpArtifacts pa;
  pa.original = v;
  pa.vbar = build_vbar(v);
  pa.km_vbar = build_km(pa.vbar, budget);
  pa.k = km_max_finite(pa.km_vbar);

  BuchiVass p;
  p.dimension = v.dimension;
  p.alphabet = v.alphabet;
  for (std::size_t i = 0; i < pa.km_vbar.nodes.size(); ++i)
    p.add_state(pa.km_vbar.node_to_string(static_cast<int>(i)),
                v.is_final(pa.km_vbar.nodes[i].state));
  p.initial = pa.km_vbar.initial;
  for (const KmEdge& e : pa.km_vbar.edges) {
    const Transition& orig = v.transitions[e.trans];
    IntVec update(orig.update.begin(), orig.update.begin() + v.dimension);
    p.add_transition(e.src, orig.label, std::move(update), e.tgt);
  }
  pa.pump_v = std::move(p);
  return pa;
}

PumpWitness pump_prefix_witness(const PumpArtifacts& pa, const UPWord& word,
                                const PumpLasso& lasso, const Int& k) {
  const BuchiVass& pump = pa.pump_v;
  const int d = pa.original.dimension;
  const int n = pa.original.alphabet.pairs();

  // Verify the lasso: a run of pump_v, word match, final on the cycle,
  // nonnegative cycle effect.
  Configuration c{pump.initial, zero_vec(d)};
  std::vector<Configuration> stem_configs{c};
  RleWord stem_word;
  for (int ti : lasso.stem) {
    const Transition& t = pump.transitions.at(ti);
    c = step(pump, c, t);
    stem_configs.push_back(c);
    stem_word.append(t.label);
  }
  Configuration cyc = c;
  RleWord cycle_word;
  bool cycle_final = pump.is_final(cyc.state);
  for (int ti : lasso.cycle) {
    const Transition& t = pump.transitions.at(ti);
    cyc = step(pump, cyc, t);
    cycle_word.append(t.label);
    if (pump.is_final(cyc.state)) cycle_final = true;
  }
  if (cyc.state != c.state) throw NotAnAcceptingRun("lasso cycle does not close");
  if (!cycle_final) throw NotAnAcceptingRun("lasso cycle avoids final states");
  if (!pointwise_leq(c.counters, cyc.counters))
    throw NotAnAcceptingRun("lasso cycle has a negative counter effect");
  if (cycle_word.empty()) throw NotAnAcceptingRun("lasso cycle reads the empty word");
  if (!(up_normalize(stem_word, cycle_word) == up_normalize(word)))
    throw NotAnAcceptingRun("lasso does not spell the given word");

  // Eventually-omega balance coordinates: read off the cycle states.
  int probe = pump.transitions[lasso.cycle.front()].source;
  const ExtConfig& cyc_cfg = pa.km_vbar.nodes[probe].counters;
  std::vector<int> omega_coords;
  for (int i = 0; i < n; ++i)
    if (cyc_cfg[d + i].omega) omega_coords.push_back(i);

  // Decomposition point: first stem position whose node already carries all
  // those omegas.
  std::size_t split = lasso.stem.size();
  for (std::size_t p = 0; p <= lasso.stem.size(); ++p) {
    int node = (p == 0) ? pump.initial : pump.transitions[lasso.stem[p - 1]].target;
    const ExtConfig& cfg = pa.km_vbar.nodes[node].counters;
    bool all = true;
    for (int i : omega_coords)
      if (!cfg[d + i].omega) all = false;
    if (all) {
      split = p;
      break;
    }
  }
  if (split > lasso.stem.size()) throw InternalInvariantViolation("no decomposition point");

  PumpWitness w;
  for (std::size_t p = 0; p < split; ++p)
    w.w0.append(pump.transitions[lasso.stem[p]].label);
  for (std::size_t p = split; p < lasso.stem.size(); ++p) {
    w.tail_stem.push_back(lasso.stem[p]);
    w.w1_word.append(pump.transitions[lasso.stem[p]].label);
  }
  w.tail_cycle = lasso.cycle;
  w.w1_period = cycle_word;
  w.omega_coords = omega_coords;

  int split_node =
      (split == 0) ? pump.initial : pump.transitions[lasso.stem[split - 1]].target;
  Balance phi_w0 = balance(w.w0, pa.original.alphabet);

  // Demands in Vbar: original counters must reach at least the run's actual
  // values, raised balance coordinates get the pumping margin.
  IntVec demand = zero_vec(d + n);
  const ExtConfig& split_cfg = pa.km_vbar.nodes[split_node].counters;
  for (int i = 0; i < d; ++i)
    if (split_cfg[i].omega) demand[i] = stem_configs[split].counters[i];
  for (int i : omega_coords) {
    Int base = phi_w0[i] > 0 ? phi_w0[i] : Int(0);
    demand[d + i] = base + k;
  }
  LiftResult lifted = lift_to_node(pa.km_vbar, split_node, demand);
  for (int ti : lifted.transitions) w.w0_prime.append(pa.original.transitions[ti].label);
  return w;
}

}  // namespace regsep
