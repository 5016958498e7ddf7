#pragma once

#include <vector>

#include "regsep/karpmiller.hpp"
#include "regsep/vass.hpp"

namespace regsep {

// Balance-tracking extension: labels erased, n extra counters carry the
// letter balance of each original label.
BuchiVass build_vbar(const BuchiVass& v);

struct PumpArtifacts {
  BuchiVass original;
  BuchiVass vbar;
  KarpMillerGraph km_vbar;
  BuchiVass pump_v;  // state i is node i of km_vbar; transition j is edge j
  Int k;             // largest finite entry of km_vbar
};

// pump(V): the product of V with KM(Vbar). L(pump) is pumpable and
// L(pump) <= L(V) <= L(pump) + P_k.
PumpArtifacts build_pump(const BuchiVass& v, const KmBudget& budget = {});

// Accepting lasso of pump_v: stem then cycle, as pump_v transition indices.
struct PumpLasso {
  std::vector<int> stem;
  std::vector<int> cycle;
};

struct PumpWitness {
  RleWord w0;        // replaced prefix of the word
  RleWord w0_prime;  // Dyck-safe replacement with boosted balances
  // Reusable suffix: the run and word after the decomposition point.
  std::vector<int> tail_stem;   // pump_v transitions, rest of the stem
  std::vector<int> tail_cycle;  // pump_v transitions, the lasso cycle
  RleWord w1_word;              // word of tail_stem
  RleWord w1_period;            // word of tail_cycle
  std::vector<int> omega_coords;  // balance coordinates raised along the run
};

// Constructive pumpability: trades the prefix w0 of an accepted word for a
// Dyck-prefix w0' with balance(w0') >= balance(w0) and, on every eventually-
// omega balance coordinate, a margin of at least k over max(balance(w0), 0).
// The suffix run stays valid, so w0'.w1 is accepted by pump_v.
PumpWitness pump_prefix_witness(const PumpArtifacts& pa, const UPWord& word,
                                const PumpLasso& lasso, const Int& k);

}  // namespace regsep
