#pragma once

#include <string>
#include <vector>

#include "regsep/word.hpp"

namespace regsep {

struct Transition {
  int source;
  RleWord label;
  IntVec update;  // length = dimension
  int target;
};

// Buchi VASS; d = 0 degenerates to a Buchi automaton.
struct BuchiVass {
  int dimension = 0;
  Alphabet alphabet;
  std::vector<std::string> state_names;  // index = state id
  int initial = 0;
  std::vector<bool> finals;  // indexed by state id
  std::vector<Transition> transitions;

  int num_states() const { return static_cast<int>(state_names.size()); }
  bool is_final(int q) const { return q >= 0 && q < num_states() && finals[q]; }

  int add_state(const std::string& name, bool final = false) {
    state_names.push_back(name);
    finals.push_back(final);
    return num_states() - 1;
  }
  void add_transition(int src, RleWord label, IntVec update, int tgt) {
    transitions.push_back({src, std::move(label), std::move(update), tgt});
  }
};

struct Configuration {
  int state;
  IntVec counters;
  bool operator==(const Configuration& o) const {
    return state == o.state && counters == o.counters;
  }
};

// One firing of transition t from c. Throws CounterUnderflow if a counter
// would drop below zero; the precondition t.source == c.state is checked.
Configuration step(const BuchiVass& v, const Configuration& c, const Transition& t);

struct PrefixResult {
  Configuration config;
  RleWord word;
  Balance word_balance;  // empty when the alphabet is not Dyck
};

// Folds step over a transition sequence from the initial configuration.
PrefixResult simulate_prefix(const BuchiVass& v, const std::vector<int>& transition_indices);

// Structural well-formedness diagnostics; empty means all invariants hold.
std::vector<std::string> validate(const BuchiVass& v);

// The single-state acceptor of D_n: one final state with loops e_i|a_i and
// -e_i|abar_i for every pair i.
BuchiVass dyck_acceptor(int n);

// Control-level trimming: drops states that are unreachable from the initial
// state or cannot reach a final state lying on a cycle. Sound for omega
// acceptance (the control graph over-approximates the counter semantics).
struct TrimResult {
  BuchiVass vass;
  std::vector<int> kept_transitions;  // new transition index -> old index
};
TrimResult trim_to_live(const BuchiVass& v);

}  // namespace regsep
