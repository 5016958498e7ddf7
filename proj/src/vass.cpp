#include "regsep/vass.hpp"

#include "regsep/errors.hpp"

namespace regsep {

Configuration step(const BuchiVass& v, const Configuration& c, const Transition& t) {
  if (t.source != c.state)
    throw BrokenChain("transition source " + std::to_string(t.source) +
                      " does not match current state " + std::to_string(c.state));
  Configuration out;
  out.state = t.target;
  out.counters = c.counters;
  for (int i = 0; i < v.dimension; ++i) {
    out.counters[i] += t.update[i];
    if (out.counters[i] < 0) throw CounterUnderflow(i);
  }
  return out;
}

PrefixResult simulate_prefix(const BuchiVass& v, const std::vector<int>& transition_indices) {
  PrefixResult r;
  r.config = {v.initial, zero_vec(v.dimension)};
  for (int ti : transition_indices) {
    const Transition& t = v.transitions.at(ti);
    r.config = step(v, r.config, t);
    r.word.append(t.label);
  }
  if (v.alphabet.is_dyck()) r.word_balance = balance(r.word, v.alphabet);
  return r;
}

std::vector<std::string> validate(const BuchiVass& v) {
  std::vector<std::string> diags;
  const int n = v.num_states();
  if (v.dimension < 0) diags.push_back("NegativeDimension");
  if (v.initial < 0 || v.initial >= n) diags.push_back("UnknownInitialState");
  if (static_cast<int>(v.finals.size()) != n) diags.push_back("UnknownFinalState");
  for (std::size_t i = 0; i < v.transitions.size(); ++i) {
    const Transition& t = v.transitions[i];
    std::string at = " (transition " + std::to_string(i) + ")";
    if (t.source < 0 || t.source >= n) diags.push_back("UnknownSourceState" + at);
    if (t.target < 0 || t.target >= n) diags.push_back("UnknownTargetState" + at);
    if (static_cast<int>(t.update.size()) != v.dimension) diags.push_back("ArityMismatch" + at);
    for (const auto& run : t.label.runs()) {
      if (!v.alphabet.contains(run.letter)) {
        diags.push_back("UnknownLetter" + at);
        break;
      }
      if (run.count <= 0) {
        diags.push_back("NonPositiveRunCount" + at);
        break;
      }
    }
  }
  return diags;
}

TrimResult trim_to_live(const BuchiVass& v) {
  const int n = v.num_states();
  std::vector<std::vector<int>> succ(n), pred(n);
  for (const auto& t : v.transitions) {
    succ[t.source].push_back(t.target);
    pred[t.target].push_back(t.source);
  }
  auto closure = [&](std::vector<bool>& mark, const std::vector<std::vector<int>>& adj) {
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
      if (mark[i]) stack.push_back(i);
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int w : adj[q])
        if (!mark[w]) {
          mark[w] = true;
          stack.push_back(w);
        }
    }
  };

  std::vector<bool> reach(n, false);
  reach[v.initial] = true;
  closure(reach, succ);

  // Finals that can see themselves again can recur; everything co-reachable
  // from such a final stays.
  std::vector<bool> live(n, false);
  for (int f = 0; f < n; ++f) {
    if (!v.finals[f] || !reach[f]) continue;
    std::vector<bool> back(n, false);
    for (int w : succ[f]) back[w] = true;
    closure(back, succ);
    if (back[f]) live[f] = true;
  }
  closure(live, pred);

  std::vector<int> remap(n, -1);
  TrimResult out;
  out.vass.dimension = v.dimension;
  out.vass.alphabet = v.alphabet;
  for (int q = 0; q < n; ++q)
    if (reach[q] && live[q]) remap[q] = out.vass.add_state(v.state_names[q], v.finals[q]);
  if (remap[v.initial] == -1) {
    // empty language: a bare initial state
    out.vass = BuchiVass{};
    out.vass.dimension = v.dimension;
    out.vass.alphabet = v.alphabet;
    out.vass.add_state(v.state_names[v.initial]);
    out.vass.initial = 0;
    return out;
  }
  out.vass.initial = remap[v.initial];
  for (std::size_t i = 0; i < v.transitions.size(); ++i) {
    const Transition& t = v.transitions[i];
    if (remap[t.source] == -1 || remap[t.target] == -1) continue;
    out.vass.add_transition(remap[t.source], t.label, t.update, remap[t.target]);
    out.kept_transitions.push_back(static_cast<int>(i));
  }
  return out;
}

BuchiVass dyck_acceptor(int n) {
  BuchiVass v;
  v.dimension = n;
  v.alphabet = Alphabet::dyck(n);
  int q = v.add_state("q", true);
  for (int i = 0; i < n; ++i) {
    IntVec up = zero_vec(n), down = zero_vec(n);
    up[i] = 1;
    down[i] = -1;
    v.add_transition(q, RleWord::letter(Alphabet::push_letter(i)), up, q);
    v.add_transition(q, RleWord::letter(Alphabet::pop_letter(i)), down, q);
  }
  return v;
}

}  // namespace regsep
