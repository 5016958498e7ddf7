#pragma once

#include "regsep/vass.hpp"

namespace regsep::fixtures {

// One-counter net over Sigma_1: pump the counter in q0, then loop q1->q2->q1
// reading a1 (counter down) and abar1 (counter up), dropping one abar1 per
// visit to the final state q1. Accepts (a1^j abar1^{j+1})^omega for every j.
inline BuchiVass counter_net() {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::dyck(1);
  int q0 = v.add_state("q0");
  int q1 = v.add_state("q1", true);
  int q2 = v.add_state("q2");
  const LetterId a1 = Alphabet::push_letter(0);
  const LetterId A1 = Alphabet::pop_letter(0);
  v.add_transition(q0, RleWord(), IntVec{Int(1)}, q0);
  v.add_transition(q0, RleWord(), IntVec{Int(0)}, q1);
  v.add_transition(q1, RleWord(), IntVec{Int(0)}, q2);
  v.add_transition(q2, RleWord::letter(a1), IntVec{Int(-1)}, q2);
  v.add_transition(q2, RleWord::letter(A1), IntVec{Int(1)}, q2);
  v.add_transition(q2, RleWord::letter(A1), IntVec{Int(0)}, q1);
  return v;
}

// 0-dimensional automaton accepting exactly (a1 abar1 abar1)^omega.
inline BuchiVass drop_cycle_automaton() {
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::dyck(1);
  int s0 = v.add_state("s0", true);
  int s1 = v.add_state("s1");
  int s2 = v.add_state("s2");
  const LetterId a1 = Alphabet::push_letter(0);
  const LetterId A1 = Alphabet::pop_letter(0);
  v.add_transition(s0, RleWord::letter(a1), IntVec{}, s1);
  v.add_transition(s1, RleWord::letter(A1), IntVec{}, s2);
  v.add_transition(s2, RleWord::letter(A1), IntVec{}, s0);
  return v;
}

// 0-dimensional automaton accepting abar1^omega.
inline BuchiVass pop_loop_automaton() {
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::dyck(1);
  int s0 = v.add_state("s0", true);
  v.add_transition(s0, RleWord::letter(Alphabet::pop_letter(0)), IntVec{}, s0);
  return v;
}

// 0-dimensional automaton accepting a1^* abar1^omega: unbounded balance
// before crossing, so its cover genuinely needs an S atom after pumping.
inline BuchiVass rise_then_fall_automaton() {
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::dyck(1);
  int p = v.add_state("p");
  int q = v.add_state("q", true);
  const LetterId a1 = Alphabet::push_letter(0);
  const LetterId A1 = Alphabet::pop_letter(0);
  v.add_transition(p, RleWord::letter(a1), IntVec{}, p);
  v.add_transition(p, RleWord::letter(A1), IntVec{}, q);
  v.add_transition(q, RleWord::letter(A1), IntVec{}, q);
  return v;
}

inline RleWord word1(LetterId l, long c = 1) { return RleWord::letter(l, Int(c)); }

}  // namespace regsep::fixtures
