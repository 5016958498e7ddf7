#include <doctest.h>

#include "fixtures.hpp"
#include "regsep/vass.hpp"

using namespace regsep;
using namespace regsep::fixtures;

TEST_SUITE_BEGIN("vass");

TEST_CASE("step applies updates and guards the counters") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::dyck(1);
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord(), IntVec{Int(1)}, q);
  v.add_transition(q, RleWord::letter(Alphabet::push_letter(0)), IntVec{Int(-1)}, q);

  Configuration c{q, IntVec{Int(0)}};
  Configuration c1 = step(v, c, v.transitions[0]);
  CHECK(c1.counters == IntVec{Int(1)});
  CHECK_THROWS_AS(step(v, c, v.transitions[1]), CounterUnderflow);
}

TEST_CASE("step on the counter net") {
  BuchiVass v = counter_net();
  // q2 --a1|-1--> q2 from counter 3
  Configuration c{2, IntVec{Int(3)}};
  Configuration c2 = step(v, c, v.transitions[3]);
  CHECK(c2.state == 2);
  CHECK(c2.counters == IntVec{Int(2)});
}

TEST_CASE("simulate_prefix folds steps and reads the word") {
  BuchiVass v = counter_net();
  PrefixResult r0 = simulate_prefix(v, {});
  CHECK(r0.config.state == v.initial);
  CHECK(r0.config.counters == IntVec{Int(0)});
  CHECK(r0.word.empty());

  PrefixResult r1 = simulate_prefix(v, {0, 0, 0});
  CHECK(r1.config.counters == IntVec{Int(3)});

  // two pump loops, q0->q1, q1->q2: counter 2, word eps
  PrefixResult r2 = simulate_prefix(v, {0, 0, 1, 2});
  CHECK(r2.config.state == 2);
  CHECK(r2.config.counters == IntVec{Int(2)});
  CHECK(r2.word.empty());
  CHECK(r2.word_balance == IntVec{Int(0)});

  CHECK_THROWS_AS(simulate_prefix(v, {0, 3}), BrokenChain);
}

TEST_CASE("validate flags structural defects") {
  BuchiVass v = counter_net();
  CHECK(validate(v).empty());

  BuchiVass bad = counter_net();
  bad.finals.push_back(true);  // finals no longer match the state set
  auto diags = validate(bad);
  REQUIRE(!diags.empty());
  CHECK(diags.front().find("UnknownFinalState") != std::string::npos);

  BuchiVass bad2 = counter_net();
  bad2.transitions[0].update.push_back(Int(1));
  auto diags2 = validate(bad2);
  REQUIRE(!diags2.empty());
  CHECK(diags2.front().find("ArityMismatch") != std::string::npos);
}

TEST_CASE("dyck acceptor shape") {
  BuchiVass d1 = dyck_acceptor(1);
  CHECK(d1.dimension == 1);
  CHECK(d1.num_states() == 1);
  CHECK(d1.transitions.size() == 2);
  CHECK(validate(d1).empty());
}

TEST_SUITE_END();
