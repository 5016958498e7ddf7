#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "regsep/karpmiller.hpp"

using namespace regsep;
using namespace regsep::fixtures;

TEST_SUITE_BEGIN("karpmiller");

TEST_CASE("single +1 loop accelerates to the two-node graph") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::dyck(1);
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord(), IntVec{Int(1)}, q);

  KarpMillerGraph km = build_km(v);
  REQUIRE(km.nodes.size() == 2);
  CHECK(km.nodes[0].counters[0] == OmegaNat::fin(0));
  CHECK(km.nodes[1].counters[0].omega);
  REQUIRE(km.edges.size() == 2);
  CHECK(km.edges[0].src == 0);
  CHECK(km.edges[0].tgt == 1);
  CHECK(km.edges[1].src == 1);
  CHECK(km.edges[1].tgt == 1);
}

TEST_CASE("d = 0 graph is the automaton itself") {
  BuchiVass a = drop_cycle_automaton();
  KarpMillerGraph km = build_km(a);
  CHECK(km.nodes.size() == 3);
  CHECK(km.edges.size() == 3);
  for (const auto& n : km.nodes) CHECK(n.counters.empty());
}

TEST_CASE("budget is honored") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::dyck(1);
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord(), IntVec{Int(1)}, q);
  KmBudget tiny;
  tiny.max_tree_nodes = 1;
  CHECK_THROWS_AS(build_km(v, tiny), BudgetExceeded);
}

TEST_CASE("km_max_finite picks the largest finite entry") {
  BuchiVass v;
  v.dimension = 2;
  v.alphabet = Alphabet::dyck(1);
  int q = v.add_state("q", true);
  int p = v.add_state("p");
  v.add_transition(q, RleWord(), IntVec{Int(3), Int(0)}, p);
  v.add_transition(p, RleWord(), IntVec{Int(2), Int(1)}, p);

  KarpMillerGraph km = build_km(v);
  CHECK(km_max_finite(km) == 3);  // (p, 3, 0); the next step accelerates both coordinates
}

TEST_CASE("omega entries absorb along edges") {
  BuchiVass v = counter_net();
  KarpMillerGraph km = build_km(v);
  for (const auto& e : km.edges)
    for (int i = 0; i < v.dimension; ++i)
      if (km.nodes[e.src].counters[i].omega) CHECK(km.nodes[e.tgt].counters[i].omega);
}

TEST_CASE("soundness: concrete runs embed below the abstraction") {
  BuchiVass v = counter_net();
  KarpMillerGraph km = build_km(v);
  std::mt19937 rng(5);
  for (int round = 0; round < 300; ++round) {
    Configuration c{v.initial, zero_vec(v.dimension)};
    int node = km.initial;
    for (int steps = 0; steps < 12; ++steps) {
      std::vector<int> enabled;
      for (std::size_t t = 0; t < v.transitions.size(); ++t) {
        if (v.transitions[t].source != c.state) continue;
        bool ok = true;
        for (int i = 0; i < v.dimension; ++i)
          if (c.counters[i] + v.transitions[t].update[i] < 0) ok = false;
        if (ok) enabled.push_back(static_cast<int>(t));
      }
      if (enabled.empty()) break;
      int t = enabled[rng() % enabled.size()];
      c = step(v, c, v.transitions[t]);
      // follow some edge labeled t from the current node
      int next = -1;
      for (int eid : km.out[node])
        if (km.edges[eid].trans == t) {
          next = km.edges[eid].tgt;
          break;
        }
      REQUIRE(next != -1);
      node = next;
      for (int i = 0; i < v.dimension; ++i)
        if (!km.nodes[node].counters[i].omega)
          CHECK(km.nodes[node].counters[i].value == c.counters[i]);
    }
  }
}

TEST_CASE("lifting meets demands on omega coordinates") {
  BuchiVass v = counter_net();
  KarpMillerGraph km = build_km(v);
  // find the (q1, w) node
  int target = -1;
  for (std::size_t i = 0; i < km.nodes.size(); ++i)
    if (km.nodes[i].state == 1 && km.nodes[i].counters[0].omega) target = static_cast<int>(i);
  REQUIRE(target != -1);
  for (long want : {0L, 1L, 7L, 123L}) {
    LiftResult lift = lift_to_node(km, target, IntVec{Int(want)});
    CHECK(lift.reached[0] >= want);
    // replay is a genuine run
    Configuration c{v.initial, zero_vec(v.dimension)};
    for (int ti : lift.transitions) c = step(v, c, v.transitions[ti]);
    CHECK(c.state == 1);
    CHECK(c.counters == lift.reached);
  }
}

TEST_SUITE_END();
