#include <doctest.h>

#include "fixtures.hpp"
#include "regsep/oracle.hpp"
#include "regsep/pump.hpp"

using namespace regsep;
using namespace regsep::fixtures;

namespace {
const LetterId a1 = Alphabet::push_letter(0);
const LetterId A1 = Alphabet::pop_letter(0);
}  // namespace

TEST_SUITE_BEGIN("pump");

TEST_CASE("vbar erases labels and tracks balances") {
  BuchiVass v = counter_net();
  BuchiVass vb = build_vbar(v);
  CHECK(vb.dimension == 2);
  REQUIRE(vb.transitions.size() == v.transitions.size());
  for (const auto& t : vb.transitions) CHECK(t.label.empty());
  // (q2, a1, -1, q2) becomes (q2, eps, (-1, +1), q2)
  CHECK(vb.transitions[3].update == IntVec{Int(-1), Int(1)});
  // (q2, abar1, +1, q2) becomes (q2, eps, (+1, -1), q2)
  CHECK(vb.transitions[4].update == IntVec{Int(1), Int(-1)});
  // eps label keeps a zero balance part
  CHECK(vb.transitions[0].update == IntVec{Int(1), Int(0)});
  // control flow is untouched
  for (std::size_t i = 0; i < v.transitions.size(); ++i) {
    CHECK(vb.transitions[i].source == v.transitions[i].source);
    CHECK(vb.transitions[i].target == v.transitions[i].target);
  }
}

TEST_CASE("vbar needs a Dyck alphabet") {
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::named({"x"});
  v.add_state("q", true);
  v.add_transition(0, RleWord::letter(0), IntVec{}, 0);
  CHECK_THROWS_AS(build_vbar(v), NotDyckAlphabet);
}

TEST_CASE("counter net pump artifacts") {
  BuchiVass v = counter_net();
  PumpArtifacts pa = build_pump(v);
  // KM(vbar): {q0,q1,q2} x {(0,0),(w,0)} plus the (w,w) pair of q2/q1
  CHECK(pa.km_vbar.nodes.size() == 8);
  CHECK(pa.k == 0);
  CHECK(pa.pump_v.num_states() == 8);
  CHECK(pa.pump_v.transitions.size() == pa.km_vbar.edges.size());
  // final states are exactly those with control q1
  for (int i = 0; i < pa.pump_v.num_states(); ++i)
    CHECK(pa.pump_v.finals[i] == (pa.km_vbar.nodes[i].state == 1));
}

TEST_CASE("empty language pumps to an empty product") {
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::dyck(1);
  v.add_state("q0");
  v.add_state("qf", true);
  v.add_transition(0, RleWord::letter(a1), IntVec{}, 0);
  PumpArtifacts pa = build_pump(v);
  CHECK(is_empty(pa.pump_v));
}

TEST_CASE("pump keeps the language of a Dyck-safe loop") {
  // single state reading a1 abar1 forever
  BuchiVass v;
  v.dimension = 0;
  v.alphabet = Alphabet::dyck(1);
  v.add_state("q", true);
  v.add_transition(0, RleWord(std::vector<Run>{{a1, 1}, {A1, 1}}), IntVec{}, 0);
  PumpArtifacts pa = build_pump(v);
  UPWord w{RleWord(), RleWord(std::vector<Run>{{a1, 1}, {A1, 1}})};
  CHECK(member_lang(pa.pump_v, w).verdict);
  for (const auto& s : fuzz_accepted_words(v, 4, Int(32)))
    CHECK(member_lang(pa.pump_v, s).verdict);
}

TEST_CASE("pump inclusion sandwich on the counter net") {
  BuchiVass v = counter_net();
  PumpArtifacts pa = build_pump(v);
  for (const auto& w : fuzz_accepted_words(pa.pump_v, 10, Int(64)))
    CHECK(member_lang(v, w).verdict);
  for (const auto& w : fuzz_accepted_words(v, 10, Int(64))) {
    if (member_lang(pa.pump_v, w).verdict) continue;
    bool in_p = false;
    for (int i = 1; i <= 1; ++i)
      if (member_p(w, 1, i, pa.k).verdict) in_p = true;
    CHECK(in_p);
  }
}

TEST_CASE("pump prefix witness boosts crossing coordinates") {
  BuchiVass v = counter_net();
  PumpArtifacts pa = build_pump(v);
  // Accepting lasso of pump_v over (a1^2 abar1^3)^omega: find it through the
  // membership oracle, then check the pumpability contract for several k.
  UPWord w{RleWord(),
           RleWord(std::vector<Run>{{a1, 2}, {A1, 3}})};
  MembershipReport rep = member_lang(pa.pump_v, w);
  REQUIRE(rep.verdict);
  PumpLasso lasso{rep.lasso_stem, rep.lasso_cycle};
  for (long kk : {0L, 2L, 5L}) {
    Int k(kk);
    PumpWitness pw = pump_prefix_witness(pa, w, lasso, k);
    Balance b0 = balance(pw.w0, v.alphabet);
    Balance b0p = balance(pw.w0_prime, v.alphabet);
    CHECK(pointwise_leq(b0, b0p));
    for (int i : pw.omega_coords) {
      Int base = b0[i] > 0 ? b0[i] : Int(0);
      CHECK(b0p[i] >= base + k);
    }
    // w0' is a prefix of a Dyck word: all prefix balances stay nonnegative
    UPWord dyck_probe{pw.w0_prime, RleWord(std::vector<Run>{{a1, 1}, {A1, 1}})};
    CHECK(member_dyck(dyck_probe, 1).verdict);
    // replaced prefix still yields an accepted word
    RleWord u = pw.w0_prime.concat(pw.w1_word);
    CHECK(member_lang(pa.pump_v, up_normalize(u, pw.w1_period)).verdict);
  }
}

TEST_CASE("pump witness rejects broken lassos") {
  BuchiVass v = counter_net();
  PumpArtifacts pa = build_pump(v);
  UPWord w{RleWord(), RleWord(std::vector<Run>{{a1, 2}, {A1, 3}})};
  MembershipReport rep = member_lang(pa.pump_v, w);
  REQUIRE(rep.verdict);
  PumpLasso broken{rep.lasso_stem, rep.lasso_cycle};
  broken.cycle.pop_back();  // no longer closes
  CHECK_THROWS_AS(pump_prefix_witness(pa, w, broken, Int(0)), NotAnAcceptingRun);
  PumpLasso wrong_word{rep.lasso_stem, rep.lasso_cycle};
  UPWord other{RleWord(), RleWord(std::vector<Run>{{a1, 3}, {A1, 4}})};
  CHECK_THROWS_AS(pump_prefix_witness(pa, other, wrong_word, Int(0)), NotAnAcceptingRun);
}

TEST_SUITE_END();
