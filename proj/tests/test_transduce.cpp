#include <doctest.h>

#include "fixtures.hpp"
#include "regsep/oracle.hpp"
#include "regsep/transduce.hpp"

using namespace regsep;
using namespace regsep::fixtures;

namespace {
const LetterId a1 = Alphabet::push_letter(0);
const LetterId A1 = Alphabet::pop_letter(0);
}  // namespace

TEST_SUITE_BEGIN("transduce");

TEST_CASE("updates spell Dyck blocks") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::named({"x"});
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord::letter(0), IntVec{Int(2)}, q);
  v.add_transition(q, RleWord::letter(0), IntVec{Int(0)}, q);

  BuchiTransducer t = vass_to_transducer(v);
  REQUIRE(t.transitions.size() == 2);
  CHECK(t.transitions[0].out == RleWord::letter(a1, 2));
  // zero update becomes a1 abar1 to keep outputs infinite
  CHECK(t.transitions[1].out == RleWord(std::vector<Run>{{a1, 1}, {A1, 1}}));
}

TEST_CASE("mixed update uses one block per coordinate") {
  BuchiVass v;
  v.dimension = 2;
  v.alphabet = Alphabet::named({"x"});
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord(), IntVec{Int(-3), Int(1)}, q);
  BuchiTransducer t = vass_to_transducer(v);
  RleWord expect(std::vector<Run>{{Alphabet::pop_letter(0), 3}, {Alphabet::push_letter(1), 1}});
  CHECK(t.transitions[0].out == expect);
}

TEST_CASE("binary updates stay polynomial as runs") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::named({"x"});
  int q = v.add_state("q", true);
  v.add_transition(q, RleWord::letter(0), IntVec{Int("1000000000000000000000")}, q);
  BuchiTransducer t = vass_to_transducer(v);
  REQUIRE(t.transitions[0].out.run_count() == 1);
  CHECK(t.transitions[0].out.length() == Int("1000000000000000000000"));
}

TEST_CASE("zero-dimensional input is rejected") {
  BuchiVass v = drop_cycle_automaton();
  CHECK_THROWS_AS(vass_to_transducer(v), ZeroDimension);
}

TEST_CASE("inverse swaps tapes and is an involution") {
  BuchiVass v = counter_net();
  BuchiTransducer t = vass_to_transducer(v);
  BuchiTransducer ti = inverse(t);
  for (std::size_t i = 0; i < t.transitions.size(); ++i) {
    CHECK(ti.transitions[i].in == t.transitions[i].out);
    CHECK(ti.transitions[i].out == t.transitions[i].in);
  }
  BuchiTransducer tii = inverse(ti);
  for (std::size_t i = 0; i < t.transitions.size(); ++i) {
    CHECK(tii.transitions[i].in == t.transitions[i].in);
    CHECK(tii.transitions[i].out == t.transitions[i].out);
  }
}

TEST_CASE("reduction against the D_1 acceptor preserves the language on samples") {
  // vass_to_transducer(dyck_acceptor(1)) is the identity transduction, so the
  // reduction product must be language-equivalent to the input.
  BuchiVass v1 = counter_net();
  auto [v, n] = reduce_to_dyck(v1, dyck_acceptor(1));
  CHECK(n == 1);
  CHECK(v.dimension == 1);
  CHECK(v.alphabet.is_dyck());

  auto words = fuzz_accepted_words(v1, 8, Int(64));
  REQUIRE(!words.empty());
  for (const auto& w : words) CHECK(member_lang(v, w).verdict);
  // and words accepted by the product are accepted by the original
  auto back = fuzz_accepted_words(v, 8, Int(64));
  REQUIRE(!back.empty());
  for (const auto& w : back) CHECK(member_lang(v1, w).verdict);
  // a word outside L(V1) stays outside
  UPWord outside{RleWord(), RleWord(std::vector<Run>{{a1, 1}, {A1, 1}})};
  CHECK(!member_lang(v1, outside).verdict);
  CHECK(!member_lang(v, outside).verdict);
}

TEST_CASE("reduction of an empty language is empty") {
  BuchiVass v1;
  v1.dimension = 0;
  v1.alphabet = Alphabet::dyck(1);
  v1.add_state("q0");
  v1.add_state("dead", true);  // final but unreachable
  v1.add_transition(0, RleWord::letter(a1), IntVec{}, 0);
  auto [v, n] = reduce_to_dyck(v1, dyck_acceptor(1));
  CHECK(is_empty(v));
}

TEST_CASE("identity transduction via apply_inverse") {
  // A transducer copying single letters: product language equals L(V1).
  BuchiVass v1 = counter_net();
  BuchiTransducer id;
  id.input = v1.alphabet;
  id.output = v1.alphabet;
  id.initial = 0;
  id.state_names = {"t"};
  id.finals = {true};
  id.transitions.push_back({0, RleWord::letter(a1), RleWord::letter(a1), 0});
  id.transitions.push_back({0, RleWord::letter(A1), RleWord::letter(A1), 0});
  BuchiVass prod = apply_inverse_to_vass(id, v1);
  for (const auto& w : fuzz_accepted_words(v1, 6, Int(64)))
    CHECK(member_lang(prod, w).verdict);
}

TEST_SUITE_END();
