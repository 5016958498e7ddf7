#include <doctest.h>

#include "fixtures.hpp"
#include "regsep/io.hpp"

using namespace regsep;
using namespace regsep::fixtures;

TEST_SUITE_BEGIN("io");

TEST_CASE("instance round trip is structural identity") {
  for (const BuchiVass& v :
       {counter_net(), drop_cycle_automaton(), pop_loop_automaton(), dyck_acceptor(2)}) {
    json j = instance_to_json(v);
    BuchiVass back = instance_from_json(j);
    CHECK(back.dimension == v.dimension);
    CHECK(back.alphabet == v.alphabet);
    CHECK(back.state_names == v.state_names);
    CHECK(back.initial == v.initial);
    CHECK(back.finals == v.finals);
    REQUIRE(back.transitions.size() == v.transitions.size());
    for (std::size_t i = 0; i < v.transitions.size(); ++i) {
      CHECK(back.transitions[i].source == v.transitions[i].source);
      CHECK(back.transitions[i].target == v.transitions[i].target);
      CHECK(back.transitions[i].label == v.transitions[i].label);
      CHECK(back.transitions[i].update == v.transitions[i].update);
    }
  }
}

TEST_CASE("big updates survive as decimal strings") {
  BuchiVass v;
  v.dimension = 1;
  v.alphabet = Alphabet::dyck(1);
  v.add_state("q", true);
  v.add_transition(0, RleWord::letter(0, Int("123456789012345678901234567890")),
                   IntVec{Int("-987654321098765432109876543210")}, 0);
  json j = instance_to_json(v);
  CHECK(j["transitions"][0]["update"][0].is_string());
  BuchiVass back = instance_from_json(j);
  CHECK(back.transitions[0].update[0] == Int("-987654321098765432109876543210"));
  CHECK(back.transitions[0].label.runs()[0].count == Int("123456789012345678901234567890"));
}

TEST_CASE("diagnostics for malformed instances") {
  json j = instance_to_json(counter_net());
  j["finals"].push_back("nosuch");
  std::vector<std::string> diags;
  instance_from_json(j, &diags);
  REQUIRE(!diags.empty());
  CHECK(diags.front().find("UnknownFinalState") != std::string::npos);
  CHECK_THROWS_AS(instance_from_json(j), ParseError);

  json j2 = instance_to_json(counter_net());
  j2["transitions"][0]["update"] = json::array({1, 2});
  std::vector<std::string> diags2;
  instance_from_json(j2, &diags2);
  REQUIRE(!diags2.empty());
  CHECK(diags2.front().find("ArityMismatch") != std::string::npos);
}

TEST_CASE("UP word syntax") {
  Alphabet ab = Alphabet::dyck(1);
  UPWord w = parse_upword("a1^2 A1^3 @ a1 A1", ab);
  CHECK(w.prefix == RleWord(std::vector<Run>{{0, 2}, {1, 3}}));
  CHECK(w.period == RleWord(std::vector<Run>{{0, 1}, {1, 1}}));

  // juxtaposed Dyck letters
  UPWord w2 = parse_upword("a1^2A1^3@a1^2A1^3", ab);
  CHECK(w2.prefix == RleWord(std::vector<Run>{{0, 2}, {1, 3}}));
  CHECK(w2.period == w2.prefix);

  UPWord w3 = parse_upword("@A1", ab);
  CHECK(w3.prefix.empty());
  CHECK(w3.period == RleWord::letter(1));

  CHECK_THROWS_AS(parse_upword("a1", ab), ParseError);
  CHECK_THROWS_AS(parse_upword("@", ab), EmptyPeriod);
  CHECK_THROWS_AS(parse_upword("@b7", ab), ParseError);
}

TEST_CASE("verdict serialization carries the certificate") {
  DecideTrace tr = decide_traced(counter_net());
  json j = report_to_json(tr, 0.0);
  CHECK(j["verdict"] == "inseparable");
  CHECK(j["farkas_y"].size() == 4);
  CHECK(j.contains("flower"));
  CHECK(j["stats"]["profiles"] == 4);

  DecideTrace ts = decide_traced(drop_cycle_automaton());
  json js = report_to_json(ts, 0.0);
  CHECK(js["verdict"] == "separable");
  CHECK(js["cover"].size() >= 1);
}

TEST_SUITE_END();
