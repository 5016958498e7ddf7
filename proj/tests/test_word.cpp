#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "regsep/word.hpp"

using namespace regsep;

namespace {
const LetterId a1 = Alphabet::push_letter(0);
const LetterId A1 = Alphabet::pop_letter(0);
const LetterId a2 = Alphabet::push_letter(1);
}  // namespace

TEST_SUITE_BEGIN("word");

TEST_CASE("balance of matched and unmatched runs") {
  Alphabet ab = Alphabet::dyck(1);
  RleWord w;
  w.append(a1, 1);
  w.append(A1, 1);
  CHECK(balance(w, ab) == IntVec{Int(0)});

  RleWord w2;
  w2.append(a1, 2);
  w2.append(A1, 3);
  CHECK(balance(w2, ab) == IntVec{Int(-1)});

  RleWord w3;
  w3.append(a1, Int(1000000));
  w3.append(A1, 1);
  CHECK(balance(w3, ab) == IntVec{Int(999999)});
}

TEST_CASE("balance rejects foreign letters") {
  Alphabet ab = Alphabet::dyck(1);
  RleWord w = RleWord::letter(a2);
  CHECK_THROWS_AS(balance(w, ab), UnknownLetter);
}

TEST_CASE("balance is additive under concatenation") {
  Alphabet ab = Alphabet::dyck(2);
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    RleWord u, w;
    for (int i = 0; i < 5; ++i) {
      u.append(static_cast<int>(rng() % 4), Int(1 + rng() % 9));
      w.append(static_cast<int>(rng() % 4), Int(1 + rng() % 9));
    }
    Balance sum = add(balance(u, ab), balance(w, ab));
    CHECK(balance(u.concat(w), ab) == sum);
  }
}

TEST_CASE("normalization merges runs without changing balance") {
  Alphabet ab = Alphabet::dyck(1);
  RleWord w(std::vector<Run>{{a1, 2}, {a1, 3}, {A1, 1}});
  CHECK(w.run_count() == 2);
  CHECK(w.length() == 6);
  CHECK(balance(w, ab) == IntVec{Int(4)});
}

TEST_CASE("primitive root on plain repetitions") {
  RleWord aa(std::vector<Run>{{a1, 2}});
  CHECK(primitive_root(aa) == RleWord::letter(a1, 1));

  RleWord ab_(std::vector<Run>{{a1, 1}, {A1, 1}});
  RleWord abab = ab_.repeat(2);
  CHECK(primitive_root(abab) == ab_);
  CHECK(primitive_root(ab_) == ab_);
}

TEST_CASE("primitive root with seam merging") {
  // (a1 A1 a1)^3 has its interior a1-runs merged pairwise.
  RleWord aba(std::vector<Run>{{a1, 1}, {A1, 1}, {a1, 1}});
  RleWord w = aba.repeat(3);
  CHECK(w.run_count() == 7);
  CHECK(primitive_root(w) == aba);
}

TEST_CASE("up_normalize examples") {
  // period a1 a1 collapses to its root
  UPWord w = up_normalize(RleWord(), RleWord::letter(a1, 2));
  CHECK(w.prefix.empty());
  CHECK(w.period == RleWord::letter(a1, 1));

  // u = a1, v = A1 a1 rotates into u = eps, v = a1 A1
  RleWord v1(std::vector<Run>{{A1, 1}, {a1, 1}});
  UPWord w2 = up_normalize(RleWord::letter(a1), v1);
  CHECK(w2.prefix.empty());
  CHECK(w2.period == RleWord(std::vector<Run>{{a1, 1}, {A1, 1}}));

  // already canonical
  RleWord v2(std::vector<Run>{{a1, 1}, {A1, 1}});
  UPWord w3 = up_normalize(RleWord(), v2);
  CHECK(w3.prefix.empty());
  CHECK(w3.period == v2);

  CHECK_THROWS_AS(up_normalize(RleWord(), RleWord()), EmptyPeriod);
}

namespace {

// Expand the first `len` letters of u.v^omega.
std::vector<LetterId> expand(const UPWord& w, int len) {
  std::vector<LetterId> out;
  auto push = [&](const RleWord& rw) {
    for (const auto& r : rw.runs())
      for (Int i = 0; i < r.count && static_cast<int>(out.size()) < len; ++i)
        out.push_back(r.letter);
  };
  push(w.prefix);
  while (static_cast<int>(out.size()) < len) push(w.period);
  return out;
}

RleWord random_word(std::mt19937& rng, int letters, int max_len) {
  RleWord w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w.append(static_cast<int>(rng() % letters), 1);
  return w;
}

}  // namespace

TEST_CASE("up_normalize is idempotent and preserves the infinite word") {
  std::mt19937 rng(11);
  for (int round = 0; round < 3000; ++round) {
    RleWord u = random_word(rng, 4, 6);
    RleWord v = random_word(rng, 4, 6);
    if (v.empty()) v.append(static_cast<int>(rng() % 4), 1);
    UPWord norm = up_normalize(u, v);
    UPWord again = up_normalize(norm);
    CHECK(norm == again);
    int len = 3 * static_cast<int>(Int(u.length() + v.length()).get_si());
    CHECK(expand({u, v}, len) == expand(norm, len));
    // canonical form never grows
    CHECK(norm.period.length() <= v.length());
  }
}

TEST_SUITE_END();
