#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regsep/karpmiller.hpp"
#include "regsep/liveness.hpp"
#include "regsep/oracle.hpp"
#include "regsep/pump.hpp"
#include "regsep/ratlp.hpp"
#include "regsep/transduce.hpp"
#include "regsep/vass.hpp"

namespace regsep {

// Set of Karp-Miller edges traversable by one cycle through a final node
// with nonnegative counter effect, together with the integer circulation
// witnessing that (every edge used at least once, flow conserved).
struct Profile {
  std::vector<int> edges;  // sorted edge ids
  Circulation witness;
};

struct PrimitiveCycle {
  std::vector<int> edges;  // edge ids in traversal order, smallest id first
  Balance ext;             // letter balance of the read word
  IntVec eff;              // counter effect
};

struct CycleData {
  Profile profile;
  std::vector<PrimitiveCycle> primitive;  // lexicographic order; defines tau_1..tau_m
  std::vector<int> complete;              // edge ids of sigma_c in traversal order
  Balance complete_ext;
  IntVec complete_eff;
  IntVec decomposition;                   // r, length m, entries >= 1
  Int power;                              // K with sigma_c = sigma^K
  std::vector<std::size_t> insertion;     // position in `complete` where tau_i can be inserted
  int anchor;                             // final node where sigma_c starts
};

struct IneqSystem {
  RationalMatrix a;  // m+1 rows: balances of tau_1..tau_m then sigma_c
  RatVec b;          // (0,...,0,-1)
};

struct Flower {
  int anchor;
  std::vector<int> alpha, beta, gamma;  // edge id sequences, cycles at anchor
  IntVec s, t, y_hat;
  Int big_m, big_n;
};

struct SeparatorAtom {
  bool is_p = false;
  int i = 0;  // 1-based pair index for P atoms
  IntVec x;   // weight vector for S atoms
  Int k;
};

struct Verdict {
  bool separable;
  std::vector<SeparatorAtom> cover;  // separable only
  // inseparable only:
  std::optional<Profile> failing_profile;
  IntVec farkas_y;
  std::optional<Flower> flower;
  std::optional<CycleData> cycle_data;
};

struct DecideBudget {
  KmBudget km;
  long long profile_cap = 200000;
  ProductBudget product;
};

// All profiles of the Karp-Miller graph: edge subsets inside one final-node
// SCC whose circulation system (x_e >= 1, conservation, effect >= 0, at
// least one letter-reading edge) is feasible. Candidates are generated as
// node-connected unions of simple cycles, in (cardinality, lexicographic)
// order; the cap counts generated candidates.
std::vector<Profile> enumerate_profiles(const KarpMillerGraph& km, long long cap = 200000);

// Streaming form of the enumeration; the visitor returns false to stop.
void for_each_profile(const KarpMillerGraph& km, long long cap,
                      const std::function<bool(Profile&&)>& visit);

// All simple cycles of the profile-induced multigraph with cached balances.
std::vector<PrimitiveCycle> primitive_cycles(const KarpMillerGraph& km,
                                             const std::vector<int>& edge_set);

// A complete pi-cycle: Euler circuit of the witness rotated to a final node,
// raised to the power K such that its edge multiset is sum r_i tau_i with all
// r_i >= 1, plus the insertion decomposition.
CycleData complete_cycle(const KarpMillerGraph& km, const Profile& p);

IneqSystem build_system(const KarpMillerGraph& km, const CycleData& cd);

struct ProfileVerdict {
  bool solution;
  IntVec x;  // solution, scaled to integers
  IntVec y;  // dual, scaled to integers
};
ProfileVerdict profile_verdict(const IneqSystem& sys);

Flower build_flower(const KarpMillerGraph& km, const CycleData& cd, const IntVec& y);

bool verify_flower(const KarpMillerGraph& km, const Flower& f);

// Word spelled by a flower: stem to the anchor, then
// (alpha^{k+1} beta^{k+1} gamma^{k+1})^omega. In L(V) and outside every
// S_{x,k}.
UPWord flower_witness_word(const KarpMillerGraph& km, const Flower& f, const Int& k);

// Decision procedure for L(V) | D_n over a Dyck alphabet: pump, build the
// Karp-Miller graph, and test every profile's inequality system.
Verdict decide(const BuchiVass& v, const DecideBudget& budget = {});

// Full pipeline via the reduction of Step 1.
Verdict decide_pair(const BuchiVass& v1, const BuchiVass& v2, const DecideBudget& budget = {});

struct NotDisjointFromDyck : Error {
  UPWord witness;
  explicit NotDisjointFromDyck(UPWord w, const std::string& msg)
      : Error(msg), witness(std::move(w)) {}
};

// Cover of a Buchi automaton's language (d = 0) by basic separators;
// requires L(A) disjoint from D_n.
std::vector<SeparatorAtom> basic_separator_cover(const BuchiVass& a,
                                                 const DecideBudget& budget = {});

// Internals shared with decide(); exposed for the pipeline dumps.
struct DecideTrace {
  PumpArtifacts pump;
  KarpMillerGraph km;  // KM(pump_v)
  std::vector<Profile> profiles;
  std::vector<ProfileVerdict> verdicts;
  std::vector<CycleData> cycles;
  Verdict verdict;
};
DecideTrace decide_traced(const BuchiVass& v, const DecideBudget& budget = {});

}  // namespace regsep
