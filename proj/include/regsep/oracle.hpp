#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regsep/karpmiller.hpp"
#include "regsep/liveness.hpp"
#include "regsep/vass.hpp"

namespace regsep {

struct MembershipReport {
  bool verdict = false;
  std::string evidence;
  // member_lang only: a verified accepting lasso of the queried VASS.
  std::vector<int> lasso_stem, lasso_cycle;
};

struct OracleBudget {
  KmBudget km;
  long long max_product_states = 200000;
};

// w in D_n: every prefix balance nonnegative on every coordinate. Decided
// run-wise in closed form (per-coordinate first-violation arithmetic).
MembershipReport member_dyck(const UPWord& w, int n);

// w in P_{i,k}: some prefix crosses below zero on coordinate i (1-based)
// while all earlier prefixes stayed <= k.
MembershipReport member_p(const UPWord& w, int n, int i, const Int& k);

// w in S_{x,k}: some tail splits into blocks of negative x-weighted balance
// with every infix x-weighted <= k. For ultimately periodic words this holds
// iff <x, phi(period)> < 0 and the maximal weighted infix balance of the
// periodic tail is <= k.
MembershipReport member_s(const UPWord& w, int n, const IntVec& x, const Int& k);

// Windowed brute-force S-membership over the expanded word; test oracle for
// the analytic rule, only usable on small words. The batched form returns
// the verdicts for every k in [0, max_k] in one pass.
bool member_s_bruteforce(const UPWord& w, int n, const IntVec& x, const Int& k);
std::vector<bool> member_s_bruteforce_upto(const UPWord& w, int n, const IntVec& x,
                                           long max_k);

// Emptiness of the omega-language: no final Karp-Miller node carries a
// connected nonnegative-effect circulation that reads letters.
bool is_empty(const BuchiVass& v, const OracleBudget& budget = {});

// w in L(V) via the product with the lasso acceptor of w; RLE labels are
// consumed with run arithmetic (whole periods by count division).
MembershipReport member_lang(const BuchiVass& v, const UPWord& w,
                             const OracleBudget& budget = {});

// Samples accepting lassos guided by the Karp-Miller graph; every returned
// word satisfies member_lang. May return fewer than `count`.
std::vector<UPWord> fuzz_accepted_words(const BuchiVass& v, int count, const Int& size_bound,
                                        const OracleBudget& budget = {}, unsigned seed = 1);

}  // namespace regsep
