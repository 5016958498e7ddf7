#pragma once

#include <vector>

#include "regsep/numeric.hpp"

namespace regsep {

// Dense exact-rational matrix. No floating point anywhere in this module.
struct RationalMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<RatVec> entries;  // row-major

  RationalMatrix() = default;
  RationalMatrix(std::size_t m, std::size_t n)
      : rows(m), cols(n), entries(m, RatVec(n, Rat(0))) {}

  static RationalMatrix from_int_rows(const std::vector<IntVec>& r, std::size_t n);

  RatVec& operator[](std::size_t i) { return entries[i]; }
  const RatVec& operator[](std::size_t i) const { return entries[i]; }
};

// Outcome of the feasibility question "A x <= b, x >= 0":
// either a solution x or a Farkas certificate y with y >= 0, y^T A >= 0,
// y^T b < 0. Exactly one of the two exists.
struct LpOutcome {
  bool feasible;
  RatVec solution;     // length cols, valid iff feasible
  RatVec certificate;  // length rows, valid iff !feasible
};

// Fourier-Motzkin elimination over exact rationals. Every derived inequality
// carries the nonnegative combination of original rows that produced it, so
// an infeasibility 0 <= c with c < 0 directly yields the dual vector.
// Nonnegativity of x is enforced with internal rows -x_i <= 0 whose
// multipliers are dropped from the reported certificate.
LpOutcome feasible(const RationalMatrix& a, const RatVec& b);

// l * x where l is the lcm of the denominators; requires x >= 0.
IntVec scale_to_integers(const RatVec& x);

// Exact primal simplex (Bland's rule) for the same feasibility question,
// optionally maximizing a linear objective over the feasible set. Used for
// the larger plumbing systems (circulations over Karp-Miller edges) where
// elimination blows up; same outcome contract as feasible().
LpOutcome simplex_solve(const RationalMatrix& a, const RatVec& b,
                        const RatVec* maximize = nullptr,
                        const std::vector<bool>* equality_rows = nullptr);

bool verify_certificate(const RationalMatrix& a, const RatVec& b, const RatVec& y);
bool verify_solution(const RationalMatrix& a, const RatVec& b, const RatVec& x);

}  // namespace regsep
