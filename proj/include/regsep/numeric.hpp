#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace regsep {

// All integer arithmetic in the library is arbitrary-precision.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_from_string(const std::string& s) { return Int(s); }

inline Int ceil_div(const Int& a, const Int& b) {
  // b > 0
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool all_nonneg(const IntVec& a) {
  for (const auto& x : a)
    if (x < 0) return false;
  return true;
}

inline bool pointwise_leq(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string vec_to_string(const IntVec& v);

}  // namespace regsep
