#pragma once

#include <utility>
#include <vector>

#include "regsep/vass.hpp"

namespace regsep {

struct TransducerTransition {
  int source;
  RleWord in;
  RleWord out;
  int target;
};

// Finite-state Buchi transducer over infinite words; transitions carry RLE
// word blocks on both tapes (blocks are compositions of letter transitions
// and keep counter encodings polynomial despite binary updates).
struct BuchiTransducer {
  Alphabet input, output;
  std::vector<std::string> state_names;
  int initial = 0;
  std::vector<bool> finals;
  std::vector<TransducerTransition> transitions;

  int num_states() const { return static_cast<int>(state_names.size()); }
  bool is_final(int q) const { return q >= 0 && q < num_states() && finals[q]; }
};

// Transducer T with T . D_d = L(V): each transition's update vector is spelled
// out as a_i^h / abar_i^h blocks on the output tape; the zero update becomes
// a_1 abar_1 so accepted runs always emit infinite words.
BuchiTransducer vass_to_transducer(const BuchiVass& v);

// Swaps the two tapes.
BuchiTransducer inverse(const BuchiTransducer& t);

struct ProductBudget {
  long long max_states = 200000;
};

// Buchi VASS for T^{-1} L(V1): it reads words u over T's output alphabet and
// accepts iff (v, u) lies in T's relation for some v in L(V1). T's input
// alphabet must be V1's alphabet; counters are V1's. Acceptance requires both
// components final infinitely often and both tapes to make infinite progress.
BuchiVass apply_inverse_to_vass(const BuchiTransducer& t, const BuchiVass& v1,
                                const ProductBudget& budget = {});

// Step 1 of the pipeline: L(V1) | L(V2) iff L(result) | D_n, n = dim(V2)
// (V2 padded with one idle counter when 0-dimensional).
std::pair<BuchiVass, int> reduce_to_dyck(const BuchiVass& v1, const BuchiVass& v2,
                                         const ProductBudget& budget = {});

}  // namespace regsep
