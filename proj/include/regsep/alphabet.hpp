#pragma once

#include <string>
#include <vector>

#include "regsep/errors.hpp"

namespace regsep {

using LetterId = int;

// Either a Dyck alphabet with n letter pairs (a_1..a_n, abar_1..abar_n) or a
// plain named alphabet. Dyck letter ids: 2*(i-1) is a_i, 2*(i-1)+1 is abar_i.
// Barred letters print with a capital 'A': a1..an, A1..An.
class Alphabet {
 public:
  Alphabet() = default;

  static Alphabet dyck(int n) {
    Alphabet a;
    a.dyck_n_ = n;
    a.names_.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
      a.names_.push_back("a" + std::to_string(i));
      a.names_.push_back("A" + std::to_string(i));
    }
    return a;
  }

  static Alphabet named(std::vector<std::string> letters) {
    Alphabet a;
    a.names_ = std::move(letters);
    return a;
  }

  bool is_dyck() const { return dyck_n_ > 0; }
  int pairs() const { return dyck_n_; }
  int size() const { return static_cast<int>(names_.size()); }

  const std::string& name(LetterId l) const { return names_.at(l); }

  bool contains(LetterId l) const { return l >= 0 && l < size(); }

  // Index of the letter pair (0-based) a Dyck letter belongs to.
  int pair_index(LetterId l) const { return l / 2; }
  bool is_barred(LetterId l) const { return (l & 1) != 0; }

  static LetterId push_letter(int pair0) { return 2 * pair0; }      // a_{pair0+1}
  static LetterId pop_letter(int pair0) { return 2 * pair0 + 1; }   // abar_{pair0+1}

  // -1 if no such letter.
  int find(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == s) return i;
    return -1;
  }

  bool operator==(const Alphabet& o) const { return dyck_n_ == o.dyck_n_ && names_ == o.names_; }

 private:
  int dyck_n_ = 0;
  std::vector<std::string> names_;
};

}  // namespace regsep
