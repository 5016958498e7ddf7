#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regsep/alphabet.hpp"
#include "regsep/numeric.hpp"

namespace regsep {

struct Run {
  LetterId letter;
  Int count;  // > 0
  bool operator==(const Run& o) const { return letter == o.letter && count == o.count; }
};

// Run-length encoded finite word. The empty run list is the empty word.
// Counts are unbounded; algorithms operate on runs, never on expansions.
class RleWord {
 public:
  RleWord() = default;
  explicit RleWord(std::vector<Run> runs) : runs_(std::move(runs)) { normalize(); }

  static RleWord epsilon() { return RleWord(); }
  static RleWord letter(LetterId l, Int count = 1) {
    RleWord w;
    if (count > 0) w.runs_.push_back({l, std::move(count)});
    return w;
  }

  bool empty() const { return runs_.empty(); }
  const std::vector<Run>& runs() const { return runs_; }
  std::size_t run_count() const { return runs_.size(); }

  Int length() const {
    Int n = 0;
    for (const auto& r : runs_) n += r.count;
    return n;
  }

  void append(LetterId l, const Int& count) {
    if (count <= 0) return;
    if (!runs_.empty() && runs_.back().letter == l)
      runs_.back().count += count;
    else
      runs_.push_back({l, count});
  }

  void append(const RleWord& w) {
    for (const auto& r : w.runs_) append(r.letter, r.count);
  }

  RleWord concat(const RleWord& w) const {
    RleWord r = *this;
    r.append(w);
    return r;
  }

  RleWord repeat(const Int& times) const;

  // Merges adjacent runs over the same letter and drops empty runs.
  void normalize();

  bool operator==(const RleWord& o) const { return runs_ == o.runs_; }

  std::string to_string(const Alphabet& a) const;

 private:
  std::vector<Run> runs_;
};

using Balance = IntVec;

// Letter balance phi(w): entry i is #a_{i+1} minus #abar_{i+1}.
Balance balance(const RleWord& w, const Alphabet& alphabet);

// Scalar product <x, phi(w)> without materializing the balance vector.
Int weighted_balance(const RleWord& w, const Alphabet& alphabet, const IntVec& x);

// Ultimately periodic infinite word prefix . period^omega.
struct UPWord {
  RleWord prefix;
  RleWord period;  // nonempty

  bool operator==(const UPWord& o) const { return prefix == o.prefix && period == o.period; }
  std::string to_string(const Alphabet& a) const {
    return prefix.to_string(a) + " @ " + period.to_string(a);
  }
};

// Canonical representative of the same infinite word: period replaced by its
// primitive root, then trailing letters of the prefix rotated into the period.
UPWord up_normalize(const RleWord& prefix, const RleWord& period);
inline UPWord up_normalize(const UPWord& w) { return up_normalize(w.prefix, w.period); }

// Primitive root of a nonempty word: shortest u with w = u^m.
RleWord primitive_root(const RleWord& w);

}  // namespace regsep
