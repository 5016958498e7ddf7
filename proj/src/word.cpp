#include "regsep/word.hpp"

#include <algorithm>

#include "regsep/errors.hpp"

namespace regsep {

std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

void RleWord::normalize() {
  std::vector<Run> out;
  for (auto& r : runs_) {
    if (r.count <= 0) continue;
    if (!out.empty() && out.back().letter == r.letter)
      out.back().count += r.count;
    else
      out.push_back(std::move(r));
  }
  runs_ = std::move(out);
}

RleWord RleWord::repeat(const Int& times) const {
  RleWord out;
  if (times <= 0 || runs_.empty()) return out;
  if (runs_.size() == 1) return RleWord::letter(runs_[0].letter, runs_[0].count * times);
  // times is expected to be small whenever the word has more than one run.
  if (!times.fits_slong_p()) throw Error("refusing to materialize a huge repeated word");
  long t = times.get_si();
  for (long i = 0; i < t; ++i) out.append(*this);
  return out;
}

std::string RleWord::to_string(const Alphabet& a) const {
  if (runs_.empty()) return "eps";
  std::string s;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) s += " ";
    s += a.name(runs_[i].letter);
    if (runs_[i].count != 1) s += "^" + runs_[i].count.get_str();
  }
  return s;
}

Balance balance(const RleWord& w, const Alphabet& alphabet) {
  if (!alphabet.is_dyck()) throw NotDyckAlphabet();
  Balance b = zero_vec(alphabet.pairs());
  for (const auto& r : w.runs()) {
    if (!alphabet.contains(r.letter))
      throw UnknownLetter("letter id " + std::to_string(r.letter) + " outside Sigma_" +
                          std::to_string(alphabet.pairs()));
    if (alphabet.is_barred(r.letter))
      b[alphabet.pair_index(r.letter)] -= r.count;
    else
      b[alphabet.pair_index(r.letter)] += r.count;
  }
  return b;
}

Int weighted_balance(const RleWord& w, const Alphabet& alphabet, const IntVec& x) {
  if (!alphabet.is_dyck()) throw NotDyckAlphabet();
  Int s = 0;
  for (const auto& r : w.runs()) {
    if (!alphabet.contains(r.letter))
      throw UnknownLetter("letter id " + std::to_string(r.letter) + " outside Sigma_" +
                          std::to_string(alphabet.pairs()));
    const Int& xi = x.at(alphabet.pair_index(r.letter));
    if (alphabet.is_barred(r.letter))
      s -= xi * r.count;
    else
      s += xi * r.count;
  }
  return s;
}

RleWord primitive_root(const RleWord& w) {
  const auto& rs = w.runs();
  const std::size_t k = rs.size();
  if (k == 0) return w;
  if (k == 1) return RleWord::letter(rs[0].letter, 1);

  RleWord best = w;
  Int best_len = w.length();
  auto consider = [&](const RleWord& root, const Int& reps) {
    if (root.empty()) return;
    Int len = root.length();
    if (len >= best_len) return;
    if (root.repeat(reps) == w) {
      best = root;
      best_len = len;
    }
  };

  // Root whose first and last letters differ: w has exactly m*j runs, run
  // pattern periodic with period j.
  for (std::size_t j = 1; j < k; ++j) {
    if (k % j != 0) continue;
    std::vector<Run> root(rs.begin(), rs.begin() + j);
    consider(RleWord(std::move(root)), Int(k / j));
  }

  // Root whose first and last letters agree (j >= 3 runs): interior repeats
  // merge at the seam, so w has m*(j-1)+1 runs and the seams carry the summed
  // count. Reconstruct the candidate from the outermost runs.
  if (rs.front().letter == rs.back().letter) {
    for (std::size_t m = 2; m <= k - 1; ++m) {
      if ((k - 1) % m != 0) continue;
      std::size_t j = (k - 1) / m + 1;
      if (j < 3) continue;
      std::vector<Run> root;
      root.push_back(rs.front());
      for (std::size_t i = 1; i + 1 < j; ++i) root.push_back(rs[i]);
      root.push_back({rs.front().letter, rs.back().count});
      RleWord cand;
      for (auto& r : root) cand.append(r.letter, r.count);
      consider(cand, Int(m));
    }
  }
  return best;
}

UPWord up_normalize(const RleWord& prefix, const RleWord& period) {
  if (period.empty()) throw EmptyPeriod();
  RleWord v = primitive_root(period);
  std::vector<Run> u(prefix.runs());

  // Rotate shared trailing letters of the prefix into the period. Each step
  // mirrors "while u's last letter equals v's last letter: move one letter",
  // performed run-wise.
  while (!u.empty() && u.back().letter == v.runs().back().letter) {
    const LetterId x = u.back().letter;
    if (v.run_count() == 1) {
      // All-x period: rotation leaves it unchanged; the whole trailing run of
      // the prefix is absorbed.
      u.pop_back();
      continue;
    }
    Int cu = u.back().count;
    Int cv = v.runs().back().count;
    if (cu < cv) {
      u.pop_back();
      RleWord nv = RleWord::letter(x, cu);
      for (std::size_t i = 0; i + 1 < v.run_count(); ++i)
        nv.append(v.runs()[i].letter, v.runs()[i].count);
      nv.append(x, cv - cu);
      v = nv;
      break;  // prefix now ends with a different letter
    }
    // cu >= cv: absorb cv letters, period becomes x^cv . front
    if (cu == cv)
      u.pop_back();
    else
      u.back().count = cu - cv;
    RleWord nv = RleWord::letter(x, cv);
    for (std::size_t i = 0; i + 1 < v.run_count(); ++i)
      nv.append(v.runs()[i].letter, v.runs()[i].count);
    v = nv;
    if (cu > cv) break;  // prefix still ends with x, period now ends differently
  }

  UPWord out;
  out.prefix = RleWord(std::move(u));
  out.period = v;
  return out;
}

}  // namespace regsep
