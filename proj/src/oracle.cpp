#include "regsep/oracle.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "regsep/errors.hpp"
#include "regsep/graph.hpp"

namespace regsep {

namespace {

// Per-coordinate prefix-balance summary of u . v^omega, computed run-wise.
// Within a run the balance is monotone, so run boundaries carry all extrema.
struct CoordScan {
  Int min_u = 0, max_u = 0, base = 0;   // over prefixes of u; base = phi_i(u)
  Int min_v = 0, max_v = 0, drift = 0;  // relative to the period start
};

CoordScan scan_coord(const UPWord& w, const Alphabet& ab, int coord) {
  CoordScan s;
  Int val = 0;
  for (const auto& r : w.prefix.runs()) {
    if (ab.pair_index(r.letter) != coord) continue;
    val += ab.is_barred(r.letter) ? -r.count : r.count;
    if (val < s.min_u) s.min_u = val;
    if (val > s.max_u) s.max_u = val;
  }
  s.base = val;
  val = 0;
  for (const auto& r : w.period.runs()) {
    if (ab.pair_index(r.letter) != coord) continue;
    val += ab.is_barred(r.letter) ? -r.count : r.count;
    if (val < s.min_v) s.min_v = val;
    if (val > s.max_v) s.max_v = val;
  }
  s.drift = val;
  return s;
}

struct CrossInfo {
  bool crosses = false;
  Int position = 0;    // expanded index of the first letter taking the balance below 0
  Int max_before = 0;  // max prefix balance strictly before that point
};

// First position where the balance of coordinate `coord` becomes negative.
CrossInfo first_crossing(const UPWord& w, const Alphabet& ab, int coord) {
  CrossInfo ci;
  Int val = 0, pos = 0, maxv = 0;
  auto scan_word = [&](const RleWord& word, bool* crossed) {
    for (const auto& r : word.runs()) {
      if (ab.pair_index(r.letter) != coord) {
        pos += r.count;
        continue;
      }
      if (!ab.is_barred(r.letter)) {
        val += r.count;
        pos += r.count;
        if (val > maxv) maxv = val;
        continue;
      }
      if (val - r.count < 0) {
        ci.crosses = true;
        ci.position = pos + val + 1;
        ci.max_before = maxv;
        *crossed = true;
        return;
      }
      val -= r.count;
      pos += r.count;
    }
    *crossed = false;
  };

  bool crossed = false;
  scan_word(w.prefix, &crossed);
  if (crossed) return ci;

  CoordScan s = scan_coord(w, ab, coord);
  // Tail: value in period j at in-period offset t is base + j*drift + pref(t).
  if (s.base + s.min_v >= 0 && s.drift >= 0) return ci;  // never negative
  Int jstar = 0;
  if (s.base + s.min_v >= 0) {
    // drift < 0 here; first period whose minimum dips below zero
    jstar = ceil_div(s.base + s.min_v + 1, -s.drift);
  }
  // Maxima over u, over full periods before jstar, then scan period jstar.
  if (jstar > 0) {
    Int full_max = s.base + s.max_v;  // j = 0 maximizes since drift < 0
    if (full_max > maxv) maxv = full_max;
  }
  val = s.base + jstar * s.drift;
  pos = w.prefix.length() + jstar * w.period.length();
  if (val > maxv) maxv = val;  // period-start boundary value
  bool c2 = false;
  scan_word(w.period, &c2);
  if (!c2) throw InternalInvariantViolation("crossing period scan missed the dip");
  return ci;
}

Int weight_of(const Alphabet& ab, const IntVec& x, LetterId l) {
  const Int& xi = x.at(ab.pair_index(l));
  return ab.is_barred(l) ? Int(-xi) : xi;
}

}  // namespace

MembershipReport member_dyck(const UPWord& word, int n) {
  Alphabet ab = Alphabet::dyck(n);
  UPWord w = up_normalize(word);
  MembershipReport rep;
  for (int i = 0; i < n; ++i) {
    CrossInfo ci = first_crossing(w, ab, i);
    if (ci.crosses) {
      rep.verdict = false;
      rep.evidence = "prefix balance of pair " + std::to_string(i + 1) +
                     " first negative at position " + ci.position.get_str();
      return rep;
    }
  }
  rep.verdict = true;
  rep.evidence = "all prefix balances nonnegative";
  return rep;
}

MembershipReport member_p(const UPWord& word, int n, int i, const Int& k) {
  if (i < 1 || i > n) throw DimensionMismatch("P index out of range");
  Alphabet ab = Alphabet::dyck(n);
  UPWord w = up_normalize(word);
  MembershipReport rep;
  CrossInfo ci = first_crossing(w, ab, i - 1);
  if (!ci.crosses) {
    rep.verdict = false;
    rep.evidence = "balance of pair " + std::to_string(i) + " never negative";
    return rep;
  }
  rep.verdict = ci.max_before <= k;
  rep.evidence = "first crossing at position " + ci.position.get_str() +
                 ", max balance before it " + ci.max_before.get_str();
  return rep;
}

MembershipReport member_s(const UPWord& word, int n, const IntVec& x, const Int& k) {
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("weight vector arity");
  if (word.period.empty()) throw EmptyPeriod();
  for (const auto& e : x)
    if (e < 0) throw NegativeEntry("weight vector must be nonnegative");
  Alphabet ab = Alphabet::dyck(n);
  MembershipReport rep;

  // Small-instance fast path in machine words; the drift/infix values are
  // bounded by (runs * count * weight).
  bool small = static_cast<int>(word.period.run_count()) <= 64 && k.fits_slong_p();
  long kw = small ? k.get_si() : 0;
  std::vector<std::pair<long, long>> wr;  // (weight, count)
  if (small) {
    for (const auto& r : word.period.runs()) {
      if (!ab.contains(r.letter)) throw UnknownLetter("letter outside the alphabet");
      const Int& xi = x[ab.pair_index(r.letter)];
      if (!r.count.fits_slong_p() || r.count > 1048576 || !xi.fits_slong_p() ||
          xi > 1048576) {
        small = false;
        break;
      }
      long wgt = xi.get_si() * (ab.is_barred(r.letter) ? -1L : 1L);
      wr.push_back({wgt, r.count.get_si()});
    }
  }
  if (small) {
    long long drift = 0;
    for (auto& [wgt, cnt] : wr) drift += static_cast<long long>(wgt) * cnt;
    if (drift >= 0) {
      rep.verdict = false;
      rep.evidence = "weighted period drift is nonnegative";
      return rep;
    }
    long long maxinfix = LLONG_MIN, prefix = 0, minprefix = 0;
    for (int copy = 0; copy < 3; ++copy)
      for (auto& [wgt, cnt] : wr) {
        long long next = prefix + static_cast<long long>(wgt) * cnt;
        if (next - minprefix > maxinfix) maxinfix = next - minprefix;
        prefix = next;
        if (prefix < minprefix) minprefix = prefix;
      }
    rep.verdict = maxinfix <= kw;
    rep.evidence = "blocks = period copies; max weighted infix " + std::to_string(maxinfix);
    return rep;
  }

  Int drift = weighted_balance(word.period, ab, x);
  if (drift >= 0) {
    rep.verdict = false;
    rep.evidence = "weighted period drift " + drift.get_str() + " is nonnegative";
    return rep;
  }
  // Maximal weighted infix balance of the periodic tail: all infixes up to
  // two periods long matter, read off a three-period window at run
  // boundaries (the weighted sum is monotone within a run).
  Int maxinfix = 0;
  bool have = false;
  Int prefix_sum = 0, min_prefix = 0;
  for (int copy = 0; copy < 3; ++copy) {
    for (const auto& r : word.period.runs()) {
      Int next = prefix_sum + weight_of(ab, x, r.letter) * r.count;
      Int cand = next - min_prefix;
      if (!have || cand > maxinfix) {
        maxinfix = cand;
        have = true;
      }
      prefix_sum = next;
      if (prefix_sum < min_prefix) min_prefix = prefix_sum;
    }
  }
  rep.verdict = maxinfix <= k;
  rep.evidence = "blocks = period copies from position " + word.prefix.length().get_str() +
                 "; max weighted infix " + maxinfix.get_str();
  return rep;
}

namespace {

// Window data shared by every k: tail starts with a block decomposition, and
// the largest weighted infix visible from each start.
struct SWindow {
  std::vector<long long> maxinfix_from;  // indexed by tail start
  std::vector<bool> tail_ok;             // decomposition into negative blocks exists
  long long starts;                      // candidate tail starts
};

SWindow s_window(const UPWord& w, int n, const IntVec& x) {
  Alphabet ab = Alphabet::dyck(n);
  Int expanded = w.prefix.length() + 3 * w.period.length();
  if (expanded > 4096) throw Error("brute-force S check needs a small word");

  std::vector<long long> weights;
  auto push_letters = [&](const RleWord& rw) {
    for (const auto& r : rw.runs()) {
      long long c = r.count.get_si();
      long long wt = weight_of(ab, x, r.letter).get_si();
      for (long long j = 0; j < c; ++j) weights.push_back(wt);
    }
  };
  push_letters(w.prefix);
  long long ulen = static_cast<long long>(weights.size());
  for (int copy = 0; copy < 3; ++copy) push_letters(w.period);
  long long vlen = (static_cast<long long>(weights.size()) - ulen) / 3;
  long long L = static_cast<long long>(weights.size());

  std::vector<long long> ps(L + 1, 0);
  for (long long i = 0; i < L; ++i) ps[i + 1] = ps[i] + weights[i];

  // maxinfix_from[p]: largest Ps[q] - Ps[p'] over p <= p' < q <= L.
  std::vector<long long> max_suffix(L + 2), maxinfix_from(L + 2);
  max_suffix[L + 1] = LLONG_MIN;
  for (long long p = L; p >= 0; --p)
    max_suffix[p] = std::max(ps[p], p + 1 <= L ? max_suffix[p + 1] : LLONG_MIN);
  maxinfix_from[L] = LLONG_MIN;
  for (long long p = L - 1; p >= 0; --p)
    maxinfix_from[p] = std::max(max_suffix[p + 1] - ps[p], maxinfix_from[p + 1]);

  SWindow win;
  win.starts = std::min(ulen + vlen, L - 1);
  win.maxinfix_from.assign(maxinfix_from.begin(), maxinfix_from.end());
  win.tail_ok.assign(win.starts + 1, false);
  std::vector<bool> decomposable(L + 1, false);
  for (long long t = 0; t <= win.starts; ++t) {
    // Head of negative blocks to p, then one repeatable period-aligned block.
    std::fill(decomposable.begin(), decomposable.end(), false);
    decomposable[t] = true;
    for (long long q = t + 1; q <= L; ++q)
      for (long long p = t; p < q; ++p)
        if (decomposable[p] && ps[q] - ps[p] < 0) {
          decomposable[q] = true;
          break;
        }
    for (long long p = std::max(t, ulen); p <= L && !win.tail_ok[t]; ++p) {
      if (!decomposable[p]) continue;
      for (long long q = p + vlen; q <= L; q += vlen)
        if (ps[q] - ps[p] < 0) {
          win.tail_ok[t] = true;
          break;
        }
    }
  }
  return win;
}

}  // namespace

bool member_s_bruteforce(const UPWord& w, int n, const IntVec& x, const Int& k) {
  if (!k.fits_slong_p()) throw Error("brute-force S check needs a small bound");
  long long bound = k.get_si();
  SWindow win = s_window(w, n, x);
  for (long long t = 0; t <= win.starts; ++t)
    if (win.tail_ok[t] && win.maxinfix_from[t] <= bound) return true;
  return false;
}

std::vector<bool> member_s_bruteforce_upto(const UPWord& w, int n, const IntVec& x,
                                           long max_k) {
  SWindow win = s_window(w, n, x);
  // smallest admissible k over valid tail starts
  long long best = LLONG_MAX;
  for (long long t = 0; t <= win.starts; ++t)
    if (win.tail_ok[t]) best = std::min(best, win.maxinfix_from[t]);
  std::vector<bool> out(max_k + 1);
  for (long k = 0; k <= max_k; ++k) out[k] = best <= k;
  return out;
}

bool is_empty(const BuchiVass& v, const OracleBudget& budget) {
  KarpMillerGraph km = build_km(v, budget.km);
  return !live_final_exists(km);
}

namespace {

struct LassoPos {
  bool in_prefix;
  int run;
  Int off;

  bool operator<(const LassoPos& o) const {
    if (in_prefix != o.in_prefix) return in_prefix && !o.in_prefix;
    if (run != o.run) return run < o.run;
    return off < o.off;
  }
  bool operator==(const LassoPos& o) const {
    return in_prefix == o.in_prefix && run == o.run && off == o.off;
  }
};

struct LangState {
  int vq;
  LassoPos pos;
  int cond;  // 0: awaiting a final state, 1: awaiting letter consumption
  int flash;

  bool operator<(const LangState& o) const {
    return std::tie(vq, pos, cond, flash) < std::tie(o.vq, o.pos, o.cond, o.flash);
  }
};

// Advances `pos` over the letters of `label` in u . v^omega; run arithmetic,
// whole periods consumed by count division. Returns false on mismatch.
bool consume(const UPWord& w, LassoPos pos, const RleWord& label, LassoPos* out) {
  auto settle = [&](LassoPos& p) {
    if (p.in_prefix && p.run >= static_cast<int>(w.prefix.run_count())) {
      p.in_prefix = false;
      p.run = 0;
      p.off = 0;
    }
    if (!p.in_prefix && p.run >= static_cast<int>(w.period.run_count())) {
      p.run = 0;
      p.off = 0;
    }
  };
  settle(pos);
  for (const auto& lr : label.runs()) {
    Int c = lr.count;
    while (c > 0) {
      const Run& cur = pos.in_prefix ? w.prefix.runs()[pos.run] : w.period.runs()[pos.run];
      if (cur.letter != lr.letter) return false;
      Int avail = cur.count - pos.off;
      if (!pos.in_prefix && w.period.run_count() == 1 && pos.off == 0 && c >= avail) {
        c %= avail;  // skip whole periods
        continue;
      }
      if (c >= avail) {
        c -= avail;
        pos.off = 0;
        pos.run += 1;
        settle(pos);
      } else {
        pos.off += c;
        c = 0;
      }
    }
  }
  *out = pos;
  return true;
}

}  // namespace

MembershipReport member_lang(const BuchiVass& v, const UPWord& word, const OracleBudget& budget) {
  for (const auto& r : word.prefix.runs())
    if (!v.alphabet.contains(r.letter)) throw UnknownLetter("word letter outside the alphabet");
  for (const auto& r : word.period.runs())
    if (!v.alphabet.contains(r.letter)) throw UnknownLetter("word letter outside the alphabet");
  UPWord w = up_normalize(word);

  // Product with the lasso acceptor of w. States carry the reading position;
  // acceptance needs final states and letter consumption infinitely often.
  BuchiVass prod;
  prod.dimension = v.dimension;
  prod.alphabet = v.alphabet;
  std::vector<int> origin;  // product transition -> V transition
  std::map<LangState, int> ids;
  std::deque<LangState> queue;
  auto state_id = [&](const LangState& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (static_cast<long long>(ids.size()) >= budget.max_product_states)
      throw BudgetExceeded("membership product state", static_cast<long long>(ids.size()));
    int id = prod.add_state("s" + std::to_string(ids.size()), s.flash == 1);
    ids.emplace(s, id);
    queue.push_back(s);
    return id;
  };
  LangState init{v.initial, {true, 0, 0}, 0, 0};
  state_id(init);
  prod.initial = 0;

  while (!queue.empty()) {
    LangState s = queue.front();
    queue.pop_front();
    int sid = ids[s];
    for (std::size_t ti = 0; ti < v.transitions.size(); ++ti) {
      const Transition& t = v.transitions[ti];
      if (t.source != s.vq) continue;
      LangState nxt = s;
      nxt.vq = t.target;
      if (!t.label.empty() && !consume(w, s.pos, t.label, &nxt.pos)) continue;
      int c = s.cond;
      if (c == 0 && v.is_final(s.vq)) c = 1;
      nxt.flash = 0;
      if (c == 1 && !t.label.empty()) {
        c = 0;
        nxt.flash = 1;
      }
      nxt.cond = c;
      prod.add_transition(sid, t.label, t.update, state_id(nxt));
      origin.push_back(static_cast<int>(ti));
    }
  }

  MembershipReport rep;
  TrimResult trimmed = trim_to_live(prod);
  KarpMillerGraph km = build_km(trimmed.vass, budget.km);
  auto circ = find_any_circulation(km);
  if (!circ) {
    rep.verdict = false;
    rep.evidence = "no accepting lasso in the word product";
    return rep;
  }
  Lasso l = lasso_from_circulation(km, *circ);
  rep.verdict = true;
  for (int pt : l.stem) rep.lasso_stem.push_back(origin[trimmed.kept_transitions[pt]]);
  for (int pt : l.cycle) rep.lasso_cycle.push_back(origin[trimmed.kept_transitions[pt]]);
  rep.evidence = "accepting lasso with " + std::to_string(rep.lasso_stem.size()) +
                 " stem and " + std::to_string(rep.lasso_cycle.size()) + " cycle transitions";
  return rep;
}

std::vector<UPWord> fuzz_accepted_words(const BuchiVass& v, int count, const Int& size_bound,
                                        const OracleBudget& budget, unsigned seed) {
  std::vector<UPWord> out;
  KarpMillerGraph km;
  try {
    km = build_km(v, budget.km);
  } catch (const BudgetExceeded&) {
    return out;
  }
  std::mt19937 rng(seed);
  std::set<std::string> seen;

  auto word_of = [&](const std::vector<int>& ts) {
    RleWord w;
    for (int ti : ts) w.append(v.transitions[ti].label);
    return w;
  };
  auto offer = [&](const std::vector<int>& stem, const std::vector<int>& cycle) {
    RleWord uw = word_of(stem), vw = word_of(cycle);
    if (vw.empty()) return;
    UPWord cand = up_normalize(uw, vw);
    if (cand.prefix.length() + cand.period.length() > size_bound) return;
    std::string key = cand.prefix.to_string(v.alphabet) + "@" + cand.period.to_string(v.alphabet);
    if (!seen.insert(key).second) return;
    out.push_back(cand);
  };

  std::vector<GraphEdge> ges;
  for (const auto& e : km.edges) ges.push_back({e.src, e.tgt});
  int ncomp = 0;
  std::vector<int> comp =
      strongly_connected_components(static_cast<int>(km.nodes.size()), ges, &ncomp);

  for (int f : km.final_nodes) {
    if (static_cast<int>(out.size()) >= count) break;
    std::optional<Circulation> circ;
    try {
      circ = find_circulation_at(km, f);
    } catch (const Error&) {
      continue;
    }
    if (!circ) continue;
    Lasso base = lasso_from_circulation(km, *circ);
    offer(base.stem, base.cycle);

    // Variants: graft extra simple cycles of the surrounding component onto
    // the circulation (keeping it connected and nonnegative).
    std::vector<int> scc_edges;
    for (std::size_t i = 0; i < km.edges.size(); ++i)
      if (comp[km.edges[i].src] == comp[f] && comp[km.edges[i].tgt] == comp[f])
        scc_edges.push_back(static_cast<int>(i));
    std::vector<std::vector<int>> cycles;
    enumerate_simple_cycles(static_cast<int>(km.nodes.size()), ges, scc_edges, 64, &cycles);

    for (int attempt = 0; attempt < 6 * count && static_cast<int>(out.size()) < count;
         ++attempt) {
      std::map<int, Int> counts;
      std::set<int> nodes;
      for (std::size_t i = 0; i < circ->edge_ids.size(); ++i) {
        counts[circ->edge_ids[i]] = circ->counts[i];
        nodes.insert(km.edges[circ->edge_ids[i]].src);
        nodes.insert(km.edges[circ->edge_ids[i]].tgt);
      }
      for (const auto& cyc : cycles) {
        if (rng() % 2 == 0) continue;
        bool touches = false;
        for (int e : cyc)
          if (nodes.count(km.edges[e].src) || nodes.count(km.edges[e].tgt)) touches = true;
        if (!touches) continue;
        Int reps(1 + static_cast<long>(rng() % 3));
        for (int e : cyc) {
          counts[e] += reps;
          nodes.insert(km.edges[e].src);
          nodes.insert(km.edges[e].tgt);
        }
      }
      Circulation c2;
      c2.anchor = f;
      for (const auto& [e, cnt] : counts) {
        c2.edge_ids.push_back(e);
        c2.counts.push_back(cnt);
      }
      IntVec delta = zero_vec(v.dimension);
      for (std::size_t i = 0; i < c2.edge_ids.size(); ++i) {
        const IntVec& up = v.transitions[km.edges[c2.edge_ids[i]].trans].update;
        for (int d = 0; d < v.dimension; ++d) delta[d] += c2.counts[i] * up[d];
      }
      if (!all_nonneg(delta)) continue;
      try {
        Lasso l = lasso_from_circulation(km, c2);
        offer(l.stem, l.cycle);
      } catch (const Error&) {
        continue;
      }
    }
  }
  return out;
}

}  // namespace regsep
