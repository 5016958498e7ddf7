#include "regsep/separability.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "regsep/errors.hpp"
#include "regsep/graph.hpp"

namespace regsep {

namespace {

std::vector<GraphEdge> graph_edges(const KarpMillerGraph& km) {
  std::vector<GraphEdge> ges;
  ges.reserve(km.edges.size());
  for (const auto& e : km.edges) ges.push_back({e.src, e.tgt});
  return ges;
}

RleWord word_of_edges(const KarpMillerGraph& km, const std::vector<int>& edge_ids) {
  RleWord w;
  for (int e : edge_ids) w.append(km.vass.transitions[km.edges[e].trans].label);
  return w;
}

IntVec effect_of_edges(const KarpMillerGraph& km, const std::vector<int>& edge_ids) {
  IntVec d = zero_vec(km.vass.dimension);
  for (int e : edge_ids) d = add(d, km.vass.transitions[km.edges[e].trans].update);
  return d;
}

}  // namespace

// Visits profiles in a deterministic order: strongly connected components by
// smallest node, candidate edge sets as node-connected unions of simple
// cycles, level by level in the number of glued cycles, each level sorted by
// (cardinality, lexicographic). The visitor returns false to stop early.
// The cap counts distinct generated candidates.
void for_each_profile(const KarpMillerGraph& km, long long cap,
                      const std::function<bool(Profile&&)>& visit) {
  std::vector<GraphEdge> ges = graph_edges(km);
  int ncomp = 0;
  std::vector<int> comp =
      strongly_connected_components(static_cast<int>(km.nodes.size()), ges, &ncomp);

  std::vector<std::vector<int>> finals_by_comp(ncomp);
  for (int f : km.final_nodes) finals_by_comp[comp[f]].push_back(f);
  for (auto& fs : finals_by_comp) std::sort(fs.begin(), fs.end());

  auto union_nodes = [&](const std::vector<int>& edge_set) {
    std::set<int> nodes;
    for (int e : edge_set) {
      nodes.insert(km.edges[e].src);
      nodes.insert(km.edges[e].tgt);
    }
    return nodes;
  };
  // returns false when the visitor asked to stop
  auto examine = [&](const std::vector<int>& u) {
    int anchor = -1;
    std::set<int> nodes = union_nodes(u);
    for (int f : km.final_nodes)
      if (nodes.count(f)) {
        anchor = f;
        break;
      }
    if (anchor < 0) return true;
    auto w = circulation_witness(km, u, true);
    if (!w) return true;
    Profile p;
    p.edges = u;
    p.witness = {u, *w, anchor};
    return visit(std::move(p));
  };

  std::vector<std::vector<int>> scc_edge_sets(ncomp);
  for (std::size_t i = 0; i < km.edges.size(); ++i) {
    int c = comp[km.edges[i].src];
    if (c == comp[km.edges[i].tgt] && !finals_by_comp[c].empty())
      scc_edge_sets[c].push_back(static_cast<int>(i));
  }

  long long candidates = 0;
  bool capped = false;
  std::set<std::vector<int>> seen;
  for (int c = 0; c < ncomp && !capped; ++c) {
    if (scc_edge_sets[c].empty()) continue;
    std::vector<std::vector<int>> cycles;
    if (!enumerate_simple_cycles(static_cast<int>(km.nodes.size()), ges, scc_edge_sets[c],
                                 cap, &cycles)) {
      capped = true;
      break;
    }

    std::vector<std::vector<int>> level;
    for (const auto& cyc : cycles) {
      std::vector<int> u = cyc;
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (!seen.insert(u).second) continue;
      if (++candidates > cap) {
        capped = true;
        break;
      }
      level.push_back(std::move(u));
    }
    auto by_size = [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    };
    while (!level.empty() && !capped) {
      std::sort(level.begin(), level.end(), by_size);
      for (const auto& u : level)
        if (!examine(u)) return;
      std::vector<std::vector<int>> next;
      for (const auto& cur : level) {
        if (capped) break;
        std::set<int> nodes = union_nodes(cur);
        for (const auto& cyc : cycles) {
          bool touches = false;
          for (int e : cyc)
            if (nodes.count(km.edges[e].src) || nodes.count(km.edges[e].tgt)) {
              touches = true;
              break;
            }
          if (!touches) continue;
          std::vector<int> merged = cur;
          merged.insert(merged.end(), cyc.begin(), cyc.end());
          std::sort(merged.begin(), merged.end());
          merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
          if (merged == cur) continue;
          if (!seen.insert(merged).second) continue;
          if (++candidates > cap) {
            capped = true;
            break;
          }
          next.push_back(std::move(merged));
        }
      }
      level = std::move(next);
    }
  }
  if (!capped) return;

  // The candidate space is out of budget. Before failing, examine the stable
  // support-refinement cores: maximal live edge sets, which is where a dual
  // system hides if one exists at all within reach.
  for (int c = 0; c < ncomp; ++c) {
    if (scc_edge_sets[c].empty()) continue;
    for (const auto& core : live_cores(km, scc_edge_sets[c], finals_by_comp[c])) {
      if (seen.count(core)) continue;
      if (!examine(core)) return;
    }
  }
  throw CapExceeded(candidates);
}

std::vector<Profile> enumerate_profiles(const KarpMillerGraph& km, long long cap) {
  std::vector<Profile> out;
  for_each_profile(km, cap, [&](Profile&& p) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

std::vector<PrimitiveCycle> primitive_cycles(const KarpMillerGraph& km,
                                             const std::vector<int>& edge_set) {
  std::vector<std::vector<int>> raw;
  if (!enumerate_simple_cycles(static_cast<int>(km.nodes.size()), graph_edges(km), edge_set,
                               1000000, &raw))
    throw BudgetExceeded("simple cycle enumeration", 1000000);
  std::vector<PrimitiveCycle> out;
  out.reserve(raw.size());
  for (auto& cyc : raw) {
    PrimitiveCycle pc;
    pc.ext = balance(word_of_edges(km, cyc), km.vass.alphabet);
    pc.eff = effect_of_edges(km, cyc);
    pc.edges = std::move(cyc);
    out.push_back(std::move(pc));
  }
  return out;
}

CycleData complete_cycle(const KarpMillerGraph& km, const Profile& p) {
  CycleData cd;
  cd.profile = p;
  cd.primitive = primitive_cycles(km, p.edges);
  cd.anchor = p.witness.anchor;
  const std::size_t m = cd.primitive.size();
  if (m == 0) throw InternalInvariantViolation("profile without primitive cycles");

  std::vector<int> sigma = euler_circuit(km, p.witness);

  // Find r >= 1, K >= 1 with sum r_i tau_i = K * sigma as edge multisets.
  std::map<int, std::size_t> edge_slot;
  for (std::size_t i = 0; i < p.edges.size(); ++i) edge_slot[p.edges[i]] = i;
  auto count_edges = [&](const std::vector<int>& seq) {
    IntVec cnt = zero_vec(p.edges.size());
    for (int e : seq) cnt[edge_slot.at(e)] += 1;
    return cnt;
  };
  IntVec sigma_cnt = count_edges(sigma);
  std::vector<IntVec> tau_cnt;
  for (const auto& t : cd.primitive) tau_cnt.push_back(count_edges(t.edges));

  // Variables: r_1..r_m, K. Rows: equality per edge (two inequalities) and
  // lower bounds 1.
  std::vector<IntVec> rows;
  std::vector<Int> rhs;
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    IntVec row(m + 1, Int(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = tau_cnt[i][e];
    row[m] = -sigma_cnt[e];
    rows.push_back(row);
    rhs.push_back(0);
    for (auto& x : row) x = -x;
    rows.push_back(row);
    rhs.push_back(0);
  }
  for (std::size_t i = 0; i <= m; ++i) {
    IntVec row(m + 1, Int(0));
    row[i] = -1;
    rows.push_back(row);
    rhs.push_back(-1);
  }
  RatVec b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = Rat(rhs[i]);
  // Minimizing the multiplicities keeps the complete cycle and the flower
  // insertions materializable.
  RatVec objective(m + 1, Rat(-1));
  LpOutcome lp =
      simplex_solve(RationalMatrix::from_int_rows(rows, m + 1), b, &objective);
  if (!lp.feasible)
    throw InternalInvariantViolation("no complete cycle decomposition exists");
  IntVec scaled = scale_to_integers(lp.solution);
  cd.decomposition.assign(scaled.begin(), scaled.begin() + m);
  cd.power = scaled[m];

  // Materialize sigma^K and place ordered insertion points, doubling the
  // power if the ordered scan runs out of copies.
  auto boundary_node = [&](const std::vector<int>& seq, std::size_t b_idx) {
    return b_idx == 0 ? cd.anchor : km.edges[seq[b_idx - 1]].tgt;
  };
  while (true) {
    if (!cd.power.fits_slong_p() ||
        cd.power.get_si() * static_cast<long long>(sigma.size()) > 200000)
      throw BudgetExceeded("complete cycle length",
                           static_cast<long long>(sigma.size()));
    long k = cd.power.get_si();
    cd.complete.clear();
    for (long i = 0; i < k; ++i)
      cd.complete.insert(cd.complete.end(), sigma.begin(), sigma.end());
    cd.insertion.assign(m, 0);
    bool ok = true;
    std::size_t from = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      int want = km.edges[cd.primitive[i].edges.front()].src;
      std::size_t b_idx = from;
      while (b_idx <= cd.complete.size() && boundary_node(cd.complete, b_idx) != want) ++b_idx;
      if (b_idx > cd.complete.size())
        ok = false;
      else {
        cd.insertion[i] = b_idx;
        from = b_idx;
      }
    }
    if (ok) break;
    cd.power *= 2;
    for (auto& r : cd.decomposition) r *= 2;
  }

  cd.complete_ext = balance(word_of_edges(km, cd.complete), km.vass.alphabet);
  cd.complete_eff = effect_of_edges(km, cd.complete);
  return cd;
}

IneqSystem build_system(const KarpMillerGraph& km, const CycleData& cd) {
  const int n = km.vass.alphabet.pairs();
  IneqSystem sys;
  std::vector<IntVec> rows;
  for (const auto& t : cd.primitive) rows.push_back(t.ext);
  rows.push_back(cd.complete_ext);
  sys.a = RationalMatrix::from_int_rows(rows, n);
  sys.b.assign(rows.size(), Rat(0));
  sys.b.back() = Rat(-1);
  return sys;
}

ProfileVerdict profile_verdict(const IneqSystem& sys) {
  ProfileVerdict pv;
  LpOutcome lp = feasible(sys.a, sys.b);
  pv.solution = lp.feasible;
  if (lp.feasible) {
    pv.x = scale_to_integers(lp.solution);
  } else {
    pv.y = scale_to_integers(lp.certificate);
    if (pv.y.back() <= 0)
      throw InternalInvariantViolation("dual does not select the complete cycle");
  }
  return pv;
}

namespace {

// sigma^{(z)}: insert tau_i^{z_i - r_i} at the recorded insertion points.
std::vector<int> sigma_power(const KarpMillerGraph& km, const CycleData& cd, const IntVec& z) {
  const std::size_t m = cd.primitive.size();
  Int total = Int(cd.complete.size());
  for (std::size_t i = 0; i < m; ++i)
    total += (z[i] - cd.decomposition[i]) * Int(cd.primitive[i].edges.size());
  if (!total.fits_slong_p() || total.get_si() > 1000000)
    throw BudgetExceeded("flower cycle length", 1000000);

  std::vector<int> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (; pos < cd.insertion[i]; ++pos) out.push_back(cd.complete[pos]);
    Int reps = z[i] - cd.decomposition[i];
    for (Int j = 0; j < reps; ++j)
      out.insert(out.end(), cd.primitive[i].edges.begin(), cd.primitive[i].edges.end());
  }
  for (; pos < cd.complete.size(); ++pos) out.push_back(cd.complete[pos]);
  return out;
}

}  // namespace

Flower build_flower(const KarpMillerGraph& km, const CycleData& cd, const IntVec& y) {
  IneqSystem sys = build_system(km, cd);
  RatVec yr(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) yr[i] = Rat(y[i]);
  if (y.size() != cd.primitive.size() + 1 || !verify_certificate(sys.a, sys.b, yr))
    throw InvalidDual("vector is not a Farkas certificate for the profile system");

  const std::size_t m = cd.primitive.size();
  const IntVec& r = cd.decomposition;
  Flower f;
  f.anchor = cd.anchor;
  f.y_hat.resize(m);
  for (std::size_t i = 0; i < m; ++i) f.y_hat[i] = y[i] + y[m] * r[i];

  f.big_m = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Int need = ceil_div(2 * r[i], f.y_hat[i]);
    if (need > f.big_m) f.big_m = need;
  }
  f.s.resize(m);
  for (std::size_t i = 0; i < m; ++i) f.s[i] = f.big_m * f.y_hat[i] - r[i];

  f.big_n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Int need = ceil_div(f.s[i] + 2 * r[i], r[i]);
    if (need > f.big_n) f.big_n = need;
  }
  f.t.resize(m);
  for (std::size_t i = 0; i < m; ++i) f.t[i] = f.big_n * r[i] - f.s[i] - r[i];

  f.alpha = cd.complete;
  f.beta = sigma_power(km, cd, f.s);
  f.gamma = sigma_power(km, cd, f.t);
  return f;
}

bool verify_flower(const KarpMillerGraph& km, const Flower& f) {
  if (!km.node_final(f.anchor))
    throw NotCyclesAtAnchor("flower anchor is not a final node");
  for (const std::vector<int>* cyc : {&f.alpha, &f.beta, &f.gamma}) {
    if (cyc->empty()) throw NotCyclesAtAnchor("empty flower cycle");
    int at = f.anchor;
    for (int e : *cyc) {
      if (e < 0 || e >= static_cast<int>(km.edges.size()) || km.edges[e].src != at)
        throw NotCyclesAtAnchor("flower cycle is not a path of edges");
      at = km.edges[e].tgt;
    }
    if (at != f.anchor) throw NotCyclesAtAnchor("flower cycle does not return to anchor");
  }

  std::vector<int> all = f.alpha;
  all.insert(all.end(), f.beta.begin(), f.beta.end());
  all.insert(all.end(), f.gamma.begin(), f.gamma.end());
  if (!all_nonneg(effect_of_edges(km, all))) return false;

  std::vector<int> ab = f.alpha;
  ab.insert(ab.end(), f.beta.begin(), f.beta.end());
  Balance phi_ab = balance(word_of_edges(km, ab), km.vass.alphabet);
  if (!all_nonneg(phi_ab)) return false;

  Balance phi_abg = balance(word_of_edges(km, all), km.vass.alphabet);
  Balance phi_a = balance(word_of_edges(km, f.alpha), km.vass.alphabet);
  bool abg_zero = true;
  for (const auto& x : phi_abg)
    if (x != 0) abg_zero = false;
  if (abg_zero) return true;  // scalar 0
  bool a_zero = true;
  for (const auto& x : phi_a)
    if (x != 0) a_zero = false;
  if (a_zero) return false;
  // phi_abg = c * phi_a for a rational c: cross products agree.
  for (std::size_t i = 0; i < phi_a.size(); ++i)
    for (std::size_t j = i + 1; j < phi_a.size(); ++j)
      if (phi_abg[i] * phi_a[j] != phi_abg[j] * phi_a[i]) return false;
  // Zero components of phi_a force zero in phi_abg.
  for (std::size_t i = 0; i < phi_a.size(); ++i)
    if (phi_a[i] == 0 && phi_abg[i] != 0) return false;
  return true;
}

UPWord flower_witness_word(const KarpMillerGraph& km, const Flower& f, const Int& k) {
  if (!k.fits_slong_p()) throw Error("flower witness exponent too large");
  long reps = k.get_si() + 1;
  std::vector<int> period_edges;
  for (long j = 0; j < reps; ++j)
    period_edges.insert(period_edges.end(), f.alpha.begin(), f.alpha.end());
  for (long j = 0; j < reps; ++j)
    period_edges.insert(period_edges.end(), f.beta.begin(), f.beta.end());
  for (long j = 0; j < reps; ++j)
    period_edges.insert(period_edges.end(), f.gamma.begin(), f.gamma.end());

  std::vector<int> period_trans = edge_transitions(km, period_edges);
  IntVec delta, dip;
  run_effect(km.vass, period_trans, &delta, &dip);
  if (!all_nonneg(delta))
    throw InternalInvariantViolation("flower period has negative counter effect");
  IntVec demand = zero_vec(km.vass.dimension);
  const ExtConfig& anchor_cfg = km.nodes[f.anchor].counters;
  for (int i = 0; i < km.vass.dimension; ++i)
    if (anchor_cfg[i].omega) demand[i] = -dip[i];
  LiftResult stem = lift_to_node(km, f.anchor, demand);

  RleWord u;
  for (int ti : stem.transitions) u.append(km.vass.transitions[ti].label);
  RleWord v = word_of_edges(km, period_edges);
  return up_normalize(u, v);
}

DecideTrace decide_traced(const BuchiVass& v, const DecideBudget& budget) {
  if (!v.alphabet.is_dyck() || v.alphabet.pairs() < 1) throw NotDyckAlphabet();
  DecideTrace tr;
  tr.pump = build_pump(v, budget.km);
  tr.km = build_km(tr.pump.pump_v, budget.km);

  Int h = 0;  // longest expanded transition label of the automaton
  for (const auto& t : tr.pump.pump_v.transitions) {
    Int len = t.label.length();
    if (len > h) h = len;
  }

  // Profiles are processed as they are generated: the first dual system
  // settles inseparability without exhausting the candidate space.
  tr.verdict.separable = true;
  for_each_profile(tr.km, budget.profile_cap, [&](Profile&& profile) {
    Profile p = std::move(profile);
    CycleData cd = complete_cycle(tr.km, p);
    IneqSystem sys = build_system(tr.km, cd);
    ProfileVerdict pv = profile_verdict(sys);
    tr.profiles.push_back(p);
    tr.cycles.push_back(cd);
    tr.verdicts.push_back(pv);
    if (pv.solution) {
      std::set<int> nodes;
      for (int e : p.edges) {
        nodes.insert(tr.km.edges[e].src);
        nodes.insert(tr.km.edges[e].tgt);
      }
      SeparatorAtom atom;
      atom.is_p = false;
      atom.x = pv.x;
      atom.k = Int(static_cast<long>(nodes.size())) * h;
      tr.verdict.cover.push_back(std::move(atom));
      return true;
    }
    tr.verdict.separable = false;
    tr.verdict.failing_profile = p;
    tr.verdict.farkas_y = pv.y;
    Flower fl = build_flower(tr.km, cd, pv.y);
    if (!verify_flower(tr.km, fl))
      throw InternalInvariantViolation("constructed flower fails verification");
    tr.verdict.flower = fl;
    tr.verdict.cycle_data = cd;
    tr.verdict.cover.clear();
    return false;
  });
  if (!tr.verdict.separable) return tr;
  // Separable: P atoms for the pump constant cover L(V) \ L(pump). Balances
  // can peak inside a multi-letter label between two counter checks, so the
  // constant carries that margin (P_{i,k} only grows with k and every P atom
  // stays disjoint from the Dyck language). An empty language needs no cover.
  bool need_p = !tr.profiles.empty();
  if (!need_p) {
    OracleBudget ob;
    ob.km = budget.km;
    need_p = !is_empty(v, ob);
  }
  if (need_p) {
    Int peak = 0;
    for (const auto& t : v.transitions) {
      IntVec bal = zero_vec(v.alphabet.pairs());
      for (const auto& r : t.label.runs()) {
        int pair = v.alphabet.pair_index(r.letter);
        if (v.alphabet.is_barred(r.letter))
          bal[pair] -= r.count;
        else
          bal[pair] += r.count;
        if (bal[pair] > peak) peak = bal[pair];
      }
    }
    for (int i = 1; i <= v.alphabet.pairs(); ++i) {
      SeparatorAtom atom;
      atom.is_p = true;
      atom.i = i;
      atom.k = tr.pump.k + peak;
      tr.verdict.cover.push_back(std::move(atom));
    }
  }
  return tr;
}

Verdict decide(const BuchiVass& v, const DecideBudget& budget) {
  return decide_traced(v, budget).verdict;
}

Verdict decide_pair(const BuchiVass& v1, const BuchiVass& v2, const DecideBudget& budget) {
  auto [v, n] = reduce_to_dyck(v1, v2, budget.product);
  return decide(v, budget);
}

std::vector<SeparatorAtom> basic_separator_cover(const BuchiVass& a, const DecideBudget& budget) {
  if (a.dimension != 0) throw DimensionMismatch("basic separator cover expects d = 0");
  if (!a.alphabet.is_dyck()) throw NotDyckAlphabet();
  const int n = a.alphabet.pairs();

  // Disjointness pre-check: product with the one-state D_n acceptor. Labels
  // split per run so the counter checks match the per-letter Dyck semantics.
  BuchiVass prod;
  prod.dimension = n;
  prod.alphabet = a.alphabet;
  prod.state_names = a.state_names;
  prod.initial = a.initial;
  prod.finals = a.finals;
  for (const Transition& t : a.transitions) {
    const auto& runs = t.label.runs();
    if (runs.empty()) {
      prod.add_transition(t.source, t.label, zero_vec(n), t.target);
      continue;
    }
    int at = t.source;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      int nxt = (i + 1 == runs.size())
                    ? t.target
                    : prod.add_state(a.state_names[t.source] + "#" + std::to_string(i), false);
      IntVec up = zero_vec(n);
      int pair = prod.alphabet.pair_index(runs[i].letter);
      up[pair] = prod.alphabet.is_barred(runs[i].letter) ? Int(-runs[i].count) : runs[i].count;
      prod.add_transition(at, RleWord::letter(runs[i].letter, runs[i].count), up, nxt);
      at = nxt;
    }
  }
  BuchiVass prod_trim = trim_to_live(prod).vass;
  KarpMillerGraph km = build_km(prod_trim, budget.km);
  if (auto circ = find_any_circulation(km)) {
    Lasso l = lasso_from_circulation(km, *circ);
    RleWord u, vv;
    for (int ti : l.stem) u.append(prod_trim.transitions[ti].label);
    for (int ti : l.cycle) vv.append(prod_trim.transitions[ti].label);
    throw NotDisjointFromDyck(up_normalize(u, vv),
                              "the automaton language intersects the Dyck language");
  }

  DecideTrace tr = decide_traced(a, budget);
  if (!tr.verdict.separable) {
    // The dual's combined cycle has nonnegative balance on every pair: with
    // pumpability it yields a Dyck member, contradicting the pre-check.
    std::vector<int> ab = tr.verdict.flower->alpha;
    ab.insert(ab.end(), tr.verdict.flower->beta.begin(), tr.verdict.flower->beta.end());
    RleWord cyc_word = word_of_edges(tr.km, ab);
    LiftResult stem = lift_to_node(tr.km, tr.verdict.flower->anchor, zero_vec(0));
    RleWord u;
    for (int ti : stem.transitions) u.append(tr.km.vass.transitions[ti].label);
    throw NotDisjointFromDyck(
        up_normalize(u, cyc_word),
        "a profile admits a cycle with nonnegative balance containing all its edges");
  }
  return tr.verdict.cover;
}

}  // namespace regsep
