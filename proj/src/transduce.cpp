#include "regsep/transduce.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "regsep/errors.hpp"

namespace regsep {

BuchiTransducer vass_to_transducer(const BuchiVass& v) {
  if (v.dimension < 1) throw ZeroDimension();
  BuchiTransducer t;
  t.input = v.alphabet;
  t.output = Alphabet::dyck(v.dimension);
  t.state_names = v.state_names;
  t.initial = v.initial;
  t.finals = v.finals;
  for (const Transition& tr : v.transitions) {
    RleWord out;
    for (int i = 0; i < v.dimension; ++i) {
      if (tr.update[i] > 0)
        out.append(Alphabet::push_letter(i), tr.update[i]);
      else if (tr.update[i] < 0)
        out.append(Alphabet::pop_letter(i), -tr.update[i]);
    }
    if (out.empty()) {
      out.append(Alphabet::push_letter(0), 1);
      out.append(Alphabet::pop_letter(0), 1);
    }
    t.transitions.push_back({tr.source, tr.label, out, tr.target});
  }
  return t;
}

BuchiTransducer inverse(const BuchiTransducer& t) {
  BuchiTransducer r = t;
  std::swap(r.input, r.output);
  for (auto& tr : r.transitions) std::swap(tr.in, tr.out);
  return r;
}

namespace {

// Consumes the common prefix of two words letterwise; exactly one remainder
// is nonempty afterwards (or both empty). Returns false on a letter clash.
bool match_prefix(const RleWord& a, const RleWord& b, RleWord* rem_a, RleWord* rem_b) {
  std::size_t ia = 0, ib = 0;
  Int offa = 0, offb = 0;
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  while (ia < ra.size() && ib < rb.size()) {
    if (ra[ia].letter != rb[ib].letter) return false;
    Int take_a = ra[ia].count - offa;
    Int take_b = rb[ib].count - offb;
    if (take_a <= take_b) {
      offb += take_a;
      ++ia;
      offa = 0;
      if (offb == rb[ib].count) {
        ++ib;
        offb = 0;
      }
    } else {
      offa += take_b;
      ++ib;
      offb = 0;
    }
  }
  *rem_a = RleWord();
  for (std::size_t i = ia; i < ra.size(); ++i)
    rem_a->append(ra[i].letter, i == ia ? Int(ra[i].count - offa) : ra[i].count);
  *rem_b = RleWord();
  for (std::size_t i = ib; i < rb.size(); ++i)
    rem_b->append(rb[i].letter, i == ib ? Int(rb[i].count - offb) : rb[i].count);
  return true;
}

// Synchronization buffer: letters of the shared input stream one side has
// processed ahead of the other.
enum class Side : int { None = 0, V1Ahead = 1, TAhead = 2 };

struct ProductState {
  int tq;
  int vq;
  int side;
  std::vector<Run> buf;
  int cond;   // next fairness obligation: 0 V1-final, 1 T-final, 2 input, 3 output
  int flash;  // 1 right after completing the obligation round

  bool operator<(const ProductState& o) const {
    auto key = [](const ProductState& s) {
      return std::tuple<int, int, int, int, int>(s.tq, s.vq, s.side, s.cond, s.flash);
    };
    if (key(*this) != key(o)) return key(*this) < key(o);
    if (buf.size() != o.buf.size()) return buf.size() < o.buf.size();
    for (std::size_t i = 0; i < buf.size(); ++i) {
      if (buf[i].letter != o.buf[i].letter) return buf[i].letter < o.buf[i].letter;
      if (buf[i].count != o.buf[i].count) return buf[i].count < o.buf[i].count;
    }
    return false;
  }
};

}  // namespace

BuchiVass apply_inverse_to_vass(const BuchiTransducer& t, const BuchiVass& v1,
                                const ProductBudget& budget) {
  if (!(t.input == v1.alphabet))
    throw AlphabetMismatch("transducer input alphabet differs from the VASS alphabet");

  BuchiVass out;
  out.dimension = v1.dimension;
  out.alphabet = t.output;

  std::map<ProductState, int> ids;
  std::deque<ProductState> queue;

  auto state_id = [&](const ProductState& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (static_cast<long long>(ids.size()) >= budget.max_states)
      throw BudgetExceeded("transduction product state", static_cast<long long>(ids.size()));
    std::string name = "(" + t.state_names[s.tq] + "," + v1.state_names[s.vq] + "," +
                       std::to_string(s.side) + "," + std::to_string(s.cond) +
                       (s.flash ? ",*" : "") + ")";
    int id = out.add_state(name, s.flash == 1);
    ids.emplace(s, id);
    queue.push_back(s);
    return id;
  };

  // Fairness obligations, skipping the ones that hold everywhere: all-final
  // components and transducers that emit on every transition contribute
  // nothing to acceptance.
  bool need_v1_final = false, need_t_final = false, need_output = false;
  for (int q = 0; q < v1.num_states(); ++q)
    if (!v1.is_final(q)) need_v1_final = true;
  for (int q = 0; q < t.num_states(); ++q)
    if (!t.is_final(q)) need_t_final = true;
  for (const auto& tr : t.transitions)
    if (tr.out.empty()) need_output = true;

  // Advance the pending obligation using the source state, then the
  // properties of the move itself; absent obligations pass through.
  auto advance = [&](const ProductState& src, bool input_progress, bool output_progress,
                     int* cond, int* flash) {
    int c = src.cond;
    bool wrapped = false;
    for (int step = 0; step < 4 && !wrapped; ++step) {
      bool satisfied = false;
      switch (c) {
        case 0: satisfied = !need_v1_final || v1.is_final(src.vq); break;
        case 1: satisfied = !need_t_final || t.is_final(src.tq); break;
        case 2: satisfied = input_progress; break;
        case 3: satisfied = !need_output || output_progress; break;
      }
      if (!satisfied) break;
      if (c == 3) {
        c = 0;
        wrapped = true;
      } else {
        ++c;
      }
    }
    *cond = c;
    *flash = wrapped ? 1 : 0;
  };

  ProductState init{t.initial, v1.initial, static_cast<int>(Side::None), {}, 0, 0};
  state_id(init);
  out.initial = 0;

  while (!queue.empty()) {
    ProductState s = queue.front();
    queue.pop_front();
    int sid = ids[s];
    RleWord buf_word{std::vector<Run>(s.buf)};

    // V1 moves: consume shared-stream letters (or none for epsilon labels).
    for (const Transition& tr : v1.transitions) {
      if (tr.source != s.vq) continue;
      ProductState nxt = s;
      nxt.vq = tr.target;
      bool progress = !tr.label.empty();
      if (tr.label.empty()) {
        // buffer untouched
      } else {
        if (s.side == static_cast<int>(Side::V1Ahead)) continue;
        RleWord rem_label, rem_buf;
        if (!match_prefix(tr.label, buf_word, &rem_label, &rem_buf)) continue;
        if (!rem_label.empty()) {
          nxt.side = static_cast<int>(Side::V1Ahead);
          nxt.buf = rem_label.runs();
        } else if (!rem_buf.empty()) {
          nxt.side = static_cast<int>(Side::TAhead);
          nxt.buf = rem_buf.runs();
        } else {
          nxt.side = static_cast<int>(Side::None);
          nxt.buf.clear();
        }
      }
      advance(s, progress, false, &nxt.cond, &nxt.flash);
      out.add_transition(sid, RleWord(), tr.update, state_id(nxt));
    }

    // Transducer moves: match the in tape against the stream, emit the out
    // tape as the product's label.
    for (const TransducerTransition& tr : t.transitions) {
      if (tr.source != s.tq) continue;
      ProductState nxt = s;
      nxt.tq = tr.target;
      if (tr.in.empty()) {
        // buffer untouched
      } else {
        if (s.side == static_cast<int>(Side::TAhead)) continue;
        RleWord rem_in, rem_buf;
        if (!match_prefix(tr.in, buf_word, &rem_in, &rem_buf)) continue;
        if (!rem_in.empty()) {
          nxt.side = static_cast<int>(Side::TAhead);
          nxt.buf = rem_in.runs();
        } else if (!rem_buf.empty()) {
          nxt.side = static_cast<int>(Side::V1Ahead);
          nxt.buf = rem_buf.runs();
        } else {
          nxt.side = static_cast<int>(Side::None);
          nxt.buf.clear();
        }
      }
      advance(s, false, !tr.out.empty(), &nxt.cond, &nxt.flash);
      out.add_transition(sid, tr.out, zero_vec(v1.dimension), state_id(nxt));
    }
  }
  return trim_to_live(out).vass;
}

std::pair<BuchiVass, int> reduce_to_dyck(const BuchiVass& v1, const BuchiVass& v2,
                                         const ProductBudget& budget) {
  if (!(v1.alphabet == v2.alphabet))
    throw AlphabetMismatch("the two inputs must share an alphabet");
  BuchiVass v2p = v2;
  if (v2p.dimension == 0) {
    // D_0 is degenerate; pad with one idle counter.
    v2p.dimension = 1;
    for (auto& tr : v2p.transitions) tr.update = IntVec{Int(0)};
  }
  BuchiTransducer t = vass_to_transducer(v2p);
  BuchiVass v = apply_inverse_to_vass(t, v1, budget);
  return {std::move(v), v2p.dimension};
}

}  // namespace regsep
