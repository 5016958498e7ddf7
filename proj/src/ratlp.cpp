#include "regsep/ratlp.hpp"

#include <algorithm>

#include "regsep/errors.hpp"

namespace regsep {

RationalMatrix RationalMatrix::from_int_rows(const std::vector<IntVec>& r, std::size_t n) {
  RationalMatrix m(r.size(), n);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != n) throw DimensionMismatch("ragged integer row");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(r[i][j]);
  }
  return m;
}

namespace {

// One working inequality sum(coeff_j x_j) <= rhs together with the
// nonnegative multipliers over the extended row set (m given rows followed
// by n rows -x_i <= 0).
struct Ineq {
  RatVec coeff;
  Rat rhs;
  RatVec combo;
};

Ineq combine(const Ineq& pos, const Ineq& neg, std::size_t var) {
  // pos.coeff[var] > 0, neg.coeff[var] < 0; multipliers -neg[var] and pos[var]
  Rat mp = -neg.coeff[var];
  Rat mn = pos.coeff[var];
  Ineq out;
  out.coeff.resize(pos.coeff.size());
  for (std::size_t j = 0; j < pos.coeff.size(); ++j)
    out.coeff[j] = mp * pos.coeff[j] + mn * neg.coeff[j];
  out.coeff[var] = 0;
  out.rhs = mp * pos.rhs + mn * neg.rhs;
  out.combo.resize(pos.combo.size());
  for (std::size_t j = 0; j < pos.combo.size(); ++j)
    out.combo[j] = mp * pos.combo[j] + mn * neg.combo[j];
  return out;
}

}  // namespace

LpOutcome feasible(const RationalMatrix& a, const RatVec& b) {
  if (b.size() != a.rows) throw DimensionMismatch("b length does not match row count");
  const std::size_t m = a.rows, n = a.cols;

  std::vector<Ineq> sys;
  sys.reserve(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    Ineq q;
    q.coeff = a[i];
    q.rhs = b[i];
    q.combo.assign(m + n, Rat(0));
    q.combo[i] = 1;
    sys.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Ineq q;
    q.coeff.assign(n, Rat(0));
    q.coeff[i] = -1;
    q.rhs = 0;
    q.combo.assign(m + n, Rat(0));
    q.combo[m + i] = 1;
    sys.push_back(std::move(q));
  }

  // stages[v] keeps the system as it looked before eliminating variable v,
  // used for back-substitution.
  std::vector<std::vector<Ineq>> stages(n);

  auto certificate_from = [&](const Ineq& q) {
    LpOutcome out;
    out.feasible = false;
    out.certificate.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) out.certificate[i] = q.combo[i];
    return out;
  };

  for (std::size_t v = 0; v < n; ++v) {
    stages[v] = sys;
    std::vector<Ineq> next;
    std::vector<const Ineq*> pos, neg;
    for (const Ineq& q : sys) {
      int s = sgn(q.coeff[v]);
      if (s > 0)
        pos.push_back(&q);
      else if (s < 0)
        neg.push_back(&q);
      else
        next.push_back(q);
    }
    for (const Ineq* p : pos)
      for (const Ineq* g : neg) next.push_back(combine(*p, *g, v));
    // Drop rows that are trivially satisfied; keep any witnessed contradiction.
    std::vector<Ineq> pruned;
    for (Ineq& q : next) {
      bool all_zero = std::all_of(q.coeff.begin(), q.coeff.end(),
                                  [](const Rat& c) { return c == 0; });
      if (all_zero) {
        if (q.rhs < 0) return certificate_from(q);
        continue;
      }
      pruned.push_back(std::move(q));
    }
    sys = std::move(pruned);
  }

  for (const Ineq& q : sys)
    if (q.rhs < 0) return certificate_from(q);  // coefficient-free rows only by now

  // Back-substitute, last eliminated variable first. With the -x_v <= 0 rows
  // in every stage the greatest lower bound is always defined and >= 0.
  LpOutcome out;
  out.feasible = true;
  out.solution.assign(n, Rat(0));
  for (std::size_t vi = n; vi-- > 0;) {
    Rat lower(0);
    bool have_lower = false;
    for (const Ineq& q : stages[vi]) {
      int s = sgn(q.coeff[vi]);
      if (s >= 0) continue;  // upper bounds and var-free rows do not move the glb
      // q: c_v x_v + rest <= rhs with c_v < 0  =>  x_v >= (rhs - rest)/c_v
      Rat rest(0);
      for (std::size_t j = vi + 1; j < n; ++j) rest += q.coeff[j] * out.solution[j];
      Rat bound = (q.rhs - rest) / q.coeff[vi];
      if (!have_lower || bound > lower) {
        lower = bound;
        have_lower = true;
      }
    }
    out.solution[vi] = lower;
  }
  return out;
}

namespace {

// Dense exact tableau for A x <= b, x >= 0, brought to equality form with
// slacks and (for negative right-hand sides) artificials. Bland's rule keeps
// every pivot sequence finite.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RatVec& b, const std::vector<bool>* eq)
      : m_(a.rows), n_(a.cols) {
    sign_.assign(m_, 1);
    slack_col_.assign(m_, -1);
    art_col_.assign(m_, -1);
    cols_ = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      bool is_eq = eq && (*eq)[i];
      if (!is_eq) slack_col_[i] = static_cast<int>(cols_++);
      if (is_eq || b[i] < 0) {
        if (b[i] < 0) sign_[i] = -1;
        art_col_[i] = -2;  // assigned below, after all slacks
      }
    }
    for (std::size_t i = 0; i < m_; ++i)
      if (art_col_[i] == -2) art_col_[i] = static_cast<int>(cols_++);
    rows_.assign(m_, RatVec(cols_ + 1, Rat(0)));
    basis_.assign(m_, 0);
    dead_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      Rat g(sign_[i]);
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = g * a[i][j];
      if (slack_col_[i] >= 0) rows_[i][slack_col_[i]] = g;
      if (art_col_[i] >= 0) rows_[i][art_col_[i]] = 1;
      rows_[i][cols_] = g * b[i];
      basis_[i] = art_col_[i] >= 0 ? art_col_[i] : slack_col_[i];
    }
  }

  // Minimizes the sum of artificials. Returns true when it reaches zero.
  bool phase1() {
    RatVec cost(cols_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (art_col_[i] >= 0) cost[art_col_[i]] = 1;
    set_objective(cost);
    run();
    return obj_value() == 0;
  }

  // Pivot artificials out of the basis (or retire their rows as redundant)
  // so later pivots cannot revive them.
  void purge_artificials() {
    banned_ = true;
    for (std::size_t i = 0; i < m_; ++i) {
      if (dead_[i]) continue;
      bool artificial_basic = false;
      for (std::size_t r = 0; r < m_; ++r)
        if (art_col_[r] == basis_[i]) artificial_basic = true;
      if (!artificial_basic) continue;
      std::size_t c = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (enterable(j) && rows_[i][j] != 0) {
          c = j;
          break;
        }
      if (c == cols_)
        dead_[i] = true;  // all-zero row: redundant constraint
      else
        pivot(i, c);
    }
  }

  // Maximizes sum(c_j x_j) over the structural variables; requires a feasible
  // basis (phase1 first). The caller guarantees boundedness.
  void phase2_max(const RatVec& c) {
    RatVec cost(cols_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = -c[j];
    set_objective(cost);
    run();
  }

  RatVec structural_solution() const {
    RatVec x(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (!dead_[i] && basis_[i] < static_cast<int>(n_)) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

  // Farkas vector after an infeasible phase 1: the reduced cost of slack i
  // equals -sign_i * pi_i, which is exactly the certificate entry. Only
  // meaningful when every row is an inequality.
  RatVec certificate() const {
    RatVec y(m_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (slack_col_[i] >= 0) y[i] = z_[slack_col_[i]];
    return y;
  }

 private:
  void set_objective(const RatVec& cost) {
    cost_ = cost;
    z_.assign(cols_ + 1, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = cost_[j];
    z_[cols_] = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (!dead_[i]) reduce_objective(i);
  }

  void reduce_objective(std::size_t row) {
    const Rat cb = cost_[basis_[row]];
    if (cb == 0) return;
    for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= cb * rows_[row][j];
  }

  Rat obj_value() const { return -z_[cols_]; }

  bool enterable(std::size_t j) const {
    if (banned_)
      for (std::size_t i = 0; i < m_; ++i)
        if (art_col_[i] == static_cast<int>(j)) return false;
    return true;
  }

  void run() {
    while (true) {
      // Bland: smallest improving column.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (z_[j] < 0 && enterable(j)) {
          enter = j;
          break;
        }
      if (enter == cols_) return;
      // Ratio test, ties by smallest basis variable.
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (dead_[i] || rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) throw InternalInvariantViolation("unbounded simplex objective");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rat p = rows_[r][c];
    for (std::size_t j = 0; j <= cols_; ++j) rows_[r][j] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || dead_[i]) continue;
      Rat f = rows_[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    Rat f = z_[c];
    if (f != 0)
      for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= f * rows_[r][j];
    basis_[r] = static_cast<int>(c);
  }

  std::size_t m_, n_, cols_;
  std::vector<int> sign_, slack_col_, art_col_, basis_;
  std::vector<bool> dead_;
  std::vector<RatVec> rows_;
  RatVec cost_, z_;
  bool banned_ = false;
};

}  // namespace

LpOutcome simplex_solve(const RationalMatrix& a, const RatVec& b, const RatVec* maximize,
                        const std::vector<bool>* equality_rows) {
  if (b.size() != a.rows) throw DimensionMismatch("b length does not match row count");
  Tableau t(a, b, equality_rows);
  LpOutcome out;
  if (!t.phase1()) {
    out.feasible = false;
    out.certificate = t.certificate();
    return out;
  }
  t.purge_artificials();
  if (maximize) {
    if (maximize->size() != a.cols) throw DimensionMismatch("objective arity");
    t.phase2_max(*maximize);
  }
  out.feasible = true;
  out.solution = t.structural_solution();
  return out;
}

IntVec scale_to_integers(const RatVec& x) {
  Int l = 1;
  for (const auto& q : x) {
    if (q < 0) throw NegativeEntry("scale_to_integers expects nonnegative entries");
    l = lcm(l, Int(q.get_den()));
  }
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat scaled = Rat(l) * x[i];
    out[i] = Int(scaled.get_num());  // denominator is 1 by construction
  }
  return out;
}

bool verify_certificate(const RationalMatrix& a, const RatVec& b, const RatVec& y) {
  if (y.size() != a.rows) throw DimensionMismatch("certificate length");
  for (const auto& e : y)
    if (e < 0) return false;
  for (std::size_t j = 0; j < a.cols; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < a.rows; ++i) s += y[i] * a[i][j];
    if (s < 0) return false;
  }
  Rat yb(0);
  for (std::size_t i = 0; i < a.rows; ++i) yb += y[i] * b[i];
  return yb < 0;
}

bool verify_solution(const RationalMatrix& a, const RatVec& b, const RatVec& x) {
  if (x.size() != a.cols) throw DimensionMismatch("solution length");
  for (const auto& e : x)
    if (e < 0) return false;
  for (std::size_t i = 0; i < a.rows; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < a.cols; ++j) s += a[i][j] * x[j];
    if (s > b[i]) return false;
  }
  return true;
}

}  // namespace regsep
