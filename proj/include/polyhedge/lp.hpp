#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhedge/polyhedron.hpp"

namespace polyhedge {

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

namespace detail {

struct SparseCol {
  std::vector<std::pair<int, Rat>> nz;
};

// Two-phase revised simplex over exact rationals on the standard form
//   min c.x  s.t.  A x = b, x >= 0.
// Dantzig pricing with a permanent switch to Bland's rule after a stretch of
// degenerate pivots, so termination is guaranteed.
class Simplex {
 public:
  Simplex(std::vector<SparseCol> cols, RatVec b, RatVec c)
      : cols_(std::move(cols)), b_(std::move(b)), c_(std::move(c)), m_((int)b_.size()), n_((int)cols_.size()) {}

  LpStatus solve() {
    for (int i = 0; i < m_; ++i) {
      if (b_[i] < 0) {
        b_[i] = -b_[i];
        for (auto& col : cols_)
          for (auto& [r, v] : col.nz)
            if (r == i) v = -v;
      }
    }
    binv_.assign(m_, RatVec(m_, Rat(0)));
    for (int i = 0; i < m_; ++i) binv_[i][i] = 1;
    basic_.resize(m_);
    in_basis_.assign(n_ + m_, false);
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;  // artificials
      in_basis_[n_ + i] = true;
    }
    xb_ = b_;

    // phase 1: minimize the sum of artificials
    RatVec phase1_cost(n_ + m_, Rat(0));
    for (int i = 0; i < m_; ++i) phase1_cost[n_ + i] = 1;
    run(phase1_cost, true);
    Rat infeas = 0;
    for (int i = 0; i < m_; ++i)
      if (basic_[i] >= n_) infeas += xb_[i];
    if (infeas > 0) return LpStatus::kInfeasible;
    drive_out_artificials();

    RatVec phase2_cost(n_ + m_, Rat(0));
    for (int j = 0; j < n_; ++j) phase2_cost[j] = c_[j];
    bool bounded = run(phase2_cost, false);
    return bounded ? LpStatus::kOptimal : LpStatus::kUnbounded;
  }

  RatVec primal() const {
    RatVec x(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = xb_[i];
    return x;
  }

  Rat objective() const {
    Rat v = 0;
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_) v += c_[basic_[i]] * xb_[i];
    return v;
  }

  // Valid after an unbounded phase 2: improving ray in x-space.
  RatVec ray() const { return ray_; }

 private:
  RatVec apply_binv(const SparseCol& col) const {
    RatVec w(m_, Rat(0));
    for (const auto& [r, v] : col.nz)
      for (int i = 0; i < m_; ++i)
        if (binv_[i][r] != 0) w[i] += binv_[i][r] * v;
    return w;
  }

  SparseCol column(int j) const {
    if (j < n_) return cols_[j];
    SparseCol a;
    a.nz.emplace_back(j - n_, Rat(1));
    return a;
  }

  Rat reduced_cost(const RatVec& y, const RatVec& cost, int j) const {
    Rat d = cost[j];
    if (j < n_) {
      for (const auto& [r, v] : cols_[j].nz) d -= y[r] * v;
    } else {
      d -= y[j - n_];
    }
    return d;
  }

  // Returns false iff unbounded.
  bool run(const RatVec& cost, bool phase1) {
    int degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      RatVec y(m_, Rat(0));  // y = cB . Binv
      for (int i = 0; i < m_; ++i) {
        const Rat& cb = cost[basic_[i]];
        if (cb == 0) continue;
        for (int k = 0; k < m_; ++k)
          if (binv_[i][k] != 0) y[k] += cb * binv_[i][k];
      }
      int entering = -1;
      Rat best = 0;
      int limit = phase1 ? n_ + m_ : n_;
      for (int j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        if (phase1 && j >= n_) continue;  // artificials never re-enter
        Rat d = reduced_cost(y, cost, j);
        if (d < 0) {
          if (bland) {
            entering = j;
            break;
          }
          if (entering == -1 || d < best) {
            entering = j;
            best = d;
          }
        }
      }
      if (entering == -1) return true;

      RatVec w = apply_binv(column(entering));
      int leave = -1;
      Rat ratio;
      for (int i = 0; i < m_; ++i) {
        if (w[i] > 0) {
          Rat r = xb_[i] / w[i];
          if (leave == -1 || r < ratio || (r == ratio && basic_[i] < basic_[leave])) {
            leave = i;
            ratio = r;
          }
        }
      }
      if (leave == -1) {
        if (phase1) throw std::logic_error("simplex: phase 1 unbounded");
        ray_.assign(n_, Rat(0));
        if (entering < n_) ray_[entering] = 1;
        for (int i = 0; i < m_; ++i)
          if (basic_[i] < n_ && w[i] != 0) ray_[basic_[i]] -= w[i];
        return false;
      }
      if (ratio == 0) {
        if (++degenerate_streak > 60) bland = true;
      } else {
        degenerate_streak = 0;
      }
      pivot(entering, leave, w);
    }
  }

  void pivot(int entering, int leave, const RatVec& w) {
    Rat piv = w[leave];
    for (int k = 0; k < m_; ++k) binv_[leave][k] /= piv;
    xb_[leave] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave || w[i] == 0) continue;
      Rat f = w[i];
      for (int k = 0; k < m_; ++k)
        if (binv_[leave][k] != 0) binv_[i][k] -= f * binv_[leave][k];
      xb_[i] -= f * xb_[leave];
    }
    in_basis_[basic_[leave]] = false;
    in_basis_[entering] = true;
    basic_[leave] = entering;
  }

  bool is_basic(int j) const { return in_basis_[j]; }

  // After a feasible phase 1, replace basic artificials (all at zero) by
  // structural columns; rows where none applies are dependent and harmless,
  // their artificial stays pinned at zero because it can never re-enter and
  // a zero basic never blocks.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (is_basic(j)) continue;
        RatVec w = apply_binv(cols_[j]);
        if (w[i] != 0) {
          pivot(j, i, w);
          break;
        }
      }
    }
  }

  std::vector<SparseCol> cols_;
  RatVec b_, c_;
  int m_, n_;
  RatMat binv_;
  std::vector<int> basic_;
  std::vector<bool> in_basis_;
  RatVec xb_;
  RatVec ray_;
};

}  // namespace detail

// General-form problem: min c.x with equality and >= rows; variables are
// nonnegative or free per flag.
struct LpProblem {
  int nvars = 0;
  RatMat eq_A;
  RatVec eq_b;
  RatMat ge_A;
  RatVec ge_b;
  std::vector<bool> nonneg;  // empty means all free
  RatVec c;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  RatVec x;
  RatVec ray;
};

inline LpSolution solve_lp(const LpProblem& p) {
  int n = p.nvars;
  std::vector<bool> nonneg = p.nonneg.empty() ? std::vector<bool>(n, false) : p.nonneg;
  // column layout: one column per nonneg var, two per free var, then one
  // surplus column per >= row
  std::vector<int> pos_col(n), neg_col(n, -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg[j]) neg_col[j] = ncols++;
  }
  int surplus0 = ncols;
  ncols += (int)p.ge_A.size();

  int m = (int)(p.eq_A.size() + p.ge_A.size());
  std::vector<detail::SparseCol> cols(ncols);
  RatVec b(m), cost(ncols, Rat(0));
  auto add_entry = [&](int col, int row, const Rat& v) {
    if (v != 0) cols[col].nz.emplace_back(row, v);
  };
  int row = 0;
  for (size_t i = 0; i < p.eq_A.size(); ++i, ++row) {
    for (int j = 0; j < n; ++j) {
      add_entry(pos_col[j], row, p.eq_A[i][j]);
      if (neg_col[j] >= 0) add_entry(neg_col[j], row, -p.eq_A[i][j]);
    }
    b[row] = p.eq_b[i];
  }
  for (size_t i = 0; i < p.ge_A.size(); ++i, ++row) {
    for (int j = 0; j < n; ++j) {
      add_entry(pos_col[j], row, p.ge_A[i][j]);
      if (neg_col[j] >= 0) add_entry(neg_col[j], row, -p.ge_A[i][j]);
    }
    add_entry(surplus0 + (int)i, row, Rat(-1));
    b[row] = p.ge_b[i];
  }
  for (int j = 0; j < n; ++j) {
    cost[pos_col[j]] = p.c[j];
    if (neg_col[j] >= 0) cost[neg_col[j]] = -p.c[j];
  }

  detail::Simplex simplex(std::move(cols), std::move(b), std::move(cost));
  LpSolution out;
  out.status = simplex.solve();
  if (out.status == LpStatus::kInfeasible) return out;
  auto unsplit = [&](const RatVec& full) {
    RatVec x(n);
    for (int j = 0; j < n; ++j) {
      x[j] = full[pos_col[j]];
      if (neg_col[j] >= 0) x[j] -= full[neg_col[j]];
    }
    return x;
  };
  if (out.status == LpStatus::kUnbounded) {
    out.ray = unsplit(simplex.ray());
    return out;
  }
  out.x = unsplit(simplex.primal());
  out.value = simplex.objective();
  return out;
}

// LP over a polyhedron value. With a generator representation present the
// optimum is read off the generators; otherwise the rational simplex runs on
// the inequality system. Infeasible (empty set) is distinct from unbounded.
struct GeoLpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  RatVec point;  // minimizing vertex when optimal
  RatVec ray;    // descent ray when unbounded
};

inline GeoLpResult lp_min(const Polyhedron& p, const RatVec& obj) {
  if ((int)obj.size() != p.dim) throw DimensionMismatch("lp_min: objective dimension");
  if (!p.has_h() && !p.has_v()) throw std::invalid_argument("lp_min: no representation");
  GeoLpResult res;
  if (p.has_v()) {
    const VPoly& v = *p.vrep;
    if (v.verts.empty()) return res;  // infeasible
    for (const auto& ray : v.rays) {
      if (dot(obj, ray) < 0) {
        res.status = LpStatus::kUnbounded;
        res.ray = ray;
        return res;
      }
    }
    res.status = LpStatus::kOptimal;
    bool first = true;
    for (const auto& vtx : v.verts) {
      Rat val = dot(obj, vtx);
      if (first || val < res.value || (val == res.value && lex_less(vtx, res.point))) {
        res.value = val;
        res.point = vtx;
        first = false;
      }
    }
    return res;
  }
  LpProblem lp;
  lp.nvars = p.dim;
  lp.ge_A = p.hrep->A;
  lp.ge_b = p.hrep->r;
  lp.c = obj;
  LpSolution sol = solve_lp(lp);
  res.status = sol.status;
  if (sol.status == LpStatus::kOptimal) {
    res.value = sol.value;
    res.point = sol.x;
  } else if (sol.status == LpStatus::kUnbounded) {
    res.ray = sol.ray;
  }
  return res;
}

// Feasibility of x in conv(verts) + cone(rays); the generator-side oracle
// for `contains`.
inline bool v_rep_member(const VPoly& v, const RatVec& x) {
  if (v.verts.empty()) return false;
  int nv = (int)v.verts.size(), nr = (int)v.rays.size();
  LpProblem lp;
  lp.nvars = nv + nr;
  lp.nonneg.assign(nv + nr, true);
  lp.c.assign(nv + nr, Rat(0));
  for (int i = 0; i < v.dim; ++i) {
    RatVec row(nv + nr);
    for (int j = 0; j < nv; ++j) row[j] = v.verts[j][i];
    for (int j = 0; j < nr; ++j) row[nv + j] = v.rays[j][i];
    lp.eq_A.push_back(std::move(row));
    lp.eq_b.push_back(x[i]);
  }
  RatVec conv_row(nv + nr, Rat(0));
  for (int j = 0; j < nv; ++j) conv_row[j] = 1;
  lp.eq_A.push_back(std::move(conv_row));
  lp.eq_b.push_back(Rat(1));
  return solve_lp(lp).status == LpStatus::kOptimal;
}

}  // namespace polyhedge
