#include "tslab/linprog.hpp"

#include <algorithm>
#include <stdexcept>

namespace tslab {

namespace {

struct Tableau {
  // rows[i] has `cols` entries plus rhs at index cols.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> z1, z2;  // phase-1 / phase-2 objective rows, same layout
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int e) {
    Rat piv = rows[r][e];
    for (Rat& v : rows[r]) v /= piv;
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[e].is_zero()) return;
      Rat f = row[e];
      for (int j = 0; j <= cols; ++j) row[j] -= f * rows[r][j];
    };
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(z1);
    eliminate(z2);
    basis[r] = e;
  }

  // Bland's rule on the given objective row; `allowed` masks enterable columns.
  // Returns Optimal when no entering column, Unbounded when a column has no
  // positive pivot entry.
  LpStatus run(std::vector<Rat>& z, const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (allowed[j] && z[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rat ratio = rows[i][cols] / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (static_cast<int>(lp.objective.size()) != n)
    throw std::invalid_argument("solve_lp: objective size mismatch");
  for (const LinConstraint& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != n)
      throw std::invalid_argument("solve_lp: constraint size mismatch");

  // Presolve: a row (-1)*x_j <= 0 is a plain non-negativity bound.
  std::vector<char> nonneg(n, 0);
  std::vector<const LinConstraint*> rows_in;
  for (const LinConstraint& c : lp.constraints) {
    if (c.rel == Rel::LE && c.rhs.is_zero()) {
      int nz = -1;
      bool single = true;
      for (int j = 0; j < n && single; ++j) {
        if (!c.coeffs[j].is_zero()) {
          if (nz >= 0) single = false;
          else nz = j;
        }
      }
      if (single && nz >= 0 && c.coeffs[nz].sign() < 0) {
        nonneg[nz] = 1;
        continue;
      }
    }
    rows_in.push_back(&c);
  }

  // Columns: one per non-negative variable, two (x+ , x-) per free variable.
  std::vector<int> col_pos(n), col_neg(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    col_pos[j] = cols++;
    if (!nonneg[j]) col_neg[j] = cols++;
  }
  const int struct_cols = cols;

  const int m = static_cast<int>(rows_in.size());
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    bool flip = rows_in[i]->rhs.sign() < 0;
    bool ge = flip && rows_in[i]->rel == Rel::LE;
    if (rows_in[i]->rel == Rel::LE) slack_col[i] = cols++;  // +1 slack, or -1 surplus if flipped
    if (ge || rows_in[i]->rel == Rel::EQ) art_col[i] = cols++;
  }

  Tableau t;
  t.cols = cols;
  t.rows.assign(m, std::vector<Rat>(cols + 1));
  t.z1.assign(cols + 1, Rat(0));
  t.z2.assign(cols + 1, Rat(0));
  t.basis.assign(m, -1);

  for (int i = 0; i < m; ++i) {
    const LinConstraint& c = *rows_in[i];
    bool flip = c.rhs.sign() < 0;
    Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) {
      Rat v = sign * c.coeffs[j];
      t.rows[i][col_pos[j]] = v;
      if (col_neg[j] >= 0) t.rows[i][col_neg[j]] = -v;
    }
    t.rows[i][cols] = sign * c.rhs;
    if (slack_col[i] >= 0) t.rows[i][slack_col[i]] = flip ? Rat(-1) : Rat(1);
    if (art_col[i] >= 0) {
      t.rows[i][art_col[i]] = Rat(1);
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = slack_col[i];
    }
  }

  // Phase-2 objective row: z - c.x = 0.
  for (int j = 0; j < n; ++j) {
    t.z2[col_pos[j]] = -lp.objective[j];
    if (col_neg[j] >= 0) t.z2[col_neg[j]] = lp.objective[j];
  }
  // Phase-1 objective: maximize -sum(artificials).
  bool any_art = false;
  for (int i = 0; i < m; ++i) {
    if (art_col[i] >= 0) {
      t.z1[art_col[i]] = Rat(1);
      any_art = true;
    }
  }
  // Price out basic artificials.
  for (int i = 0; i < m; ++i) {
    if (art_col[i] >= 0) {
      for (int j = 0; j <= cols; ++j) t.z1[j] -= t.rows[i][j];
    }
  }

  std::vector<char> allowed(cols, 1);
  if (any_art) {
    LpStatus s1 = t.run(t.z1, allowed);
    (void)s1;  // phase 1 is always bounded
    if (!t.z1[cols].is_zero()) return {LpStatus::Infeasible, Rat(0), {}};
    // Pivot leftover basic artificials out, or drop their (redundant) rows.
    std::vector<char> is_art(cols, 0);
    for (int i = 0; i < m; ++i)
      if (art_col[i] >= 0) is_art[art_col[i]] = 1;
    for (int i = 0; i < static_cast<int>(t.rows.size());) {
      if (is_art[t.basis[i]]) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
          if (!is_art[j] && !t.rows[i][j].is_zero()) {
            enter = j;
            break;
          }
        }
        if (enter >= 0) {
          t.pivot(i, enter);
          ++i;
        } else {
          t.rows.erase(t.rows.begin() + i);
          t.basis.erase(t.basis.begin() + i);
        }
      } else {
        ++i;
      }
    }
    for (int j = 0; j < cols; ++j)
      if (is_art[j]) allowed[j] = 0;
  }

  LpStatus s2 = t.run(t.z2, allowed);
  if (s2 == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  std::vector<Rat> colval(cols, Rat(0));
  for (size_t i = 0; i < t.rows.size(); ++i) colval[t.basis[i]] = t.rows[i][t.cols];
  std::vector<Rat> x(n);
  for (int j = 0; j < n; ++j) {
    x[j] = colval[col_pos[j]];
    if (col_neg[j] >= 0) x[j] -= colval[col_neg[j]];
  }
  return {LpStatus::Optimal, t.z2[t.cols], std::move(x)};
}

LpDualResult solve_lp_with_dual(const LinearProgram& lp) {
  LpDualResult out;
  out.primal = solve_lp(lp);
  if (out.primal.status != LpStatus::Optimal) return out;

  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.constraints.size());
  LinearProgram dual;
  dual.num_vars = m;
  dual.objective.resize(m);
  for (int i = 0; i < m; ++i) dual.objective[i] = -lp.constraints[i].rhs;  // max -b.y == min b.y
  for (int j = 0; j < n; ++j) {
    LinConstraint c;
    c.coeffs.resize(m);
    for (int i = 0; i < m; ++i) c.coeffs[i] = lp.constraints[i].coeffs[j];
    c.rel = Rel::EQ;
    c.rhs = lp.objective[j];
    dual.constraints.push_back(std::move(c));
  }
  for (int i = 0; i < m; ++i) {
    if (lp.constraints[i].rel == Rel::LE) {
      LinConstraint c;
      c.coeffs.assign(m, Rat(0));
      c.coeffs[i] = Rat(-1);
      c.rel = Rel::LE;
      c.rhs = Rat(0);
      dual.constraints.push_back(std::move(c));
    }
  }
  LpResult d = solve_lp(dual);
  if (d.status != LpStatus::Optimal) return out;
  out.dual = d.witness;

  // Exact verification: primal feasibility, dual feasibility, equal objectives.
  bool ok = (out.primal.value == -d.value);
  for (const LinConstraint& c : lp.constraints) {
    Rat v(0);
    for (int j = 0; j < n; ++j) v += c.coeffs[j] * out.primal.witness[j];
    if (c.rel == Rel::LE ? (v > c.rhs) : (v != c.rhs)) ok = false;
  }
  for (int j = 0; j < n && ok; ++j) {
    Rat v(0);
    for (int i = 0; i < m; ++i) v += lp.constraints[i].coeffs[j] * out.dual[i];
    if (v != lp.objective[j]) ok = false;
  }
  for (int i = 0; i < m && ok; ++i)
    if (lp.constraints[i].rel == Rel::LE && out.dual[i].sign() < 0) ok = false;
  out.verified = ok;
  return out;
}

}  // namespace tslab
