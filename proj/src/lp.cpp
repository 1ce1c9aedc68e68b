#include "qv/lp.hpp"

#include <algorithm>

namespace qv::lp {
namespace {

// Standard-form tableau: rows a[i] of length cols+1 with the rhs in the last
// slot, one basic variable per row.  All variables are >= 0 here; the
// conversion from the user's formulation happens in solve().
struct Tableau {
  int cols = 0;
  std::vector<std::vector<Rat>> a;
  std::vector<int> basis;
  std::vector<char> blocked;  // variables barred from entering (retired artificials)

  void pivot(int row, int col) {
    Rat p = a[row][col];
    for (Rat& e : a[row]) e /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  // Maximizes c over the current feasible basis.  Returns false on
  // unboundedness.  c has length cols; it is consumed.
  bool maximize(std::vector<Rat> c) {
    c.push_back(0);
    for (size_t i = 0; i < a.size(); ++i)
      if (c[basis[i]] != 0) {
        Rat f = c[basis[i]];
        for (int j = 0; j <= cols; ++j) c[j] -= f * a[i][j];
      }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (!blocked[j] && c[j] > 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best = 0;
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = a[i][cols] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Rat f = c[enter];
      pivot(leave, enter);
      for (int j = 0; j <= cols; ++j) c[j] -= f * a[leave][j];
    }
  }

  std::vector<Rat> point() const {
    std::vector<Rat> x(cols, 0);
    for (size_t i = 0; i < a.size(); ++i) x[basis[i]] = a[i][cols];
    return x;
  }
};

}  // namespace

Result solve(const Problem& p) {
  std::vector<Bounds> bounds = p.bounds;
  bounds.resize(p.vars);

  // Each original variable becomes one or two nonnegative columns:
  //   x = lo + y          (lower bound; an upper bound adds the row y <= hi-lo)
  //   x = hi - y          (upper bound only)
  //   x = y_pos - y_neg   (free)
  struct Map {
    int col = -1, neg_col = -1;
    Rat offset = 0;
    int sign = 1;
  };
  std::vector<Map> map(p.vars);
  int cols = 0;
  std::vector<Row> rows = p.rows;
  for (int v = 0; v < p.vars; ++v) {
    const Bounds& b = bounds[v];
    Map& m = map[v];
    if (b.lo && b.hi && *b.hi < *b.lo) return {Status::Infeasible, 0, {}};
    if (b.lo) {
      m.col = cols++;
      m.offset = *b.lo;
      if (b.hi) {
        Row r;
        r.coeff.assign(p.vars, Rat(0));
        r.coeff[v] = 1;
        r.rel = Rel::Le;
        r.rhs = *b.hi;
        rows.push_back(std::move(r));
      }
    } else if (b.hi) {
      m.col = cols++;
      m.offset = *b.hi;
      m.sign = -1;
    } else {
      m.col = cols++;
      m.neg_col = cols++;
    }
  }

  // Substitute, normalize to nonnegative rhs, then append slack/surplus and
  // artificial columns.
  struct Std {
    std::vector<Rat> coeff;  // over the substituted columns
    Rel rel;
    Rat rhs;
  };
  std::vector<Std> std_rows;
  for (const Row& r : rows) {
    Std s;
    s.coeff.assign(cols, Rat(0));
    s.rel = r.rel;
    s.rhs = r.rhs;
    for (int v = 0; v < p.vars; ++v) {
      const Rat& c = r.coeff[v];
      if (c == 0) continue;
      const Map& m = map[v];
      s.coeff[m.col] += c * m.sign;
      if (m.neg_col >= 0) s.coeff[m.neg_col] -= c;
      s.rhs -= c * m.offset;
    }
    if (s.rhs < 0) {
      for (Rat& e : s.coeff) e = -e;
      s.rhs = -s.rhs;
      s.rel = s.rel == Rel::Le ? Rel::Ge : (s.rel == Rel::Ge ? Rel::Le : Rel::Eq);
    }
    std_rows.push_back(std::move(s));
  }

  int m = static_cast<int>(std_rows.size());
  int n_slack = 0;
  for (const Std& s : std_rows) n_slack += s.rel != Rel::Eq;
  Tableau t;
  t.cols = cols + n_slack + m;  // artificials on every row keep setup uniform
  t.blocked.assign(t.cols, 0);
  t.basis.assign(m, -1);
  int slack_at = cols, art_at = cols + n_slack;
  std::vector<Rat> phase1(t.cols, Rat(0));
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> row(t.cols + 1, Rat(0));
    for (int j = 0; j < cols; ++j) row[j] = std_rows[i].coeff[j];
    if (std_rows[i].rel != Rel::Eq) row[slack_at++] = std_rows[i].rel == Rel::Le ? 1 : -1;
    row[art_at + i] = 1;
    phase1[art_at + i] = -1;
    row[t.cols] = std_rows[i].rhs;
    t.basis[i] = art_at + i;
    t.a.push_back(std::move(row));
  }

  if (m > 0) {
    t.maximize(phase1);  // bounded above by 0, cannot be unbounded
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= art_at && t.a[i][t.cols] != 0)
        return {Status::Infeasible, 0, {}};
    // Degenerate basic artificials: pivot them onto a real column when the
    // row allows it; rows that do not are redundant and stay inert.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_at) continue;
      for (int j = 0; j < art_at; ++j)
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
    for (int j = art_at; j < t.cols; ++j) t.blocked[j] = 1;
  }

  std::vector<Rat> phase2(t.cols, Rat(0));
  for (int v = 0; v < p.vars; ++v) {
    const Rat& c = p.maximize[v];
    if (c == 0) continue;
    phase2[map[v].col] += c * map[v].sign;
    if (map[v].neg_col >= 0) phase2[map[v].neg_col] -= c;
  }
  if (!t.maximize(phase2)) return {Status::Unbounded, 0, {}};

  std::vector<Rat> y = t.point();
  Result res;
  res.status = Status::Optimal;
  res.x.assign(p.vars, Rat(0));
  for (int v = 0; v < p.vars; ++v) {
    res.x[v] = map[v].offset + Rat(map[v].sign) * y[map[v].col];
    if (map[v].neg_col >= 0) res.x[v] -= y[map[v].neg_col];
    res.value += p.maximize[v] * res.x[v];
  }
  return res;
}

}  // namespace qv::lp
