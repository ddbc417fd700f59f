#include "psc/snf.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "psc/errors.hpp"

namespace psc {

void IntegerMatrix::set(long long r, long long c, const BigInt& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw InvalidArgumentError("matrix index out of range");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void IntegerMatrix::add(long long r, long long c, const BigInt& v) { set(r, c, get(r, c) + v); }

BigInt IntegerMatrix::get(long long r, long long c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? BigInt(0) : it->second;
}

IntegerMatrix IntegerMatrix::identity(long long n) {
  IntegerMatrix m(n, n);
  for (long long i = 0; i < n; ++i) m.entries[{i, i}] = 1;
  return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
  if (cols != other.rows) throw InvalidArgumentError("matrix dimension mismatch");
  IntegerMatrix out(rows, other.cols);
  for (const auto& [rc, v] : entries)
    for (long long c = 0; c < other.cols; ++c) {
      BigInt w = other.get(rc.second, c);
      if (w != 0) out.add(rc.first, c, v * w);
    }
  return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows == other.rows && cols == other.cols && entries == other.entries;
}

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Textbook SNF on a dense matrix. Pivot: minimal absolute value, ties by
// lowest (row, col). Optionally tracks the unimodular transforms.
struct DenseSnf {
  std::vector<std::vector<BigInt>> a;
  long long nr, nc;
  bool track;
  std::vector<std::vector<BigInt>> u, v;  // u * input * v == a at all times

  DenseSnf(std::vector<std::vector<BigInt>> m, long long rows, long long cols, bool t)
      : a(std::move(m)), nr(rows), nc(cols), track(t) {
    if (track) {
      u.assign(nr, std::vector<BigInt>(nr, 0));
      for (long long i = 0; i < nr; ++i) u[i][i] = 1;
      v.assign(nc, std::vector<BigInt>(nc, 0));
      for (long long i = 0; i < nc; ++i) v[i][i] = 1;
    }
  }

  void swap_rows(long long i, long long j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) std::swap(u[i], u[j]);
  }
  void swap_cols(long long i, long long j) {
    if (i == j) return;
    for (long long r = 0; r < nr; ++r) std::swap(a[r][i], a[r][j]);
    if (track)
      for (long long r = 0; r < nc; ++r) std::swap(v[r][i], v[r][j]);
  }
  void negate_row(long long i) {
    for (auto& x : a[i]) x = -x;
    if (track)
      for (auto& x : u[i]) x = -x;
  }
  // row dst += q * row src
  void add_row(long long dst, long long src, const BigInt& q) {
    for (long long c = 0; c < nc; ++c) a[dst][c] += q * a[src][c];
    if (track)
      for (long long c = 0; c < nr; ++c) u[dst][c] += q * u[src][c];
  }
  // col dst += q * col src
  void add_col(long long dst, long long src, const BigInt& q) {
    for (long long r = 0; r < nr; ++r) a[r][dst] += q * a[r][src];
    if (track)
      for (long long r = 0; r < nc; ++r) v[r][dst] += q * v[r][src];
  }

  bool find_pivot(long long k, long long& pr, long long& pc) const {
    bool found = false;
    BigInt best;
    for (long long r = k; r < nr; ++r)
      for (long long c = k; c < nc; ++c) {
        if (a[r][c] == 0) continue;
        BigInt mag = big_abs(a[r][c]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  std::vector<BigInt> run() {
    long long k = 0;
    while (k < nr && k < nc) {
      long long pr, pc;
      if (!find_pivot(k, pr, pc)) break;
      swap_rows(k, pr);
      swap_cols(k, pc);
      if (a[k][k] < 0) negate_row(k);

      bool clean = true;
      for (long long r = k + 1; r < nr; ++r)
        if (a[r][k] != 0) {
          BigInt q = a[r][k] / a[k][k];
          if (q != 0) add_row(r, k, -q);
          if (a[r][k] != 0) clean = false;
        }
      for (long long c = k + 1; c < nc; ++c)
        if (a[k][c] != 0) {
          BigInt q = a[k][c] / a[k][k];
          if (q != 0) add_col(c, k, -q);
          if (a[k][c] != 0) clean = false;
        }
      if (!clean) continue;  // smaller entries appeared; re-pick the pivot

      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (long long r = k + 1; r < nr && divides; ++r)
        for (long long c = k + 1; c < nc; ++c)
          if (a[r][c] % a[k][k] != 0) {
            add_row(k, r, 1);
            divides = false;
            break;
          }
      if (divides) ++k;
    }
    std::vector<BigInt> diag;
    for (long long i = 0; i < k; ++i) diag.push_back(a[i][i]);
    return diag;
  }
};

SmithNormalFormResult snf_dense(const IntegerMatrix& M, bool with_transforms) {
  std::vector<std::vector<BigInt>> a(M.rows, std::vector<BigInt>(M.cols, 0));
  for (const auto& [rc, v] : M.entries) a[rc.first][rc.second] = v;
  DenseSnf d(std::move(a), M.rows, M.cols, with_transforms);
  SmithNormalFormResult res;
  res.diagonal = d.run();
  res.rank = static_cast<long long>(res.diagonal.size());
  if (with_transforms) {
    IntegerMatrix U(M.rows, M.rows), V(M.cols, M.cols);
    for (long long i = 0; i < M.rows; ++i)
      for (long long j = 0; j < M.rows; ++j)
        if (d.u[i][j] != 0) U.entries[{i, j}] = d.u[i][j];
    for (long long i = 0; i < M.cols; ++i)
      for (long long j = 0; j < M.cols; ++j)
        if (d.v[i][j] != 0) V.entries[{i, j}] = d.v[i][j];
    res.left = std::move(U);
    res.right = std::move(V);
  }
  return res;
}

// Sparse elimination of +-1 pivots, chosen by Markowitz fill score from a
// lazily revalidated heap. Each eliminated pivot contributes a diagonal 1.
// Whatever remains is handed to the dense routine.
SmithNormalFormResult snf_sparse(const IntegerMatrix& M) {
  std::vector<std::map<long long, BigInt>> rows(M.rows);
  std::vector<std::set<long long>> cols(M.cols);
  for (const auto& [rc, v] : M.entries) {
    rows[rc.first][rc.second] = v;
    cols[rc.second].insert(rc.first);
  }

  using Cand = std::tuple<long long, long long, long long>;  // (score, row, col)
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto score_of = [&](long long r, long long c) {
    return (static_cast<long long>(rows[r].size()) - 1) *
           (static_cast<long long>(cols[c].size()) - 1);
  };
  for (long long r = 0; r < M.rows; ++r)
    for (const auto& [c, v] : rows[r])
      if (v == 1 || v == -1) heap.emplace(score_of(r, c), r, c);

  long long units = 0;
  while (!heap.empty()) {
    auto [score, r, c] = heap.top();
    heap.pop();
    auto it = rows[r].find(c);
    if (it == rows[r].end() || (it->second != 1 && it->second != -1)) continue;
    if (score_of(r, c) != score) {
      heap.emplace(score_of(r, c), r, c);
      continue;
    }
    BigInt pivot = it->second;
    std::vector<long long> col_rows(cols[c].begin(), cols[c].end());
    for (long long r2 : col_rows) {
      if (r2 == r) continue;
      BigInt q = rows[r2][c] * pivot;  // rows[r2][c] / pivot since pivot is +-1
      for (const auto& [c2, v2] : rows[r]) {
        auto jt = rows[r2].find(c2);
        BigInt nv = (jt == rows[r2].end() ? BigInt(0) : jt->second) - q * v2;
        if (nv == 0) {
          if (jt != rows[r2].end()) {
            rows[r2].erase(jt);
            cols[c2].erase(r2);
          }
        } else {
          rows[r2][c2] = nv;
          cols[c2].insert(r2);
          if (nv == 1 || nv == -1) heap.emplace(score_of(r2, c2), r2, c2);
        }
      }
    }
    // the pivot column now meets only row r; clearing the pivot row by
    // column operations touches nothing else, so drop both
    for (const auto& [c2, v2] : rows[r]) cols[c2].erase(r);
    rows[r].clear();
    ++units;
  }

  // compact the remainder and finish densely
  std::vector<long long> live_rows, live_cols;
  for (long long r = 0; r < M.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (long long c = 0; c < M.cols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);
  SmithNormalFormResult res;
  res.diagonal.assign(units, BigInt(1));
  if (!live_rows.empty()) {
    IntegerMatrix rest(static_cast<long long>(live_rows.size()),
                       static_cast<long long>(live_cols.size()));
    std::map<long long, long long> colpos;
    for (long long i = 0; i < rest.cols; ++i) colpos[live_cols[i]] = i;
    for (long long i = 0; i < rest.rows; ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) rest.entries[{i, colpos[c]}] = v;
    SmithNormalFormResult tail = snf_dense(rest, false);
    for (BigInt& d : tail.diagonal) res.diagonal.push_back(std::move(d));
  }
  res.rank = static_cast<long long>(res.diagonal.size());
  return res;
}

}  // namespace

SmithNormalFormResult smith_normal_form(const IntegerMatrix& M, bool with_transforms) {
  if (with_transforms) return snf_dense(M, true);
  return snf_sparse(M);
}

}  // namespace psc
