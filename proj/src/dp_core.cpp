#include "lwskit/dp_core.hpp"

#include <algorithm>

#include "lwskit/errors.hpp"

namespace lwskit {

LwsResult solve_lws_naive(const LwsInstance& inst) {
  int n = inst.n;
  if (inst.w.n() != n + 1) throw schema_error("LwsInstance matrix side must be n+1");
  LwsResult r;
  r.table.assign(n + 1, ExtInt::inf());
  r.pred.assign(n + 1, -1);
  r.table[0] = ExtInt(0);
  for (int j = 1; j <= n; ++j) {
    ExtInt best = ExtInt::inf();
    int arg = -1;
    for (int i = 0; i < j; ++i) {
      if (r.table[i].is_inf()) continue;
      ExtInt c = r.table[i] + inst.w.entry(i + 1, j + 1);
      if (c < best) {
        best = c;
        arg = i;
      }
    }
    r.table[j] = best;
    r.pred[j] = arg;
  }
  r.answer = r.table[n];
  return r;
}

KdLwsInstance kdlws_from_lws(const LwsInstance& inst) {
  int m = inst.n + 1;
  std::vector<ExtInt> data(static_cast<size_t>(m) * m);
  for (int jt = 1; jt <= m; ++jt)
    for (int ip = 1; ip <= m; ++ip)
      data[static_cast<size_t>(jt - 1) * m + (ip - 1)] = inst.w.entry(ip, jt);
  KdLwsInstance out;
  out.k = 1;
  out.n = m;
  out.w.push_back(CostTensor::dense(1, m, std::move(data)));
  return out;
}

namespace {

// One cell of the kD recurrence from already-filled table values.
ExtInt kd_cell(const KdLwsInstance& inst, const DpTable& T, std::span<const int> idx,
               std::vector<int>& scratch_full) {
  int k = inst.k;
  bool all_one = true;
  for (int v : idx) all_one = all_one && v == 1;
  if (all_one) return ExtInt(0);
  ExtInt best = ExtInt::inf();
  std::vector<int>& widx = scratch_full;  // order k+1: (j1..jk, i)
  widx.assign(idx.begin(), idx.end());
  widx.push_back(0);
  std::vector<int> pidx(idx.begin(), idx.end());
  for (int l = 0; l < k; ++l) {
    int jl = idx[l];
    for (int i = 1; i < jl; ++i) {
      pidx[l] = i;
      ExtInt tv = T.at(pidx);
      if (tv.is_inf()) continue;
      widx[k] = i;
      best = ExtInt::min(best, tv + inst.w[l].entry(widx));
    }
    pidx[l] = jl;
    widx[l] = jl;
  }
  return best;
}

}  // namespace

KdResult solve_kdlws_naive(const KdLwsInstance& inst, EvalOrder order) {
  int k = inst.k, n = inst.n;
  if (static_cast<int>(inst.w.size()) != k) throw schema_error("need k tensors");
  for (auto& t : inst.w)
    if (t.k() != k || t.n() != n) throw schema_error("tensor shape mismatch");
  KdResult res{DpTable(k, n), ExtInt::inf()};
  std::vector<int> scratch;
  auto visit = [&](std::span<const int> idx) {
    res.table.set(idx, kd_cell(inst, res.table, idx, scratch));
  };
  if (order == EvalOrder::BandSum) {
    for_each_in_band(k, n, k, k * n + 1, visit);
  } else {
    std::vector<int> idx(k, 1);
    size_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<size_t>(n);
    for (size_t c = 0; c < total; ++c) {
      visit(idx);
      for (int a = k - 1; a >= 0; --a) {
        if (idx[a] < n) {
          ++idx[a];
          break;
        }
        idx[a] = 1;
      }
    }
  }
  std::vector<int> top(k, n);
  res.answer = res.table.at(top);
  return res;
}

DpTable solve_static_kdlws_naive(const StaticKdInstance& inst) {
  const auto& base = inst.base;
  int k = base.k, n = base.n, a = inst.a, N = inst.N;
  // Completeness of the given band.
  for_each_in_band(k, n, a, a + N, [&](std::span<const int> idx) {
    if (!inst.given.is_set(idx)) throw schema_error("missing given value on first band");
  });
  DpTable out(k, n);
  std::vector<int> widx(k + 1), pidx(k);
  for_each_in_band(k, n, a + N, a + 2 * N, [&](std::span<const int> idx) {
    ExtInt best = ExtInt::inf();
    std::copy(idx.begin(), idx.end(), widx.begin());
    std::copy(idx.begin(), idx.end(), pidx.begin());
    int sum = 0;
    for (int v : idx) sum += v;
    for (int l = 0; l < k; ++l) {
      int J = sum - idx[l];
      int lo = std::max(1, a - J);
      int hi = std::min(n, a + N - J - 1);
      for (int i = lo; i <= hi; ++i) {
        pidx[l] = i;
        ExtInt tv = inst.given.at(pidx);
        if (tv.is_inf()) continue;
        widx[k] = i;
        best = ExtInt::min(best, tv + base.w[l].entry(widx));
      }
      pidx[l] = idx[l];
      widx[l] = idx[l];
    }
    out.set(idx, best);
  });
  return out;
}

PtResult solve_pt_naive(const PtInstance& inst) {
  int n = inst.n;
  if (n < 2) throw precondition_error("PT needs n >= 2");
  if (inst.w.k() != 2 || inst.w.n() != n) throw schema_error("PT tensor must be order 3, side n");
  PtResult r;
  r.table.assign(static_cast<size_t>(n) * n, ExtInt(0));
  r.split.assign(static_cast<size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> ExtInt& { return r.table[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  std::vector<int> widx(3);
  for (int len = 2; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      int j = i + len;
      ExtInt best = ExtInt::inf();
      int arg = 0;
      widx[0] = i;
      widx[1] = j;
      for (int kk = i + 1; kk < j; ++kk) {
        widx[2] = kk;
        ExtInt c = at(i, kk) + at(kk, j) + inst.w.entry(widx);
        if (c < best) {
          best = c;
          arg = kk;
        }
      }
      at(i, j) = best;
      r.split[static_cast<size_t>(i - 1) * n + (j - 1)] = arg;
    }
  }
  r.answer = at(1, n);
  return r;
}

Interval2dResult solve_interval_2dlws_naive(const CostTensor& w) {
  if (w.k() != 2) throw schema_error("flipped 2D LWS tensor must be order 3");
  int n = w.n();
  Interval2dResult r;
  r.table.assign(static_cast<size_t>(n) * n, ExtInt(0));
  auto at = [&](int i, int j) -> ExtInt& { return r.table[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  std::vector<int> widx(3);
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      bool empty_a = (j == 1), empty_b = (i == n);
      if (empty_a && empty_b) {
        at(i, j) = ExtInt(0);
        continue;
      }
      ExtInt best = ExtInt::inf();
      widx[0] = i;
      widx[1] = j;
      for (int kk = 1; kk < j; ++kk) {  // T[i,kk] + w[i,j,kk]
        if (at(i, kk).is_inf()) continue;
        widx[2] = kk;
        best = ExtInt::min(best, at(i, kk) + w.entry(widx));
      }
      for (int kk = i + 1; kk <= n; ++kk) {  // T[kk,j] + w[i,j,kk]
        if (at(kk, j).is_inf()) continue;
        widx[2] = kk;
        best = ExtInt::min(best, at(kk, j) + w.entry(widx));
      }
      at(i, j) = best;
    }
  }
  r.answer = at(1, n);
  return r;
}

}  // namespace lwskit
