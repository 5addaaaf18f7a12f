#include "lwskit/fast_solvers.hpp"

#include <algorithm>
#include <random>

#include "lwskit/envelope.hpp"
#include "lwskit/errors.hpp"
#include "lwskit/parallel.hpp"

namespace lwskit {

namespace {

using i128 = __int128;

int64_t to_i64_checked(i128 v) {
  if (v >= static_cast<i128>(ExtInt::raw_inf()) || v < -static_cast<i128>(ExtInt::raw_inf()))
    throw overflow_error("value out of 64-bit range");
  return static_cast<int64_t>(v);
}

// ---- naive static stage ----------------------------------------------------
// Relax T on D_{mid,hi} from T's values on D_{lo,mid}, literal double loop.
void static_apply_naive(const KdLwsInstance& inst, DpTable& T, int lo, int mid, int hi) {
  int k = inst.k, n = inst.n;
  std::vector<int> widx(k + 1), pidx(k);
  for_each_in_band(k, n, mid, hi, [&](std::span<const int> idx) {
    ExtInt best = ExtInt::inf();
    std::copy(idx.begin(), idx.end(), widx.begin());
    std::copy(idx.begin(), idx.end(), pidx.begin());
    int sum = 0;
    for (int v : idx) sum += v;
    for (int l = 0; l < k; ++l) {
      int J = sum - idx[l];
      int wlo = std::max(1, lo - J), whi = std::min(n, mid - J - 1);
      for (int i = wlo; i <= whi; ++i) {
        pidx[l] = i;
        ExtInt tv = T.at(pidx);
        if (tv.is_inf()) continue;
        widx[k] = i;
        best = ExtInt::min(best, tv + inst.w[l].entry(widx));
      }
      pidx[l] = idx[l];
    }
    T.update_min(idx, best);
  });
}

// ---- rank-1 envelope static stage (k = 1) ----------------------------------
void static_apply_rank1(const KdLwsInstance& inst, DpTable& T, int lo, int mid, int hi) {
  if (inst.k != 1) throw precondition_error("Rank1Envelope static stage needs k = 1");
  const CostTensor& w = inst.w[0];
  if (w.kind() != CostTensor::Kind::CpRank || w.cp_rank() != 1)
    throw precondition_error("Rank1Envelope static stage needs CpRank d = 1");
  int n = inst.n;
  int wlo = std::max(1, lo), whi = std::min(n, mid - 1);
  int tlo = std::max(1, mid), thi = std::min(n, hi - 1);
  if (tlo > thi) return;
  std::vector<int64_t> queries;
  for (int j = tlo; j <= thi; ++j) queries.push_back(w.factor(1, j, 0));
  LineEnvelope env(queries);
  int one[1];
  for (int i = wlo; i <= whi; ++i) {
    one[0] = i;
    ExtInt tv = T.at(std::span<const int>(one, 1));
    if (!tv.is_inf()) env.insert(Line{w.factor(2, i, 0), tv});
  }
  for (int j = tlo; j <= thi; ++j) {
    one[0] = j;
    T.update_min(std::span<const int>(one, 1), env.query(w.factor(1, j, 0)));
  }
}

// ---- slice-rank-1 static stage (k = 2) -------------------------------------
// Finite-entry order-2 view with a fast entry path.
struct Mat2 {
  const CostTensor* t;
  const ExtInt* dense = nullptr;
  int n = 0;
  explicit Mat2(const CostTensor& m) : t(&m), n(m.n()) {
    if (m.kind() == CostTensor::Kind::Dense) dense = m.dense_data().data();
  }
  int64_t at(int x, int y) const {
    if (dense) return dense[static_cast<size_t>(x - 1) * n + (y - 1)].value();
    i128 s = 0;
    int d = t->cp_rank();
    for (int c = 0; c < d; ++c)
      s += static_cast<i128>(t->factor(1, x, c)) * t->factor(2, y, c);
    return to_i64_checked(s);
  }
};

bool tensor_has_inf(const CostTensor& t) {
  if (t.kind() == CostTensor::Kind::Dense) {
    for (auto e : t.dense_data())
      if (e.is_inf()) return true;
    return false;
  }
  if (t.kind() == CostTensor::Kind::SliceRank) {
    for (const auto& tm : t.terms())
      if (tensor_has_inf(*tm.b)) return true;
  }
  return false;
}

// One contribution axis for the slice-rank-1 static stage, at one fixed value
// v of the *shared* (unchanged) coordinate. The changing coordinate runs over
// window [wlo,whi] (predecessors) and targets [tlo,thi].
//   l = 1: candidates (i, v) relax targets (j, v); l = 2: (v, i) -> (v, j).
// Orientation cases for the single term (axis, a, b):
//   term binds the predecessor coordinate: lines (a[i], T_pred), query b(target pair);
//   term binds the changing target coordinate: lines (b(v-pair, i), T_pred), query a[j];
//   term binds the shared coordinate: exact windowed scan (this orientation
//     admits no line-envelope form; the scan stays within the same window).
void slice_axis_at_v(const CostTensor& w, int l, int v, int wlo, int whi, int tlo, int thi,
                     ExtInt* traw, int n) {
  const SliceTerm& tm = w.terms()[0];
  Mat2 b(*tm.b);
  auto tpred = [&](int i) -> ExtInt {
    return l == 1 ? traw[static_cast<size_t>(i - 1) * n + (v - 1)]
                  : traw[static_cast<size_t>(v - 1) * n + (i - 1)];
  };
  auto relax = [&](int j, ExtInt val) {
    ExtInt& cell = l == 1 ? traw[static_cast<size_t>(j - 1) * n + (v - 1)]
                          : traw[static_cast<size_t>(v - 1) * n + (j - 1)];
    cell = ExtInt::min(cell, val);
  };
  int pred_axis = 3;                    // tensor's last axis is the predecessor
  int chg_axis = l, shared_axis = 3 - l;  // target axes 1,2
  if (tm.axis == pred_axis) {
    std::vector<int64_t> qs(thi - tlo + 1);
    for (int j = tlo; j <= thi; ++j)
      qs[j - tlo] = l == 1 ? b.at(j, v) : b.at(v, j);
    LineEnvelope env(qs);
    for (int i = wlo; i <= whi; ++i) {
      ExtInt tv = tpred(i);
      if (!tv.is_inf()) env.insert(Line{tm.a[i - 1], tv});
    }
    if (env.empty()) return;
    for (int j = tlo; j <= thi; ++j) relax(j, env.query(qs[j - tlo]));
  } else if (tm.axis == chg_axis) {
    // b spans (shared axis, predecessor axis), in original order.
    std::vector<int64_t> qs(thi - tlo + 1);
    for (int j = tlo; j <= thi; ++j) qs[j - tlo] = tm.a[j - 1];
    LineEnvelope env(qs);
    for (int i = wlo; i <= whi; ++i) {
      ExtInt tv = tpred(i);
      if (!tv.is_inf()) env.insert(Line{b.at(v, i), tv});
    }
    if (env.empty()) return;
    for (int j = tlo; j <= thi; ++j) relax(j, env.query(qs[j - tlo]));
  } else {
    // term binds the shared coordinate: value = T_pred + a[v] * b(j, i).
    (void)shared_axis;
    int64_t av = tm.a[v - 1];
    for (int j = tlo; j <= thi; ++j) {
      ExtInt best = ExtInt::inf();
      for (int i = wlo; i <= whi; ++i) {
        ExtInt tv = tpred(i);
        if (tv.is_inf()) continue;
        i128 cand = static_cast<i128>(tv.value()) + static_cast<i128>(av) * b.at(j, i);
        int64_t c = to_i64_checked(cand);
        if (ExtInt(c) < best) best = ExtInt(c);
      }
      relax(j, best);
    }
  }
}

void static_apply_slicerank1(const KdLwsInstance& inst, DpTable& T, int lo, int mid, int hi,
                             int jobs) {
  if (inst.k != 2) throw precondition_error("SliceRank1 static stage needs k = 2");
  for (const auto& w : inst.w)
    if (w.kind() != CostTensor::Kind::SliceRank || w.terms().size() != 1)
      throw precondition_error("SliceRank1 static stage needs single slice terms");
  int n = inst.n;
  ExtInt* traw = T.raw();
  // For axis l, the shared coordinate is the other one; disjoint targets per
  // (l, v), so the v loop is a safe parallel map.
  for (int l = 1; l <= 2; ++l) {
    const CostTensor& w = inst.w[l - 1];
    parallel_for(1, n + 1, jobs, [&, l](int v) {
      int wlo = std::max(1, lo - v), whi = std::min(n, mid - 1 - v);
      int tlo = std::max(1, mid - v), thi = std::min(n, hi - 1 - v);
      if (wlo > whi || tlo > thi) return;
      slice_axis_at_v(w, l, v, wlo, whi, tlo, thi, traw, n);
    });
  }
}

// ---- dimension-reduction hierarchy -----------------------------------------

using GivenFn = std::function<ExtInt(std::span<const int>)>;
using MergeFn = std::function<void(std::span<const int>, ExtInt)>;

// Static solve over a k-dim index space: given values on sums [lo,mid),
// merge candidate values for targets on sums [mid,hi).
void hier_static(int k, int n, const std::vector<const CostTensor*>& ws, const GivenFn& given,
                 int lo, int mid, int hi, const MergeFn& merge, int jobs) {
  if (k == 1) {
    const CostTensor& w = *ws[0];
    int wlo = std::max(1, lo), whi = std::min(n, mid - 1);
    int tlo = std::max(1, mid), thi = std::min(n, hi - 1);
    if (wlo > whi || tlo > thi) return;
    int one[1];
    if (w.kind() == CostTensor::Kind::CpRank && w.cp_rank() == 1) {
      std::vector<int64_t> qs(thi - tlo + 1);
      for (int j = tlo; j <= thi; ++j) qs[j - tlo] = w.factor(1, j, 0);
      LineEnvelope env(qs);
      for (int i = wlo; i <= whi; ++i) {
        one[0] = i;
        ExtInt tv = given(std::span<const int>(one, 1));
        if (!tv.is_inf()) env.insert(Line{w.factor(2, i, 0), tv});
      }
      for (int j = tlo; j <= thi; ++j) {
        one[0] = j;
        merge(std::span<const int>(one, 1), env.query(qs[j - tlo]));
      }
    } else {
      int widx[2];
      for (int j = tlo; j <= thi; ++j) {
        ExtInt best = ExtInt::inf();
        for (int i = wlo; i <= whi; ++i) {
          one[0] = i;
          ExtInt tv = given(std::span<const int>(one, 1));
          if (tv.is_inf()) continue;
          widx[0] = j;
          widx[1] = i;
          best = ExtInt::min(best, tv + w.entry(std::span<const int>(widx, 2)));
        }
        one[0] = j;
        merge(std::span<const int>(one, 1), best);
      }
    }
    return;
  }
  // Fix coordinate 1 at v: axes 2..k become a (k-1)D static solve on sliced
  // tensors; axis 1 itself is handled per fixed tail by a 1D solve.
  parallel_for(1, n + 1, jobs, [&](int v) {
    int slo = lo - v, smid = mid - v, shi = hi - v;
    if (smid - 1 < k - 1 || shi - 1 < k - 1) return;  // no reachable targets/windows
    std::vector<CostTensor> sub;
    sub.reserve(k - 1);
    for (int l = 2; l <= k; ++l) sub.push_back(ws[l - 1]->slice(1, v));
    std::vector<const CostTensor*> subp;
    for (auto& s : sub) subp.push_back(&s);
    std::vector<int> full(k);
    GivenFn sgiven = [&](std::span<const int> idx) {
      full[0] = v;
      std::copy(idx.begin(), idx.end(), full.begin() + 1);
      return given(full);
    };
    std::vector<int> mfull(k);
    MergeFn smerge = [&](std::span<const int> idx, ExtInt val) {
      mfull[0] = v;
      std::copy(idx.begin(), idx.end(), mfull.begin() + 1);
      merge(mfull, val);
    };
    hier_static(k - 1, n, subp, sgiven, slo, smid, shi, smerge, 1);
  });
  // Axis 1 per tail (j_2..j_k).
  std::vector<int> full(k);
  for_each_in_band(k - 1, n, k - 1, (k - 1) * n + 1, [&](std::span<const int> tail) {
    int s = 0;
    for (int t : tail) s += t;
    int wlo = std::max(1, lo - s), whi = std::min(n, mid - 1 - s);
    int tlo = std::max(1, mid - s), thi = std::min(n, hi - 1 - s);
    if (wlo > whi || tlo > thi) return;
    CostTensor m = *ws[0];
    for (int t = 2; t <= k; ++t) m = m.slice(2, tail[t - 2]);
    std::copy(tail.begin(), tail.end(), full.begin() + 1);
    int widx[2];
    if (m.kind() == CostTensor::Kind::CpRank && m.cp_rank() == 1) {
      std::vector<int64_t> qs(thi - tlo + 1);
      for (int j = tlo; j <= thi; ++j) qs[j - tlo] = m.factor(1, j, 0);
      LineEnvelope env(qs);
      for (int i = wlo; i <= whi; ++i) {
        full[0] = i;
        ExtInt tv = given(full);
        if (!tv.is_inf()) env.insert(Line{m.factor(2, i, 0), tv});
      }
      for (int j = tlo; j <= thi; ++j) {
        full[0] = j;
        merge(full, env.query(qs[j - tlo]));
      }
    } else {
      for (int j = tlo; j <= thi; ++j) {
        ExtInt best = ExtInt::inf();
        for (int i = wlo; i <= whi; ++i) {
          full[0] = i;
          ExtInt tv = given(full);
          if (tv.is_inf()) continue;
          widx[0] = j;
          widx[1] = i;
          best = ExtInt::min(best, tv + m.entry(std::span<const int>(widx, 2)));
        }
        full[0] = j;
        merge(full, best);
      }
    }
  });
}

void static_apply_hierarchy(const KdLwsInstance& inst, DpTable& T, int lo, int mid, int hi,
                            int jobs) {
  if (inst.k < 2) throw precondition_error("HierarchyReduce needs k >= 2");
  std::vector<const CostTensor*> ws;
  for (const auto& w : inst.w) ws.push_back(&w);
  GivenFn given = [&T](std::span<const int> idx) { return T.at(idx); };
  MergeFn merge = [&T](std::span<const int> idx, ExtInt val) { T.update_min(idx, val); };
  hier_static(inst.k, inst.n, ws, given, lo, mid, hi, merge, jobs);
}

void static_apply(const KdLwsInstance& inst, DpTable& T, int lo, int mid, int hi,
                  StaticSolverKind kind, int jobs) {
  switch (kind) {
    case StaticSolverKind::Naive:
      static_apply_naive(inst, T, lo, mid, hi);
      return;
    case StaticSolverKind::Rank1Envelope:
      static_apply_rank1(inst, T, lo, mid, hi);
      return;
    case StaticSolverKind::SliceRank1:
      static_apply_slicerank1(inst, T, lo, mid, hi, jobs);
      return;
    case StaticSolverKind::HierarchyReduce:
      static_apply_hierarchy(inst, T, lo, mid, hi, jobs);
      return;
  }
}

void dc_rec(const KdLwsInstance& inst, DpTable& T, int alpha, int beta, StaticSolverKind kind,
            int jobs, DcTrace* trace) {
  if (beta - alpha <= 0) return;
  if (beta - alpha == 1) {
    if (trace) trace->leaves.emplace_back(alpha, beta);
    return;  // width-1 band: seeds are already final (equal sums cannot be predecessors)
  }
  int m = (beta - alpha + 1) / 2;  // ceil
  dc_rec(inst, T, alpha, alpha + m, kind, jobs, trace);
  if (trace) trace->static_calls.push_back({alpha, alpha + m, beta});
  static_apply(inst, T, alpha, alpha + m, beta, kind, jobs);
  dc_rec(inst, T, alpha + m, beta, kind, jobs, trace);
}

}  // namespace

KdResult solve_kdlws_dc(const KdLwsInstance& inst, StaticSolverKind kind, int jobs,
                        DcTrace* trace) {
  int k = inst.k, n = inst.n;
  if (static_cast<int>(inst.w.size()) != k) throw schema_error("need k tensors");
  KdResult res{DpTable(k, n), ExtInt::inf()};
  std::vector<int> base(k, 1);
  res.table.set(base, ExtInt(0));
  if (n >= 2) {
    // Seed: contribution of the base tuple (1,..,1): w_l[j,1] when all
    // coordinates except l are 1; unreachable-in-one-step tuples get inf.
    std::vector<int> widx(k + 1);
    for_each_in_band(k, n, k + 1, k * n + 1, [&](std::span<const int> idx) {
      int big_axis = -1, big_count = 0;
      for (int a = 0; a < k; ++a)
        if (idx[a] > 1) {
          big_axis = a;
          ++big_count;
        }
      ExtInt seed = ExtInt::inf();
      if (big_count == 1) {
        std::copy(idx.begin(), idx.end(), widx.begin());
        widx[k] = 1;
        seed = inst.w[big_axis].entry(widx);
      }
      res.table.set(idx, seed);
    });
    dc_rec(inst, res.table, k + 1, k * n + 1, kind, jobs, trace);
  }
  std::vector<int> top(k, n);
  res.answer = res.table.at(top);
  return res;
}

DpTable solve_static_kd_via_hierarchy(const StaticKdInstance& inst, int jobs) {
  const auto& base = inst.base;
  int k = base.k, n = base.n, a = inst.a, N = inst.N;
  if (k < 2) throw precondition_error("hierarchy needs k >= 2");
  for_each_in_band(k, n, a, a + N, [&](std::span<const int> idx) {
    if (!inst.given.is_set(idx)) throw schema_error("missing given value on first band");
  });
  DpTable out(k, n);
  for_each_in_band(k, n, a + N, a + 2 * N, [&](std::span<const int> idx) {
    out.set(idx, ExtInt::inf());
  });
  std::vector<const CostTensor*> ws;
  for (const auto& w : base.w) ws.push_back(&w);
  GivenFn given = [&](std::span<const int> idx) { return inst.given.at(idx); };
  MergeFn merge = [&](std::span<const int> idx, ExtInt val) { out.update_min(idx, val); };
  hier_static(k, n, ws, given, a, a + N, a + 2 * N, merge, jobs);
  return out;
}

KdResult solve_2dlws_slicerank1(const KdLwsInstance& inst, int jobs) {
  if (inst.k != 2) throw precondition_error("solve_2dlws_slicerank1 needs k = 2");
  bool has_inf = false;
  for (const auto& w : inst.w) {
    if (w.kind() != CostTensor::Kind::SliceRank || w.terms().size() != 1)
      throw precondition_error("tensors must be single slice terms");
    has_inf = has_inf || tensor_has_inf(w);
  }
  // Envelope paths assume finite sub-tensor entries; instances carrying inf
  // (e.g. NegativeTriangle diagonals) take the exact naive static stage.
  return solve_kdlws_dc(inst, has_inf ? StaticSolverKind::Naive : StaticSolverKind::SliceRank1,
                        jobs);
}

ExtInt solve_pt_knuth(const PtInstance& inst, bool full_check, uint64_t sample_seed) {
  int n = inst.n;
  if (n < 2) throw precondition_error("PT needs n >= 2");
  if (n == 2) return ExtInt(0);
  std::vector<int> widx(3);
  auto wraw = [&](int i, int j, int kk) {
    widx[0] = i;
    widx[1] = j;
    widx[2] = kk;
    return inst.w.entry(widx);
  };
  auto Wij = [&](int i, int j) -> ExtInt {
    if (j - i <= 1) return ExtInt(0);
    return wraw(i, j, i + 1);
  };
  // Precondition 1: w[i,j,k] independent of k, finite.
  auto check_indep = [&](int i, int j) {
    ExtInt w0 = wraw(i, j, i + 1);
    if (w0.is_inf()) throw precondition_error("knuth: infinite weight");
    for (int kk = i + 2; kk < j; ++kk)
      if (wraw(i, j, kk) != w0) throw precondition_error("knuth: w depends on split point");
  };
  // Precondition 2: quadrangle inequality + interval monotonicity.
  auto check_quad = [&](int i, int i2, int j, int j2) {
    if (!(Wij(i2, j) <= Wij(i, j2)))
      throw precondition_error("knuth: monotonicity violated");
    ExtInt lhs = Wij(i, j) + Wij(i2, j2), rhs = Wij(i2, j) + Wij(i, j2);
    if (!(lhs <= rhs)) throw precondition_error("knuth: quadrangle inequality violated");
  };
  if (full_check) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) check_indep(i, j);
    for (int i = 1; i <= n; ++i)
      for (int i2 = i; i2 <= n; ++i2)
        for (int j = i2; j <= n; ++j)
          for (int j2 = j; j2 <= n; ++j2) check_quad(i, i2, j, j2);
  } else {
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<int> pick(1, n);
    for (int s = 0; s < 500; ++s) {
      int i = pick(rng), j = pick(rng);
      if (i > j) std::swap(i, j);
      if (j - i >= 2) check_indep(i, j);
      int q[4] = {pick(rng), pick(rng), pick(rng), pick(rng)};
      std::sort(q, q + 4);
      check_quad(q[0], q[1], q[2], q[3]);
    }
  }
  // Split-point-monotone interval DP.
  std::vector<ExtInt> C(static_cast<size_t>(n) * n, ExtInt(0));
  std::vector<int> opt(static_cast<size_t>(n) * n, 0);
  auto cat = [&](int i, int j) -> ExtInt& { return C[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  auto oat = [&](int i, int j) -> int& { return opt[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  for (int i = 1; i < n; ++i) oat(i, i + 1) = i;  // degenerate anchor for the bounds below
  for (int len = 2; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      int j = i + len;
      int lo = std::max(i + 1, oat(i, j - 1));
      int hi = std::min(j - 1, oat(i + 1, j));
      ExtInt best = ExtInt::inf();
      int arg = lo;
      ExtInt wij = Wij(i, j);
      for (int kk = lo; kk <= hi; ++kk) {
        ExtInt c = cat(i, kk) + cat(kk, j) + wij;
        if (c < best) {
          best = c;
          arg = kk;
        }
      }
      cat(i, j) = best;
      oat(i, j) = arg;
    }
  }
  return cat(1, n);
}

}  // namespace lwskit
