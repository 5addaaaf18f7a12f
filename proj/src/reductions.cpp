#include "lwskit/reductions.hpp"

#include <cstdlib>

#include "lwskit/errors.hpp"

namespace lwskit {

KdLwsInstance encode_kminip_as_kdlws(const MinIpInstance& src) {
  if (src.k < 2 || src.n < 1) throw precondition_error("encode_kminip: need k >= 2, n >= 1");
  int kk = src.k - 1;       // output dimension
  int N = src.k * src.n;    // output side
  int d = src.d;
  int high = kk * src.n;    // indices above this carry the x vectors (axes 1..kk)
  std::vector<std::vector<int64_t>> factors(kk + 1);
  for (int ax = 1; ax <= kk + 1; ++ax) {
    auto& F = factors[ax - 1];
    F.assign(static_cast<size_t>(N) * d, 0);
    // Y_ax is zero on [1,high] and x_ax above it; the predecessor axis (Y_k)
    // is the mirror image, so every weight with a low target index vanishes.
    int set_idx = (ax <= kk) ? ax - 1 : src.k - 1;
    for (int j = 1; j <= N; ++j) {
      bool use_x = (ax <= kk) ? (j > high) : (j <= high);
      if (!use_x) continue;
      const auto& x = src.sets[set_idx][(j - 1) % src.n];
      for (int t = 0; t < d; ++t) F[static_cast<size_t>(j - 1) * d + t] = x[t];
    }
  }
  KdLwsInstance out;
  out.k = kk;
  out.n = N;
  out.w.assign(kk, CostTensor::cp(kk, N, d, std::move(factors)));
  return out;
}

KdLwsInstance encode_negtriangle_as_2dlws(const WeightedGraph& g) {
  int n = g.n();
  int N = 2 * n;
  auto zero2 = [&] { return std::vector<ExtInt>(static_cast<size_t>(N) * N, ExtInt(0)); };
  auto at = [&](std::vector<ExtInt>& m, int r, int c) -> ExtInt& {
    return m[static_cast<size_t>(r - 1) * N + (c - 1)];
  };

  // alpha[i,j,k] = f1(i,k)g1(j) + f2(i,j)g2(k) + f3(k,j)g3(i), predecessor
  // on the last axis; diagonal edge weights are +infinity and are killed by
  // the zero factor whenever the term is inactive.
  std::vector<ExtInt> b1 = zero2();  // over (i,k)
  std::vector<ExtInt> b2 = zero2();  // over (i,j)
  std::vector<ExtInt> b3 = zero2();  // over (j,k), entry = f3(k,j)
  for (int hi = n + 1; hi <= N; ++hi)
    for (int lo = 1; lo <= n; ++lo) {
      at(b1, hi, lo) = g.weight(hi - n, lo);
      at(b3, hi, lo) = g.weight(lo, hi - n);
    }
  for (int i = n + 1; i <= N; ++i)
    for (int j = n + 1; j <= N; ++j) at(b2, i, j) = g.weight(i - n, j - n);

  std::vector<int64_t> low_ind(N, 0), high_ind(N, 0);
  for (int v = 1; v <= n; ++v) low_ind[v - 1] = 1;
  for (int v = n + 1; v <= N; ++v) high_ind[v - 1] = 1;

  std::vector<SliceTerm> terms(3);
  terms[0] = {2, high_ind, std::make_shared<CostTensor>(CostTensor::dense(1, N, std::move(b1)))};
  terms[1] = {3, low_ind, std::make_shared<CostTensor>(CostTensor::dense(1, N, std::move(b2)))};
  terms[2] = {1, high_ind, std::make_shared<CostTensor>(CostTensor::dense(1, N, std::move(b3)))};

  KdLwsInstance out;
  out.k = 2;
  out.n = N;
  out.w.assign(2, CostTensor::slice_rank(2, N, std::move(terms)));
  return out;
}

PtInstance encode_2dlws_as_pt(const CostTensor& w) {
  if (w.order() != 3 || w.kind() != CostTensor::Kind::CpRank)
    throw precondition_error("encode_2dlws_as_pt: need an order-3 CpRank tensor");
  int n = w.n(), d = w.cp_rank(), N = 2 * n;
  // mu' vanishes above n and sigma' below n+1, so w' is supported exactly on
  // (i,j) in [1,n] x [n+1,2n] and T' freezes to 0 elsewhere.
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(static_cast<size_t>(N) * d, 0));
  for (int i = 1; i <= n; ++i)
    for (int t = 0; t < d; ++t) F[0][static_cast<size_t>(i - 1) * d + t] = w.factor(1, i, t);
  for (int j = n + 1; j <= N; ++j)
    for (int t = 0; t < d; ++t) F[1][static_cast<size_t>(j - 1) * d + t] = w.factor(2, j - n, t);
  for (int kk = 1; kk <= N; ++kk)
    for (int t = 0; t < d; ++t)
      F[2][static_cast<size_t>(kk - 1) * d + t] = w.factor(3, kk <= n ? kk : kk - n, t);
  PtInstance out;
  out.n = N;
  out.w = CostTensor::cp(2, N, d, std::move(F));
  return out;
}

PtInstance encode_2dlws_as_pt_slicerank(const CostTensor& w) {
  if (w.order() != 3 || w.kind() != CostTensor::Kind::SliceRank)
    throw precondition_error("encode_2dlws_as_pt_slicerank: need an order-3 SliceRank tensor");
  int n = w.n(), N = 2 * n;
  std::vector<SliceTerm> terms;
  for (const SliceTerm& t : w.terms()) {
    std::vector<int64_t> a2(N, 0);
    std::vector<ExtInt> b2(static_cast<size_t>(N) * N, ExtInt(0));
    auto at = [&](int r, int c) -> ExtInt& { return b2[static_cast<size_t>(r - 1) * N + (c - 1)]; };
    switch (t.axis) {
      case 2:  // a(j) * b(i,k)
        for (int j = n + 1; j <= N; ++j) a2[j - 1] = t.a[j - n - 1];
        for (int i = 1; i <= n; ++i)
          for (int kk = 1; kk <= N; ++kk) at(i, kk) = t.b->entry({i, kk <= n ? kk : kk - n});
        break;
      case 3:  // a(k) * b(i,j)
        for (int kk = 1; kk <= N; ++kk) a2[kk - 1] = t.a[(kk <= n ? kk : kk - n) - 1];
        for (int i = 1; i <= n; ++i)
          for (int j = n + 1; j <= N; ++j) at(i, j) = t.b->entry({i, j - n});
        break;
      case 1:  // a(i) * b(j,k)
        for (int i = 1; i <= n; ++i) a2[i - 1] = t.a[i - 1];
        for (int j = n + 1; j <= N; ++j)
          for (int kk = 1; kk <= N; ++kk) at(j, kk) = t.b->entry({j - n, kk <= n ? kk : kk - n});
        break;
      default:
        throw precondition_error("slice term axis out of range");
    }
    terms.push_back(
        {t.axis, std::move(a2), std::make_shared<CostTensor>(CostTensor::dense(1, N, std::move(b2)))});
  }
  PtInstance out;
  out.n = N;
  out.w = CostTensor::slice_rank(2, N, std::move(terms));
  return out;
}

MinIpInstance sat_to_kov(const SatFormula& phi, int k, size_t budget) {
  if (k < 2) throw precondition_error("sat_to_kov: need k >= 2");
  int npad = ((phi.n + k - 1) / k) * k;
  if (npad == 0) npad = k;
  int s = npad / k;  // variables per group; padding variables touch no clause
  if (s >= 30 || (size_t(1) << s) > budget) throw budget_error("sat_to_kov: 2^(n/k) over budget");
  int m = static_cast<int>(phi.clauses.size());
  MinIpInstance out;
  out.k = k;
  out.n = 1 << s;
  out.d = m;
  out.sets.assign(k, std::vector<std::vector<int64_t>>(
                         out.n, std::vector<int64_t>(m, 0)));
  for (int g = 0; g < k; ++g)
    for (int mask = 0; mask < out.n; ++mask)
      for (int c = 0; c < m; ++c) {
        bool sat = false;
        for (int lit : phi.clauses[c]) {
          int v = std::abs(lit);
          if ((v - 1) / s != g) continue;
          bool val = (mask >> ((v - 1) % s)) & 1;
          if ((lit > 0) == val) {
            sat = true;
            break;
          }
        }
        out.sets[g][mask][c] = sat ? 0 : 1;
      }
  return out;
}

namespace {

int64_t mpz_to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw overflow_error("CRR coordinate exceeds 64-bit range");
  return static_cast<int64_t>(v.get_si());
}

}  // namespace

std::vector<MinIpInstance> kov_to_zkov_family(const MinIpInstance& src, int ell,
                                              size_t v_budget) {
  if (ell < 1) throw precondition_error("kov_to_zkov_family: need l >= 1");
  for (const auto& set : src.sets)
    for (const auto& x : set)
      for (int64_t v : x)
        if (v != 0 && v != 1) throw precondition_error("kov_to_zkov_family: entries must be 0/1");
  int dpad = ((src.d + ell - 1) / ell) * ell;
  if (dpad == 0) dpad = ell;
  int b = dpad / ell;
  CrrCodec codec = crr_build(b, ell, src.k);
  auto V = codec.v_enumerate(v_budget);

  // Encode every source vector once (coordinates padded with zeros).
  std::vector<std::vector<std::vector<int64_t>>> enc(
      src.k, std::vector<std::vector<int64_t>>(src.n));
  std::vector<int> x(static_cast<size_t>(b) * ell);
  for (int t = 0; t < src.k; ++t)
    for (int i = 0; i < src.n; ++i) {
      std::fill(x.begin(), x.end(), 0);
      for (int c = 0; c < src.d; ++c) x[c] = static_cast<int>(src.sets[t][i][c]);
      auto psi = codec.encode(x);
      auto& row = enc[t][i];
      row.resize(ell);
      for (int c = 0; c < ell; ++c) row[c] = mpz_to_i64(psi[c]);
    }

  // One member per target value t: append -t to X_1 and 1 elsewhere, so a
  // tuple is orthogonal iff its compressed inner product equals t.
  std::vector<MinIpInstance> out;
  out.reserve(V.size());
  for (const mpz_class& tv : V) {
    int64_t t64 = mpz_to_i64(tv);
    MinIpInstance m;
    m.k = src.k;
    m.n = src.n;
    m.d = ell + 1;
    m.sets.assign(src.k, std::vector<std::vector<int64_t>>(src.n));
    for (int s = 0; s < src.k; ++s)
      for (int i = 0; i < src.n; ++i) {
        auto& row = m.sets[s][i];
        row = enc[s][i];
        row.push_back(s == 0 ? -t64 : 1);
      }
    out.push_back(std::move(m));
  }
  return out;
}

MinIpSolver kov_solver_lift(MinIpSolver inner) {
  return [inner = std::move(inner)](const MinIpInstance& inst) -> ExtInt {
    if (inst.k < 3) throw precondition_error("kov_solver_lift: need k >= 3");
    ExtInt best = ExtInt::inf();
    for (int i = 0; i < inst.n; ++i) {
      MinIpInstance sub;
      sub.k = inst.k - 1;
      sub.n = inst.n;
      sub.d = inst.d;
      sub.sets.resize(sub.k);
      sub.sets[0] = inst.sets[1];
      for (int r = 0; r < inst.n; ++r)
        for (int c = 0; c < inst.d; ++c) {
          int64_t p;
          if (__builtin_mul_overflow(sub.sets[0][r][c], inst.sets[0][i][c], &p))
            throw overflow_error("kov_solver_lift: fused entry overflow");
          sub.sets[0][r][c] = p;
        }
      for (int t = 2; t < inst.k; ++t) sub.sets[t - 1] = inst.sets[t];
      best = ExtInt::min(best, inner(sub));
    }
    return best;
  };
}

}  // namespace lwskit
