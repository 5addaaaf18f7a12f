#include "lwskit/problems.hpp"

#include <algorithm>
#include <numeric>

#include "lwskit/dp_core.hpp"
#include "lwskit/errors.hpp"

namespace lwskit {

LwsInstance encode_lis(const std::vector<int64_t>& xs) {
  int n = static_cast<int>(xs.size());
  int m = n + 1;  // item n+1 is the sentinel
  int side = m + 1;
  std::vector<ExtInt> w(static_cast<size_t>(side) * side, ExtInt::inf());
  auto at = [&](int i, int j) -> ExtInt& {  // 0-based stops
    return w[static_cast<size_t>(i) * side + j];
  };
  for (int j = 1; j <= m; ++j) at(0, j) = ExtInt(-1);
  for (int i = 1; i <= n; ++i) {
    at(i, m) = ExtInt(-1);
    for (int j = i + 1; j <= n; ++j)
      if (xs[i - 1] < xs[j - 1]) at(i, j) = ExtInt(-1);
  }
  LwsInstance out;
  out.n = m;
  out.w = CostMatrix::dense(side, std::move(w));
  return out;
}

int decode_lis_answer(ExtInt t_final) { return static_cast<int>(-t_final.value()) - 1; }

LwsInstance encode_refuel_1d(const std::vector<int64_t>& x, int64_t hop) {
  int m = static_cast<int>(x.size()) - 1;
  if (m < 1) throw precondition_error("encode_refuel_1d: need at least two stops");
  for (int i = 0; i < m; ++i)
    if (x[i] >= x[i + 1]) throw precondition_error("encode_refuel_1d: stops must increase");
  int side = m + 1, d = 4;
  std::vector<int64_t> A(static_cast<size_t>(side) * d), B(static_cast<size_t>(side) * d);
  for (int u = 0; u <= m; ++u) {
    int64_t p = x[u];
    // (x_j - x_i - h)^2 = x_j^2*1 + 1*x_i^2 + (-2x_j)(x_i+h) + h*(2x_i+h)
    A[static_cast<size_t>(u) * d + 0] = 1;
    A[static_cast<size_t>(u) * d + 1] = p * p;
    A[static_cast<size_t>(u) * d + 2] = p + hop;
    A[static_cast<size_t>(u) * d + 3] = 2 * p + hop;
    B[static_cast<size_t>(u) * d + 0] = p * p;
    B[static_cast<size_t>(u) * d + 1] = 1;
    B[static_cast<size_t>(u) * d + 2] = -2 * p;
    B[static_cast<size_t>(u) * d + 3] = hop;
  }
  LwsInstance out;
  out.n = m;
  out.w = CostMatrix::cp(side, d, std::move(A), std::move(B));
  return out;
}

KdLwsInstance encode_refuel_kd(int k, int n, int64_t hop) {
  if (k < 1 || n < 1) throw precondition_error("encode_refuel_kd: need k,n >= 1");
  int d = 4;
  std::vector<int64_t> ones(static_cast<size_t>(n) * d, 1);
  std::vector<int64_t> target(static_cast<size_t>(n) * d), pred(static_cast<size_t>(n) * d);
  for (int u = 1; u <= n; ++u) {
    int64_t p = u;
    target[static_cast<size_t>(u - 1) * d + 0] = p * p;
    target[static_cast<size_t>(u - 1) * d + 1] = 1;
    target[static_cast<size_t>(u - 1) * d + 2] = -2 * p;
    target[static_cast<size_t>(u - 1) * d + 3] = hop;
    pred[static_cast<size_t>(u - 1) * d + 0] = 1;
    pred[static_cast<size_t>(u - 1) * d + 1] = p * p;
    pred[static_cast<size_t>(u - 1) * d + 2] = p + hop;
    pred[static_cast<size_t>(u - 1) * d + 3] = 2 * p + hop;
  }
  KdLwsInstance out;
  out.k = k;
  out.n = n;
  for (int l = 1; l <= k; ++l) {
    std::vector<std::vector<int64_t>> F(k + 1, ones);
    F[l - 1] = target;
    F[k] = pred;
    out.w.push_back(CostTensor::cp(k, n, d, std::move(F)));
  }
  return out;
}

KdLwsInstance encode_refuel_arrival_fee(int k, int n, const std::vector<int64_t>& c) {
  if (k < 1 || n < 1) throw precondition_error("encode_refuel_arrival_fee: need k,n >= 1");
  size_t want = 1;
  for (int i = 0; i < k; ++i) want *= static_cast<size_t>(n);
  if (c.size() != want) throw precondition_error("encode_refuel_arrival_fee: c must have n^k entries");
  std::vector<ExtInt> data(c.size());
  for (size_t i = 0; i < c.size(); ++i) data[i] = ExtInt(c[i]);
  SliceTerm term;
  term.axis = k + 1;
  term.a.assign(n, 1);
  term.b = std::make_shared<CostTensor>(CostTensor::dense(k - 1, n, std::move(data)));
  KdLwsInstance out;
  out.k = k;
  out.n = n;
  out.w.assign(k, CostTensor::slice_rank(k, n, {term}));
  return out;
}

KdLwsInstance encode_nested_boxes(const std::vector<Box>& boxes, int piles) {
  if (piles < 1) throw precondition_error("encode_nested_boxes: need piles >= 1");
  int n = static_cast<int>(boxes.size());
  std::vector<Box> sorted = boxes;
  std::sort(sorted.begin(), sorted.end(),
            [](const Box& a, const Box& b) { return a.volume() < b.volume(); });
  int k = piles, N = n + 2;
  size_t cells = 1;
  for (int i = 0; i < k + 1; ++i) cells *= static_cast<size_t>(N);
  KdLwsInstance out;
  out.k = k;
  out.n = N;
  std::vector<int> idx(k + 1, 1);
  for (int l = 1; l <= k; ++l) {
    std::vector<ExtInt> data(cells, ExtInt::inf());
    std::fill(idx.begin(), idx.end(), 1);
    for (size_t off = 0; off < cells; ++off) {
      int il = idx[l - 1], j = idx[k];
      if (il == N) {
        data[off] = ExtInt(0);  // the sentinel swallows any pile top for free
      } else if (il >= 2 && j < il) {
        bool strict_max = true;
        for (int m = 0; m < k; ++m)
          if (m != l - 1 && idx[m] >= il) strict_max = false;
        bool fit = j == 1 || (j <= n + 1 && sorted[j - 2].fits_into(sorted[il - 2]));
        if (strict_max && fit) data[off] = ExtInt(-1);
      }
      for (int a = k; a >= 0; --a) {
        if (++idx[a] <= N) break;
        idx[a] = 1;
      }
    }
    out.w.push_back(CostTensor::dense(k, N, std::move(data)));
  }
  return out;
}

int decode_nested_boxes_answer(ExtInt t_final) { return static_cast<int>(-t_final.value()); }

PtInstance encode_matrix_chain(const std::vector<int64_t>& dims) {
  int N = static_cast<int>(dims.size());
  if (N < 2) throw precondition_error("encode_matrix_chain: need at least one matrix");
  std::vector<int64_t> x(static_cast<size_t>(N));
  for (int u = 1; u <= N; ++u) x[u - 1] = dims[u - 1];
  PtInstance out;
  out.n = N;
  out.w = CostTensor::cp(2, N, 1, {x, x, x});
  return out;
}

ExtInt matrix_chain_split_cost(const std::vector<int64_t>& dims, int split) {
  int n = static_cast<int>(dims.size()) - 1;  // number of matrices
  if (split < 1 || split >= n) throw precondition_error("matrix_chain_split_cost: bad split");
  auto opt = [](std::vector<int64_t> part) {
    if (part.size() <= 2) return ExtInt(0);
    return solve_pt_naive(encode_matrix_chain(part)).answer;
  };
  std::vector<int64_t> left(dims.begin(), dims.begin() + split + 1);
  std::vector<int64_t> right(dims.begin() + split, dims.end());
  ExtInt join(dims.front() * dims[split] * dims.back());
  return opt(std::move(left)) + opt(std::move(right)) + join;
}

PtInstance encode_optimal_bst(const std::vector<int64_t>& p) {
  int n = static_cast<int>(p.size());
  int N = n + 2;
  std::vector<int64_t> pre(n + 1, 0);
  std::partial_sum(p.begin(), p.end(), pre.begin() + 1);
  std::vector<ExtInt> b(static_cast<size_t>(N) * N, ExtInt(0));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 2; j <= N; ++j)  // keys i..j-2
      b[static_cast<size_t>(i - 1) * N + (j - 1)] = ExtInt(pre[j - 2] - pre[i - 1]);
  SliceTerm term;
  term.axis = 3;
  term.a.assign(N, 1);
  term.b = std::make_shared<CostTensor>(CostTensor::dense(1, N, std::move(b)));
  PtInstance out;
  out.n = N;
  out.w = CostTensor::slice_rank(2, N, {term});
  return out;
}

PtInstance encode_polygon_triangulation(const std::vector<int64_t>& weights) {
  int N = static_cast<int>(weights.size());
  if (N < 3) throw precondition_error("encode_polygon_triangulation: need n >= 3 nodes");
  PtInstance out;
  out.n = N;
  out.w = CostTensor::cp(2, N, 1, {weights, weights, weights});
  return out;
}

}  // namespace lwskit
