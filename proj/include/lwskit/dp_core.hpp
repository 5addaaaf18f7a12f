#pragma once

#include <utility>

#include "lwskit/instances.hpp"

namespace lwskit {

enum class EvalOrder { BandSum, Lexicographic };

struct LwsResult {
  std::vector<ExtInt> table;  // T[0..n]
  ExtInt answer;
  std::vector<int> pred;  // witness: chosen predecessor per j (smallest-index ties), -1 for T[0]
};

LwsResult solve_lws_naive(const LwsInstance& inst);

struct KdResult {
  DpTable table;
  ExtInt answer;  // T[n,...,n]
};

KdResult solve_kdlws_naive(const KdLwsInstance& inst, EvalOrder order = EvalOrder::BandSum);

// Index bridge: LWS on [0,n] embeds as k=1 kD LWS on [1,n+1] (shift by one);
// tensor axes are (target, predecessor) so wt(j', i') = w.entry(i', j').
KdLwsInstance kdlws_from_lws(const LwsInstance& inst);

// T' on the second band D_{a+N,a+2N}, from given values only.
DpTable solve_static_kdlws_naive(const StaticKdInstance& inst);

struct PtResult {
  std::vector<ExtInt> table;  // row-major n*n, T[i,j] at (i-1)*n+(j-1)
  ExtInt answer;
  std::vector<int> split;  // witness split point per interval (smallest ties), 0 if none
};

PtResult solve_pt_naive(const PtInstance& inst);

// Flipped-orientation 2D LWS, single tensor w=w_1=w_2:
// T[i,j] = min( min_{1<=kk<j} T[i,kk]+w[i,j,kk], min_{i<kk<=n} T[kk,j]+w[i,j,kk] ),
// both candidate sets empty => 0. Evaluated with decreasing i, increasing j.
struct Interval2dResult {
  std::vector<ExtInt> table;  // row-major n*n
  ExtInt answer;              // T[1,n]
};

Interval2dResult solve_interval_2dlws_naive(const CostTensor& w);

}  // namespace lwskit
