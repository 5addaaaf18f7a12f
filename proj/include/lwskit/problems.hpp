#pragma once

#include <vector>

#include "lwskit/domain.hpp"
#include "lwskit/instances.hpp"

namespace lwskit {

// Longest strictly increasing subsequence as LWS: items 1..n plus a sentinel
// item n+1 larger than everything; w[i,j] = -1 if x_i < x_j, +inf otherwise
// (start edges from 0 and edges into the sentinel are always -1).
// LIS length = decode_lis_answer(T[n+1]).
LwsInstance encode_lis(const std::vector<int64_t>& xs);
int decode_lis_answer(ExtInt t_final);

// 1D airplane refueling: stops x_0 < ... < x_m including both airports,
// w[i,j] = (x_j - x_i - hop)^2 as an explicit CpRank-4 matrix.
LwsInstance encode_refuel_1d(const std::vector<int64_t>& x, int64_t hop);

// kD refueling with the quadratic per-move cost (hop - (i_l - j))^2; one
// CpRank-4 tensor per axis, nontrivial factors on axis l and the predecessor.
KdLwsInstance encode_refuel_kd(int k, int n, int64_t hop);

// Arrival-fee refueling: every move into (i_1..i_k) costs c[i_1..i_k]
// (row-major over [1,n]^k). Slice rank 1: a == 1 on the predecessor axis.
KdLwsInstance encode_refuel_arrival_fee(int k, int n, const std::vector<int64_t>& c);

// Multiple nested boxes (piles = k). Boxes are volume-sorted; index u in
// [2,n+1] is box rank u-1, u=1 is the empty pile and u=n+2 a sentinel that
// swallows everything at cost 0. A move below the sentinel is a placement:
// weight -1 when the predecessor box fits and the written coordinate is
// strictly the largest in the target tuple, +inf otherwise. The strictness
// forbids counting one box on two piles and the +inf wall forces each axis to
// walk its pile's actual chain (a 0/-1 weight without both guards over-counts).
// Max boxes = decode_nested_boxes_answer(T[n+2,...,n+2]).
KdLwsInstance encode_nested_boxes(const std::vector<Box>& boxes, int piles);
int decode_nested_boxes_answer(ExtInt t_final);

// Matrix-chain multiplication over n+1 polygon nodes, x_u = dims[u-1]:
// w[i,j,k] = x_i * x_j * x_k, CpRank 1. PT answer = optimal cost.
PtInstance encode_matrix_chain(const std::vector<int64_t>& dims);

// Cost when the outermost split is after matrix `split` and both sides are
// multiplied optimally.
ExtInt matrix_chain_split_cost(const std::vector<int64_t>& dims, int split);

// Optimal binary search tree with integer access frequencies p_1..p_n over
// n+2 polygon nodes: interval [i,j] holds keys i..j-2, split kk roots key
// kk-1, w[i,j,kk] = sum_{t=i}^{j-2} p_t. Slice rank 1 with a == 1 on the
// split axis. PT answer = minimal total access cost.
PtInstance encode_optimal_bst(const std::vector<int64_t>& p);

// Polygon triangulation with node weights: w[i,j,k] = w_i * w_j * w_k, CpRank 1.
PtInstance encode_polygon_triangulation(const std::vector<int64_t>& weights);

}  // namespace lwskit
