#pragma once

#include <array>
#include <utility>

#include "lwskit/dp_core.hpp"
#include "lwskit/instances.hpp"

namespace lwskit {

// Static-stage strategies for the divide-and-conquer solver. Every kind
// produces values equal to solve_static_kdlws_naive on its precondition class.
enum class StaticSolverKind { Naive, Rank1Envelope, SliceRank1, HierarchyReduce };

// Instrumentation for the coverage invariant: leaves must partition the
// top-level band, and each static stage spans (lo, mid, hi).
struct DcTrace {
  std::vector<std::pair<int, int>> leaves;
  std::vector<std::array<int, 3>> static_calls;
};

// Band divide and conquer: kD LWS via repeated static solves.
// Answer identical to solve_kdlws_naive for every static kind.
KdResult solve_kdlws_dc(const KdLwsInstance& inst, StaticSolverKind kind,
                        int jobs = 1, DcTrace* trace = nullptr);

// Dimension-reduction hierarchy: a static kD solve (k >= 2) decomposed into
// per-fixed-coordinate static (k-1)D solves plus per-tail 1D solves.
// Rank-1 CpRank 1D stages go through the line envelope.
DpTable solve_static_kd_via_hierarchy(const StaticKdInstance& inst, int jobs = 1);

// Sub-cubic 2D LWS for single-slice-term tensors: DC with an envelope-based
// static stage (see fast_solvers static stage for the orientation cases).
KdResult solve_2dlws_slicerank1(const KdLwsInstance& inst, int jobs = 1);

// Knuth/quadrangle-inequality PT speedup: O(n^2) when w[i,j,k] is
// k-independent, monotone and satisfies the QI. Preconditions are checked by
// sampling (full O(n^4) check optional); failure throws precondition_error.
ExtInt solve_pt_knuth(const PtInstance& inst, bool full_check = false, uint64_t sample_seed = 7);

}  // namespace lwskit
