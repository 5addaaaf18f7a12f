#pragma once

#include <functional>

#include "lwskit/crr.hpp"
#include "lwskit/domain.hpp"
#include "lwskit/instances.hpp"

namespace lwskit {

// kMin-IP over k sets of n vectors becomes a (k-1)D LWS of side
// kn whose k-1 tensors are all the CpRank-d tensor built from the padded Y
// sets; the naive solve's T[kn,...,kn] is the min inner product.
KdLwsInstance encode_kminip_as_kdlws(const MinIpInstance& src);

// Minimum-weight triangle as a 2D LWS of side 2n with a shared
// slice-rank-3 tensor; T[2n,2n] is the min triangle weight.
KdLwsInstance encode_negtriangle_as_2dlws(const WeightedGraph& g);

// Flipped-orientation 2D LWS (single CpRank-d tensor w) as a PT
// instance on 2n nodes with the same CP rank; T'[1,2n] = T[1,n].
PtInstance encode_2dlws_as_pt(const CostTensor& w);

// Slice-rank version of the same lift; one target term per source term.
PtInstance encode_2dlws_as_pt_slicerank(const CostTensor& w);

// SAT with variables split into k groups; one 0/1 vector per
// partial assignment, coordinate c = 0 iff the assignment satisfies clause c.
// phi satisfiable iff the output has an orthogonal k-tuple.
MinIpInstance sat_to_kov(const SatFormula& phi, int k, size_t budget = size_t(1) << 20);

// kOV over {0,1}^d compressed to a family of integer instances of
// length l+1, one per t in V_{d/l,l}; some member has a zero inner product iff
// the source has an orthogonal tuple.
std::vector<MinIpInstance> kov_to_zkov_family(const MinIpInstance& src, int ell,
                                              size_t v_budget = 1'000'000);

using MinIpSolver = std::function<ExtInt(const MinIpInstance&)>;

// Arity lift: solve arity-k Min-IP through an arity-(k-1) solver by fusing
// X_1 and X_2 elementwise, one sub-instance per X_1 vector. k >= 3.
MinIpSolver kov_solver_lift(MinIpSolver inner);

}  // namespace lwskit
