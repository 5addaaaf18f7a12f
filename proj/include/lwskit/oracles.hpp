#pragma once

#include "lwskit/domain.hpp"
#include "lwskit/instances.hpp"

namespace lwskit {

// Independent brute-force ground truth. None of these share code with the DP
// solvers. All are deterministic, pure, and budget-capped with hard errors.

// Exact min over all k-tuples of the k-wise product inner product.
ExtInt brute_kminip(const MinIpInstance& inst, size_t budget = size_t(50'000'000));

// True iff some k-tuple has inner product exactly 0.
bool brute_kov(const MinIpInstance& inst, size_t budget = size_t(50'000'000));

// Min total weight over all full triangulations, by explicit enumeration of
// triangulation weight lists (Catalan growth; n <= 16).
ExtInt brute_triangulations(const PtInstance& inst, size_t budget = size_t(20'000'000));

// Min triangle weight, O(n^3) scan over distinct vertex triples.
ExtInt brute_negative_triangle(const WeightedGraph& g);

// Exhaustive satisfiability scan, n <= 20.
bool brute_sat(const SatFormula& f);

// Longest strictly increasing subsequence via patience sorting.
int lis_patience(const std::vector<int64_t>& xs);

// Max boxes placeable into `piles` nested chains: enumerate pile assignments
// (piles+1)^n and check each pile is a fits-chain in volume order.
int brute_nested_boxes(const std::vector<Box>& boxes, int piles,
                       size_t budget = size_t(10'000'000));

}  // namespace lwskit
