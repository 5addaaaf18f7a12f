#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lwskit/dp_core.hpp"
#include "lwskit/errors.hpp"
#include "lwskit/oracles.hpp"
#include "lwskit/reductions.hpp"

using namespace lwskit;

namespace {

MinIpInstance random_minip(int k, int n, int d, uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(lo, hi);
  MinIpInstance inst;
  inst.k = k;
  inst.n = n;
  inst.d = d;
  inst.sets.assign(k, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(d)));
  for (auto& set : inst.sets)
    for (auto& v : set)
      for (auto& e : v) e = val(rng);
  return inst;
}

MinIpInstance random_ov(int k, int n, int d, uint64_t seed, double one_prob = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(one_prob);
  MinIpInstance inst = random_minip(k, n, d, seed, 0, 0);
  for (auto& set : inst.sets)
    for (auto& v : set)
      for (auto& e : v) e = bit(rng) ? 1 : 0;
  return inst;
}

WeightedGraph random_graph(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-10, 10);
  std::vector<int64_t> upper(static_cast<size_t>(n) * (n - 1) / 2);
  for (auto& e : upper) e = val(rng);
  return WeightedGraph(n, std::move(upper));
}

SatFormula random_sat(int n, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n), width(1, 3);
  std::bernoulli_distribution neg(0.5);
  SatFormula f;
  f.n = n;
  for (int c = 0; c < m; ++c) {
    std::vector<int> cl;
    int w = width(rng);
    for (int l = 0; l < w; ++l) cl.push_back(neg(rng) ? -var(rng) : var(rng));
    f.clauses.push_back(std::move(cl));
  }
  return f;
}

CostTensor random_cp3(int n, int d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-4, 4);
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(n * d));
  for (auto& axis : F)
    for (auto& e : axis) e = val(rng);
  return CostTensor::cp(2, n, d, F);
}

CostTensor random_slice3(int n, const std::vector<int>& axes, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-4, 4);
  std::vector<SliceTerm> terms;
  for (int axis : axes) {
    SliceTerm t;
    t.axis = axis;
    t.a.resize(n);
    for (auto& v : t.a) v = val(rng);
    std::vector<ExtInt> b(static_cast<size_t>(n) * n);
    for (auto& v : b) v = ExtInt(val(rng));
    t.b = std::make_shared<CostTensor>(CostTensor::dense(1, n, std::move(b)));
    terms.push_back(std::move(t));
  }
  return CostTensor::slice_rank(2, n, terms);
}

}  // namespace

TEST_CASE("kmin-ip encodes as (k-1)D lws") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    MinIpInstance src = random_minip(2, 4, 3, seed, -5, 5);
    KdLwsInstance enc = encode_kminip_as_kdlws(src);
    CHECK(enc.k == 1);
    CHECK(enc.n == 2 * src.n);
    CHECK(enc.w[0].cp_rank() == src.d);
    CHECK(solve_kdlws_naive(enc).answer == brute_kminip(src));
  }
  for (uint64_t seed = 0; seed < 6; ++seed) {
    MinIpInstance src = random_minip(3, 3, 2, seed + 100, -4, 4);
    KdLwsInstance enc = encode_kminip_as_kdlws(src);
    CHECK(enc.k == 2);
    CHECK(enc.n == 3 * src.n);
    CHECK(enc.w.size() == 2);
    // Every axis shares one tensor of the source rank.
    for (const auto& w : enc.w) CHECK(w.cp_rank() == src.d);
    CHECK(solve_kdlws_naive(enc).answer == brute_kminip(src));
  }
}

TEST_CASE("negative triangle encodes as a slice-rank-3 2D lws") {
  for (int n = 3; n <= 8; ++n)
    for (uint64_t seed = 0; seed < 5; ++seed) {
      WeightedGraph g = random_graph(n, seed * 31 + static_cast<uint64_t>(n));
      KdLwsInstance enc = encode_negtriangle_as_2dlws(g);
      CHECK(enc.k == 2);
      CHECK(enc.n == 2 * n);
      for (const auto& w : enc.w) CHECK(w.terms().size() == 3);
      CHECK(solve_kdlws_naive(enc).answer == brute_negative_triangle(g));
    }
}

TEST_CASE("flipped 2D lws encodes as pt, cp flavor") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    int n = 5, d = 1 + static_cast<int>(seed % 3);
    CostTensor w = random_cp3(n, d, seed * 7);
    PtInstance enc = encode_2dlws_as_pt(w);
    CHECK(enc.n == 2 * n);
    CHECK(enc.w.cp_rank() == d);  // rank preserved
    CHECK(solve_pt_naive(enc).answer == solve_interval_2dlws_naive(w).answer);
  }
}

TEST_CASE("flipped 2D lws encodes as pt, slice flavor") {
  std::vector<std::vector<int>> axis_sets = {{1}, {2}, {3}, {1, 2, 3}, {2, 2}, {3, 1}};
  uint64_t seed = 0;
  for (const auto& axes : axis_sets)
    for (int rep = 0; rep < 3; ++rep) {
      int n = 5;
      CostTensor w = random_slice3(n, axes, ++seed * 11);
      PtInstance enc = encode_2dlws_as_pt_slicerank(w);
      CHECK(enc.n == 2 * n);
      CHECK(enc.w.terms().size() == axes.size());  // one target term per source term
      CHECK(solve_pt_naive(enc).answer == solve_interval_2dlws_naive(w).answer);
    }
}

TEST_CASE("sat reduces to k-ov") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    SatFormula f = random_sat(4 + static_cast<int>(seed % 3), 6, seed);
    for (int k = 2; k <= 3; ++k) {
      MinIpInstance ov = sat_to_kov(f, k);
      CHECK(ov.k == k);
      CHECK(ov.d == static_cast<int>(f.clauses.size()));
      CHECK(brute_kov(ov) == brute_sat(f));
    }
  }
  SatFormula wide{16, {{1}}};
  CHECK_THROWS_AS(sat_to_kov(wide, 2, /*budget=*/16), budget_error);
}

TEST_CASE("k-ov compresses to an integer family") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    MinIpInstance src = random_ov(2, 3, 7, seed, 0.55);  // d padded to 8
    auto family = kov_to_zkov_family(src, 4);
    bool any = false;
    for (const auto& m : family) {
      CHECK(m.d == 5);  // l + 1 coordinates
      any = any || brute_kov(m);
    }
    CHECK(any == brute_kov(src));
  }
  for (uint64_t seed = 0; seed < 6; ++seed) {
    MinIpInstance src = random_ov(3, 2, 6, seed + 50, 0.4);
    auto family = kov_to_zkov_family(src, 3);
    bool any = false;
    for (const auto& m : family) any = any || brute_kov(m);
    CHECK(any == brute_kov(src));
  }
  MinIpInstance bad = random_minip(2, 2, 4, 1, -2, 2);
  CHECK_THROWS_AS(kov_to_zkov_family(bad, 2), precondition_error);  // entries must be 0/1
}

TEST_CASE("arity lift preserves the minimum") {
  MinIpSolver base = [](const MinIpInstance& inst) { return brute_kminip(inst); };
  MinIpSolver lifted = kov_solver_lift(base);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    MinIpInstance src = random_minip(3, 3, 3, seed * 5 + 2, -4, 4);
    CHECK(lifted(src) == brute_kminip(src));
  }
  MinIpSolver twice = kov_solver_lift(kov_solver_lift(base));
  MinIpInstance four = random_minip(4, 2, 2, 9, -3, 3);
  CHECK(twice(four) == brute_kminip(four));
}
