#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lwskit/dp_core.hpp"
#include "lwskit/errors.hpp"
#include "lwskit/oracles.hpp"
#include "lwskit/problems.hpp"

using namespace lwskit;

TEST_CASE("lis encoding") {
  auto lis_via_lws = [](const std::vector<int64_t>& xs) {
    return decode_lis_answer(solve_lws_naive(encode_lis(xs)).answer);
  };
  CHECK(lis_via_lws({}) == 0);
  CHECK(lis_via_lws({5}) == 1);
  CHECK(lis_via_lws({2, 2, 2}) == 1);
  CHECK(lis_via_lws({3, 1, 4, 1, 5, 9, 2, 6}) == 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> val(0, 9);
  for (int t = 0; t < 40; ++t) {
    std::vector<int64_t> xs(1 + t % 9);
    for (auto& x : xs) x = val(rng);
    CHECK(lis_via_lws(xs) == lis_patience(xs));
  }
}

TEST_CASE("1d refueling") {
  LwsInstance inst = encode_refuel_1d({0, 3, 7}, 2);
  CHECK(solve_lws_naive(inst).answer.value() == 5);  // (3-0-2)^2 + (7-3-2)^2
  // The CpRank-4 matrix must be the quadratic everywhere.
  std::vector<int64_t> x = {0, 2, 5, 6, 11};
  int64_t hop = 3;
  LwsInstance q = encode_refuel_1d(x, hop);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      int64_t diff = x[j] - x[i] - hop;
      CHECK(q.w.entry(i + 1, j + 1).value() == diff * diff);
    }
  // Direct flight is optimal when stopping costs more.
  CHECK(solve_lws_naive(encode_refuel_1d({0, 1, 10}, 10)).answer.value() == 0);
  CHECK_THROWS_AS(encode_refuel_1d({3, 3}, 1), precondition_error);
  CHECK_THROWS_AS(encode_refuel_1d({5}, 1), precondition_error);
}

TEST_CASE("kd refueling tensors satisfy the rank-4 identity") {
  for (auto [k, n, hop] : {std::array<int64_t, 3>{2, 5, 2}, {3, 4, 1}, {1, 6, 4}}) {
    KdLwsInstance enc = encode_refuel_kd(static_cast<int>(k), static_cast<int>(n), hop);
    for (int l = 1; l <= k; ++l) {
      CHECK(enc.w[l - 1].cp_rank() == 4);
      bool ok = check_identity(
          enc.w[l - 1],
          [&, l](std::span<const int> idx) {
            int64_t diff = idx[l - 1] - idx[idx.size() - 1] - hop;
            return ExtInt(diff * diff);
          },
          1 << 14);
      CHECK(ok);
    }
    // Same answer through the materialized dense tensors.
    KdLwsInstance dense = enc;
    for (auto& w : dense.w) w = w.materialize();
    CHECK(solve_kdlws_naive(enc).answer == solve_kdlws_naive(dense).answer);
  }
}

TEST_CASE("arrival-fee refueling") {
  {
    std::vector<int64_t> zero(9, 0);
    KdLwsInstance enc = encode_refuel_arrival_fee(2, 3, zero);
    CHECK(solve_kdlws_naive(enc).answer.value() == 0);
  }
  {
    std::vector<int64_t> one(9, 1);
    KdLwsInstance enc = encode_refuel_arrival_fee(2, 3, one);
    for (const auto& w : enc.w) CHECK(w.terms().size() == 1);  // slice rank 1
    // Two long jumps reach (3,3): (1,1) -> (3,1) -> (3,3).
    CHECK(solve_kdlws_naive(enc).answer.value() == 2);
  }
  // Random fee tables against an in-test recurrence.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int64_t> fee(0, 8);
  for (auto [k, n] : {std::pair{2, 4}, {3, 3}}) {
    size_t cells = 1;
    for (int i = 0; i < k; ++i) cells *= static_cast<size_t>(n);
    std::vector<int64_t> c(cells);
    for (auto& v : c) v = fee(rng);
    KdLwsInstance enc = encode_refuel_arrival_fee(k, n, c);
    DpTable want(k, n);
    for_each_in_band(k, n, k, k * n + 1, [&](std::span<const int> idx) {
      bool base = true;
      for (int v : idx) base = base && v == 1;
      if (base) {
        want.set(idx, ExtInt(0));
        return;
      }
      size_t off = 0;
      for (int a = 0; a < k; ++a) off = off * n + static_cast<size_t>(idx[a] - 1);
      ExtInt best = ExtInt::inf();
      std::vector<int> p(idx.begin(), idx.end());
      for (int l = 0; l < k; ++l) {
        for (int i = 1; i < idx[l]; ++i) {
          p[l] = i;
          ExtInt tv = want.at(p);
          if (!tv.is_inf()) best = ExtInt::min(best, tv + ExtInt(c[off]));
        }
        p[l] = idx[l];
      }
      want.set(idx, best);
    });
    auto got = solve_kdlws_naive(enc);
    std::vector<int> top(k, n);
    CHECK(got.answer == want.at(top));
  }
  CHECK_THROWS_AS(encode_refuel_arrival_fee(2, 3, std::vector<int64_t>(4, 0)), precondition_error);
}

TEST_CASE("nested boxes encoding matches the brute force") {
  auto solve_boxes = [](const std::vector<Box>& boxes, int piles) {
    KdLwsInstance enc = encode_nested_boxes(boxes, piles);
    return decode_nested_boxes_answer(solve_kdlws_naive(enc).answer);
  };
  CHECK(solve_boxes({{{1, 1}}, {{2, 2}}, {{3, 3}}}, 2) == 3);
  CHECK(solve_boxes({{{1, 2}}, {{2, 1}}}, 2) == 2);
  CHECK(solve_boxes({{{1, 2}}, {{2, 1}}}, 1) == 1);
  CHECK(solve_boxes({{{1, 1}}, {{1, 2}}}, 1) == 1);  // strict fit on every side
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int64_t> side(1, 4);
  std::uniform_int_distribution<int> dim(1, 3), cnt(1, 5), pl(1, 2);
  for (int t = 0; t < 60; ++t) {
    int d = dim(rng), n = cnt(rng), piles = pl(rng);
    std::vector<Box> boxes(n);
    for (auto& b : boxes) {
      b.sides.resize(d);
      for (auto& s : b.sides) s = side(rng);
    }
    CHECK(solve_boxes(boxes, piles) == brute_nested_boxes(boxes, piles));
  }
}

TEST_CASE("matrix chain") {
  CHECK(solve_pt_naive(encode_matrix_chain({10, 20, 30, 40})).answer.value() == 18000);
  CHECK(matrix_chain_split_cost({10, 20, 30, 40}, 1).value() == 32000);
  CHECK(matrix_chain_split_cost({10, 20, 30, 40}, 2).value() == 18000);
  CHECK(solve_pt_naive(encode_matrix_chain({2, 3, 4, 5})).answer.value() == 64);
  CHECK(solve_pt_naive(encode_matrix_chain({7, 11})).answer.value() == 0);
  CHECK(encode_matrix_chain({10, 20, 30, 40}).w.cp_rank() == 1);
  // The encoding agrees with the enumeration oracle on random chains.
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int64_t> dv(1, 9);
  for (int t = 0; t < 20; ++t) {
    std::vector<int64_t> dims(2 + t % 6);
    for (auto& d : dims) d = dv(rng);
    PtInstance enc = encode_matrix_chain(dims);
    CHECK(solve_pt_naive(enc).answer == brute_triangulations(enc));
  }
}

TEST_CASE("optimal bst") {
  auto cost = [](const std::vector<int64_t>& p) {
    return solve_pt_naive(encode_optimal_bst(p)).answer.value();
  };
  CHECK(cost({1}) == 1);
  CHECK(cost({1, 1}) == 3);
  CHECK(cost({4, 2, 6}) == 20);
  PtInstance enc = encode_optimal_bst({4, 2, 6});
  CHECK(enc.w.terms().size() == 1);  // slice rank 1, split-axis selector == 1
  CHECK(solve_pt_naive(enc).answer == brute_triangulations(enc));
}

TEST_CASE("polygon triangulation") {
  CHECK(solve_pt_naive(encode_polygon_triangulation({1, 2, 3, 4})).answer.value() == 18);
  CHECK(solve_pt_naive(encode_polygon_triangulation({1, 1, 1, 1, 1, 1})).answer.value() == 4);
  CHECK(encode_polygon_triangulation({1, 2, 3, 4}).w.cp_rank() == 1);
}
