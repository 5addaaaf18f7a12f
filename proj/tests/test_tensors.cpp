#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lwskit/errors.hpp"
#include "lwskit/tensor.hpp"

using namespace lwskit;

TEST_CASE("ExtInt arithmetic") {
  ExtInt two(2), three(3), inf = ExtInt::inf();
  CHECK((two + three).value() == 5);
  CHECK((two * three).value() == 6);
  CHECK((two + inf).is_inf());
  CHECK((inf + inf).is_inf());
  CHECK((two * inf).is_inf());
  CHECK((ExtInt(0) * inf).value() == 0);  // min-plus measure convention
  CHECK_THROWS_AS(ExtInt(-1) * inf, overflow_error);
  CHECK_THROWS_AS(ExtInt(INT64_MAX - 1) + two, overflow_error);
  CHECK_THROWS_AS(ExtInt(INT64_MAX / 2) * three, overflow_error);
  CHECK(ExtInt::min(two, inf) == two);
  CHECK(ExtInt(5) < inf);
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.value(), overflow_error);
}

TEST_CASE("dense tensor entries and offsets") {
  // order 3, n = 2: data[(i-1)*4 + (j-1)*2 + (k-1)]
  std::vector<ExtInt> data(8);
  for (int i = 0; i < 8; ++i) data[i] = ExtInt(i * 10);
  CostTensor t = CostTensor::dense(2, 2, data);
  CHECK(t.order() == 3);
  CHECK(t.entry({1, 1, 1}).value() == 0);
  CHECK(t.entry({1, 2, 1}).value() == 20);
  CHECK(t.entry({2, 2, 2}).value() == 70);
  CHECK_THROWS_AS(t.entry({0, 1, 1}), schema_error);
  CHECK_THROWS_AS(t.entry({1, 1, 3}), schema_error);
}

TEST_CASE("cp tensor equals explicit inner product") {
  int n = 4, d = 2;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> val(-5, 5);
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(n * d));
  for (auto& axis : F)
    for (auto& e : axis) e = val(rng);
  CostTensor t = CostTensor::cp(2, n, d, F);
  CHECK(t.cp_rank() == d);
  bool ok = check_identity(
      t,
      [&](std::span<const int> idx) {
        int64_t s = 0;
        for (int r = 0; r < d; ++r) {
          int64_t p = 1;
          for (int ax = 0; ax < 3; ++ax) p *= F[ax][(idx[ax] - 1) * d + r];
          s += p;
        }
        return ExtInt(s);
      },
      1 << 12);
  CHECK(ok);
}

TEST_CASE("slice tensor: zero selector kills an infinite sub-entry") {
  int n = 2;
  std::vector<ExtInt> b(n * n, ExtInt(1));
  b[0] = ExtInt::inf();
  SliceTerm term{2, {0, 1}, std::make_shared<CostTensor>(CostTensor::dense(1, n, b))};
  CostTensor t = CostTensor::slice_rank(2, n, {term});
  CHECK(t.entry({1, 1, 1}).value() == 0);   // a[j=1] = 0 times inf
  CHECK(t.entry({1, 2, 1}).is_inf());       // a[j=2] = 1 times inf
  CHECK(t.entry({2, 2, 1}).value() == 1);
}

TEST_CASE("materialize and slice agree with entry") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int64_t> val(-4, 4);
  int n = 3, d = 2;
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(n * d));
  for (auto& axis : F)
    for (auto& e : axis) e = val(rng);
  CostTensor t = CostTensor::cp(2, n, d, F);
  CostTensor dense = t.materialize();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) CHECK(dense.entry({i, j, k}) == t.entry({i, j, k}));
  for (int axis = 1; axis <= 3; ++axis)
    for (int v = 1; v <= n; ++v) {
      CostTensor s = t.slice(axis, v);
      CHECK(s.order() == 2);
      for (int a = 1; a <= n; ++a)
        for (int b2 = 1; b2 <= n; ++b2) {
          int idx[3];
          int pos = 0;
          for (int ax = 1; ax <= 3; ++ax) idx[ax - 1] = (ax == axis) ? v : (pos++ == 0 ? a : b2);
          CHECK(s.entry({a, b2}) == t.entry({idx[0], idx[1], idx[2]}));
        }
    }
  CHECK_THROWS_AS(t.materialize(5), budget_error);
}

TEST_CASE("cp_to_slicerank preserves every entry") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> val(-3, 3);
  int n = 3, d = 3;
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(n * d));
  for (auto& axis : F)
    for (auto& e : axis) e = val(rng);
  CostTensor t = CostTensor::cp(2, n, d, F);
  for (int axis = 1; axis <= 3; ++axis) {
    CostTensor s = cp_to_slicerank(t, axis);
    CHECK(s.terms().size() == static_cast<size_t>(d));
    bool ok = check_identity(
        s, [&](std::span<const int> idx) { return t.entry(idx); }, 1 << 10);
    CHECK(ok);
  }
}

TEST_CASE("check_identity detects a planted mismatch") {
  std::vector<ExtInt> data(8, ExtInt(1));
  CostTensor t = CostTensor::dense(2, 2, data);
  CHECK(check_identity(t, [](std::span<const int>) { return ExtInt(1); }, 100));
  CHECK_FALSE(check_identity(
      t,
      [](std::span<const int> idx) {
        return (idx[0] == 2 && idx[1] == 2 && idx[2] == 2) ? ExtInt(2) : ExtInt(1);
      },
      100));
}

TEST_CASE("cost matrix kinds") {
  CostMatrix m = CostMatrix::cp(3, 2, {1, 2, 3, 4, 5, 6}, {1, 0, 0, 1, 2, 2});
  CHECK(m.entry(1, 1).value() == 1 * 1 + 2 * 0);
  CHECK(m.entry(2, 3).value() == 3 * 2 + 4 * 2);
  CostMatrix d = CostMatrix::dense_inf(2);
  CHECK(d.entry(1, 2).is_inf());
}

TEST_CASE("band enumeration is complete and sum-ordered") {
  int k = 3, n = 3;
  std::vector<std::vector<int>> seen;
  int last_sum = 0;
  for_each_in_band(k, n, 4, 8, [&](std::span<const int> idx) {
    int s = 0;
    for (int v : idx) s += v;
    CHECK(s >= 4);
    CHECK(s < 8);
    CHECK(s >= last_sum);
    last_sum = s;
    seen.emplace_back(idx.begin(), idx.end());
  });
  int expect = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (a + b + c >= 4 && a + b + c < 8) ++expect;
  CHECK(static_cast<int>(seen.size()) == expect);
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}
