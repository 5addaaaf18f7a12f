#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lwskit/errors.hpp"
#include "lwskit/oracles.hpp"

using namespace lwskit;

TEST_CASE("kmin-ip brute force") {
  MinIpInstance inst;
  inst.k = 2;
  inst.n = 2;
  inst.d = 2;
  inst.sets = {{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}};
  CHECK(brute_kminip(inst).value() == 17);  // (1,2).(5,6)

  MinIpInstance neg = inst;
  neg.sets[0][0] = {-3, 0};
  CHECK(brute_kminip(neg).value() == -3 * 7 + 0);  // (-3,0).(7,8)

  MinIpInstance triple;
  triple.k = 3;
  triple.n = 2;
  triple.d = 2;
  triple.sets = {{{1, 0}, {0, 1}}, {{1, 1}, {2, 0}}, {{1, 1}, {0, 3}}};
  // min over 8 products: x=(0,1),y=(2,0),z=(1,1) -> 0; x=(0,1),y=(1,1),z=(0,3) -> 3...
  CHECK(brute_kminip(triple).value() == 0);

  CHECK_THROWS_AS(brute_kminip(inst, 3), budget_error);
}

TEST_CASE("k-ov brute force") {
  MinIpInstance yes;
  yes.k = 2;
  yes.n = 2;
  yes.d = 3;
  yes.sets = {{{1, 0, 1}, {0, 1, 1}}, {{1, 1, 0}, {0, 1, 0}}};
  CHECK(brute_kov(yes));  // (1,0,1).(0,1,0) = 0

  MinIpInstance no = yes;
  no.sets = {{{1, 0, 1}, {1, 1, 1}}, {{1, 1, 0}, {0, 1, 1}}};
  CHECK_FALSE(brute_kov(no));
}

TEST_CASE("triangulation enumeration") {
  {
    std::vector<ExtInt> data(27, ExtInt(0));
    data[(0 * 3 + 2) * 3 + 1] = ExtInt(42);  // w[1,3,2]
    PtInstance inst{3, CostTensor::dense(2, 3, std::move(data))};
    CHECK(brute_triangulations(inst).value() == 42);
  }
  {
    int n = 4;
    std::vector<ExtInt> data(static_cast<size_t>(n) * n * n, ExtInt(0));
    auto at = [&](int i, int j, int kk) -> ExtInt& {
      return data[(static_cast<size_t>(i - 1) * n + (j - 1)) * n + (kk - 1)];
    };
    at(1, 4, 2) = ExtInt(5);
    at(2, 4, 3) = ExtInt(1);
    at(1, 4, 3) = ExtInt(2);
    at(1, 3, 2) = ExtInt(9);
    PtInstance inst{n, CostTensor::dense(2, n, std::move(data))};
    // split at 2: 5 + 1 = 6; split at 3: 2 + 9 = 11.
    CHECK(brute_triangulations(inst).value() == 6);
  }
  std::vector<ExtInt> tiny(8, ExtInt(0));
  PtInstance degenerate{2, CostTensor::dense(2, 2, std::move(tiny))};
  CHECK(brute_triangulations(degenerate).value() == 0);
}

TEST_CASE("negative triangle scan") {
  // n=4, upper triangle (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
  WeightedGraph g(4, {3, -1, 2, 4, -2, 1});
  // triangles: 123: 3+4-1=6; 124: 3-2+2=3; 134: -1+1+2=2; 234: 4+1-2=3.
  CHECK(brute_negative_triangle(g).value() == 2);
  CHECK(g.weight(2, 2).is_inf());
  CHECK(g.weight(3, 2) == g.weight(2, 3));
  WeightedGraph tiny(2, {7});
  CHECK(brute_negative_triangle(tiny).is_inf());
}

TEST_CASE("sat scan") {
  SatFormula sat{2, {{1, 2}, {-1, 2}}};
  CHECK(brute_sat(sat));  // x2 = true
  SatFormula unsat{1, {{1}, {-1}}};
  CHECK_FALSE(brute_sat(unsat));
  SatFormula empty{3, {}};
  CHECK(brute_sat(empty));
  SatFormula big{21, {}};
  CHECK_THROWS_AS(brute_sat(big), budget_error);
}

TEST_CASE("patience lis is the strict lis") {
  CHECK(lis_patience({}) == 0);
  CHECK(lis_patience({5}) == 1);
  CHECK(lis_patience({2, 2, 2}) == 1);  // strict
  CHECK(lis_patience({1, 2, 3, 4}) == 4);
  CHECK(lis_patience({4, 3, 2, 1}) == 1);
  CHECK(lis_patience({3, 1, 4, 1, 5, 9, 2, 6}) == 4);  // 1,4,5,9
}

TEST_CASE("nested boxes brute force") {
  std::vector<Box> chain = {{{1, 1}}, {{2, 2}}, {{3, 3}}};
  CHECK(brute_nested_boxes(chain, 2) == 3);
  std::vector<Box> antichain = {{{1, 2}}, {{2, 1}}};
  CHECK(brute_nested_boxes(antichain, 2) == 2);
  CHECK(brute_nested_boxes(antichain, 1) == 1);
  // Strict fit on every side: (1,1) does not fit into (1,2).
  std::vector<Box> partial = {{{1, 1}}, {{1, 2}}};
  CHECK(brute_nested_boxes(partial, 1) == 1);
  std::vector<Box> many(30, Box{{1, 1}});
  CHECK_THROWS_AS(brute_nested_boxes(many, 3), budget_error);
}
