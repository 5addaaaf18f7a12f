#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lwskit/crr.hpp"
#include "lwskit/errors.hpp"

using namespace lwskit;

namespace {

// k-wise inner product of 0/1 vectors.
long source_ip(const std::vector<std::vector<int>>& xs) {
  long s = 0;
  for (size_t c = 0; c < xs[0].size(); ++c) {
    long p = 1;
    for (const auto& x : xs) p *= x[c];
    s += p;
  }
  return s;
}

// k-wise inner product of the encoded vectors, exact.
mpz_class encoded_ip(const CrrCodec& codec, const std::vector<std::vector<int>>& xs) {
  std::vector<std::vector<mpz_class>> enc;
  for (const auto& x : xs) enc.push_back(codec.encode(x));
  mpz_class s = 0;
  for (int i = 0; i < codec.ell; ++i) {
    mpz_class p = 1;
    for (const auto& e : enc) p *= e[i];
    s += p;
  }
  return s;
}

void check_faithful(int b, int ell, int k, int trials, uint64_t seed) {
  CrrCodec codec = crr_build(b, ell, k);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  int zeros_seen = 0, nonzeros_seen = 0;
  auto one_case = [&](const std::vector<std::vector<int>>& xs) {
    bool orth = source_ip(xs) == 0;
    mpz_class ip = encoded_ip(codec, xs);
    CHECK(codec.v_contains(ip) == orth);
    CHECK(ip <= codec.ip_bound);
    (orth ? zeros_seen : nonzeros_seen)++;
  };
  // Extremes first, then random draws.
  one_case(std::vector<std::vector<int>>(k, std::vector<int>(b * ell, 0)));
  one_case(std::vector<std::vector<int>>(k, std::vector<int>(b * ell, 1)));
  for (int t = 0; t < trials; ++t) {
    std::vector<std::vector<int>> xs(k, std::vector<int>(b * ell));
    for (auto& x : xs)
      for (auto& v : x) v = bit(rng) ? 1 : 0;
    one_case(xs);
  }
  CHECK(zeros_seen > 0);
  CHECK(nonzeros_seen > 0);
}

}  // namespace

TEST_CASE("iterated log") {
  CHECK(log_star(0.5) == 0);
  CHECK(log_star(1) == 0);
  CHECK(log_star(2) == 1);
  CHECK(log_star(4) == 2);
  CHECK(log_star(16) == 3);
  CHECK(log_star(65536) == 4);
}

TEST_CASE("direct codec picks primes just above l") {
  CrrCodec c = crr_build(2, 3, 2);
  CHECK(c.direct);
  REQUIRE(c.primes.size() == 2);
  CHECK(c.primes[0] == 5);
  CHECK(c.primes[1] == 7);
  CHECK(c.coord_bound == 35);
  for (const auto& p : c.primes) {
    CHECK(p > c.ell);
    CHECK(p <= mpz_class(c.ell) * c.ell);
  }
}

TEST_CASE("recursive codec structure") {
  CrrCodec c = crr_build(2, 2, 2);
  CHECK_FALSE(c.direct);
  CHECK(c.b_micro == 1);
  REQUIRE(c.inner);
  CHECK(c.inner->direct);
  REQUIRE(c.primes.size() == 2);
  // Every outer prime must exceed any inner-codec inner product.
  for (const auto& p : c.primes) CHECK(p > c.inner->ip_bound);
  CHECK(c.coord_bound <= c.stated_bound);

  CrrCodec deep = crr_build(8, 2, 3);
  CHECK_FALSE(deep.direct);
  REQUIRE(deep.inner);
  CHECK_FALSE(deep.inner->direct);  // two recursion levels
  CHECK(deep.coord_bound <= deep.stated_bound);
}

TEST_CASE("encoding is faithful to k-wise orthogonality") {
  check_faithful(1, 2, 2, 60, 1);  // direct, single prime
  check_faithful(2, 3, 2, 60, 2);  // direct
  check_faithful(3, 4, 3, 60, 3);  // direct, k = 3
  check_faithful(2, 2, 2, 60, 4);  // recursive depth 1
  check_faithful(4, 2, 2, 60, 5);  // recursive depth 2
  check_faithful(8, 2, 3, 40, 6);  // recursive depth 2, k = 3
}

TEST_CASE("encode input validation") {
  CrrCodec c = crr_build(1, 2, 2);
  CHECK_THROWS_AS(c.encode({1, 0, 1}), schema_error);     // wrong length
  CHECK_THROWS_AS(c.encode({1, 2}), schema_error);        // non-binary entry
  CHECK_THROWS_AS(crr_build(0, 2, 2), precondition_error);
  CHECK_THROWS_AS(crr_build(2, 2, 1), precondition_error);
}

TEST_CASE("acceptance set enumeration") {
  CrrCodec c = crr_build(1, 2, 2);
  auto v = c.v_enumerate();
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 0);
  CHECK(v[1] == 3);
  CHECK(v[2] == 6);

  CrrCodec c2 = crr_build(2, 3, 2);
  auto v2 = c2.v_enumerate();
  // Exactly the multiples of 35 in [0, ip_bound], and nothing else.
  std::vector<mpz_class> want;
  for (mpz_class x = 0; x <= c2.ip_bound; ++x)
    if (c2.v_contains(x)) want.push_back(x);
  CHECK(v2 == want);
  for (const auto& x : v2) CHECK(x % c2.coord_bound == 0);

  CrrCodec big = crr_build(4, 2, 2);
  CHECK_THROWS_AS(big.v_enumerate(1000), budget_error);
}
