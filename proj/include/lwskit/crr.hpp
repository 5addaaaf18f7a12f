#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace lwskit {

// Chinese-remainder codec psi_{b,l}: {0,1}^{b*l} -> Z^l with acceptance set
// V_{b,l} such that <psi(x_1),...,psi(x_k)> lands in V iff the source k-wise
// inner product is 0. Direct mode when b < l (one prime per block position);
// recursive mode regroups micro-blocks through an inner codec.
//
// V is held implicitly: contains() tests membership exactly; enumerate()
// materializes it under a value budget (default 10^6) and errors beyond.
struct CrrCodec {
  int b = 0, ell = 0, k = 0;
  bool direct = true;
  int b_micro = 0;                         // recursive mode only
  std::vector<mpz_class> primes;           // b primes (direct) / b/b_micro (recursive)
  std::shared_ptr<const CrrCodec> inner;   // recursive mode only
  mpz_class coord_bound;   // product of primes; coordinates lie in [0, coord_bound)
  mpz_class stated_bound;  // l^((3k)^(log* b) * b), the advertised coordinate bound
  mpz_class ip_bound;      // l * (coord_bound - 1)^k >= any achievable inner product

  std::vector<mpz_class> encode(const std::vector<int>& x) const;  // |x| = b*l
  bool v_contains(const mpz_class& c) const;
  std::vector<mpz_class> v_enumerate(size_t budget = 1'000'000) const;
};

CrrCodec crr_build(int b, int ell, int k);

// log* base 2 with log*(x) = 0 for x <= 1.
int log_star(double x);

}  // namespace lwskit
