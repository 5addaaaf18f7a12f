#include "lwskit/crr.hpp"

#include <algorithm>
#include <cmath>

#include "lwskit/errors.hpp"

namespace lwskit {

int log_star(double x) {
  int c = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++c;
  }
  return c;
}

namespace {

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Advertised coordinate bound l^((3k)^(log* b) * b).
mpz_class advertised_bound(int b, int ell, int k) {
  unsigned long outer = 1;
  for (int i = 0; i < log_star(b); ++i) outer *= static_cast<unsigned long>(3 * k);
  return pow_mpz(static_cast<unsigned long>(ell), outer * static_cast<unsigned long>(b));
}

std::vector<mpz_class> next_primes(const mpz_class& lower, int count) {
  std::vector<mpz_class> out;
  mpz_class p = lower - 1;
  for (int i = 0; i < count; ++i) {
    mpz_class q;
    mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
    out.push_back(q);
    p = q;
  }
  return out;
}

mpz_class crt(const std::vector<mpz_class>& residues, const std::vector<mpz_class>& primes,
              const mpz_class& product) {
  mpz_class acc = 0;
  for (size_t j = 0; j < primes.size(); ++j) {
    mpz_class m = product / primes[j];
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), primes[j].get_mpz_t()) == 0)
      throw schema_error("CRR primes not coprime");
    acc += residues[j] * m % product * inv;
  }
  return acc % product;
}

mpz_class finish_bounds(CrrCodec& c, int k) {
  c.coord_bound = 1;
  for (const auto& p : c.primes) c.coord_bound *= p;
  mpz_class m = c.coord_bound - 1, pw;
  mpz_pow_ui(pw.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  c.ip_bound = mpz_class(c.ell) * pw;
  return c.ip_bound;
}

}  // namespace

CrrCodec crr_build(int b, int ell, int k) {
  if (b < 1 || ell < 1 || k < 2) throw precondition_error("crr_build: need b,l >= 1, k >= 2");
  CrrCodec c;
  c.b = b;
  c.ell = ell;
  c.k = k;
  c.stated_bound = advertised_bound(b, ell, k);
  if (b < ell) {
    c.direct = true;
    // b smallest primes above l, required to stay within the proof's [l+1, l^2].
    c.primes = next_primes(mpz_class(ell + 1), b);
    if (c.primes.back() > mpz_class(ell) * ell)
      throw budget_error("crr_build: not enough primes in [l+1, l^2]");
    finish_bounds(c, k);
    return c;
  }
  c.direct = false;
  // Smallest divisor of b whose codec capacity l^((3k)^(log* t) * t) reaches b;
  // must be a proper divisor so the recursion shrinks.
  for (int t = 1; t < b; ++t) {
    if (b % t != 0) continue;
    if (advertised_bound(t, ell, k) >= b) {
      c.b_micro = t;
      break;
    }
  }
  if (c.b_micro == 0) throw precondition_error("crr_build: no feasible b_micro (l too small?)");
  c.inner = std::make_shared<const CrrCodec>(crr_build(c.b_micro, ell, k));
  int g = b / c.b_micro;
  mpz_class nominal_lo = pow_mpz(static_cast<unsigned long>(b), static_cast<unsigned long>(k));
  nominal_lo *= ell;
  // Correctness requires primes to exceed every achievable inner-codec inner
  // product; when the rounded b_micro pushes that need above the nominal
  // range [b^k*l, b^2k*l^2], the exact bound governs.
  mpz_class need = c.inner->ip_bound + 1;
  mpz_class lower = std::max(nominal_lo, need);
  c.primes = next_primes(lower, g);
  if (lower == nominal_lo) {
    mpz_class nominal_hi = pow_mpz(static_cast<unsigned long>(b), 2ul * k);
    nominal_hi *= mpz_class(ell) * ell;
    if (c.primes.back() > nominal_hi)
      throw budget_error("crr_build: not enough primes in [b^k*l, b^2k*l^2]");
  }
  finish_bounds(c, k);
  return c;
}

std::vector<mpz_class> CrrCodec::encode(const std::vector<int>& x) const {
  if (static_cast<int>(x.size()) != b * ell) throw schema_error("crr_encode: length must be b*l");
  for (int v : x)
    if (v != 0 && v != 1) throw schema_error("crr_encode: entries must be 0/1");
  std::vector<mpz_class> out(ell);
  if (direct) {
    std::vector<mpz_class> res(b);
    for (int i = 0; i < ell; ++i) {
      for (int j = 0; j < b; ++j) res[j] = x[i * b + j];
      out[i] = crt(res, primes, coord_bound);
    }
    return out;
  }
  int g = b / b_micro;
  // Regroup: x^{[j]} = concatenation over blocks i of micro-group j.
  std::vector<std::vector<mpz_class>> S(ell, std::vector<mpz_class>(g));
  std::vector<int> regroup(b_micro * ell);
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < ell; ++i)
      for (int t = 0; t < b_micro; ++t)
        regroup[i * b_micro + t] = x[i * b + j * b_micro + t];
    auto enc = inner->encode(regroup);
    for (int i = 0; i < ell; ++i) S[i][j] = enc[i];
  }
  for (int i = 0; i < ell; ++i) out[i] = crt(S[i], primes, coord_bound);
  return out;
}

bool CrrCodec::v_contains(const mpz_class& c) const {
  if (c < 0 || c > ip_bound) return false;
  if (direct) {
    for (const auto& q : primes)
      if (c % q != 0) return false;
    return true;
  }
  for (const auto& q : primes)
    if (!inner->v_contains(c % q)) return false;
  return true;
}

std::vector<mpz_class> CrrCodec::v_enumerate(size_t budget) const {
  mpz_class reps = ip_bound / coord_bound + 1;
  if (direct) {
    if (reps > static_cast<long>(budget)) throw budget_error("V enumeration over budget");
    std::vector<mpz_class> out;
    for (mpz_class c = 0; c <= ip_bound; c += coord_bound) out.push_back(c);
    return out;
  }
  auto inner_v = inner->v_enumerate(budget);
  size_t g = primes.size();
  mpz_class combos = 1;
  for (size_t j = 0; j < g; ++j) combos *= static_cast<long>(inner_v.size());
  mpz_class total = combos * reps;
  if (total > static_cast<long>(budget)) throw budget_error("V enumeration over budget");
  std::vector<mpz_class> out;
  std::vector<size_t> pick(g, 0);
  std::vector<mpz_class> res(g);
  while (true) {
    for (size_t j = 0; j < g; ++j) res[j] = inner_v[pick[j]] % primes[j];
    mpz_class c0 = crt(res, primes, coord_bound);
    for (mpz_class c = c0; c <= ip_bound; c += coord_bound)
      if (v_contains(c)) out.push_back(c);
    size_t j = 0;
    for (; j < g; ++j) {
      if (++pick[j] < inner_v.size()) break;
      pick[j] = 0;
    }
    if (j == g) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lwskit
