#pragma once

#include <span>
#include <vector>

#include "lwskit/tensor.hpp"

namespace lwskit {

// Classic LWS on [0,n]: T[0]=0, T[j] = min_{0<=i<j} T[i] + w[i,j].
// The cost matrix is 1-based with side n+1; w[i,j] lives at entry(i+1, j+1).
struct LwsInstance {
  int n = 0;
  CostMatrix w;  // side n+1
};

// kD LWS on [1,n]^k with per-axis order-(k+1) tensors:
// T[1..1]=0, T[j1..jk] = min_l min_{1<=i<j_l} T[..i..] + w_l[j1..jk, i].
// (the predecessor coordinate is the tensor's last axis.)
struct KdLwsInstance {
  int k = 0;
  int n = 0;
  std::vector<CostTensor> w;  // k tensors, each order k+1, side n
};

// Interval (Catalan) recurrence: T[i,j]=0 if j-i<=1, else
// T[i,j] = min_{i<kk<j} T[i,kk] + T[kk,j] + w[i,j,kk]; answer T[1,n].
struct PtInstance {
  int n = 0;
  CostTensor w;  // order 3, side n
};

// D_{a,b}: tuples in [1,n]^k with coordinate sum in [a,b) (half-open).
struct Band {
  int k = 0, n = 0, a = 0, b = 0;
  bool contains(std::span<const int> idx) const {
    int s = 0;
    for (int v : idx) s += v;
    return s >= a && s < b;
  }
};

// Flat k-dimensional table over [1,n]^k with a written-flag per cell.
class DpTable {
 public:
  DpTable() = default;
  DpTable(int k, int n)
      : k_(k), n_(n), v_(pow_size(k, n), ExtInt::inf()), set_(pow_size(k, n), 0) {}

  int k() const { return k_; }
  int n() const { return n_; }

  size_t ofs(std::span<const int> idx) const {
    size_t off = 0;
    for (int a = 0; a < k_; ++a) off = off * n_ + static_cast<size_t>(idx[a] - 1);
    return off;
  }
  // Write-once set (naive solvers).
  void set(std::span<const int> idx, ExtInt val) {
    size_t o = ofs(idx);
    if (set_[o]) throw schema_error("DpTable cell written twice");
    set_[o] = 1;
    v_[o] = val;
  }
  // Relaxation update (divide-and-conquer merge).
  void update_min(std::span<const int> idx, ExtInt val) {
    size_t o = ofs(idx);
    set_[o] = 1;
    v_[o] = ExtInt::min(v_[o], val);
  }
  ExtInt at(std::span<const int> idx) const {
    size_t o = ofs(idx);
    if (!set_[o]) throw schema_error("DpTable cell read before write");
    return v_[o];
  }
  bool is_set(std::span<const int> idx) const { return set_[ofs(idx)] != 0; }
  ExtInt at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  // Raw access for hot loops (k=2 fast paths).
  ExtInt* raw() { return v_.data(); }
  const ExtInt* raw() const { return v_.data(); }
  uint8_t* raw_set() { return set_.data(); }

 private:
  static size_t pow_size(int k, int n) {
    size_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<size_t>(n);
    return r;
  }
  int k_ = 0, n_ = 0;
  std::vector<ExtInt> v_;
  std::vector<uint8_t> set_;
};

// Static kD LWS: T known on D_{a,a+N}; compute T' on D_{a+N,a+2N} where
// T'[j] = min_l min_{a-J_l <= i < a+N-J_l} T[..i..] + w_l[j, i]
// (J_l = sum of j's coordinates except j_l; window clamped to [1,n]).
struct StaticKdInstance {
  KdLwsInstance base;
  int a = 0;
  int N = 0;
  DpTable given;  // values on D_{a,a+N}
};

}  // namespace lwskit
