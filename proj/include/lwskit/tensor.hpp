#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lwskit/ext_int.hpp"

namespace lwskit {

class CostTensor;

// One slice-rank term: a vector factor bound to `axis` times an order-k
// sub-tensor over the remaining axes (kept in original order).
// entry(i_1..i_{k+1}) = a[i_axis] * b->entry(remaining indices).
struct SliceTerm {
  int axis = 1;                  // 1-based, in [1, k+1]
  std::vector<int64_t> a;        // length n
  std::shared_ptr<CostTensor> b; // order-k tensor, Dense or CpRank
};

// Order-(k+1) cost tensor with side length n per axis, in one of three
// structured representations. Indices are 1-based at the API surface.
// Immutable after construction; safe to share across threads.
class CostTensor {
 public:
  enum class Kind { Dense, CpRank, SliceRank };

  static CostTensor dense(int k, int n, std::vector<ExtInt> data);
  static CostTensor dense_zero(int k, int n);
  // factors[axis] has n*d entries, row-major: factor(axis, i, t) = factors[axis][(i-1)*d + t].
  static CostTensor cp(int k, int n, int d, std::vector<std::vector<int64_t>> factors);
  static CostTensor slice_rank(int k, int n, std::vector<SliceTerm> terms);

  int k() const { return k_; }
  int n() const { return n_; }
  int order() const { return k_ + 1; }
  Kind kind() const { return kind_; }
  int cp_rank() const { return d_; }
  const std::vector<SliceTerm>& terms() const { return terms_; }
  const std::vector<ExtInt>& dense_data() const { return data_; }
  const std::vector<std::vector<int64_t>>& cp_factors() const { return factors_; }
  int64_t factor(int axis, int i, int t) const {
    return factors_[axis - 1][static_cast<size_t>(i - 1) * d_ + t];
  }

  ExtInt entry(std::span<const int> idx) const;
  ExtInt entry(std::initializer_list<int> idx) const {
    return entry(std::span<const int>(idx.begin(), idx.size()));
  }

  // Dense copy; errors when n^{k+1} exceeds the entry budget.
  CostTensor materialize(size_t budget_entries = size_t(1) << 24) const;

  // Fix `axis` (1-based) at value v, producing the order-k tensor over the
  // remaining axes in original order. SliceRank inputs are materialized first.
  CostTensor slice(int axis, int v, size_t budget_entries = size_t(1) << 24) const;

  size_t dense_offset(std::span<const int> idx) const;

 private:
  int k_ = 0, n_ = 0;
  Kind kind_ = Kind::Dense;
  std::vector<ExtInt> data_;
  int d_ = 0;
  std::vector<std::vector<int64_t>> factors_;
  std::vector<SliceTerm> terms_;
};

// True iff t.entry == f on sampled index tuples (exhaustive when the tensor
// has at most `samples` entries, uniform random tuples otherwise).
bool check_identity(const CostTensor& t,
                    const std::function<ExtInt(std::span<const int>)>& f,
                    size_t samples, uint64_t seed = 1);

// Rank-d CP tensor re-expressed as d slice terms bound to `axis`
// (rank d => slice rank <= d). Entries are identical everywhere.
CostTensor cp_to_slicerank(const CostTensor& t, int axis);

// Order-2 cost matrix, 1-based indices in [1,n].
class CostMatrix {
 public:
  enum class Kind { Dense, CpRank };

  static CostMatrix dense(int n, std::vector<ExtInt> data);  // row-major n*n
  static CostMatrix dense_inf(int n);
  static CostMatrix cp(int n, int d, std::vector<int64_t> A, std::vector<int64_t> B);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  int cp_rank() const { return d_; }
  const std::vector<ExtInt>& dense_data() const { return data_; }
  int64_t a_factor(int i, int t) const { return A_[static_cast<size_t>(i - 1) * d_ + t]; }
  int64_t b_factor(int j, int t) const { return B_[static_cast<size_t>(j - 1) * d_ + t]; }

  // entry(i,j): row i of A with row j of B for CpRank.
  ExtInt entry(int i, int j) const;

 private:
  int n_ = 0;
  Kind kind_ = Kind::Dense;
  std::vector<ExtInt> data_;
  int d_ = 0;
  std::vector<int64_t> A_, B_;
};

bool check_identity(const CostMatrix& m,
                    const std::function<ExtInt(int, int)>& f,
                    size_t samples, uint64_t seed = 1);

// Enumerate tuples idx in [1,n]^k with coordinate sum in [a,b), in
// non-decreasing sum order. fn receives a span valid only during the call.
void for_each_in_band(int k, int n, int a, int b,
                      const std::function<void(std::span<const int>)>& fn);

}  // namespace lwskit
