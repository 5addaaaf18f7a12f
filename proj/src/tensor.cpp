#include "lwskit/tensor.hpp"

#include <random>

#include "lwskit/errors.hpp"

namespace lwskit {

namespace {

int64_t checked_mul_i64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("factor product overflow");
  return r;
}

size_t checked_pow_size(int n, int e, size_t budget) {
  size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > budget / static_cast<size_t>(n) + 1) throw budget_error("tensor too large");
    r *= static_cast<size_t>(n);
  }
  return r;
}

void check_idx(std::span<const int> idx, int order, int n) {
  if (static_cast<int>(idx.size()) != order) throw schema_error("index arity mismatch");
  for (int v : idx)
    if (v < 1 || v > n) throw schema_error("index out of range");
}

}  // namespace

CostTensor CostTensor::dense(int k, int n, std::vector<ExtInt> data) {
  CostTensor t;
  t.k_ = k;
  t.n_ = n;
  t.kind_ = Kind::Dense;
  size_t want = checked_pow_size(n, k + 1, size_t(1) << 40);
  if (data.size() != want) throw schema_error("dense data size mismatch");
  t.data_ = std::move(data);
  return t;
}

CostTensor CostTensor::dense_zero(int k, int n) {
  return dense(k, n, std::vector<ExtInt>(checked_pow_size(n, k + 1, size_t(1) << 40), ExtInt(0)));
}

CostTensor CostTensor::cp(int k, int n, int d, std::vector<std::vector<int64_t>> factors) {
  CostTensor t;
  t.k_ = k;
  t.n_ = n;
  t.kind_ = Kind::CpRank;
  t.d_ = d;
  if (static_cast<int>(factors.size()) != k + 1) throw schema_error("cp factor list count != k+1");
  for (auto& f : factors)
    if (f.size() != static_cast<size_t>(n) * d) throw schema_error("cp factor size mismatch");
  t.factors_ = std::move(factors);
  return t;
}

CostTensor CostTensor::slice_rank(int k, int n, std::vector<SliceTerm> terms) {
  CostTensor t;
  t.k_ = k;
  t.n_ = n;
  t.kind_ = Kind::SliceRank;
  if (k + 1 > 16) throw budget_error("slice-rank tensors supported up to order 16");
  for (auto& tm : terms) {
    if (tm.axis < 1 || tm.axis > k + 1) throw schema_error("slice term axis out of range");
    if (static_cast<int>(tm.a.size()) != n) throw schema_error("slice term vector size mismatch");
    if (!tm.b || tm.b->k() != k - 1 || tm.b->n() != n)
      throw schema_error("slice term sub-tensor shape mismatch");
    if (tm.b->kind() == Kind::SliceRank)
      throw schema_error("slice term sub-tensor must be Dense or CpRank");
  }
  t.terms_ = std::move(terms);
  return t;
}

size_t CostTensor::dense_offset(std::span<const int> idx) const {
  size_t off = 0;
  for (int a = 0; a < order(); ++a) off = off * n_ + static_cast<size_t>(idx[a] - 1);
  return off;
}

ExtInt CostTensor::entry(std::span<const int> idx) const {
  check_idx(idx, order(), n_);
  switch (kind_) {
    case Kind::Dense:
      return data_[dense_offset(idx)];
    case Kind::CpRank: {
      ExtInt sum(0);
      for (int t = 0; t < d_; ++t) {
        ExtInt prod(1);
        for (int a = 0; a < order(); ++a)
          prod = prod * ExtInt(factors_[a][static_cast<size_t>(idx[a] - 1) * d_ + t]);
        sum = sum + prod;
      }
      return sum;
    }
    case Kind::SliceRank: {
      ExtInt sum(0);
      int rest[16];  // order is small; avoids a heap allocation in hot loops
      for (const auto& tm : terms_) {
        int r = 0;
        for (int a = 0; a < order(); ++a)
          if (a != tm.axis - 1) rest[r++] = idx[a];
        sum = sum + ExtInt(tm.a[idx[tm.axis - 1] - 1]) *
                        tm.b->entry(std::span<const int>(rest, static_cast<size_t>(r)));
      }
      return sum;
    }
  }
  throw schema_error("bad tensor kind");
}

CostTensor CostTensor::materialize(size_t budget_entries) const {
  size_t total = checked_pow_size(n_, order(), budget_entries);
  if (total > budget_entries) throw budget_error("materialize over budget");
  std::vector<ExtInt> out(total);
  std::vector<int> idx(order(), 1);
  for (size_t off = 0; off < total; ++off) {
    out[off] = entry(idx);
    for (int a = order() - 1; a >= 0; --a) {
      if (idx[a] < n_) {
        ++idx[a];
        break;
      }
      idx[a] = 1;
    }
  }
  return dense(k_, n_, std::move(out));
}

CostTensor CostTensor::slice(int axis, int v, size_t budget_entries) const {
  if (axis < 1 || axis > order() || v < 1 || v > n_) throw schema_error("slice out of range");
  switch (kind_) {
    case Kind::Dense: {
      size_t total = checked_pow_size(n_, order() - 1, budget_entries);
      std::vector<ExtInt> out(total);
      std::vector<int> rest(order() - 1, 1), full(order());
      for (size_t off = 0; off < total; ++off) {
        int r = 0;
        for (int a = 0; a < order(); ++a) full[a] = (a == axis - 1) ? v : rest[r++];
        out[off] = data_[dense_offset(full)];
        for (int a = order() - 2; a >= 0; --a) {
          if (rest[a] < n_) {
            ++rest[a];
            break;
          }
          rest[a] = 1;
        }
      }
      return dense(k_ - 1, n_, std::move(out));
    }
    case Kind::CpRank: {
      // Fold the fixed axis's row into the first remaining axis, column-wise.
      std::vector<std::vector<int64_t>> fs;
      fs.reserve(order() - 1);
      for (int a = 0; a < order(); ++a)
        if (a != axis - 1) fs.push_back(factors_[a]);
      for (int t = 0; t < d_; ++t) {
        int64_t c = factors_[axis - 1][static_cast<size_t>(v - 1) * d_ + t];
        for (int i = 0; i < n_; ++i) {
          auto& cell = fs[0][static_cast<size_t>(i) * d_ + t];
          cell = checked_mul_i64(cell, c);
        }
      }
      return cp(k_ - 1, n_, d_, std::move(fs));
    }
    case Kind::SliceRank:
      return materialize(budget_entries).slice(axis, v, budget_entries);
  }
  throw schema_error("bad tensor kind");
}

bool check_identity(const CostTensor& t,
                    const std::function<ExtInt(std::span<const int>)>& f,
                    size_t samples, uint64_t seed) {
  int ord = t.order(), n = t.n();
  double total = 1;
  for (int a = 0; a < ord; ++a) total *= n;
  if (total <= static_cast<double>(samples)) {
    std::vector<int> idx(ord, 1);
    size_t cnt = static_cast<size_t>(total);
    for (size_t c = 0; c < cnt; ++c) {
      if (t.entry(idx) != f(idx)) return false;
      for (int a = ord - 1; a >= 0; --a) {
        if (idx[a] < n) {
          ++idx[a];
          break;
        }
        idx[a] = 1;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> idx(ord);
  for (size_t s = 0; s < samples; ++s) {
    for (int a = 0; a < ord; ++a) idx[a] = pick(rng);
    if (t.entry(idx) != f(idx)) return false;
  }
  return true;
}

CostTensor cp_to_slicerank(const CostTensor& t, int axis) {
  if (t.kind() != CostTensor::Kind::CpRank) throw schema_error("cp_to_slicerank needs CpRank");
  int ord = t.order(), n = t.n(), d = t.cp_rank();
  std::vector<SliceTerm> terms;
  for (int col = 0; col < d; ++col) {
    SliceTerm tm;
    tm.axis = axis;
    tm.a.resize(n);
    for (int i = 1; i <= n; ++i) tm.a[i - 1] = t.factor(axis, i, col);
    // Rank-1 sub-tensor from this column of the remaining axes.
    std::vector<std::vector<int64_t>> fs;
    for (int a = 1; a <= ord; ++a) {
      if (a == axis) continue;
      std::vector<int64_t> f(n);
      for (int i = 1; i <= n; ++i) f[i - 1] = t.factor(a, i, col);
      fs.push_back(std::move(f));
    }
    tm.b = std::make_shared<CostTensor>(CostTensor::cp(t.k() - 1, n, 1, std::move(fs)));
    terms.push_back(std::move(tm));
  }
  return CostTensor::slice_rank(t.k(), n, std::move(terms));
}

CostMatrix CostMatrix::dense(int n, std::vector<ExtInt> data) {
  CostMatrix m;
  m.n_ = n;
  m.kind_ = Kind::Dense;
  if (data.size() != static_cast<size_t>(n) * n) throw schema_error("dense matrix size mismatch");
  m.data_ = std::move(data);
  return m;
}

CostMatrix CostMatrix::dense_inf(int n) {
  return dense(n, std::vector<ExtInt>(static_cast<size_t>(n) * n, ExtInt::inf()));
}

CostMatrix CostMatrix::cp(int n, int d, std::vector<int64_t> A, std::vector<int64_t> B) {
  CostMatrix m;
  m.n_ = n;
  m.kind_ = Kind::CpRank;
  m.d_ = d;
  if (A.size() != static_cast<size_t>(n) * d || B.size() != static_cast<size_t>(n) * d)
    throw schema_error("cp matrix factor size mismatch");
  m.A_ = std::move(A);
  m.B_ = std::move(B);
  return m;
}

ExtInt CostMatrix::entry(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw schema_error("matrix index out of range");
  if (kind_ == Kind::Dense) return data_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
  ExtInt sum(0);
  for (int t = 0; t < d_; ++t) sum = sum + ExtInt(a_factor(i, t)) * ExtInt(b_factor(j, t));
  return sum;
}

bool check_identity(const CostMatrix& m, const std::function<ExtInt(int, int)>& f,
                    size_t samples, uint64_t seed) {
  size_t total = static_cast<size_t>(m.n()) * m.n();
  if (total <= samples) {
    for (int i = 1; i <= m.n(); ++i)
      for (int j = 1; j <= m.n(); ++j)
        if (m.entry(i, j) != f(i, j)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, m.n());
  for (size_t s = 0; s < samples; ++s) {
    int i = pick(rng), j = pick(rng);
    if (m.entry(i, j) != f(i, j)) return false;
  }
  return true;
}

namespace {
void band_rec(int k, int n, int a, int b, int pos, int sum_so_far, std::vector<int>& idx,
              const std::function<void(std::span<const int>)>& fn) {
  if (pos == k) {
    if (sum_so_far >= a && sum_so_far < b) fn(idx);
    return;
  }
  int rest = k - pos - 1;
  // Remaining coordinates contribute between rest and rest*n; prune.
  int lo = std::max(1, a - sum_so_far - rest * n);
  int hi = std::min(n, b - 1 - sum_so_far - rest);
  for (int v = lo; v <= hi; ++v) {
    idx[pos] = v;
    band_rec(k, n, a, b, pos + 1, sum_so_far + v, idx, fn);
  }
}
}  // namespace

void for_each_in_band(int k, int n, int a, int b,
                      const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> idx(k);
  for (int s = std::max(a, k); s < std::min(b, k * n + 1); ++s)
    band_rec(k, n, s, s + 1, 0, 0, idx, fn);
}

}  // namespace lwskit
