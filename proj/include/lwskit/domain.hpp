#pragma once

#include <cstdint>
#include <vector>

#include "lwskit/ext_int.hpp"

namespace lwskit {

// k sets of n integer vectors of length d. Entries are finite int64
// ({0,1} for the OV flavor); no in-scope construction produces infinite
// entries, so the representation stays plain.
struct MinIpInstance {
  int k = 0, n = 0, d = 0;
  std::vector<std::vector<std::vector<int64_t>>> sets;  // [k][n][d]
};

// CNF formula; literal +v / -v references variable v in [1,n].
struct SatFormula {
  int n = 0;
  std::vector<std::vector<int>> clauses;
};

// Complete weighted graph; diagonal treated as +infinity.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<int64_t> upper)  // upper-triangle row-major, n*(n-1)/2
      : n_(n), w_(std::move(upper)) {}
  int n() const { return n_; }
  ExtInt weight(int a, int b) const {  // 1-based vertices
    if (a == b) return ExtInt::inf();
    if (a > b) std::swap(a, b);
    size_t idx = static_cast<size_t>(a - 1) * n_ - static_cast<size_t>(a) * (a - 1) / 2 + (b - a - 1);
    return ExtInt(w_[idx]);
  }

 private:
  int n_;
  std::vector<int64_t> w_;
};

// Axis-aligned box; B fits into C iff every side is strictly smaller.
struct Box {
  std::vector<int64_t> sides;
  int64_t volume() const {
    int64_t v = 1;
    for (auto s : sides) v *= s;
    return v;
  }
  bool fits_into(const Box& outer) const {
    for (size_t i = 0; i < sides.size(); ++i)
      if (sides[i] >= outer.sides[i]) return false;
    return true;
  }
};

}  // namespace lwskit
