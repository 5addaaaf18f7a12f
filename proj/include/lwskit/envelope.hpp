#pragma once

#include <cstdint>
#include <vector>

#include "lwskit/ext_int.hpp"

namespace lwskit {

struct Line {
  int64_t slope = 0;
  ExtInt intercept;  // inf lines are ignored
};

// Exact integer lower envelope over a fixed set of query points:
// query(x) = min over inserted lines of slope*x + intercept.
// Li Chao tree on the coordinate-compressed query domain; evaluation in
// 128-bit, result range-checked back to ExtInt. No floating point anywhere.
class LineEnvelope {
 public:
  explicit LineEnvelope(std::vector<int64_t> query_points);

  void insert(Line l);
  ExtInt query(int64_t x) const;  // x must be one of the query points
  bool empty() const { return empty_; }

 private:
  std::vector<int64_t> xs_;     // sorted unique query points
  std::vector<int> node_line_;  // per tree node, index into lines_ or -1
  std::vector<Line> lines_;
  bool empty_ = true;

  void insert_rec(int node, int lo, int hi, int li);
};

// output[q] = exact min over lines at queries[q]; all-inf when no finite line.
std::vector<ExtInt> envelope_batch_min(const std::vector<Line>& lines,
                                       const std::vector<int64_t>& queries);

}  // namespace lwskit
