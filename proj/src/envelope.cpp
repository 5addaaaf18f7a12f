#include "lwskit/envelope.hpp"

#include <algorithm>

#include "lwskit/errors.hpp"

namespace lwskit {

namespace {

using i128 = __int128;

inline i128 eval(const Line& l, int64_t x) {
  return static_cast<i128>(l.slope) * x + static_cast<i128>(l.intercept.value());
}

ExtInt to_ext(i128 v) {
  if (v >= static_cast<i128>(ExtInt::raw_inf()) ||
      v < -static_cast<i128>(ExtInt::raw_inf()))
    throw overflow_error("envelope value out of 64-bit range");
  return ExtInt(static_cast<int64_t>(v));
}

}  // namespace

LineEnvelope::LineEnvelope(std::vector<int64_t> query_points) : xs_(std::move(query_points)) {
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  if (xs_.empty()) return;
  node_line_.assign(4 * xs_.size(), -1);
}

void LineEnvelope::insert_rec(int node, int lo, int hi, int li) {
  // Keep at each node the line that wins at the segment midpoint; push the
  // loser into the half where it can still win. Exact integer comparisons.
  while (true) {
    if (node_line_[node] < 0) {
      node_line_[node] = li;
      return;
    }
    int mid = (lo + hi) / 2;
    if (eval(lines_[li], xs_[mid]) < eval(lines_[node_line_[node]], xs_[mid]))
      std::swap(node_line_[node], li);  // li is now the loser at mid
    if (lo == hi) return;
    const Line& winner = lines_[node_line_[node]];
    const Line& loser = lines_[li];
    if (eval(loser, xs_[lo]) < eval(winner, xs_[lo])) {
      node = 2 * node + 1;
      hi = mid;
    } else if (eval(loser, xs_[hi]) < eval(winner, xs_[hi])) {
      node = 2 * node + 2;
      lo = mid + 1;
    } else {
      return;
    }
  }
}

void LineEnvelope::insert(Line l) {
  if (l.intercept.is_inf() || xs_.empty()) return;
  empty_ = false;
  lines_.push_back(l);
  insert_rec(0, 0, static_cast<int>(xs_.size()) - 1, static_cast<int>(lines_.size()) - 1);
}

ExtInt LineEnvelope::query(int64_t x) const {
  if (empty_) return ExtInt::inf();
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end() || *it != x) throw schema_error("envelope query outside prepared domain");
  int pos = static_cast<int>(it - xs_.begin());
  int lo = 0, hi = static_cast<int>(xs_.size()) - 1, node = 0;
  bool have = false;
  i128 best = 0;
  while (true) {
    int cur = node_line_[node];
    if (cur >= 0) {
      i128 v = eval(lines_[cur], x);
      if (!have || v < best) best = v, have = true;
    }
    if (lo == hi) break;
    int mid = (lo + hi) / 2;
    if (pos <= mid) {
      node = 2 * node + 1;
      hi = mid;
    } else {
      node = 2 * node + 2;
      lo = mid + 1;
    }
  }
  return have ? to_ext(best) : ExtInt::inf();
}

std::vector<ExtInt> envelope_batch_min(const std::vector<Line>& lines,
                                       const std::vector<int64_t>& queries) {
  LineEnvelope env(queries);
  for (const auto& l : lines) env.insert(l);
  std::vector<ExtInt> out;
  out.reserve(queries.size());
  for (int64_t q : queries) out.push_back(env.query(q));
  return out;
}

}  // namespace lwskit
