#include "lwskit/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "lwskit/errors.hpp"

namespace lwskit {

namespace {

using i128 = __int128;

int64_t to_i64(i128 v) {
  if (v >= static_cast<i128>(ExtInt::raw_inf()) || v < -static_cast<i128>(ExtInt::raw_inf()))
    throw overflow_error("oracle value out of 64-bit range");
  return static_cast<int64_t>(v);
}

void tuple_scan(const MinIpInstance& inst, int depth, std::vector<int>& pick,
                const std::function<void(const std::vector<int>&)>& fn) {
  if (depth == inst.k) {
    fn(pick);
    return;
  }
  for (int i = 0; i < inst.n; ++i) {
    pick[depth] = i;
    tuple_scan(inst, depth + 1, pick, fn);
  }
}

i128 tuple_ip(const MinIpInstance& inst, const std::vector<int>& pick) {
  i128 s = 0;
  for (int c = 0; c < inst.d; ++c) {
    i128 p = 1;
    for (int t = 0; t < inst.k; ++t) p *= inst.sets[t][pick[t]][c];
    s += p;
  }
  return s;
}

void check_ip_budget(const MinIpInstance& inst, size_t budget) {
  double work = inst.d;
  for (int t = 0; t < inst.k; ++t) work *= inst.n;
  if (work > static_cast<double>(budget)) throw budget_error("kMin-IP scan over budget");
}

}  // namespace

ExtInt brute_kminip(const MinIpInstance& inst, size_t budget) {
  check_ip_budget(inst, budget);
  bool have = false;
  i128 best = 0;
  std::vector<int> pick(inst.k);
  tuple_scan(inst, 0, pick, [&](const std::vector<int>& p) {
    i128 v = tuple_ip(inst, p);
    if (!have || v < best) best = v, have = true;
  });
  if (!have) return ExtInt::inf();
  return ExtInt(to_i64(best));
}

bool brute_kov(const MinIpInstance& inst, size_t budget) {
  check_ip_budget(inst, budget);
  bool found = false;
  std::vector<int> pick(inst.k);
  tuple_scan(inst, 0, pick, [&](const std::vector<int>& p) {
    if (tuple_ip(inst, p) == 0) found = true;
  });
  return found;
}

namespace {

// All triangulation weights of the polygon interval [i,j] (nodes i..j),
// as an explicit list; exponential on purpose, independent of the DP.
std::vector<ExtInt> enumerate_triangulations(const PtInstance& inst, int i, int j,
                                             size_t budget, size_t& used) {
  if (j - i <= 1) return {ExtInt(0)};
  std::vector<ExtInt> out;
  std::vector<int> widx(3);
  for (int kk = i + 1; kk < j; ++kk) {
    auto left = enumerate_triangulations(inst, i, kk, budget, used);
    auto right = enumerate_triangulations(inst, kk, j, budget, used);
    widx[0] = i;
    widx[1] = j;
    widx[2] = kk;
    ExtInt w = inst.w.entry(widx);
    used += left.size() * right.size();
    if (used > budget) throw budget_error("triangulation enumeration over budget");
    for (ExtInt a : left)
      for (ExtInt b : right) out.push_back(a + b + w);
  }
  return out;
}

}  // namespace

ExtInt brute_triangulations(const PtInstance& inst, size_t budget) {
  if (inst.n < 2) throw precondition_error("need n >= 2");
  if (inst.n > 16) throw budget_error("triangulation enumeration limited to n <= 16");
  size_t used = 0;
  auto all = enumerate_triangulations(inst, 1, inst.n, budget, used);
  ExtInt best = ExtInt::inf();
  for (ExtInt v : all) best = ExtInt::min(best, v);
  return best;
}

ExtInt brute_negative_triangle(const WeightedGraph& g) {
  int n = g.n();
  ExtInt best = ExtInt::inf();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        best = ExtInt::min(best, g.weight(a, b) + g.weight(b, c) + g.weight(a, c));
  return best;
}

bool brute_sat(const SatFormula& f) {
  if (f.n > 20) throw budget_error("SAT scan limited to n <= 20");
  for (uint64_t mask = 0; mask < (uint64_t(1) << f.n); ++mask) {
    bool ok = true;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) {
        int v = std::abs(lit);
        bool val = (mask >> (v - 1)) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int lis_patience(const std::vector<int64_t>& xs) {
  std::vector<int64_t> tails;
  for (int64_t x : xs) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

int brute_nested_boxes(const std::vector<Box>& boxes, int piles, size_t budget) {
  int n = static_cast<int>(boxes.size());
  double total = std::pow(piles + 1, n);
  if (total > static_cast<double>(budget)) throw budget_error("box assignment scan over budget");
  // Volume order is a topological order for "fits into".
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return boxes[a].volume() < boxes[b].volume(); });
  int best = 0;
  std::vector<int> assign(n);  // 0 = unused, 1..piles = pile id
  uint64_t combos = static_cast<uint64_t>(total);
  for (uint64_t code = 0; code < combos; ++code) {
    uint64_t c = code;
    int used = 0;
    for (int i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(c % (piles + 1));
      c /= (piles + 1);
      if (assign[i] > 0) ++used;
    }
    if (used <= best) continue;
    bool ok = true;
    for (int p = 1; p <= piles && ok; ++p) {
      int prev = -1;
      for (int oi = 0; oi < n && ok; ++oi) {
        int bx = order[oi];
        if (assign[bx] != p) continue;
        if (prev >= 0 && !boxes[prev].fits_into(boxes[bx])) ok = false;
        prev = bx;
      }
    }
    if (ok) best = used;
  }
  return best;
}

}  // namespace lwskit
