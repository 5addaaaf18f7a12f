#include "lwskit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "lwskit/dp_core.hpp"
#include "lwskit/errors.hpp"
#include "lwskit/fast_solvers.hpp"

namespace lwskit {

int64_t time_call_ns(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

int64_t median_ns(std::vector<int64_t> samples) {
  if (samples.empty()) throw precondition_error("median of nothing");
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& n_nanos) {
  if (n_nanos.size() < 2) throw precondition_error("slope fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, t] : n_nanos) {
    double x = std::log(n), y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(n_nanos.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

KdLwsInstance gen_slicerank1_2dlws(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> small(-6, 6);
  SliceTerm term;
  term.axis = 3;
  term.a.resize(n);
  for (auto& v : term.a) v = small(rng);
  std::vector<ExtInt> b(static_cast<size_t>(n) * n);
  for (auto& v : b) v = ExtInt(small(rng));
  term.b = std::make_shared<CostTensor>(CostTensor::dense(1, n, std::move(b)));
  KdLwsInstance out;
  out.k = 2;
  out.n = n;
  out.w.assign(2, CostTensor::slice_rank(2, n, {term}));  // dense part shared
  return out;
}

int64_t SpeedupResult::median_for(const std::string& solver, int n) const {
  std::vector<int64_t> samples;
  for (const auto& r : rows)
    if (r.solver == solver && r.n == n) samples.push_back(r.nanos);
  return samples.empty() ? -1 : median_ns(std::move(samples));
}

SpeedupResult run_speedup_bench(const std::vector<int>& fast_grid,
                                const std::vector<int>& naive_grid, int reps,
                                uint64_t seed) {
  SpeedupResult res;
  std::vector<int> all = fast_grid;
  all.insert(all.end(), naive_grid.begin(), naive_grid.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  for (int n : all) {
    KdLwsInstance inst = gen_slicerank1_2dlws(n, seed + static_cast<uint64_t>(n));
    bool run_fast = std::count(fast_grid.begin(), fast_grid.end(), n) > 0;
    bool run_naive = std::count(naive_grid.begin(), naive_grid.end(), n) > 0;
    ExtInt fast_ans = ExtInt::inf(), naive_ans = ExtInt::inf();
    for (int r = 0; r < reps && run_fast; ++r) {
      BenchRow row{"slicerank1-2dlws", "fast", 2, n, seed, 0, ""};
      row.nanos = time_call_ns([&] { fast_ans = solve_2dlws_slicerank1(inst).answer; });
      row.answer = fast_ans.str();
      res.rows.push_back(std::move(row));
    }
    for (int r = 0; r < reps && run_naive; ++r) {
      BenchRow row{"slicerank1-2dlws", "naive", 2, n, seed, 0, ""};
      row.nanos = time_call_ns([&] { naive_ans = solve_kdlws_naive(inst).answer; });
      row.answer = naive_ans.str();
      res.rows.push_back(std::move(row));
    }
    if (run_fast && run_naive && fast_ans != naive_ans)
      throw verify_error("speedup bench: solver answers disagree at n=" + std::to_string(n));
  }

  auto slope = [&](const std::vector<int>& grid, const char* solver) {
    std::vector<std::pair<double, double>> pts;
    for (int n : grid)
      pts.push_back({static_cast<double>(n), static_cast<double>(res.median_for(solver, n))});
    return fit_loglog_slope(pts);
  };
  if (fast_grid.size() >= 2) res.fast_exponent = slope(fast_grid, "fast");
  if (naive_grid.size() >= 2) res.naive_exponent = slope(naive_grid, "naive");
  return res;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "problem,solver,k,n,seed,nanos,answer\n";
  for (const auto& r : rows)
    os << r.problem << ',' << r.solver << ',' << r.k << ',' << r.n << ',' << r.seed << ','
       << r.nanos << ',' << r.answer << '\n';
  return os.str();
}

std::string to_gnuplot(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::map<int, std::vector<int64_t>>> by_solver;
  for (const auto& r : rows) by_solver[r.solver][r.n].push_back(r.nanos);
  std::ostringstream os;
  for (auto& [solver, cells] : by_solver) {
    os << "# solver: " << solver << "\n";
    for (auto& [n, samples] : cells) os << n << ' ' << median_ns(samples) << '\n';
    os << "\n\n";
  }
  return os.str();
}

}  // namespace lwskit
