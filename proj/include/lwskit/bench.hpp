#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lwskit/instances.hpp"

namespace lwskit {

struct BenchRow {
  std::string problem;
  std::string solver;
  int k = 0, n = 0;
  uint64_t seed = 0;
  int64_t nanos = 0;
  std::string answer;
};

// Monotonic wall time of one call.
int64_t time_call_ns(const std::function<void()>& fn);

int64_t median_ns(std::vector<int64_t> samples);

// Least-squares slope of log(time) against log(n).
double fit_loglog_slope(const std::vector<std::pair<double, double>>& n_nanos);

// Random slice-rank-1 2D LWS instance: both tensors are one slice term bound
// to the predecessor axis (the envelope-friendly orientation), all entries
// small and finite. The two terms share one dense sub-tensor.
KdLwsInstance gen_slicerank1_2dlws(int n, uint64_t seed);

struct SpeedupResult {
  std::vector<BenchRow> rows;
  double fast_exponent = 0.0;
  double naive_exponent = 0.0;
  // Median nanos for (solver, n); -1 when that cell was not run.
  int64_t median_for(const std::string& solver, int n) const;
};

// Runs the naive kD solver and the slice-rank-1 solver over their grids with
// `reps` repetitions per cell (answers cross-checked where both grids meet).
SpeedupResult run_speedup_bench(const std::vector<int>& fast_grid,
                                const std::vector<int>& naive_grid, int reps,
                                uint64_t seed);

std::string to_csv(const std::vector<BenchRow>& rows);
// Gnuplot-ready: one block per solver, lines "n median_nanos".
std::string to_gnuplot(const std::vector<BenchRow>& rows);

}  // namespace lwskit
