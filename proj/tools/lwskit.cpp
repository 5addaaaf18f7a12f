#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lwskit/bench.hpp"
#include "lwskit/crr.hpp"
#include "lwskit/dp_core.hpp"
#include "lwskit/errors.hpp"
#include "lwskit/fast_solvers.hpp"
#include "lwskit/json_io.hpp"
#include "lwskit/oracles.hpp"
#include "lwskit/problems.hpp"
#include "lwskit/reductions.hpp"

namespace {

using namespace lwskit;

// Exit codes: 1 usage, 2 schema/I-O, 3 budget, 4 precondition, 5 verification
// mismatch, 6 arithmetic overflow.
constexpr int kExitUsage = 1, kExitSchema = 2, kExitBudget = 3, kExitPrecondition = 4,
              kExitVerify = 5, kExitOverflow = 6;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

void emit_json(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw schema_error("cannot write " + out_path);
  out << text;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw schema_error("cannot write " + path);
  out << text;
}

// ---- ad-hoc JSON for reduction sources (same schema tag) ----

json minip_to_json(const MinIpInstance& m) {
  json j;
  j["schema"] = "lwskit/1";
  j["problem"] = "minip";
  j["k"] = m.k;
  j["n"] = m.n;
  j["d"] = m.d;
  j["sets"] = m.sets;
  return j;
}

MinIpInstance minip_from_json(const json& j) {
  if (problem_of(j) != "minip") throw schema_error("expected problem minip");
  MinIpInstance m;
  m.k = j.at("k").get<int>();
  m.n = j.at("n").get<int>();
  m.d = j.at("d").get<int>();
  m.sets = j.at("sets").get<std::vector<std::vector<std::vector<int64_t>>>>();
  if (static_cast<int>(m.sets.size()) != m.k) throw schema_error("minip: bad sets shape");
  for (const auto& s : m.sets) {
    if (static_cast<int>(s.size()) != m.n) throw schema_error("minip: bad sets shape");
    for (const auto& v : s)
      if (static_cast<int>(v.size()) != m.d) throw schema_error("minip: bad sets shape");
  }
  return m;
}

json graph_to_json(int n, const std::vector<int64_t>& upper) {
  json j;
  j["schema"] = "lwskit/1";
  j["problem"] = "graph";
  j["n"] = n;
  j["weights"] = upper;
  return j;
}

WeightedGraph graph_from_json(const json& j) {
  if (problem_of(j) != "graph") throw schema_error("expected problem graph");
  int n = j.at("n").get<int>();
  auto upper = j.at("weights").get<std::vector<int64_t>>();
  if (upper.size() != static_cast<size_t>(n) * (n - 1) / 2)
    throw schema_error("graph: weights must have n(n-1)/2 entries");
  return WeightedGraph(n, std::move(upper));
}

json sat_to_json(const SatFormula& f) {
  json j;
  j["schema"] = "lwskit/1";
  j["problem"] = "sat";
  j["n"] = f.n;
  j["clauses"] = f.clauses;
  return j;
}

SatFormula sat_from_json(const json& j) {
  if (problem_of(j) != "sat") throw schema_error("expected problem sat");
  SatFormula f;
  f.n = j.at("n").get<int>();
  f.clauses = j.at("clauses").get<std::vector<std::vector<int>>>();
  for (const auto& cl : f.clauses)
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > f.n) throw schema_error("sat: literal out of range");
  return f;
}

// ---- random generators (all deterministic in the seed) ----

MinIpInstance gen_minip(int k, int n, int d, uint64_t seed, bool binary) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(binary ? 0 : -4, binary ? 1 : 4);
  MinIpInstance m;
  m.k = k;
  m.n = n;
  m.d = d;
  m.sets.assign(k, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(d)));
  for (auto& s : m.sets)
    for (auto& v : s)
      for (auto& e : v) e = val(rng);
  return m;
}

std::vector<int64_t> gen_graph_upper(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-10, 10);
  std::vector<int64_t> upper(static_cast<size_t>(n) * (n - 1) / 2);
  for (auto& e : upper) e = val(rng);
  return upper;
}

SatFormula gen_sat(int n, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n), width(1, 3), coin(0, 1);
  SatFormula f;
  f.n = n;
  for (int c = 0; c < m; ++c) {
    std::vector<int> cl;
    int w = width(rng);
    for (int i = 0; i < w; ++i) cl.push_back(coin(rng) ? var(rng) : -var(rng));
    f.clauses.push_back(std::move(cl));
  }
  return f;
}

std::vector<Box> gen_boxes(int n, int dim, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> side(1, 8);
  std::vector<Box> boxes(n);
  for (auto& b : boxes) {
    b.sides.resize(dim);
    for (auto& s : b.sides) s = side(rng);
  }
  return boxes;
}

KdLwsInstance gen_kdlws_dense(int k, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-8, 8);
  size_t cells = 1;
  for (int i = 0; i < k + 1; ++i) cells *= static_cast<size_t>(n);
  KdLwsInstance inst;
  inst.k = k;
  inst.n = n;
  for (int l = 0; l < k; ++l) {
    std::vector<ExtInt> data(cells);
    for (auto& e : data) e = ExtInt(val(rng));
    inst.w.push_back(CostTensor::dense(k, n, std::move(data)));
  }
  return inst;
}

PtInstance gen_pt_cp(int n, int d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-3, 3);
  std::vector<std::vector<int64_t>> F(3, std::vector<int64_t>(static_cast<size_t>(n) * d));
  for (auto& axis : F)
    for (auto& e : axis) e = val(rng);
  PtInstance inst;
  inst.n = n;
  inst.w = CostTensor::cp(2, n, d, std::move(F));
  return inst;
}

std::vector<int64_t> gen_fee_table(int k, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(0, 9);
  size_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= static_cast<size_t>(n);
  std::vector<int64_t> c(cells);
  for (auto& e : c) e = val(rng);
  return c;
}

// ---- shared options ----

struct Opts {
  std::string problem, in_path, out_path, solver = "naive";
  std::string csv_path, plot_path;
  std::string from, to;
  bool certify = false;
  int k = 2, n = 4, d = 2, m = 8, piles = 2, dim = 2, ell = 2, seeds = 20, reps = 5;
  int jobs = 1;
  int64_t hop = 2;
  uint64_t seed = 7;
  std::vector<int64_t> dims, xs, stops, weights, probs;
  std::vector<int> grid{256, 512, 1024, 2048}, naive_grid{256, 512, 1024};
  std::vector<std::string> solvers{"naive", "fast"};
};

json build_instance_json(const Opts& o) {
  const std::string& p = o.problem;
  if (p == "matrix-chain") return instance_to_json(encode_matrix_chain(o.dims));
  if (p == "optimal-bst") return instance_to_json(encode_optimal_bst(o.probs));
  if (p == "polygon") return instance_to_json(encode_polygon_triangulation(o.weights));
  if (p == "lis") return instance_to_json(encode_lis(o.xs));
  if (p == "refuel1d") return instance_to_json(encode_refuel_1d(o.stops, o.hop));
  if (p == "refuel-kd") return instance_to_json(encode_refuel_kd(o.k, o.n, o.hop));
  if (p == "arrival-fee")
    return instance_to_json(encode_refuel_arrival_fee(o.k, o.n, gen_fee_table(o.k, o.n, o.seed)));
  if (p == "nested-boxes")
    return instance_to_json(encode_nested_boxes(gen_boxes(o.n, o.dim, o.seed), o.piles));
  if (p == "slicerank1-2dlws") return instance_to_json(gen_slicerank1_2dlws(o.n, o.seed));
  if (p == "kdlws-random") return instance_to_json(gen_kdlws_dense(o.k, o.n, o.seed));
  if (p == "pt-random") return instance_to_json(gen_pt_cp(o.n, o.d, o.seed));
  if (p == "minip-random") return minip_to_json(gen_minip(o.k, o.n, o.d, o.seed, false));
  if (p == "kov-random") return minip_to_json(gen_minip(o.k, o.n, o.d, o.seed, true));
  if (p == "graph-random") return graph_to_json(o.n, gen_graph_upper(o.n, o.seed));
  if (p == "sat-random") return sat_to_json(gen_sat(o.n, o.m, o.seed));
  throw precondition_error("unknown problem: " + p);
}

ExtInt solve_kdlws_with(const KdLwsInstance& inst, const std::string& solver, int jobs) {
  if (solver == "naive") return solve_kdlws_naive(inst).answer;
  if (solver == "dc-naive") return solve_kdlws_dc(inst, StaticSolverKind::Naive, jobs).answer;
  if (solver == "dc-rank1") return solve_kdlws_dc(inst, StaticSolverKind::Rank1Envelope, jobs).answer;
  if (solver == "dc-slicerank1") return solve_kdlws_dc(inst, StaticSolverKind::SliceRank1, jobs).answer;
  if (solver == "dc-hierarchy")
    return solve_kdlws_dc(inst, StaticSolverKind::HierarchyReduce, jobs).answer;
  if (solver == "fast") return solve_2dlws_slicerank1(inst, jobs).answer;
  throw precondition_error("unknown kdlws solver: " + solver);
}

int cmd_gen(const Opts& o) {
  emit_json(build_instance_json(o), o.out_path);
  return 0;
}

int cmd_solve(const Opts& o) {
  json inst = o.in_path.empty() ? build_instance_json(o) : read_json_file(o.in_path);
  std::string problem = problem_of(inst);
  ExtInt answer = ExtInt::inf();
  int64_t ns = time_call_ns([&] {
    if (problem == "lws") {
      answer = solve_lws_naive(lws_from_json(inst)).answer;
    } else if (problem == "kdlws") {
      answer = solve_kdlws_with(kdlws_from_json(inst), o.solver, o.jobs);
    } else if (problem == "pt") {
      PtInstance pt = pt_from_json(inst);
      answer = (o.solver == "knuth") ? solve_pt_knuth(pt) : solve_pt_naive(pt).answer;
    } else if (problem == "static") {
      StaticKdInstance st = static_from_json(inst);
      DpTable out = (o.solver == "hierarchy") ? solve_static_kd_via_hierarchy(st, o.jobs)
                                              : solve_static_kdlws_naive(st);
      // No single answer cell; report the minimum over the produced band.
      ExtInt best = ExtInt::inf();
      for_each_in_band(st.base.k, st.base.n, st.a + st.N, st.a + 2 * st.N,
                       [&](std::span<const int> idx) { best = ExtInt::min(best, out.at(idx)); });
      answer = best;
    } else if (problem == "interval2d") {
      answer = solve_interval_2dlws_naive(interval2d_from_json(inst)).answer;
    } else {
      throw schema_error("solve: unsupported problem " + problem);
    }
  });
  // Decoded convenience values for problem encoders with an answer adapter.
  if (o.in_path.empty() && o.problem == "lis")
    std::cout << decode_lis_answer(answer) << "\n";
  else if (o.in_path.empty() && o.problem == "nested-boxes")
    std::cout << decode_nested_boxes_answer(answer) << "\n";
  else
    std::cout << answer.str() << "\n";
  std::cerr << "time_ns " << ns << "\n";
  return 0;
}

int cmd_reduce(const Opts& o) {
  json src = read_json_file(o.in_path);
  json out;
  bool ok = true;
  std::string verdict;
  if (o.from == "minip" && o.to == "kdlws") {
    MinIpInstance m = minip_from_json(src);
    KdLwsInstance t = encode_kminip_as_kdlws(m);
    out = instance_to_json(t);
    if (o.certify) ok = brute_kminip(m) == solve_kdlws_naive(t).answer;
  } else if (o.from == "graph" && o.to == "2dlws") {
    WeightedGraph g = graph_from_json(src);
    KdLwsInstance t = encode_negtriangle_as_2dlws(g);
    out = instance_to_json(t);
    if (o.certify) ok = brute_negative_triangle(g) == solve_kdlws_naive(t).answer;
  } else if (o.from == "2dlws" && (o.to == "pt" || o.to == "pt-slice")) {
    KdLwsInstance t = kdlws_from_json(src);
    if (t.k != 2) throw precondition_error("reduce: source must be 2D");
    PtInstance pt = (o.to == "pt") ? encode_2dlws_as_pt(t.w[0]) : encode_2dlws_as_pt_slicerank(t.w[0]);
    out = instance_to_json(pt);
    if (o.certify)
      ok = solve_interval_2dlws_naive(t.w[0]).answer == solve_pt_naive(pt).answer;
  } else if (o.from == "sat" && o.to == "kov") {
    SatFormula f = sat_from_json(src);
    MinIpInstance m = sat_to_kov(f, o.k);
    out = minip_to_json(m);
    if (o.certify) ok = brute_sat(f) == brute_kov(m);
  } else if (o.from == "kov" && o.to == "zkov") {
    MinIpInstance m = minip_from_json(src);
    auto family = kov_to_zkov_family(m, o.ell);
    out["schema"] = "lwskit/1";
    out["problem"] = "minip-family";
    json members = json::array();
    for (const auto& member : family) members.push_back(minip_to_json(member));
    out["members"] = std::move(members);
    if (o.certify) {
      bool any = false;
      for (const auto& member : family) any = any || brute_kov(member);
      ok = brute_kov(m) == any;
    }
  } else {
    throw precondition_error("reduce: unsupported pair " + o.from + " -> " + o.to);
  }
  emit_json(out, o.out_path);
  if (o.certify) {
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) return kExitVerify;
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  int failures = 0;
  auto check = [&](bool cond, uint64_t seed) {
    if (!cond) {
      ++failures;
      std::cout << "MISMATCH seed=" << seed << "\n";
    }
  };
  for (int s = 0; s < o.seeds; ++s) {
    uint64_t seed = o.seed + static_cast<uint64_t>(s);
    if (o.problem == "pt") {
      PtInstance inst = gen_pt_cp(std::min(o.n, 10), o.d, seed);
      check(solve_pt_naive(inst).answer == brute_triangulations(inst), seed);
    } else if (o.problem == "kdlws-dc") {
      KdLwsInstance inst = gen_kdlws_dense(o.k, o.n, seed);
      check(solve_kdlws_dc(inst, StaticSolverKind::Naive).answer ==
                solve_kdlws_naive(inst).answer,
            seed);
    } else if (o.problem == "slicerank1") {
      KdLwsInstance inst = gen_slicerank1_2dlws(o.n, seed);
      check(solve_2dlws_slicerank1(inst).answer == solve_kdlws_naive(inst).answer, seed);
    } else if (o.problem == "lis") {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int64_t> val(0, 30);
      std::vector<int64_t> xs(o.n);
      for (auto& x : xs) x = val(rng);
      check(decode_lis_answer(solve_lws_naive(encode_lis(xs)).answer) == lis_patience(xs), seed);
    } else if (o.problem == "nested-boxes") {
      auto boxes = gen_boxes(o.n, o.dim, seed);
      auto inst = encode_nested_boxes(boxes, o.piles);
      check(decode_nested_boxes_answer(solve_kdlws_naive(inst).answer) ==
                brute_nested_boxes(boxes, o.piles),
            seed);
    } else if (o.problem == "negtriangle") {
      WeightedGraph g(o.n, gen_graph_upper(o.n, seed));
      check(solve_kdlws_naive(encode_negtriangle_as_2dlws(g)).answer ==
                brute_negative_triangle(g),
            seed);
    } else if (o.problem == "kminip") {
      MinIpInstance m = gen_minip(o.k, o.n, o.d, seed, false);
      check(solve_kdlws_naive(encode_kminip_as_kdlws(m)).answer == brute_kminip(m), seed);
    } else if (o.problem == "sat") {
      SatFormula f = gen_sat(o.n, o.m, seed);
      check(brute_sat(f) == brute_kov(sat_to_kov(f, o.k)), seed);
    } else if (o.problem == "zkov") {
      MinIpInstance m = gen_minip(o.k, o.n, o.d, seed, true);
      bool any = false;
      for (const auto& member : kov_to_zkov_family(m, o.ell)) any = any || brute_kov(member);
      check(brute_kov(m) == any, seed);
    } else {
      throw precondition_error("verify: unknown problem " + o.problem);
    }
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " " << o.problem << " seeds=" << o.seeds
            << " mismatches=" << failures << "\n";
  return failures == 0 ? 0 : kExitVerify;
}

int cmd_bench(const Opts& o) {
  if (o.problem != "slicerank1-2dlws")
    throw precondition_error("bench: only slicerank1-2dlws is instrumented");
  for (const auto& s : o.solvers)
    if (s != "naive" && s != "fast") throw precondition_error("bench: unknown solver " + s);
  bool want_fast = std::count(o.solvers.begin(), o.solvers.end(), std::string("fast")) > 0;
  bool want_naive = std::count(o.solvers.begin(), o.solvers.end(), std::string("naive")) > 0;
  SpeedupResult res = run_speedup_bench(want_fast ? o.grid : std::vector<int>{},
                                        want_naive ? o.naive_grid : std::vector<int>{},
                                        o.reps, o.seed);
  if (!o.csv_path.empty()) write_text_file(o.csv_path, to_csv(res.rows));
  if (!o.plot_path.empty()) write_text_file(o.plot_path, to_gnuplot(res.rows));
  std::cout << to_csv(res.rows);
  if (want_fast) std::cout << "# fast_exponent " << res.fast_exponent << "\n";
  if (want_naive) std::cout << "# naive_exponent " << res.naive_exponent << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lwskit: high-dimensional least-weight-subsequence toolkit"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "deterministic RNG seed");
    c->add_option("--k", o.k, "dimension / arity");
    c->add_option("--n", o.n, "side length / item count");
    c->add_option("--d", o.d, "rank / vector length / box dimension");
    c->add_option("--jobs", o.jobs, "worker threads");
  };

  auto add_problem_params = [&](CLI::App* c) {
    c->add_option("--problem", o.problem, "problem name");
    c->add_option("--dims", o.dims, "matrix-chain dimensions d0..dn")->delimiter(',');
    c->add_option("--xs", o.xs, "LIS input sequence")->delimiter(',');
    c->add_option("--stops", o.stops, "refueling stop positions")->delimiter(',');
    c->add_option("--weights", o.weights, "polygon node weights")->delimiter(',');
    c->add_option("--p", o.probs, "BST access frequencies")->delimiter(',');
    c->add_option("--hop", o.hop, "refueling target distance");
    c->add_option("--piles", o.piles, "nested-boxes pile count");
    c->add_option("--dim", o.dim, "nested-boxes box dimension");
    c->add_option("--m", o.m, "SAT clause count");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an instance as JSON");
  add_common(gen);
  add_problem_params(gen);
  gen->add_option("--out", o.out_path, "output path (stdout when omitted)");

  CLI::App* solve = app.add_subcommand("solve", "solve an instance, print answer + timing");
  add_common(solve);
  add_problem_params(solve);
  solve->add_option("--in", o.in_path, "instance JSON path");
  solve->add_option("--solver", o.solver,
                    "naive|dc-naive|dc-rank1|dc-slicerank1|dc-hierarchy|fast|knuth|hierarchy");

  CLI::App* reduce = app.add_subcommand("reduce", "apply a reduction, optionally certify");
  add_common(reduce);
  reduce->add_option("--from", o.from, "source problem")->required();
  reduce->add_option("--to", o.to, "target problem")->required();
  reduce->add_option("--in", o.in_path, "source JSON path")->required();
  reduce->add_option("--out", o.out_path, "target JSON path (stdout when omitted)");
  reduce->add_option("--ell", o.ell, "CRR compressed length");
  reduce->add_flag("--certify", o.certify, "run both oracles and report PASS/FAIL");

  CLI::App* verify = app.add_subcommand("verify", "solver-vs-oracle check on seeded instances");
  add_common(verify);
  verify->add_option("--problem", o.problem, "property to verify")->required();
  verify->add_option("--seeds", o.seeds, "number of seeded instances");
  verify->add_option("--m", o.m, "SAT clause count");
  verify->add_option("--piles", o.piles, "nested-boxes pile count");
  verify->add_option("--dim", o.dim, "nested-boxes box dimension");
  verify->add_option("--ell", o.ell, "CRR compressed length");

  CLI::App* bench = app.add_subcommand("bench", "timing sweep with CSV/plot output");
  add_common(bench);
  bench->add_option("--problem", o.problem, "benchmark family")->required();
  bench->add_option("--grid", o.grid, "fast-solver side lengths")->delimiter(',');
  bench->add_option("--naive-grid", o.naive_grid, "naive-solver side lengths")->delimiter(',');
  bench->add_option("--solvers", o.solvers, "subset of naive,fast")->delimiter(',');
  bench->add_option("--reps", o.reps, "repetitions per cell (median reported)");
  bench->add_option("--csv", o.csv_path, "CSV output path");
  bench->add_option("--plot", o.plot_path, "gnuplot data output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (solve->parsed()) return cmd_solve(o);
    if (reduce->parsed()) return cmd_reduce(o);
    if (verify->parsed()) return cmd_verify(o);
    if (bench->parsed()) return cmd_bench(o);
    return kExitUsage;
  } catch (const schema_error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const verify_error& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kExitVerify;
  } catch (const overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  }
}
