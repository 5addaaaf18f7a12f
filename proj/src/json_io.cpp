#include "lwskit/json_io.hpp"

#include "lwskit/errors.hpp"

namespace lwskit {

namespace {

json ext_to_json(ExtInt v) {
  if (v.is_inf()) return json("inf");
  return json(v.value());
}

ExtInt ext_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtInt::inf();
    throw schema_error("expected integer or \"inf\"");
  }
  if (!j.is_number_integer()) throw schema_error("expected integer or \"inf\"");
  return ExtInt(j.get<int64_t>());
}

std::vector<ExtInt> ext_vec_from_json(const json& j) {
  if (!j.is_array()) throw schema_error("expected array of entries");
  std::vector<ExtInt> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(ext_from_json(e));
  return out;
}

json ext_vec_to_json(const std::vector<ExtInt>& v) {
  json out = json::array();
  for (ExtInt e : v) out.push_back(ext_to_json(e));
  return out;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw schema_error(std::string("missing integer field ") + key);
  return j[key].get<int>();
}

std::vector<int64_t> i64_vec_from_json(const json& j) {
  if (!j.is_array()) throw schema_error("expected array of integers");
  std::vector<int64_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw schema_error("expected integer");
    out.push_back(e.get<int64_t>());
  }
  return out;
}

json instance_header(const char* problem) {
  json j;
  j["schema"] = "lwskit/1";
  j["problem"] = problem;
  return j;
}

}  // namespace

json tensor_to_json(const CostTensor& t) {
  json j;
  j["k"] = t.k();
  j["n"] = t.n();
  switch (t.kind()) {
    case CostTensor::Kind::Dense:
      j["kind"] = "dense";
      j["data"] = ext_vec_to_json(t.dense_data());
      break;
    case CostTensor::Kind::CpRank: {
      j["kind"] = "cp";
      j["d"] = t.cp_rank();
      json f = json::array();
      for (const auto& axis : t.cp_factors()) f.push_back(axis);
      j["factors"] = std::move(f);
      break;
    }
    case CostTensor::Kind::SliceRank: {
      j["kind"] = "slice";
      json terms = json::array();
      for (const auto& term : t.terms()) {
        json e;
        e["axis"] = term.axis;
        e["a"] = term.a;
        e["b"] = tensor_to_json(*term.b);
        terms.push_back(std::move(e));
      }
      j["terms"] = std::move(terms);
      break;
    }
  }
  return j;
}

CostTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw schema_error("tensor: missing kind");
  int k = get_int(j, "k"), n = get_int(j, "n");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "dense") {
    return CostTensor::dense(k, n, ext_vec_from_json(j.value("data", json())));
  }
  if (kind == "cp") {
    int d = get_int(j, "d");
    if (!j.contains("factors") || !j["factors"].is_array()) throw schema_error("cp tensor: missing factors");
    std::vector<std::vector<int64_t>> f;
    for (const auto& axis : j["factors"]) f.push_back(i64_vec_from_json(axis));
    return CostTensor::cp(k, n, d, std::move(f));
  }
  if (kind == "slice") {
    if (!j.contains("terms") || !j["terms"].is_array()) throw schema_error("slice tensor: missing terms");
    std::vector<SliceTerm> terms;
    for (const auto& e : j["terms"]) {
      SliceTerm t;
      t.axis = get_int(e, "axis");
      t.a = i64_vec_from_json(e.value("a", json()));
      t.b = std::make_shared<CostTensor>(tensor_from_json(e.value("b", json())));
      terms.push_back(std::move(t));
    }
    return CostTensor::slice_rank(k, n, std::move(terms));
  }
  throw schema_error("tensor: unknown kind " + kind);
}

json matrix_to_json(const CostMatrix& m) {
  json j;
  j["n"] = m.n();
  if (m.kind() == CostMatrix::Kind::Dense) {
    j["kind"] = "dense";
    j["data"] = ext_vec_to_json(m.dense_data());
  } else {
    j["kind"] = "cp";
    int n = m.n(), d = m.cp_rank();
    j["d"] = d;
    std::vector<int64_t> A(static_cast<size_t>(n) * d), B(static_cast<size_t>(n) * d);
    for (int i = 1; i <= n; ++i)
      for (int t = 0; t < d; ++t) {
        A[static_cast<size_t>(i - 1) * d + t] = m.a_factor(i, t);
        B[static_cast<size_t>(i - 1) * d + t] = m.b_factor(i, t);
      }
    j["A"] = A;
    j["B"] = B;
  }
  return j;
}

CostMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw schema_error("matrix: missing kind");
  int n = get_int(j, "n");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "dense") return CostMatrix::dense(n, ext_vec_from_json(j.value("data", json())));
  if (kind == "cp") {
    int d = get_int(j, "d");
    return CostMatrix::cp(n, d, i64_vec_from_json(j.value("A", json())),
                          i64_vec_from_json(j.value("B", json())));
  }
  throw schema_error("matrix: unknown kind " + kind);
}

json instance_to_json(const LwsInstance& inst) {
  json j = instance_header("lws");
  j["n"] = inst.n;
  j["w"] = matrix_to_json(inst.w);
  return j;
}

json instance_to_json(const KdLwsInstance& inst) {
  json j = instance_header("kdlws");
  j["k"] = inst.k;
  j["n"] = inst.n;
  json w = json::array();
  for (const auto& t : inst.w) w.push_back(tensor_to_json(t));
  j["w"] = std::move(w);
  return j;
}

json instance_to_json(const PtInstance& inst) {
  json j = instance_header("pt");
  j["n"] = inst.n;
  j["w"] = tensor_to_json(inst.w);
  return j;
}

json instance_to_json(const StaticKdInstance& inst) {
  json j = instance_header("static");
  j["k"] = inst.base.k;
  j["n"] = inst.base.n;
  j["a"] = inst.a;
  j["N"] = inst.N;
  json w = json::array();
  for (const auto& t : inst.base.w) w.push_back(tensor_to_json(t));
  j["w"] = std::move(w);
  // Flat table over [1,n]^k, last axis fastest; null marks unset cells.
  size_t cells = 1;
  for (int i = 0; i < inst.base.k; ++i) cells *= static_cast<size_t>(inst.base.n);
  json given = json::array();
  std::vector<int> idx(inst.base.k, 1);
  for (size_t off = 0; off < cells; ++off) {
    if (inst.given.is_set(idx))
      given.push_back(ext_to_json(inst.given.at(idx)));
    else
      given.push_back(nullptr);
    for (int a = inst.base.k - 1; a >= 0; --a) {
      if (++idx[a] <= inst.base.n) break;
      idx[a] = 1;
    }
  }
  j["given"] = std::move(given);
  return j;
}

json interval2d_to_json(const CostTensor& w) {
  json j = instance_header("interval2d");
  j["n"] = w.n();
  j["w"] = tensor_to_json(w);
  return j;
}

std::string problem_of(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != "lwskit/1")
    throw schema_error("missing or unsupported schema tag (want lwskit/1)");
  if (!j.contains("problem") || !j["problem"].is_string())
    throw schema_error("missing problem field");
  return j["problem"].get<std::string>();
}

namespace {

void expect_problem(const json& j, const char* want) {
  if (problem_of(j) != want)
    throw schema_error(std::string("expected problem ") + want + ", got " + problem_of(j));
}

}  // namespace

LwsInstance lws_from_json(const json& j) {
  expect_problem(j, "lws");
  LwsInstance out;
  out.n = get_int(j, "n");
  out.w = matrix_from_json(j.value("w", json()));
  if (out.w.n() != out.n + 1) throw schema_error("lws: matrix side must be n+1");
  return out;
}

KdLwsInstance kdlws_from_json(const json& j) {
  expect_problem(j, "kdlws");
  KdLwsInstance out;
  out.k = get_int(j, "k");
  out.n = get_int(j, "n");
  if (!j.contains("w") || !j["w"].is_array()) throw schema_error("kdlws: missing tensors");
  for (const auto& e : j["w"]) out.w.push_back(tensor_from_json(e));
  if (static_cast<int>(out.w.size()) != out.k) throw schema_error("kdlws: need k tensors");
  for (const auto& t : out.w)
    if (t.k() != out.k || t.n() != out.n) throw schema_error("kdlws: tensor shape mismatch");
  return out;
}

PtInstance pt_from_json(const json& j) {
  expect_problem(j, "pt");
  PtInstance out;
  out.n = get_int(j, "n");
  out.w = tensor_from_json(j.value("w", json()));
  if (out.w.order() != 3 || out.w.n() != out.n) throw schema_error("pt: tensor shape mismatch");
  return out;
}

StaticKdInstance static_from_json(const json& j) {
  expect_problem(j, "static");
  StaticKdInstance out;
  out.base.k = get_int(j, "k");
  out.base.n = get_int(j, "n");
  out.a = get_int(j, "a");
  out.N = get_int(j, "N");
  if (!j.contains("w") || !j["w"].is_array()) throw schema_error("static: missing tensors");
  for (const auto& e : j["w"]) out.base.w.push_back(tensor_from_json(e));
  if (static_cast<int>(out.base.w.size()) != out.base.k) throw schema_error("static: need k tensors");
  size_t cells = 1;
  for (int i = 0; i < out.base.k; ++i) cells *= static_cast<size_t>(out.base.n);
  const json& given = j.value("given", json());
  if (!given.is_array() || given.size() != cells) throw schema_error("static: given table size mismatch");
  out.given = DpTable(out.base.k, out.base.n);
  std::vector<int> idx(out.base.k, 1);
  for (size_t off = 0; off < cells; ++off) {
    if (!given[off].is_null()) out.given.set(idx, ext_from_json(given[off]));
    for (int a = out.base.k - 1; a >= 0; --a) {
      if (++idx[a] <= out.base.n) break;
      idx[a] = 1;
    }
  }
  return out;
}

CostTensor interval2d_from_json(const json& j) {
  expect_problem(j, "interval2d");
  CostTensor w = tensor_from_json(j.value("w", json()));
  if (w.order() != 3 || w.n() != get_int(j, "n")) throw schema_error("interval2d: tensor shape mismatch");
  return w;
}

}  // namespace lwskit
