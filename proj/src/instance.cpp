// Copyright 2026 The fmqp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmqp/instance.hpp"

#include <Eigen/Eigenvalues>

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fmqp {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kSymTol = 1e-12;
constexpr double kPsdTol = 1e-8;

Vector to_vector(const json& arr, const std::string& field) {
  if (!arr.is_array()) {
    throw std::runtime_error("instance field '" + field + "' must be an array");
  }
  Vector v(arr.size());
  Index i = 0;
  for (const auto& e : arr) {
    if (!e.is_number()) {
      throw std::runtime_error("instance field '" + field +
                               "' has a non-numeric entry");
    }
    v[i++] = e.get<double>();
  }
  return v;
}

Matrix to_matrix(const json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty()) {
    throw std::runtime_error("instance field '" + field +
                             "' must be a non-empty array of arrays");
  }
  const Index rows = static_cast<Index>(arr.size());
  Matrix mat;
  for (Index i = 0; i < rows; ++i) {
    const Vector row = to_vector(arr[i], field);
    if (i == 0) {
      mat.resize(rows, row.size());
    } else if (row.size() != mat.cols()) {
      throw std::runtime_error("instance field '" + field +
                               "' has ragged rows");
    }
    mat.row(i) = row;
  }
  return mat;
}

const json& require(const json& obj, const char* key,
                    const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw std::runtime_error("missing field '" + std::string(key) + "' in " +
                             where);
  }
  return *it;
}

ordered_json vector_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json arr = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) arr.push_back(vector_json(m.row(i)));
  return arr;
}

}  // namespace

std::vector<Violation> validate(const FuzzyMoqpInstance& inst) {
  std::vector<Violation> out;
  const Index n = inst.n;
  auto add = [&out](std::string field, Index index, std::string message,
                    double magnitude = 0.0) {
    out.push_back({std::move(field), index, std::move(message), magnitude});
  };

  if (n < 1) add("n", -1, "n >= 1 required", static_cast<double>(n));
  if (inst.k() < 1) add("objectives", -1, "k >= 1 required");

  for (Index q = 0; q < inst.k(); ++q) {
    const auto& obj = inst.objectives[q];
    if (obj.c.size() != n) {
      add("objectives.c", q, "length != n");
      continue;
    }
    if (obj.Q.rows() != n || obj.Q.cols() != n) {
      add("objectives.Q", q, "shape != n x n");
      continue;
    }
    double worst_asym = 0.0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const double gap = std::abs(obj.Q(i, j) - obj.Q(j, i));
        const double lim = kSymTol * std::max(1.0, std::abs(obj.Q(i, j)));
        if (gap > lim) worst_asym = std::max(worst_asym, gap);
      }
    }
    if (worst_asym > 0) {
      add("objectives.Q", q, "Q not symmetric", worst_asym);
      continue;  // the eigen check below assumes symmetry
    }
    const double scale = std::max(1.0, obj.Q.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(obj.Q,
                                              Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues().minCoeff();
    if (min_eig < -kPsdTol * scale) {
      add("objectives.Q", q, "Q not positive semi-definite", -min_eig);
    }
  }

  for (Index i = 0; i < inst.m(); ++i) {
    const auto& row = inst.rows[i];
    if (row.a.size() != n || row.d.size() != n) {
      add("rows", i, "coefficient length != n");
      continue;
    }
    for (Index j = 0; j < n; ++j) {
      if (!(row.d[j] > 0)) {
        add("rows.d", i, "tolerance must be strictly positive", row.d[j]);
      }
      if (row.a[j] < 0) {
        add("rows.a", i, "coefficients must be nonnegative", row.a[j]);
      }
    }
    if (!(row.p > 0)) {
      add("rows.p", i, "tolerance must be strictly positive", row.p);
    }
  }

  const auto& bd = inst.bounds;
  if (bd.l.size() != n || bd.r.size() != n || bd.u.size() != n ||
      bd.t.size() != n) {
    add("bounds", -1, "bound vector length != n");
    return out;
  }
  for (Index j = 0; j < n; ++j) {
    if (!(bd.r[j] > 0)) {
      add("bounds.r", j, "tolerance must be strictly positive", bd.r[j]);
    }
    if (!(bd.t[j] > 0)) {
      add("bounds.t", j, "tolerance must be strictly positive", bd.t[j]);
    }
    if (bd.l[j] > bd.u[j]) {
      add("bounds", j, "l > u (empty nominal box)", bd.l[j] - bd.u[j]);
    }
  }

  // Widest region nonempty: with nonnegative coefficients the row value is
  // smallest at the lower box corner.
  if (out.empty()) {
    Vector corner(n);
    for (Index j = 0; j < n; ++j) corner[j] = std::max(0.0, bd.l[j] - bd.r[j]);
    for (Index i = 0; i < inst.m(); ++i) {
      const double lhs = inst.rows[i].a.dot(corner);
      const double cap = inst.rows[i].b + inst.rows[i].p;
      if (lhs > cap + 1e-12) {
        add("rows", i, "widest feasible region is empty", lhs - cap);
      }
    }
  }
  return out;
}

std::array<CrispQp, 4> crisp_variants(const FuzzyMoqpInstance& inst, Index q) {
  if (q < 0 || q >= inst.k()) {
    throw std::out_of_range("objective index out of range");
  }
  const Index n = inst.n;
  const Index m = inst.m();
  Matrix a(m, n), ad(m, n);
  Vector b(m), bp(m);
  for (Index i = 0; i < m; ++i) {
    a.row(i) = inst.rows[i].a;
    ad.row(i) = inst.rows[i].a + inst.rows[i].d;
    b[i] = inst.rows[i].b;
    bp[i] = inst.rows[i].b + inst.rows[i].p;
  }
  const Vector lo_nom = inst.bounds.l.cwiseMax(0.0);
  const Vector lo_rel = (inst.bounds.l - inst.bounds.r).cwiseMax(0.0);
  const Vector hi_nom = inst.bounds.u;
  const Vector hi_rel = inst.bounds.u + inst.bounds.t;
  const QuadraticObjective& obj = inst.objectives[q];
  return {CrispQp{obj, a, b, lo_nom, hi_nom},
          CrispQp{obj, ad, b, lo_rel, hi_nom},
          CrispQp{obj, ad, bp, lo_rel, hi_rel},
          CrispQp{obj, a, bp, lo_nom, hi_rel}};
}

FuzzyMoqpInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("instance must be an object");

  FuzzyMoqpInstance inst;
  const json& jn = require(doc, "n", "instance");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 0) {
    throw std::runtime_error("field 'n' must be a nonnegative integer");
  }
  inst.n = jn.get<Index>();

  const json& jobjs = require(doc, "objectives", "instance");
  if (!jobjs.is_array()) {
    throw std::runtime_error("field 'objectives' must be an array");
  }
  for (std::size_t q = 0; q < jobjs.size(); ++q) {
    const std::string where = "objectives[" + std::to_string(q) + "]";
    QuadraticObjective obj;
    obj.c = to_vector(require(jobjs[q], "c", where), where + ".c");
    obj.Q = to_matrix(require(jobjs[q], "Q", where), where + ".Q");
    inst.objectives.push_back(std::move(obj));
  }

  const json& jrows = require(doc, "rows", "instance");
  if (!jrows.is_array()) {
    throw std::runtime_error("field 'rows' must be an array");
  }
  for (std::size_t i = 0; i < jrows.size(); ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    FuzzyRow row;
    row.a = to_vector(require(jrows[i], "a", where), where + ".a");
    row.d = to_vector(require(jrows[i], "d", where), where + ".d");
    row.b = require(jrows[i], "b", where).get<double>();
    row.p = require(jrows[i], "p", where).get<double>();
    inst.rows.push_back(std::move(row));
  }

  const json& jb = require(doc, "bounds", "instance");
  inst.bounds.l = to_vector(require(jb, "l", "bounds"), "bounds.l");
  inst.bounds.r = to_vector(require(jb, "r", "bounds"), "bounds.r");
  inst.bounds.u = to_vector(require(jb, "u", "bounds"), "bounds.u");
  inst.bounds.t = to_vector(require(jb, "t", "bounds"), "bounds.t");

  if (doc.contains("k") &&
      doc["k"].get<Index>() != inst.k()) {
    throw std::runtime_error("field 'k' disagrees with objectives length");
  }
  if (doc.contains("m") &&
      doc["m"].get<Index>() != inst.m()) {
    throw std::runtime_error("field 'm' disagrees with rows length");
  }
  return inst;
}

FuzzyMoqpInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const FuzzyMoqpInstance& inst) {
  ordered_json doc;
  doc["n"] = inst.n;
  doc["k"] = inst.k();
  doc["m"] = inst.m();
  doc["objectives"] = ordered_json::array();
  for (const auto& obj : inst.objectives) {
    ordered_json jo;
    jo["c"] = vector_json(obj.c);
    jo["Q"] = matrix_json(obj.Q);
    doc["objectives"].push_back(std::move(jo));
  }
  doc["rows"] = ordered_json::array();
  for (const auto& row : inst.rows) {
    ordered_json jr;
    jr["a"] = vector_json(row.a);
    jr["d"] = vector_json(row.d);
    jr["b"] = row.b;
    jr["p"] = row.p;
    doc["rows"].push_back(std::move(jr));
  }
  ordered_json jb;
  jb["l"] = vector_json(inst.bounds.l);
  jb["r"] = vector_json(inst.bounds.r);
  jb["u"] = vector_json(inst.bounds.u);
  jb["t"] = vector_json(inst.bounds.t);
  doc["bounds"] = std::move(jb);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const FuzzyMoqpInstance& inst) {
  const std::string text = serialize_instance(inst);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fmqp
