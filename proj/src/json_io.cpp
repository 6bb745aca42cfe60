// Copyright 2026 frobase developers
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

#include "frobase/json_io.hpp"

#include <cmath>

namespace frobase {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("complex numbers must be [re, im] pairs, got " + j.dump());
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

Vec vec_from_json(const Json& j, int expected) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw InputError("vector length mismatch, expected " + std::to_string(expected));
  Vec v(expected);
  for (int i = 0; i < expected; ++i) v[i] = complex_from_json(j[i]);
  return v;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw InputError("matrix row count mismatch, expected " + std::to_string(rows));
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw InputError("matrix column count mismatch in row " + std::to_string(r));
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const BaseSpace& space) { return Json{{"points", space.points()}}; }

BaseSpace base_space_from_json(const Json& j) {
  const Json& pts = require(j, "points");
  if (!pts.is_array()) throw InputError("'points' must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(p.get<std::string>());
  return BaseSpace(std::move(labels));
}

Json to_json(const CFunction& f) {
  Json values = Json::object();
  for (int i = 0; i < f.space().size(); ++i)
    values[f.space().label(i)] = complex_to_json(f.at(i));
  return Json{{"points", f.space().points()}, {"values", std::move(values)}};
}

CFunction cfunction_from_json(const Json& j) {
  BaseSpace space = base_space_from_json(j);
  const Json& values = require(j, "values");
  Vec v(space.size());
  for (int i = 0; i < space.size(); ++i) {
    auto it = values.find(space.label(i));
    if (it == values.end()) throw InputError("missing value at point '" + space.label(i) + "'");
    v[i] = complex_from_json(*it);
  }
  return CFunction(std::move(space), std::move(v));
}

Json to_json(const HilbertBundle& bundle) {
  Json dims = Json::object(), weights = Json::object();
  for (int t = 0; t < bundle.points(); ++t) {
    dims[bundle.base().label(t)] = bundle.dim(t);
    weights[bundle.base().label(t)] = bundle.weight(t);
  }
  return Json{{"base", to_json(bundle.base())}, {"dims", std::move(dims)},
              {"weights", std::move(weights)}};
}

HilbertBundle bundle_from_json(const Json& j) {
  BaseSpace base = base_space_from_json(require(j, "base"));
  const Json& dims = require(j, "dims");
  std::vector<int> d(base.size());
  std::vector<double> w(base.size(), 1.0);
  for (int t = 0; t < base.size(); ++t) {
    auto it = dims.find(base.label(t));
    if (it == dims.end()) throw InputError("missing dim at point '" + base.label(t) + "'");
    d[t] = it->get<int>();
  }
  if (j.contains("weights")) {
    const Json& weights = j["weights"];
    for (int t = 0; t < base.size(); ++t) {
      auto it = weights.find(base.label(t));
      if (it != weights.end()) w[t] = it->get<double>();
    }
  }
  return HilbertBundle(std::move(base), std::move(d), std::move(w));
}

Json to_json(const BundleMorphism& morphism) {
  Json blocks = Json::object();
  for (int t = 0; t < morphism.source.points(); ++t)
    blocks[morphism.source.base().label(t)] = mat_to_json(morphism.blocks[t]);
  return Json{{"source", to_json(morphism.source)}, {"target", to_json(morphism.target)},
              {"blocks", std::move(blocks)}};
}

BundleMorphism morphism_from_json(const Json& j, const HilbertBundle& source,
                                  const HilbertBundle& target) {
  const Json& blocks = require(j, "blocks");
  std::vector<Mat> b;
  for (int t = 0; t < source.points(); ++t) {
    auto it = blocks.find(source.base().label(t));
    if (it == blocks.end())
      throw InputError("missing block at point '" + source.base().label(t) + "'");
    b.push_back(mat_from_json(*it, target.dim(t), source.dim(t)));
  }
  return BundleMorphism(source, target, std::move(b));
}

Json to_json(const FrobeniusStructure& f) {
  Json j = to_json(f.carrier);
  Json mult = Json::object(), unit = Json::object();
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    // The 3-tensor as nested arrays [out][in1][in2].
    Json tensor3 = Json::array();
    for (int a = 0; a < d; ++a) {
      Json plane = Json::array();
      for (int b = 0; b < d; ++b) {
        Json row = Json::array();
        for (int c = 0; c < d; ++c) row.push_back(complex_to_json(f.mult[t](a, b * d + c)));
        plane.push_back(std::move(row));
      }
      tensor3.push_back(std::move(plane));
    }
    mult[f.carrier.base().label(t)] = std::move(tensor3);
    unit[f.carrier.base().label(t)] = vec_to_json(f.unit[t]);
  }
  j["mult"] = std::move(mult);
  j["unit"] = std::move(unit);
  return j;
}

FrobeniusStructure frobenius_from_json(const Json& j) {
  HilbertBundle carrier = bundle_from_json(j);
  const Json& mult = require(j, "mult");
  const Json& unit = require(j, "unit");
  std::vector<Mat> m;
  std::vector<Vec> u;
  for (int t = 0; t < carrier.points(); ++t) {
    const int d = carrier.dim(t);
    const std::string& label = carrier.base().label(t);
    auto mit = mult.find(label);
    auto uit = unit.find(label);
    if (mit == mult.end()) throw InputError("missing mult at point '" + label + "'");
    if (uit == unit.end()) throw InputError("missing unit at point '" + label + "'");
    if (!mit->is_array() || static_cast<int>(mit->size()) != d)
      throw InputError("mult tensor at '" + label + "' must have " + std::to_string(d) + " planes");
    Mat mt(d, d * d);
    for (int a = 0; a < d; ++a) {
      const Json& plane = (*mit)[a];
      if (!plane.is_array() || static_cast<int>(plane.size()) != d)
        throw InputError("mult tensor plane shape mismatch at '" + label + "'");
      for (int b = 0; b < d; ++b) {
        const Json& row = plane[b];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
          throw InputError("mult tensor row shape mismatch at '" + label + "'");
        for (int c = 0; c < d; ++c) mt(a, b * d + c) = complex_from_json(row[c]);
      }
    }
    m.push_back(std::move(mt));
    u.push_back(vec_from_json(*uit, d));
  }
  return FrobeniusStructure(std::move(carrier), std::move(m), std::move(u));
}

Json to_json(const Covering& p) {
  Json proj = Json::object();
  for (int y = 0; y < p.total.size(); ++y)
    proj[p.total.label(y)] = p.base.label(p.proj[y]);
  return Json{{"total", to_json(p.total)}, {"base", to_json(p.base)}, {"proj", std::move(proj)}};
}

Covering covering_from_json(const Json& j) {
  BaseSpace total = base_space_from_json(require(j, "total"));
  BaseSpace base = base_space_from_json(require(j, "base"));
  const Json& proj = require(j, "proj");
  std::vector<int> p(total.size());
  for (int y = 0; y < total.size(); ++y) {
    auto it = proj.find(total.label(y));
    if (it == proj.end()) throw InputError("missing projection at '" + total.label(y) + "'");
    p[y] = base.index_of(it->get<std::string>());
  }
  return Covering(std::move(total), std::move(base), std::move(p));
}

Json to_json(const StochasticKernel& k) {
  Json weight = Json::array();
  for (int x = 0; x < k.source.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < k.target.size(); ++y) row.push_back(k.weight(x, y));
    weight.push_back(std::move(row));
  }
  return Json{{"source", to_json(k.source)}, {"target", to_json(k.target)},
              {"weight", std::move(weight)}};
}

StochasticKernel kernel_from_json(const Json& j) {
  BaseSpace source = base_space_from_json(require(j, "source"));
  BaseSpace target = base_space_from_json(require(j, "target"));
  const Json& weight = require(j, "weight");
  RealMat w(source.size(), target.size());
  if (!weight.is_array() || static_cast<int>(weight.size()) != source.size())
    throw InputError("kernel weight matrix must have one row per source point");
  for (int x = 0; x < source.size(); ++x) {
    if (static_cast<int>(weight[x].size()) != target.size())
      throw InputError("kernel weight row length mismatch");
    for (int y = 0; y < target.size(); ++y) w(x, y) = weight[x][y].get<double>();
  }
  return StochasticKernel(std::move(source), std::move(target), std::move(w));
}

Json to_json(const ConditionalExpectation& ce) {
  Json q = Json::object();
  for (int x = 0; x < ce.source().size(); ++x)
    q[ce.source().label(x)] = ce.target().label(ce.spectrum_map(x));
  Json kernel = Json::array();
  for (int d = 0; d < ce.target().size(); ++d) {
    Json row = Json::array();
    for (int x = 0; x < ce.source().size(); ++x) row.push_back(ce.kernel(d, x));
    kernel.push_back(std::move(row));
  }
  return Json{{"source", to_json(ce.source())}, {"target", to_json(ce.target())},
              {"q", std::move(q)}, {"kernel", std::move(kernel)}};
}

ConditionalExpectation expectation_from_json(const Json& j) {
  BaseSpace source = base_space_from_json(require(j, "source"));
  BaseSpace target = base_space_from_json(require(j, "target"));
  const Json& qj = require(j, "q");
  std::vector<int> q(source.size());
  for (int x = 0; x < source.size(); ++x) {
    auto it = qj.find(source.label(x));
    if (it == qj.end()) throw InputError("missing q at '" + source.label(x) + "'");
    q[x] = target.index_of(it->get<std::string>());
  }
  const Json& kj = require(j, "kernel");
  RealMat k(target.size(), source.size());
  if (!kj.is_array() || static_cast<int>(kj.size()) != target.size())
    throw InputError("expectation kernel must have one row per target point");
  for (int d = 0; d < target.size(); ++d) {
    if (static_cast<int>(kj[d].size()) != source.size())
      throw InputError("expectation kernel row length mismatch");
    for (int x = 0; x < source.size(); ++x) k(d, x) = kj[d][x].get<double>();
  }
  return make_conditional_expectation(source, target, q, k);
}

Json law_report_to_json(const LawReport& report) {
  const auto finite = [](double x) { return std::isfinite(x) ? x : 1e308; };
  Json laws = Json::object();
  for (Law l : all_laws()) {
    laws[law_name(l)] = Json{{"residual", finite(report.residual.at(l))},
                             {"pass", report.verdict.at(l)}};
  }
  return Json{{"tolerance", report.tolerance}, {"laws", std::move(laws)},
              {"min_unit_pairing", finite(report.min_unit_pairing)}};
}

}  // namespace frobase
