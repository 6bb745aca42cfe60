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

#include "frobase/bimod.hpp"

#include <algorithm>
#include <cmath>

namespace frobase {

Cell1::Cell1(BaseSpace src, BaseSpace tgt, Eigen::MatrixXi d)
    : source0(std::move(src)), target0(std::move(tgt)), dims(std::move(d)) {
  if (dims.rows() != source0.size() || dims.cols() != target0.size())
    throw InputError("1-cell dims must be indexed by (source0, target0)");
  for (int x = 0; x < dims.rows(); ++x)
    for (int y = 0; y < dims.cols(); ++y)
      if (dims(x, y) < 0) throw InputError("1-cell dimensions cannot be negative");
}

Cell1 Cell1::identity(const BaseSpace& x) {
  Eigen::MatrixXi d = Eigen::MatrixXi::Identity(x.size(), x.size());
  return Cell1(x, x, std::move(d));
}

Cell2::Cell2(Cell1 src, Cell1 tgt, std::vector<std::vector<Mat>> blks)
    : source1(std::move(src)), target1(std::move(tgt)), blocks(std::move(blks)) {
  if (source1.source0 != target1.source0 || source1.target0 != target1.target0)
    throw InputError("2-cell endpoints must be parallel 1-cells");
  if (static_cast<int>(blocks.size()) != source1.source0.size())
    throw InputError("2-cell must have a block row per source-0 point");
  for (int x = 0; x < source1.source0.size(); ++x) {
    if (static_cast<int>(blocks[x].size()) != source1.target0.size())
      throw InputError("2-cell must have a block per (x, y)");
    for (int y = 0; y < source1.target0.size(); ++y)
      if (blocks[x][y].rows() != target1.dim(x, y) || blocks[x][y].cols() != source1.dim(x, y))
        throw InputError("2-cell block shape mismatch");
  }
}

Cell2 Cell2::identity(const Cell1& e) {
  std::vector<std::vector<Mat>> blocks(e.source0.size());
  for (int x = 0; x < e.source0.size(); ++x)
    for (int y = 0; y < e.target0.size(); ++y)
      blocks[x].push_back(Mat::Identity(e.dim(x, y), e.dim(x, y)));
  return Cell2(e, e, std::move(blocks));
}

Cell1 hcompose(const Cell1& e, const Cell1& f) {
  if (e.target0 != f.source0) throw InputError("1-cell composition endpoint mismatch");
  Eigen::MatrixXi dims = e.dims * f.dims;
  return Cell1(e.source0, f.target0, std::move(dims));
}

Cell2 hcompose2(const Cell2& f, const Cell2& g) {
  if (f.source1.target0 != g.source1.source0)
    throw InputError("2-cell horizontal composition endpoint mismatch");
  const Cell1 src = hcompose(f.source1, g.source1);
  const Cell1 tgt = hcompose(f.target1, g.target1);
  std::vector<std::vector<Mat>> blocks(src.source0.size());
  const int ny = f.source1.target0.size();
  for (int x = 0; x < src.source0.size(); ++x)
    for (int z = 0; z < src.target0.size(); ++z) {
      Mat b = Mat::Zero(tgt.dim(x, z), src.dim(x, z));
      int src_off = 0, tgt_off = 0;
      for (int y = 0; y < ny; ++y) {
        const Mat k = kron(f.block(x, y), g.block(y, z));
        b.block(tgt_off, src_off, k.rows(), k.cols()) = k;
        src_off += f.source1.dim(x, y) * g.source1.dim(y, z);
        tgt_off += f.target1.dim(x, y) * g.target1.dim(y, z);
      }
      blocks[x].push_back(std::move(b));
    }
  return Cell2(src, tgt, std::move(blocks));
}

Cell2 vcompose(const Cell2& f, const Cell2& g) {
  const bool dims_match = g.target1.dims.rows() == f.source1.dims.rows() &&
                          g.target1.dims.cols() == f.source1.dims.cols() &&
                          (g.target1.dims.array() == f.source1.dims.array()).all();
  if (!dims_match || g.target1.source0 != f.source1.source0 ||
      g.target1.target0 != f.source1.target0)
    throw InputError("2-cell vertical composition endpoint mismatch");
  std::vector<std::vector<Mat>> blocks(f.source1.source0.size());
  for (int x = 0; x < f.source1.source0.size(); ++x)
    for (int y = 0; y < f.source1.target0.size(); ++y)
      blocks[x].push_back(f.block(x, y) * g.block(x, y));
  return Cell2(g.source1, f.target1, std::move(blocks));
}

Cell2 dagger2(const Cell2& f) {
  std::vector<std::vector<Mat>> blocks(f.source1.source0.size());
  for (int x = 0; x < f.source1.source0.size(); ++x)
    for (int y = 0; y < f.source1.target0.size(); ++y)
      blocks[x].push_back(f.block(x, y).adjoint());
  return Cell2(f.target1, f.source1, std::move(blocks));
}

Cell2 sub2(const Cell2& f, const Cell2& g) {
  std::vector<std::vector<Mat>> blocks(f.source1.source0.size());
  for (int x = 0; x < f.source1.source0.size(); ++x)
    for (int y = 0; y < f.source1.target0.size(); ++y)
      blocks[x].push_back(f.block(x, y) - g.block(x, y));
  return Cell2(f.source1, f.target1, std::move(blocks));
}

double distance2(const Cell2& f, const Cell2& g) {
  double m = 0.0;
  for (int x = 0; x < f.source1.source0.size(); ++x)
    for (int y = 0; y < f.source1.target0.size(); ++y)
      m = std::max(m, operator_norm(f.block(x, y) - g.block(x, y)));
  return m;
}

Cell2 associator2(const Cell1& e, const Cell1& f, const Cell1& g) {
  // E o (F o G) -> (E o F) o G as a block permutation (y,e,z,f,g)->(z,y,e,f,g).
  const Cell1 src = hcompose(e, hcompose(f, g));
  const Cell1 tgt = hcompose(hcompose(e, f), g);
  const BaseSpace& ys = e.target0;
  const BaseSpace& zs = f.target0;

  std::vector<std::vector<Mat>> blocks(src.source0.size());
  for (int x = 0; x < src.source0.size(); ++x)
    for (int w = 0; w < src.target0.size(); ++w) {
      Mat p = Mat::Zero(tgt.dim(x, w), src.dim(x, w));
      int src_pos = 0;
      for (int y = 0; y < ys.size(); ++y)
        for (int ei = 0; ei < e.dim(x, y); ++ei)
          for (int z = 0; z < zs.size(); ++z)
            for (int fi = 0; fi < f.dim(y, z); ++fi)
              for (int gi = 0; gi < g.dim(z, w); ++gi) {
                // Target block offset: sum over z' < z, then the (y, ei, fi)
                // position inside (E o F)(x, z), then gi.
                int tgt_pos = 0;
                for (int z2 = 0; z2 < z; ++z2)
                  tgt_pos += hcompose(e, f).dim(x, z2) * g.dim(z2, w);
                int ef_pos = 0;
                for (int y2 = 0; y2 < y; ++y2) ef_pos += e.dim(x, y2) * f.dim(y2, z);
                ef_pos += ei * f.dim(y, z) + fi;
                tgt_pos += ef_pos * g.dim(z, w) + gi;
                p(tgt_pos, src_pos) = 1.0;
                ++src_pos;
              }
      blocks[x].push_back(std::move(p));
    }
  return Cell2(src, tgt, std::move(blocks));
}

Cell2 left_unitor2(const Cell1& e) {
  const Cell1 src = hcompose(Cell1::identity(e.source0), e);
  std::vector<std::vector<Mat>> blocks(e.source0.size());
  for (int x = 0; x < e.source0.size(); ++x)
    for (int y = 0; y < e.target0.size(); ++y)
      blocks[x].push_back(Mat::Identity(e.dim(x, y), src.dim(x, y)));
  return Cell2(src, e, std::move(blocks));
}

Cell2 right_unitor2(const Cell1& e) {
  const Cell1 src = hcompose(e, Cell1::identity(e.target0));
  std::vector<std::vector<Mat>> blocks(e.source0.size());
  for (int x = 0; x < e.source0.size(); ++x)
    for (int y = 0; y < e.target0.size(); ++y)
      blocks[x].push_back(Mat::Identity(e.dim(x, y), src.dim(x, y)));
  return Cell2(src, e, std::move(blocks));
}

namespace {

Cell1 random_cell1(const BaseSpace& src, Rng& rng, int max_points, int max_dim) {
  const int n = rng.integer(1, max_points);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  BaseSpace tgt(std::move(labels));
  Eigen::MatrixXi dims(src.size(), tgt.size());
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < tgt.size(); ++y) dims(x, y) = rng.integer(0, max_dim);
  return Cell1(src, tgt, std::move(dims));
}

Cell2 random_endo2(const Cell1& e, Rng& rng) {
  std::vector<std::vector<Mat>> blocks(e.source0.size());
  for (int x = 0; x < e.source0.size(); ++x)
    for (int y = 0; y < e.target0.size(); ++y)
      blocks[x].push_back(rng.matrix(e.dim(x, y), e.dim(x, y)));
  return Cell2(e, e, std::move(blocks));
}

double cell2_unitarity(const Cell2& u) {
  return std::max(distance2(vcompose(dagger2(u), u), Cell2::identity(u.source1)),
                  distance2(vcompose(u, dagger2(u)), Cell2::identity(u.target1)));
}

}  // namespace

CoherenceReport coherence_check(const Cell1& e, const Cell1& f, const Cell1& g, uint64_t seed) {
  Rng rng(seed);
  CoherenceReport out;

  // Pentagon on (E, F, G, H) with a seeded H.
  const Cell1 h = random_cell1(g.target0, rng, 3, 2);
  const Cell2 path1 =
      vcompose(associator2(hcompose(e, f), g, h), associator2(e, f, hcompose(g, h)));
  const Cell2 path2 = vcompose(
      vcompose(hcompose2(associator2(e, f, g), Cell2::identity(h)), associator2(e, hcompose(f, g), h)),
      hcompose2(Cell2::identity(e), associator2(f, g, h)));
  out.pentagon_residual = distance2(path1, path2);

  // Triangle on (E, F).
  const Cell2 tri_lhs =
      vcompose(hcompose2(right_unitor2(e), Cell2::identity(f)), associator2(e, Cell1::identity(e.target0), f));
  const Cell2 tri_rhs = hcompose2(Cell2::identity(e), left_unitor2(f));
  out.triangle_residual = distance2(tri_lhs, tri_rhs);

  out.unitarity_residual = std::max({cell2_unitarity(associator2(e, f, g)),
                                     cell2_unitarity(left_unitor2(e)),
                                     cell2_unitarity(right_unitor2(e))});

  const Cell2 f1 = random_endo2(e, rng), f2 = random_endo2(e, rng);
  const Cell2 g1 = random_endo2(f, rng), g2 = random_endo2(f, rng);
  out.interchange_residual = distance2(hcompose2(vcompose(f2, f1), vcompose(g2, g1)),
                                       vcompose(hcompose2(f2, g2), hcompose2(f1, g1)));
  return out;
}

BaseSpace canonical_zero_cell(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return BaseSpace(std::move(labels));
}

Cell1 from_2fhilb(int m, int n, const Eigen::MatrixXi& dims) {
  if (dims.rows() != m || dims.cols() != n) throw InputError("2FHilb 1-cell dims must be m x n");
  return Cell1(canonical_zero_cell(m), canonical_zero_cell(n), dims);
}

PseudofunctorComparison pseudofunctor_comparison(int m, int k, int n, const Eigen::MatrixXi& h,
                                                 const Eigen::MatrixXi& g) {
  PseudofunctorComparison out;
  const Cell1 image_h = from_2fhilb(m, k, h);
  const Cell1 image_g = from_2fhilb(k, n, g);
  const Cell1 composed = hcompose(image_h, image_g);
  const Cell1 image_of_product = from_2fhilb(m, n, h * g);

  // Both sides enumerate blocks lexicographically in (y, h-index, g-index),
  // so the comparison cell is the identity permutation.
  std::vector<std::vector<Mat>> blocks(m);
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < n; ++z)
      blocks[x].push_back(Mat::Identity(image_of_product.dim(x, z), composed.dim(x, z)));
  out.composition_comparison = Cell2(composed, image_of_product, std::move(blocks));

  const Cell1 image_id = from_2fhilb(n, n, Eigen::MatrixXi::Identity(n, n));
  out.identity_comparison = Cell2::identity(image_id);
  out.unitarity_residual = std::max(cell2_unitarity(out.composition_comparison),
                                    cell2_unitarity(out.identity_comparison));
  return out;
}

}  // namespace frobase
