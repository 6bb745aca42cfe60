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

#include "frobase/monoidal.hpp"

#include <algorithm>
#include <cmath>

namespace frobase {

HilbertBundle tensor(const HilbertBundle& e, const HilbertBundle& f) {
  if (e.base() != f.base()) throw InputError("tensor requires bundles over the same base");
  std::vector<int> dims(e.points());
  std::vector<double> weights(e.points());
  for (int t = 0; t < e.points(); ++t) {
    dims[t] = e.dim(t) * f.dim(t);
    weights[t] = e.weight(t) * f.weight(t);
  }
  return HilbertBundle(e.base(), std::move(dims), std::move(weights));
}

BundleMorphism tensor_mor(const BundleMorphism& f, const BundleMorphism& g) {
  if (f.source.base() != g.source.base())
    throw InputError("tensor of morphisms requires the same base");
  std::vector<Mat> blocks;
  for (int t = 0; t < f.source.points(); ++t) blocks.push_back(kron(f.blocks[t], g.blocks[t]));
  return BundleMorphism(tensor(f.source, g.source), tensor(f.target, g.target), std::move(blocks));
}

Section tensor_section(const Section& x, const Section& y) {
  std::vector<Vec> vectors;
  for (int t = 0; t < x.bundle.points(); ++t)
    vectors.push_back(kron_vec(x.vectors[t], y.vectors[t]));
  return Section(tensor(x.bundle, y.bundle), std::move(vectors));
}

BundleMorphism associator(const HilbertBundle& e, const HilbertBundle& f, const HilbertBundle& g) {
  // Row-major flattening identifies ((i j) k) with (i (j k)).
  const HilbertBundle src = tensor(e, tensor(f, g));
  const HilbertBundle tgt = tensor(tensor(e, f), g);
  std::vector<Mat> blocks;
  for (int t = 0; t < src.points(); ++t)
    blocks.push_back(Mat::Identity(tgt.dim(t), src.dim(t)));
  return BundleMorphism(src, tgt, std::move(blocks));
}

BundleMorphism left_unitor(const HilbertBundle& e) {
  const HilbertBundle src = tensor(HilbertBundle::unit(e.base()), e);
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) blocks.push_back(Mat::Identity(e.dim(t), e.dim(t)));
  return BundleMorphism(src, e, std::move(blocks));
}

BundleMorphism right_unitor(const HilbertBundle& e) {
  const HilbertBundle src = tensor(e, HilbertBundle::unit(e.base()));
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) blocks.push_back(Mat::Identity(e.dim(t), e.dim(t)));
  return BundleMorphism(src, e, std::move(blocks));
}

BundleMorphism symmetry(const HilbertBundle& e, const HilbertBundle& f) {
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) {
    const int de = e.dim(t), df = f.dim(t);
    Mat s = Mat::Zero(df * de, de * df);
    for (int i = 0; i < de; ++i)
      for (int j = 0; j < df; ++j) s(j * de + i, i * df + j) = 1.0;
    blocks.push_back(std::move(s));
  }
  return BundleMorphism(tensor(e, f), tensor(f, e), std::move(blocks));
}

Biproduct biproduct(const HilbertBundle& e, const HilbertBundle& f) {
  if (e.base() != f.base()) throw InputError("biproduct requires bundles over the same base");
  std::vector<int> dims(e.points());
  std::vector<double> weights(e.points());
  for (int t = 0; t < e.points(); ++t) {
    if (e.dim(t) > 0 && f.dim(t) > 0 && e.weight(t) != f.weight(t))
      throw InputError("biproduct requires equal fiber weights at '" + e.base().label(t) + "'");
    dims[t] = e.dim(t) + f.dim(t);
    weights[t] = e.dim(t) > 0 ? e.weight(t) : f.weight(t);
    if (dims[t] == 0) weights[t] = 1.0;
  }
  HilbertBundle sum(e.base(), std::move(dims), std::move(weights));

  std::vector<Mat> b1, b2;
  for (int t = 0; t < e.points(); ++t) {
    Mat i1 = Mat::Zero(sum.dim(t), e.dim(t));
    Mat i2 = Mat::Zero(sum.dim(t), f.dim(t));
    i1.topRows(e.dim(t)) = Mat::Identity(e.dim(t), e.dim(t));
    i2.bottomRows(f.dim(t)) = Mat::Identity(f.dim(t), f.dim(t));
    b1.push_back(std::move(i1));
    b2.push_back(std::move(i2));
  }
  Biproduct out;
  out.i1 = BundleMorphism(e, sum, std::move(b1));
  out.i2 = BundleMorphism(f, sum, std::move(b2));
  out.p1 = dagger(out.i1);
  out.p2 = dagger(out.i2);
  out.sum = std::move(sum);
  return out;
}

Duality dual(const HilbertBundle& e) {
  std::vector<double> weights(e.points());
  for (int t = 0; t < e.points(); ++t)
    weights[t] = e.dim(t) > 0 ? 1.0 / e.weight(t) : 1.0;
  HilbertBundle dual_bundle(e.base(), e.dims(), std::move(weights));

  const HilbertBundle unit = HilbertBundle::unit(e.base());
  std::vector<Mat> zeta_blocks, eps_blocks;
  for (int t = 0; t < e.points(); ++t) {
    const int d = e.dim(t);
    Mat z = Mat::Zero(d * d, 1);
    Mat ep = Mat::Zero(1, d * d);
    for (int i = 0; i < d; ++i) {
      z(i * d + i, 0) = 1.0;
      ep(0, i * d + i) = 1.0;
    }
    zeta_blocks.push_back(std::move(z));
    eps_blocks.push_back(std::move(ep));
  }
  Duality out;
  out.zeta = BundleMorphism(unit, tensor(dual_bundle, e), std::move(zeta_blocks));
  out.eps = BundleMorphism(tensor(e, dual_bundle), unit, std::move(eps_blocks));
  out.dual = std::move(dual_bundle);
  return out;
}

CFunction categorical_dimension(const HilbertBundle& e) {
  const Duality d = dual(e);
  const BundleMorphism sigma = symmetry(d.dual, e);
  const BundleMorphism composite = d.eps * sigma * d.zeta;
  Vec values(e.points());
  for (int t = 0; t < e.points(); ++t) values[t] = composite.blocks[t](0, 0);
  return CFunction(e.base(), values);
}

Mat orthonormal_column_basis(const Mat& columns) {
  if (columns.cols() == 0 || columns.rows() == 0) return Mat(columns.rows(), 0);
  Eigen::SelfAdjointEigenSolver<Mat> es(columns * columns.adjoint());
  const auto& evals = es.eigenvalues();
  const double cutoff = kRankRelTol * std::max(evals(evals.size() - 1), 0.0);
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    if (evals(i) > cutoff && evals(i) > 0.0) keep.push_back(static_cast<int>(i));
  Mat basis(columns.rows(), keep.size());
  for (size_t k = 0; k < keep.size(); ++k) basis.col(k) = es.eigenvectors().col(keep[k]);
  return basis;
}

Mat null_space_basis(const Mat& m) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m);
  const auto& evals = es.eigenvalues();
  const double cutoff = kRankRelTol * std::max(evals(evals.size() - 1), 0.0);
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    if (evals(i) <= cutoff) keep.push_back(static_cast<int>(i));
  Mat basis(m.cols(), keep.size());
  for (size_t k = 0; k < keep.size(); ++k) basis.col(k) = es.eigenvectors().col(keep[k]);
  return basis;
}

Kernel kernel(const BundleMorphism& f) {
  std::vector<int> dims(f.source.points());
  std::vector<Mat> blocks;
  for (int t = 0; t < f.source.points(); ++t) {
    Mat basis = null_space_basis(f.blocks[t]);
    dims[t] = static_cast<int>(basis.cols());
    blocks.push_back(std::move(basis));
  }
  HilbertBundle k_bundle(f.source.base(), std::move(dims), f.source.weights());
  Kernel out;
  out.inclusion = BundleMorphism(k_bundle, f.source, std::move(blocks));
  out.bundle = std::move(k_bundle);
  return out;
}

Subobject subobject_from_subset(const BaseSpace& space, const std::vector<std::string>& subset) {
  std::vector<int> idx = resolve_subset(space, subset);
  std::vector<bool> in_subset(space.size(), false);
  for (int i : idx) in_subset[i] = true;

  std::vector<int> dims(space.size());
  for (int t = 0; t < space.size(); ++t) dims[t] = in_subset[t] ? 0 : 1;
  HilbertBundle e(space, std::move(dims), std::vector<double>(space.size(), 1.0));

  std::vector<Mat> blocks;
  for (int t = 0; t < space.size(); ++t) {
    Mat b = in_subset[t] ? Mat(Mat::Zero(1, 0)) : Mat(Mat::Identity(1, 1));
    blocks.push_back(std::move(b));
  }
  Subobject out;
  out.inclusion = BundleMorphism(e, HilbertBundle::unit(space), std::move(blocks));
  out.bundle = std::move(e);
  return out;
}

}  // namespace frobase
