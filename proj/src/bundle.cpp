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

#include "frobase/bundle.hpp"

#include <algorithm>
#include <cmath>

namespace frobase {

HilbertBundle::HilbertBundle(BaseSpace base, std::vector<int> dims, std::vector<double> weights)
    : base_(std::move(base)), dims_(std::move(dims)), weights_(std::move(weights)) {
  if (static_cast<int>(dims_.size()) != base_.size() ||
      static_cast<int>(weights_.size()) != base_.size())
    throw InputError("bundle dims/weights must cover exactly the base points");
  for (int t = 0; t < base_.size(); ++t) {
    if (dims_[t] < 0) throw InputError("fiber dimension cannot be negative");
    if (dims_[t] > 0 && weights_[t] <= 0.0)
      throw InputError("fiber weight must be positive at '" + base_.label(t) + "'");
  }
}

HilbertBundle::HilbertBundle(BaseSpace base, std::vector<int> dims)
    : HilbertBundle(base, dims, std::vector<double>(base.size(), 1.0)) {}

HilbertBundle HilbertBundle::unit(const BaseSpace& base) {
  return HilbertBundle(base, std::vector<int>(base.size(), 1), std::vector<double>(base.size(), 1.0));
}

HilbertBundle HilbertBundle::zero(const BaseSpace& base) {
  return HilbertBundle(base, std::vector<int>(base.size(), 0), std::vector<double>(base.size(), 1.0));
}

int HilbertBundle::total_dim() const {
  int n = 0;
  for (int d : dims_) n += d;
  return n;
}

bool HilbertBundle::operator==(const HilbertBundle& other) const {
  if (base_ != other.base_ || dims_ != other.dims_) return false;
  // Weights of reassociated tensor products differ by rounding; compare with
  // a relative tolerance.
  for (size_t t = 0; t < weights_.size(); ++t) {
    const double a = weights_[t], b = other.weights_[t];
    if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) return false;
  }
  return true;
}

Section::Section(HilbertBundle b, std::vector<Vec> v) : bundle(std::move(b)), vectors(std::move(v)) {
  if (static_cast<int>(vectors.size()) != bundle.points())
    throw InputError("section must have one vector per point");
  for (int t = 0; t < bundle.points(); ++t)
    if (vectors[t].size() != bundle.dim(t))
      throw InputError("section vector length does not match fiber dimension at '" +
                       bundle.base().label(t) + "'");
}

Section Section::zero(const HilbertBundle& b) {
  std::vector<Vec> v;
  for (int t = 0; t < b.points(); ++t) v.push_back(Vec::Zero(b.dim(t)));
  return Section(b, std::move(v));
}

CFunction inner_product(const Section& x, const Section& y) {
  if (x.bundle != y.bundle) throw InputError("inner product requires sections of the same bundle");
  Vec out(x.bundle.points());
  for (int t = 0; t < x.bundle.points(); ++t)
    out[t] = x.bundle.weight(t) * x.vectors[t].dot(y.vectors[t]);
  return CFunction(x.bundle.base(), out);
}

BundleMorphism::BundleMorphism(HilbertBundle src, HilbertBundle tgt, std::vector<Mat> blks)
    : source(std::move(src)), target(std::move(tgt)), blocks(std::move(blks)) {
  if (source.base() != target.base()) throw InputError("morphism endpoints must share the base space");
  if (static_cast<int>(blocks.size()) != source.points())
    throw InputError("morphism must have one block per point");
  for (int t = 0; t < source.points(); ++t)
    if (blocks[t].rows() != target.dim(t) || blocks[t].cols() != source.dim(t))
      throw InputError("morphism block shape mismatch at '" + source.base().label(t) + "'");
}

BundleMorphism BundleMorphism::identity(const HilbertBundle& b) {
  std::vector<Mat> blocks;
  for (int t = 0; t < b.points(); ++t) blocks.push_back(Mat::Identity(b.dim(t), b.dim(t)));
  return BundleMorphism(b, b, std::move(blocks));
}

BundleMorphism BundleMorphism::zero(const HilbertBundle& src, const HilbertBundle& tgt) {
  std::vector<Mat> blocks;
  for (int t = 0; t < src.points(); ++t) blocks.push_back(Mat::Zero(tgt.dim(t), src.dim(t)));
  return BundleMorphism(src, tgt, std::move(blocks));
}

Section BundleMorphism::apply(const Section& x) const {
  if (x.bundle != source) throw InputError("morphism applied to a section of the wrong bundle");
  std::vector<Vec> out;
  for (int t = 0; t < source.points(); ++t) out.push_back(blocks[t] * x.vectors[t]);
  return Section(target, std::move(out));
}

BundleMorphism compose(const BundleMorphism& f, const BundleMorphism& g) {
  if (g.target != f.source) throw InputError("morphism composition endpoint mismatch");
  std::vector<Mat> blocks;
  for (int t = 0; t < f.source.points(); ++t) blocks.push_back(f.blocks[t] * g.blocks[t]);
  return BundleMorphism(g.source, f.target, std::move(blocks));
}

BundleMorphism operator*(const BundleMorphism& f, const BundleMorphism& g) { return compose(f, g); }

BundleMorphism operator+(const BundleMorphism& f, const BundleMorphism& g) {
  if (f.source != g.source || f.target != g.target) throw InputError("morphism sum endpoint mismatch");
  std::vector<Mat> blocks;
  for (int t = 0; t < f.source.points(); ++t) blocks.push_back(f.blocks[t] + g.blocks[t]);
  return BundleMorphism(f.source, f.target, std::move(blocks));
}

BundleMorphism operator-(const BundleMorphism& f, const BundleMorphism& g) {
  return f + scale(-1.0, g);
}

BundleMorphism scale(Complex c, const BundleMorphism& f) {
  std::vector<Mat> blocks;
  for (const Mat& b : f.blocks) blocks.push_back(c * b);
  return BundleMorphism(f.source, f.target, std::move(blocks));
}

BundleMorphism dagger(const BundleMorphism& f) {
  std::vector<Mat> blocks;
  for (int t = 0; t < f.source.points(); ++t) {
    double ratio = 1.0;
    if (f.source.dim(t) > 0 && f.target.dim(t) > 0)
      ratio = f.target.weight(t) / f.source.weight(t);
    blocks.push_back(ratio * f.blocks[t].adjoint());
  }
  return BundleMorphism(f.target, f.source, std::move(blocks));
}

double distance(const BundleMorphism& f, const BundleMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    throw InputError("distance requires morphisms with equal endpoints");
  double m = 0.0;
  for (int t = 0; t < f.source.points(); ++t)
    m = std::max(m, operator_norm(f.blocks[t] - g.blocks[t]));
  return m;
}

double morphism_norm(const BundleMorphism& f) {
  double m = 0.0;
  for (const Mat& b : f.blocks) m = std::max(m, operator_norm(b));
  return m;
}

double unitarity_defect(const BundleMorphism& f) {
  const BundleMorphism fd = dagger(f);
  return std::max(distance(fd * f, BundleMorphism::identity(f.source)),
                  distance(f * fd, BundleMorphism::identity(f.target)));
}

BundleMorphism morphism_from_section(const Section& x) {
  const HilbertBundle unit = HilbertBundle::unit(x.bundle.base());
  std::vector<Mat> blocks;
  for (int t = 0; t < x.bundle.points(); ++t) {
    Mat b(x.bundle.dim(t), 1);
    b.col(0) = x.vectors[t];
    blocks.push_back(b);
  }
  return BundleMorphism(unit, x.bundle, std::move(blocks));
}

Section section_from_morphism(const BundleMorphism& f) {
  if (f.source != HilbertBundle::unit(f.source.base()))
    throw InputError("section extraction requires a morphism out of the tensor unit");
  std::vector<Vec> vectors;
  for (int t = 0; t < f.source.points(); ++t) vectors.push_back(f.blocks[t].col(0));
  return Section(f.target, std::move(vectors));
}

}  // namespace frobase
