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

#include "frobase/localization.hpp"

#include <cmath>

namespace frobase {

namespace {

// Offsets of each support point's block inside the localized fiber over d.
struct FiberLayout {
  std::vector<int> points;   // support points of q^{-1}(d)
  std::vector<int> offsets;  // block start per support point
  int dim = 0;
};

FiberLayout layout(const ConditionalExpectation& ce, const HilbertBundle& e, int d) {
  FiberLayout out;
  for (int x : ce.support(d)) {
    out.points.push_back(x);
    out.offsets.push_back(out.dim);
    out.dim += e.dim(x);
  }
  return out;
}

}  // namespace

HilbertBundle localize(const ConditionalExpectation& ce, const HilbertBundle& e) {
  if (e.base() != ce.source()) throw InputError("localize requires a bundle over the expectation's source");
  std::vector<int> dims(ce.target().size());
  for (int d = 0; d < ce.target().size(); ++d) dims[d] = layout(ce, e, d).dim;
  return HilbertBundle(ce.target(), std::move(dims), std::vector<double>(ce.target().size(), 1.0));
}

BundleMorphism localize_mor(const ConditionalExpectation& ce, const BundleMorphism& f) {
  const HilbertBundle src = localize(ce, f.source);
  const HilbertBundle tgt = localize(ce, f.target);
  std::vector<Mat> blocks;
  for (int d = 0; d < ce.target().size(); ++d) {
    const FiberLayout ls = layout(ce, f.source, d);
    const FiberLayout lt = layout(ce, f.target, d);
    Mat block = Mat::Zero(tgt.dim(d), src.dim(d));
    for (size_t k = 0; k < ls.points.size(); ++k) {
      const int x = ls.points[k];
      // In orthonormalized coordinates the kernel weight cancels; only the
      // bundle weight ratio survives.
      const double s = std::sqrt(f.target.weight(x) / f.source.weight(x));
      block.block(lt.offsets[k], ls.offsets[k], f.target.dim(x), f.source.dim(x)) =
          s * f.blocks[x];
    }
    blocks.push_back(std::move(block));
  }
  return BundleMorphism(src, tgt, std::move(blocks));
}

BundleMorphism localization_tensor_comparison(const ConditionalExpectation& ce,
                                              const HilbertBundle& e, const HilbertBundle& f) {
  const HilbertBundle loc_e = localize(ce, e);
  const HilbertBundle loc_f = localize(ce, f);
  const HilbertBundle ef = tensor(e, f);
  const HilbertBundle loc_ef = localize(ce, ef);
  const HilbertBundle src = tensor(loc_e, loc_f);

  std::vector<Mat> blocks;
  for (int d = 0; d < ce.target().size(); ++d) {
    const FiberLayout le = layout(ce, e, d);
    const FiberLayout lf = layout(ce, f, d);
    const FiberLayout lef = layout(ce, ef, d);
    Mat block = Mat::Zero(loc_ef.dim(d), src.dim(d));
    // Elementary tensors of sections restrict diagonally: the (x, x') cross
    // blocks with x != x' map to zero, the diagonal block rescales by
    // 1/sqrt(K(d,x)).
    for (size_t k = 0; k < le.points.size(); ++k) {
      const int x = le.points[k];
      const double s = 1.0 / std::sqrt(ce.kernel(d, x));
      for (int i = 0; i < e.dim(x); ++i)
        for (int j = 0; j < f.dim(x); ++j) {
          const int row = lef.offsets[k] + i * f.dim(x) + j;
          const int col = (le.offsets[k] + i) * loc_f.dim(d) + (lf.offsets[k] + j);
          block(row, col) = s;
        }
    }
    blocks.push_back(std::move(block));
  }
  return BundleMorphism(src, loc_ef, std::move(blocks));
}

}  // namespace frobase
