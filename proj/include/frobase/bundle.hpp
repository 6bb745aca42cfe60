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

#pragma once

#include <vector>

#include "frobase/base_space.hpp"

namespace frobase {

/// A finite Hilbert bundle over a finite discrete base: one finite-dimensional
/// fiber per point. The C(X)-valued inner product on sections is the standard
/// per-point inner product scaled by a positive per-point weight:
///   <x, y>(t) = weight(t) * sum_i conj(x_t[i]) y_t[i]
/// conjugate-linear in the first argument.
class HilbertBundle {
 public:
  HilbertBundle() = default;
  HilbertBundle(BaseSpace base, std::vector<int> dims, std::vector<double> weights);
  /// Unit weights.
  HilbertBundle(BaseSpace base, std::vector<int> dims);

  /// The tensor unit C(X): every fiber one-dimensional, weight 1.
  static HilbertBundle unit(const BaseSpace& base);
  /// The zero bundle over X.
  static HilbertBundle zero(const BaseSpace& base);

  const BaseSpace& base() const { return base_; }
  int points() const { return base_.size(); }
  int dim(int t) const { return dims_.at(t); }
  const std::vector<int>& dims() const { return dims_; }
  double weight(int t) const { return weights_.at(t); }
  const std::vector<double>& weights() const { return weights_; }
  int total_dim() const;

  bool operator==(const HilbertBundle& other) const;
  bool operator!=(const HilbertBundle& other) const { return !(*this == other); }

 private:
  BaseSpace base_;
  std::vector<int> dims_;
  std::vector<double> weights_;
};

/// A section: one fiber vector per point.
struct Section {
  HilbertBundle bundle;
  std::vector<Vec> vectors;

  Section() = default;
  Section(HilbertBundle b, std::vector<Vec> v);
  static Section zero(const HilbertBundle& b);
};

/// The C(X)-valued inner product of two sections.
CFunction inner_product(const Section& x, const Section& y);

/// An adjointable map between bundles over the same base: one complex block
/// per point, of shape dim_target(t) x dim_source(t).
struct BundleMorphism {
  HilbertBundle source;
  HilbertBundle target;
  std::vector<Mat> blocks;

  BundleMorphism() = default;
  BundleMorphism(HilbertBundle src, HilbertBundle tgt, std::vector<Mat> blks);

  static BundleMorphism identity(const HilbertBundle& b);
  static BundleMorphism zero(const HilbertBundle& src, const HilbertBundle& tgt);

  Section apply(const Section& x) const;
};

BundleMorphism compose(const BundleMorphism& f, const BundleMorphism& g);  // f after g
BundleMorphism operator*(const BundleMorphism& f, const BundleMorphism& g);
BundleMorphism operator+(const BundleMorphism& f, const BundleMorphism& g);
BundleMorphism operator-(const BundleMorphism& f, const BundleMorphism& g);
BundleMorphism scale(Complex c, const BundleMorphism& f);

/// The adjoint with respect to the weighted inner products:
/// block(t) -> (w_src(t)/w_tgt(t))^... determined by <f x, y> = <x, f! y>;
/// concretely (w_tgt(t)/w_src(t)) * conjugate-transpose(block(t)).
BundleMorphism dagger(const BundleMorphism& f);

/// max over points of the operator norm of (f - g)'s blocks.
double distance(const BundleMorphism& f, const BundleMorphism& g);
double morphism_norm(const BundleMorphism& f);

/// Whether every block is unitary (f! f = id and f f! = id) within tol.
double unitarity_defect(const BundleMorphism& f);

/// A morphism C(X) -> E from a section (phi |-> x phi), and back.
BundleMorphism morphism_from_section(const Section& x);
Section section_from_morphism(const BundleMorphism& f);

}  // namespace frobase
