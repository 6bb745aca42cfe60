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

#include "frobase/conditional_expectation.hpp"

namespace frobase {

/// A morphism X -> Y of the finite Radon-kernel category: one finite measure
/// on Y per point of X, stored as a nonnegative |X| x |Y| weight matrix. No
/// normalization is required.
struct StochasticKernel {
  BaseSpace source;  // X
  BaseSpace target;  // Y
  RealMat weight;    // weight(x, y)

  StochasticKernel() = default;
  StochasticKernel(BaseSpace src, BaseSpace tgt, RealMat w);

  static StochasticKernel identity(const BaseSpace& space);  // Dirac kernels
};

/// Kernel composition (g o f)(x, z) = sum_y f(x,y) g(y,z).
StochasticKernel radon_compose(const StochasticKernel& f, const StochasticKernel& g);

/// A positive linear map C(Y) -> C(X) between the finite commutative
/// algebras, applied pointwise through a real matrix.
struct PositiveMap {
  BaseSpace source;  // Y, the domain algebra's space
  BaseSpace target;  // X
  RealMat matrix;    // |X| x |Y|

  CFunction apply(const CFunction& h) const;
};

/// The duality functor on morphisms: F(f)(h)(x) = sum_y h(y) f(x,y).
/// Contravariant: F(g o f) = F(f) o F(g).
PositiveMap radon_to_cp(const StochasticKernel& f);

/// Composition of positive maps (matrix product of the representations).
PositiveMap compose_cp_maps(const PositiveMap& second, const PositiveMap& first);

/// The kernel D -> X of a conditional expectation, f(d)(x) = K(d,x), together
/// with the spectrum map q; satisfies supp(f(d)) subset of q^{-1}(d), and its
/// positive map equals the expectation's.
struct RadonOfExpectation {
  StochasticKernel kernel;  // D -> X
  std::vector<int> q;       // X -> D
};

RadonOfExpectation ce_to_radon(const ConditionalExpectation& ce);

}  // namespace frobase
