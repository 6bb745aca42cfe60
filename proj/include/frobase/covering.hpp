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

#include "frobase/frobenius.hpp"

namespace frobase {

/// A finite covering: a surjection of finite sets p : Y ->> X. On a finite
/// discrete base every finite surjection is a covering.
struct Covering {
  BaseSpace total;       // Y
  BaseSpace base;        // X
  std::vector<int> proj; // p : Y -> X by point index

  Covering() = default;
  Covering(BaseSpace y, BaseSpace x, std::vector<int> p, bool allow_non_surjective = false);

  static Covering identity(const BaseSpace& space);

  std::vector<int> fiber(int t) const;  // p^{-1}(t) in total order
  int fiber_size(int t) const;
};

/// A map of coverings over the same base: f : Y -> Y' with p' o f = p.
struct CoveringMorphism {
  Covering source;
  Covering target;
  std::vector<int> map;  // Y -> Y'

  CoveringMorphism() = default;
  CoveringMorphism(Covering src, Covering tgt, std::vector<int> m);
};

/// The Frobenius structure on C(Y): fiber at t = functions on p^{-1}(t) with
/// weight 1/|p^{-1}(t)|, pointwise multiplication, unit f -> f o p. The
/// adjoints come out as gamma(g)(t) = sum_{p(y)=t} g(y)/|p^{-1}(t)| and
/// delta(h)(y,y) = h(y) |p^{-1}(p(y))|. Commutative, nondegenerate with
/// eta! eta = id, specialisable with specialiser 1/sqrt(|fiber|); speciality
/// itself fails by the factor |fiber| on every multi-sheet fiber.
FrobeniusStructure frobenius_from_covering(const Covering& p);

struct PullbackResult {
  Covering pullback;            // Y x_X Y over X; points labeled "(y1,y2)"
  Section diagonal_idempotent;  // indicator of the diagonal in the pullback carrier
  /// Unitary C(Y) (x) C(Y) -> C(Y x_X Y) identifying the tensor square with
  /// the pullback covering's carrier.
  BundleMorphism tensor_iso;
};

PullbackResult pullback(const Covering& p);

/// Fiber product p x_X q as a covering of X, with the unitary *-isomorphism
/// between frobenius_from_covering(p x q) and the tensor structure.
struct FiberProductResult {
  Covering product;
  BundleMorphism tensor_iso;  // carrier(F_p) (x) carrier(F_q) -> carrier(F_{p x q})
};
FiberProductResult fiber_product(const Covering& p, const Covering& q);

/// Gelfand spectrum of a commutative nondegenerate structure: the covering
/// whose sheets over t are the minimal idempotents of the fiber algebra.
struct SpectrumResult {
  Covering covering;
  /// Per base point, the minimal idempotents of (the specialised) F's fiber,
  /// matching the sheet order of `covering`.
  std::vector<std::vector<Vec>> idempotents;
  /// Character table rows (sheet) by columns (fiber basis), per base point.
  std::vector<Mat> characters;
};

SpectrumResult spectrum(const FrobeniusStructure& f, uint64_t seed = 7, double tol = kDefaultTol);

/// The unitary *-isomorphism specialise(frobenius_from_covering(spectrum(F)))
/// -> specialise(F) witnessing the round trip, with its residual.
struct RoundTrip {
  SpectrumResult spectrum;
  FrobeniusStructure reconstructed;   // specialise(from_covering(spectrum))
  FrobeniusStructure specialised;     // specialise(F)
  BundleMorphism iso;                 // unitary *-isomorphism between them
  double unitarity_residual = 0.0;
  double star_hom_residual = 0.0;
};

RoundTrip spectrum_round_trip(const FrobeniusStructure& f, uint64_t seed = 7,
                              double tol = kDefaultTol);

/// The pullback *-homomorphism h -> h o map between the induced carriers,
/// contravariant in the covering morphism.
BundleMorphism covering_to_star_hom(const CoveringMorphism& m);

}  // namespace frobase
