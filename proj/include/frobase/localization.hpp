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
#include "frobase/monoidal.hpp"

namespace frobase {

/// The localization of E along a conditional expectation: the fiber over d is
/// the quotient of the direct sum of E_x over x in q^{-1}(d) by the null
/// space of the semi-inner product sum_x K(d,x) w(x) <.,.>_x. Coordinates are
/// orthonormalized, so the result carries unit weights; the basis vector for
/// (x, i) is e_{x,i} / sqrt(K(d,x) w(x)) over the support points x.
HilbertBundle localize(const ConditionalExpectation& ce, const HilbertBundle& e);

/// Morphisms descend to the quotients blockwise over the support points.
BundleMorphism localize_mor(const ConditionalExpectation& ce, const BundleMorphism& f);

/// The canonical map Loc(E) (x) Loc(F) -> Loc(E (x) F). Unitary exactly when
/// the expectation is strict; for a non-strict expectation the cross terms
/// E_x (x) F_{x'} with x != x' span its null space.
BundleMorphism localization_tensor_comparison(const ConditionalExpectation& ce,
                                              const HilbertBundle& e, const HilbertBundle& f);

}  // namespace frobase
