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

#include "frobase/covering.hpp"

namespace frobase {

/// The dagger biproduct E = Z(E) (+) [E,E]. The Z basis columns are phase
/// canonicalized (largest coordinate real positive) so the paradigmatic
/// matrix-algebra maps come out on the nose.
struct CenterDecomposition {
  HilbertBundle center;       // Z(E)
  HilbertBundle commutator;   // [E,E]
  BundleMorphism i1, p1;      // Z <-> E
  BundleMorphism i2, p2;      // [E,E] <-> E
  double orthogonality_residual = 0.0;

  /// The center as a commutative Frobenius structure over the same base:
  /// p1 mu (i1 (x) i1) with unit p1 eta.
  FrobeniusStructure center_structure;
};

CenterDecomposition decompose(const FrobeniusStructure& f, double tol = kDefaultTol);

/// A structure rebased over its center: the old fiber at t splits along the
/// center's minimal idempotents into blocks, which become the fibers over the
/// new points (t, i); the block inner products are inherited from E.
struct RebasedStructure {
  BaseSpace new_base;
  Covering covering_to_old;     // (t, i) -> t
  FrobeniusStructure structure; // over new_base
  /// Per new point, the isometric embedding of the block back into the old
  /// fiber (columns orthonormal in the old fiber's coordinates).
  std::vector<Mat> embeddings;
};

RebasedStructure rebase_over_center(const FrobeniusStructure& f, uint64_t seed = 7,
                                    double tol = kDefaultTol);

/// Pushforward along a covering of the outer base: the fiber over t is the
/// direct sum of the inner fibers over q^{-1}(t), multiplication blockwise,
/// unit summed. Inner fibers of unequal weight are first rescaled to unit
/// weight (a unitary *-isomorphism); equal weights are kept, so q = id
/// returns the inner structure unchanged.
FrobeniusStructure compose_external(const FrobeniusStructure& inner, const Covering& q);

/// The explicit unitary *-isomorphism compose_external(rebase(F)) -> F.
struct TransitivityRoundTrip {
  RebasedStructure rebased;
  FrobeniusStructure recomposed;
  BundleMorphism iso;
  double unitarity_residual = 0.0;
  double star_hom_residual = 0.0;
};

TransitivityRoundTrip transitivity_round_trip(const FrobeniusStructure& f, uint64_t seed = 7,
                                              double tol = kDefaultTol);

/// Both sides of the transitivity equivalence, report only:
/// (i) F special dagger Frobenius over C(X);
/// (ii) the rebased structure special dagger Frobenius over the center and
///      the center specialisable dagger Frobenius over C(X).
struct TransitivityReport {
  bool side_i = false;
  bool side_ii = false;
  LawReport base_laws;
  bool rebase_ok = false;
  std::string failure;            // set when side (ii) could not be evaluated
  LawReport rebased_laws;         // valid when rebase_ok
  bool center_specialisable = false;
  double center_speciality_after = 0.0;  // speciality residual of specialise(Z)
};

TransitivityReport check_transitivity(const FrobeniusStructure& f, double tol = kDefaultTol,
                                      uint64_t seed = 7);

}  // namespace frobase
