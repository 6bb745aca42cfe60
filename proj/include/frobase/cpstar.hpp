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

#include <functional>
#include <optional>

#include "frobase/frobenius.hpp"

namespace frobase {

/// A fiberwise block presentation of both endpoints, fixed once so Choi
/// matrices and witnesses are reproducible.
struct CpContext {
  FrobeniusStructure source;
  FrobeniusStructure target;
  std::vector<FiberRep> source_rep;
  std::vector<FiberRep> target_rep;

  CpContext(FrobeniusStructure f1, FrobeniusStructure f2, uint64_t seed = 7,
            double tol = kDefaultTol);
};

/// The Choi matrix of the fiber map at t in the block representation:
/// sum over same-block matrix units E_ab of Ehat_ab (x) fhat(E_ab), a
/// Hermitian N*M matrix exactly when the map preserves the involution.
Mat choi_matrix(const CpContext& ctx, const BundleMorphism& f, int t);

struct CpVerdict {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;       // most negative raw Choi eigenvalue over points
  double hermiticity_defect = 0.0;   // max |C - C!| over points
  std::vector<Vec> spectra;          // raw Choi spectra per point (real parts)
};

/// Positivity decision: Hermitian Choi with min eigenvalue >= -tol on the
/// trace-normalized matrix, per fiber.
CpVerdict is_completely_positive(const CpContext& ctx, const BundleMorphism& f,
                                 double tol = kDefaultTol);

/// A CP morphism with its cached verdict.
struct CPMorphism {
  BundleMorphism underlying;
  CpVerdict verdict;
};

struct CpWitness {
  HilbertBundle g_object;      // G
  BundleMorphism g;            // E (x) F -> G
  double factorization_residual = 0.0;  // | lhs - g! g | after reconstruction
};

/// The positivity condition the CP* category imposes on f : E -> F:
///   (id_E (x) mu_F) (id_E (x) f (x) id_F) (mu_E! (x) id_F) = g! g
/// for some object G and morphism g. Constructs g by eigendecomposition and
/// verifies the identity by contraction; empty when f is not CP.
std::optional<CpWitness> cpstar_witness(const CpContext& ctx, const BundleMorphism& f,
                                        double tol = kDefaultTol);

/// The morphism side of the condition, as a matrix on E (x) F per point.
BundleMorphism cp_condition_lhs(const FrobeniusStructure& f1, const FrobeniusStructure& f2,
                                const BundleMorphism& f);

/// Composition/tensor with fresh verdicts (closure of the CP* category).
CPMorphism compose_cp(const CpContext& outer, const CPMorphism& f, const CPMorphism& g);
CPMorphism tensor_cp(const CpContext& product_ctx, const CPMorphism& f, const CPMorphism& g);

/// The carrier map whose block representation applies `matrix_map` to the
/// block-diagonal matrix form (helper for building test maps such as the
/// transpose).
BundleMorphism morphism_from_matrix_map(const CpContext& ctx,
                                        const std::function<Mat(const Mat&)>& matrix_map);

}  // namespace frobase
