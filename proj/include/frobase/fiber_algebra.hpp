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

#include "frobase/types.hpp"

namespace frobase {

/// One fiber of a Frobenius carrier viewed as an algebra: multiplication
/// tensor (d x d^2, inputs flattened row-major), unit vector, inner-product
/// weight, and the induced antilinear star map x -> st * conj(x).
struct FiberAlgebra {
  Mat mult;   // d x d^2
  Vec unit;   // d
  double weight = 1.0;
  Mat star;   // star(x) = star_matrix * conj(x); empty when not yet computed

  int dim() const { return static_cast<int>(unit.size()); }

  Vec multiply(const Vec& a, const Vec& b) const { return mult * kron_vec(a, b); }
  Mat left_mult(const Vec& a) const;   // L_a
  Mat right_mult(const Vec& a) const;  // R_a
  Vec star_of(const Vec& a) const { return star * a.conjugate(); }
};

/// Orthonormal basis of the center {z : zx = xz for all x}, computed as the
/// joint null space of the commutation system over the standard basis.
Mat center_basis(const FiberAlgebra& fiber);

/// Orthonormal basis of the commutator subspace span{xy - yx}.
Mat commutator_basis(const FiberAlgebra& fiber);

/// The minimal idempotents e_1..e_k of a commutative (sub)algebra, given by
/// an orthonormal basis of it. Follows the seeded randomized recipe: pick a
/// random self-adjoint element, diagonalize its left multiplication, retry on
/// eigenvalue gaps below `gap`. Returns idempotents as fiber vectors with
/// e_i e_j = delta_ij e_i and sum e_i = unit of the subalgebra.
std::vector<Vec> minimal_idempotents(const FiberAlgebra& fiber, const Mat& commutative_basis,
                                     Rng& rng, double gap = 1e-6, int max_retries = 32,
                                     const Vec* subalgebra_unit = nullptr);

/// Canonical order for idempotents: lexicographic in the character value rows
/// chi_i(b_j) (real, then imaginary, with tolerance), where b_j runs over the
/// subalgebra basis.
void sort_idempotents_canonically(std::vector<Vec>& idempotents, const FiberAlgebra& fiber,
                                  const Mat& basis);

/// A concrete Artin-Wedderburn presentation of one simple block: matrix units
/// E_ab as fiber vectors, row-major in (a, b).
struct BlockUnits {
  int size = 0;                 // n for a block isomorphic to M_n
  std::vector<Vec> units;       // n^2 matrix units
};

/// Matrix units for the simple block cut out by a minimal central idempotent.
/// `block_basis` is an orthonormal basis of e * E (as a subspace of the
/// fiber). Randomized, seeded, with retries.
BlockUnits block_matrix_units(const FiberAlgebra& fiber, const Vec& central_idempotent,
                              const Mat& block_basis, Rng& rng, double gap = 1e-6,
                              int max_retries = 32);

/// Full fiber presentation: per-block matrix units plus the change of basis
/// between fiber coordinates and block-matrix coordinates.
struct FiberRep {
  std::vector<BlockUnits> blocks;
  Mat to_fiber;    // columns are all matrix units, fiber_dim x sum n_i^2
  Mat from_fiber;  // pseudo-inverse, extracting block-matrix coordinates

  int matrix_dim() const;  // N = sum n_i, size of the block-diagonal embedding

  /// Embeds block-matrix coordinates (a vector over matrix units) as a
  /// block-diagonal N x N matrix.
  Mat block_matrix(const Vec& coords) const;
  /// Fiber vector -> block-diagonal matrix form.
  Mat to_matrix(const Vec& v) const { return block_matrix(from_fiber * v); }
  /// Block-diagonal matrix -> fiber vector (entries off the blocks ignored).
  Vec from_matrix(const Mat& m) const;
};

FiberRep fiber_representation(const FiberAlgebra& fiber, Rng& rng);

}  // namespace frobase
