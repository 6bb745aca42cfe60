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

#include "frobase/bundle.hpp"

namespace frobase {

/// Fiberwise tensor product: dims multiply, weights multiply. Tensor indices
/// are flattened row-major, (i, j) -> i * dim_F + j.
HilbertBundle tensor(const HilbertBundle& e, const HilbertBundle& f);
BundleMorphism tensor_mor(const BundleMorphism& f, const BundleMorphism& g);
Section tensor_section(const Section& x, const Section& y);

/// Coherence isomorphisms. With row-major flattening the associator and
/// unitors are identity matrices on the nose; the symmetry is the index swap.
BundleMorphism associator(const HilbertBundle& e, const HilbertBundle& f, const HilbertBundle& g);
BundleMorphism left_unitor(const HilbertBundle& e);    // I (x) E -> E
BundleMorphism right_unitor(const HilbertBundle& e);   // E (x) I -> E
BundleMorphism symmetry(const HilbertBundle& e, const HilbertBundle& f);  // E (x) F -> F (x) E

struct Biproduct {
  HilbertBundle sum;
  BundleMorphism i1, i2;  // injections
  BundleMorphism p1, p2;  // projections, p_n = dagger(i_n)
};

/// Dagger biproduct; requires equal weights per point.
Biproduct biproduct(const HilbertBundle& e, const HilbertBundle& f);

struct Duality {
  HilbertBundle dual;    // same dims, weight 1/w
  BundleMorphism zeta;   // C(X) -> E* (x) E
  BundleMorphism eps;    // E (x) E* -> C(X)
};

/// The dagger dual: snake equations hold exactly and zeta = sigma o dagger(eps).
Duality dual(const HilbertBundle& e);

/// The scalar eps o sigma o zeta, equal to t -> dim(E_t).
CFunction categorical_dimension(const HilbertBundle& e);

struct Kernel {
  HilbertBundle bundle;   // K
  BundleMorphism inclusion;  // k : K -> source, dagger(k) k = id
};

/// Dagger kernel of f: per point an orthonormal basis of the null space of
/// the block, via eigendecomposition of the Gram matrix with relative
/// threshold kRankRelTol * (largest eigenvalue).
Kernel kernel(const BundleMorphism& f);

struct Subobject {
  HilbertBundle bundle;      // E, functions vanishing on U
  BundleMorphism inclusion;  // isometry E >-> C(X)
};

/// The dagger subobject of the tensor unit for a subset U: fiber dim 1 off U,
/// 0 on U.
Subobject subobject_from_subset(const BaseSpace& space, const std::vector<std::string>& subset);

/// Orthonormal column basis of the span of `columns` (d x k), with rank
/// decided by eigenvalues of the Gram matrix relative to the largest.
Mat orthonormal_column_basis(const Mat& columns);

/// Orthonormal basis of the null space of m.
Mat null_space_basis(const Mat& m);

}  // namespace frobase
