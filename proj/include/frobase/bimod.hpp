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

/// A 1-cell X -> Y of the bimodule bicategory: a matrix of finite-dimensional
/// Hilbert spaces recorded by its dimensions. All Hilbert-space data is
/// canonical (standard bases), so coherence cells are index permutations.
struct Cell1 {
  BaseSpace source0;  // X
  BaseSpace target0;  // Y
  Eigen::MatrixXi dims;  // indexed (x, y)

  Cell1() = default;
  Cell1(BaseSpace src, BaseSpace tgt, Eigen::MatrixXi d);

  static Cell1 identity(const BaseSpace& x);
  int dim(int x, int y) const { return dims(x, y); }
};

/// A 2-cell: one complex matrix per (x, y), of shape target1.dim x source1.dim.
struct Cell2 {
  Cell1 source1;
  Cell1 target1;
  std::vector<std::vector<Mat>> blocks;  // [x][y]

  Cell2() = default;
  Cell2(Cell1 src, Cell1 tgt, std::vector<std::vector<Mat>> blks);

  static Cell2 identity(const Cell1& e);
  const Mat& block(int x, int y) const { return blocks[x][y]; }
};

/// Horizontal composition of 1-cells: dims(E o F)(x, z) = sum_y dims_E(x,y)
/// dims_F(y,z), blocks ordered lexicographically in (y, E-index, F-index).
Cell1 hcompose(const Cell1& e, const Cell1& f);

/// Horizontal composition of 2-cells: block-diagonal over y of Kronecker
/// factors, matching hcompose's decomposition.
Cell2 hcompose2(const Cell2& f, const Cell2& g);

/// Vertical composition (f after g) and the dagger.
Cell2 vcompose(const Cell2& f, const Cell2& g);
Cell2 dagger2(const Cell2& f);

Cell2 sub2(const Cell2& f, const Cell2& g);
double distance2(const Cell2& f, const Cell2& g);

/// Associator (E o F) o G -> E o (F o G) and unitors as permutation 2-cells.
Cell2 associator2(const Cell1& e, const Cell1& f, const Cell1& g);
Cell2 left_unitor2(const Cell1& e);   // id_X o E -> E
Cell2 right_unitor2(const Cell1& e);  // E o id_Y -> E

struct CoherenceReport {
  double pentagon_residual = 0.0;
  double triangle_residual = 0.0;
  double unitarity_residual = 0.0;
  double interchange_residual = 0.0;
};

/// Verifies the pentagon on (E, F, G, H) with H seeded from `seed`, the
/// triangle on (E, F), unitarity of all structural cells, and the
/// interchange law on seeded random 2-cells.
CoherenceReport coherence_check(const Cell1& e, const Cell1& f, const Cell1& g, uint64_t seed);

/// The 2FHilb comparison: a 1-cell m -> n over the canonical 0-cells
/// {1..m}, {1..n}.
Cell1 from_2fhilb(int m, int n, const Eigen::MatrixXi& dims);

/// Comparison cells of the pseudofunctor: identity C(n) vs diagonal dims, and
/// the composition comparison; both permutation unitaries (here identities by
/// the lexicographic block convention), verified unitary.
struct PseudofunctorComparison {
  Cell2 identity_comparison;
  Cell2 composition_comparison;
  double unitarity_residual = 0.0;
};

PseudofunctorComparison pseudofunctor_comparison(int m, int k, int n, const Eigen::MatrixXi& h,
                                                 const Eigen::MatrixXi& g);

BaseSpace canonical_zero_cell(int n);

}  // namespace frobase
