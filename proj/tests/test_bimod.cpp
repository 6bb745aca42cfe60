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

#include <doctest.h>

#include "frobase/bimod.hpp"
#include "frobase/monoidal.hpp"
#include "oracles.hpp"

using namespace frobase;

namespace {

BaseSpace numbered(const std::string& prefix, int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
  return BaseSpace(std::move(pts));
}

Cell1 random_cell(const BaseSpace& src, const BaseSpace& tgt, Rng& rng, int max_dim) {
  Eigen::MatrixXi dims(src.size(), tgt.size());
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < tgt.size(); ++y) dims(x, y) = rng.integer(0, max_dim);
  return Cell1(src, tgt, std::move(dims));
}

Cell2 random_2cell(const Cell1& src, const Cell1& tgt, Rng& rng) {
  std::vector<std::vector<Mat>> blocks(src.source0.size());
  for (int x = 0; x < src.source0.size(); ++x)
    for (int y = 0; y < src.target0.size(); ++y)
      blocks[x].push_back(rng.matrix(tgt.dim(x, y), src.dim(x, y)));
  return Cell2(src, tgt, std::move(blocks));
}

}  // namespace

TEST_CASE("horizontal composition of 1-cells") {
  const BaseSpace a = numbered("a", 2), b = numbered("b", 2), c = numbered("c", 1);

  SUBCASE("dims compose as the integer matrix product") {
    Eigen::MatrixXi de(2, 2), df(2, 1);
    de << 1, 2, 0, 1;
    df << 3, 1;
    const Cell1 e(a, b, de), f(b, c, df);
    const Cell1 ef = hcompose(e, f);
    CHECK(ef.dim(0, 0) == 5);
    CHECK(ef.dim(1, 0) == 1);
  }

  SUBCASE("the identity 1-cell is neutral up to unitor") {
    Rng rng(7);
    const Cell1 e = random_cell(a, b, rng, 3);
    const Cell2 lambda = left_unitor2(e);
    const Cell2 rho = right_unitor2(e);
    CHECK(distance2(vcompose(lambda, dagger2(lambda)), Cell2::identity(e)) == 0.0);
    CHECK(distance2(vcompose(rho, dagger2(rho)), Cell2::identity(e)) == 0.0);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(hcompose(Cell1::identity(a), e).dim(x, y) == e.dim(x, y));
  }

  SUBCASE("a zero column annihilates") {
    Eigen::MatrixXi de(2, 2), df(2, 1);
    de << 1, 2, 3, 4;
    df << 0, 0;
    const Cell1 ef = hcompose(Cell1(a, b, de), Cell1(b, c, df));
    CHECK(ef.dim(0, 0) == 0);
    CHECK(ef.dim(1, 0) == 0);
  }
}

TEST_CASE("2-cell compositions") {
  Rng rng(11);
  const BaseSpace a = numbered("a", 2), b = numbered("b", 2), c = numbered("c", 2);

  SUBCASE("identity 2-cells compose to identities") {
    const Cell1 e = random_cell(a, b, rng, 2);
    const Cell1 f = random_cell(b, c, rng, 2);
    CHECK(distance2(hcompose2(Cell2::identity(e), Cell2::identity(f)),
                    Cell2::identity(hcompose(e, f))) == 0.0);
  }

  SUBCASE("hcompose2 is the direct sum over the middle point of Kronecker blocks") {
    const Cell1 e = random_cell(a, b, rng, 2), e2 = random_cell(a, b, rng, 2);
    const Cell1 f = random_cell(b, c, rng, 2), f2 = random_cell(b, c, rng, 2);
    const Cell2 g = random_2cell(e, e2, rng);
    const Cell2 h = random_2cell(f, f2, rng);
    const Cell2 gh = hcompose2(g, h);
    for (int x = 0; x < 2; ++x)
      for (int z = 0; z < 2; ++z) {
        int so = 0, to = 0;
        for (int y = 0; y < 2; ++y) {
          const Mat expected = oracles::naive_kron(g.block(x, y), h.block(y, z));
          CHECK((gh.block(x, z).block(to, so, expected.rows(), expected.cols()) - expected)
                    .norm() < 1e-13);
          so += e.dim(x, y) * f.dim(y, z);
          to += e2.dim(x, y) * f2.dim(y, z);
        }
      }
  }

  SUBCASE("interchange law on random instances") {
    for (int trial = 0; trial < 10; ++trial) {
      const Cell1 e1 = random_cell(a, b, rng, 2), e2 = random_cell(a, b, rng, 2),
                  e3 = random_cell(a, b, rng, 2);
      const Cell1 f1 = random_cell(b, c, rng, 2), f2 = random_cell(b, c, rng, 2),
                  f3 = random_cell(b, c, rng, 2);
      const Cell2 g1 = random_2cell(e1, e2, rng), g2 = random_2cell(e2, e3, rng);
      const Cell2 h1 = random_2cell(f1, f2, rng), h2 = random_2cell(f2, f3, rng);
      CHECK(distance2(hcompose2(vcompose(g2, g1), vcompose(h2, h1)),
                      vcompose(hcompose2(g2, h2), hcompose2(g1, h1))) < 1e-12);
    }
  }

  SUBCASE("dagger2 is involutive and contravariant for both compositions") {
    const Cell1 e1 = random_cell(a, b, rng, 2), e2 = random_cell(a, b, rng, 2),
                e3 = random_cell(a, b, rng, 2);
    const Cell1 f1 = random_cell(b, c, rng, 2), f2 = random_cell(b, c, rng, 2);
    const Cell2 g1 = random_2cell(e1, e2, rng), g2 = random_2cell(e2, e3, rng);
    const Cell2 h = random_2cell(f1, f2, rng);
    CHECK(distance2(dagger2(dagger2(g1)), g1) == 0.0);
    CHECK(distance2(dagger2(vcompose(g2, g1)), vcompose(dagger2(g1), dagger2(g2))) < 1e-13);
    CHECK(distance2(dagger2(hcompose2(g1, h)), hcompose2(dagger2(g1), dagger2(h))) < 1e-13);
  }
}

TEST_CASE("coherence") {
  Rng rng(13);

  SUBCASE("all dims <= 1: exact coherence") {
    const BaseSpace a = numbered("a", 2), b = numbered("b", 2), c = numbered("c", 2);
    const Cell1 e = random_cell(a, b, rng, 1);
    const Cell1 f = random_cell(b, c, rng, 1);
    const Cell1 g = random_cell(c, a, rng, 1);
    const CoherenceReport r = coherence_check(e, f, g, 99);
    CHECK(r.pentagon_residual == 0.0);
    CHECK(r.triangle_residual == 0.0);
    CHECK(r.unitarity_residual == 0.0);
  }

  SUBCASE("random dims <= 3 over 0-cells of size <= 3") {
    for (int trial = 0; trial < 20; ++trial) {
      const BaseSpace a = numbered("a", rng.integer(1, 3));
      const BaseSpace b = numbered("b", rng.integer(1, 3));
      const BaseSpace c = numbered("c", rng.integer(1, 3));
      const CoherenceReport r = coherence_check(random_cell(a, b, rng, 3),
                                                random_cell(b, c, rng, 3),
                                                random_cell(c, a, rng, 3), rng.next());
      CHECK(r.pentagon_residual < 1e-12);
      CHECK(r.triangle_residual < 1e-12);
      CHECK(r.unitarity_residual < 1e-12);
      CHECK(r.interchange_residual < 1e-12);
    }
  }

  SUBCASE("the endohom case reproduces the monoidal coherence of bundles") {
    // Diagonal 1-cells over X = Y are bundles; the bimodule associator must
    // act as the bundle associator (the identity in row-major flattening).
    const BaseSpace x = numbered("x", 2);
    Rng rng2(17);
    Eigen::MatrixXi de = Eigen::MatrixXi::Zero(2, 2), df = Eigen::MatrixXi::Zero(2, 2),
                    dg = Eigen::MatrixXi::Zero(2, 2);
    std::vector<int> dims_e(2), dims_f(2), dims_g(2);
    for (int t = 0; t < 2; ++t) {
      de(t, t) = dims_e[t] = rng2.integer(1, 3);
      df(t, t) = dims_f[t] = rng2.integer(1, 3);
      dg(t, t) = dims_g[t] = rng2.integer(1, 3);
    }
    const Cell2 alpha = associator2(Cell1(x, x, de), Cell1(x, x, df), Cell1(x, x, dg));
    const BundleMorphism bundle_alpha = associator(
        HilbertBundle(x, dims_e), HilbertBundle(x, dims_f), HilbertBundle(x, dims_g));
    for (int t = 0; t < 2; ++t)
      CHECK((alpha.block(t, t) - bundle_alpha.blocks[t]).norm() == 0.0);
  }
}

TEST_CASE("the 2FHilb comparison") {
  SUBCASE("m = n = 1 is an ordinary Hilbert space") {
    Eigen::MatrixXi d(1, 1);
    d << 5;
    const Cell1 h = from_2fhilb(1, 1, d);
    CHECK(h.source0.size() == 1);
    CHECK(h.dim(0, 0) == 5);
  }

  SUBCASE("identity and composition comparison cells are unitary") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
      const int m = rng.integer(1, 3), k = rng.integer(1, 3), n = rng.integer(1, 3);
      Eigen::MatrixXi h(m, k), g(k, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) h(i, j) = rng.integer(0, 3);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.integer(0, 3);
      const PseudofunctorComparison cmp = pseudofunctor_comparison(m, k, n, h, g);
      CHECK(cmp.unitarity_residual < 1e-12);
      // The local hom-map is bijective on blocks: identical dims matrices on
      // both sides of the comparison.
      CHECK((cmp.composition_comparison.source1.dims.array() ==
             cmp.composition_comparison.target1.dims.array())
                .all());
    }
  }

  SUBCASE("identity comparison relates the diagonal dims to the identity cell") {
    const PseudofunctorComparison cmp =
        pseudofunctor_comparison(2, 2, 2, Eigen::MatrixXi::Identity(2, 2),
                                 Eigen::MatrixXi::Identity(2, 2));
    CHECK((cmp.identity_comparison.source1.dims.array() ==
           Cell1::identity(canonical_zero_cell(2)).dims.array())
              .all());
  }
}
