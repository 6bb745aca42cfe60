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

#include "frobase/cpstar.hpp"

using namespace frobase;

namespace {

BaseSpace numbered(const std::string& prefix, int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
  return BaseSpace(std::move(pts));
}

BundleMorphism random_unitary(const HilbertBundle& e, Rng& rng) {
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) {
    Eigen::HouseholderQR<Mat> qr(rng.matrix(e.dim(t), e.dim(t)));
    blocks.push_back(Mat(qr.householderQ()));
  }
  return BundleMorphism(e, e, std::move(blocks));
}

// A random completely positive map in block-matrix form via Kraus operators,
// an independent construction of CP-ness.
BundleMorphism random_kraus_map(const CpContext& ctx, Rng& rng, int kraus_count) {
  std::vector<std::vector<Mat>> kraus(ctx.source.carrier.points());
  for (int t = 0; t < ctx.source.carrier.points(); ++t) {
    const int n = ctx.source_rep[t].matrix_dim();
    const int m = ctx.target_rep[t].matrix_dim();
    // Kraus operators must map into the target block algebra; build them as
    // block-diagonal matrices of the target shape acting on the source
    // embedding, i.e. arbitrary m x n matrices compressed to target blocks.
    for (int k = 0; k < kraus_count; ++k) kraus[t].push_back(rng.matrix(m, n));
  }
  std::vector<Mat> blocks;
  for (int t = 0; t < ctx.source.carrier.points(); ++t) {
    const int ds = ctx.source.carrier.dim(t);
    const int dt = ctx.target.carrier.dim(t);
    Mat b(dt, ds);
    for (int j = 0; j < ds; ++j) {
      Vec ej = Vec::Zero(ds);
      ej[j] = 1.0;
      const Mat xm = ctx.source_rep[t].to_matrix(ej);
      Mat image = Mat::Zero(ctx.target_rep[t].matrix_dim(), ctx.target_rep[t].matrix_dim());
      for (const Mat& a : kraus[t]) image += a * xm * a.adjoint();
      // from_matrix keeps only the block-diagonal part; the compression of a
      // CP map to a subalgebra stays CP.
      b.col(j) = ctx.target_rep[t].from_matrix(image);
    }
    blocks.push_back(std::move(b));
  }
  return BundleMorphism(ctx.source.carrier, ctx.target.carrier, std::move(blocks));
}

}  // namespace

TEST_CASE("Choi matrices") {
  const BaseSpace pt = numbered("t", 1);
  const FrobeniusStructure m2 = trivial_frobenius(pt, {2});
  CpContext ctx(m2, m2, 3);

  SUBCASE("identity on M_2: rank-one projector after trace normalization") {
    const Mat choi = choi_matrix(ctx, BundleMorphism::identity(m2.carrier), 0);
    REQUIRE(choi.rows() == 4);
    const Complex trace = choi.trace();
    CHECK(std::abs(trace - Complex(2.0)) < 1e-12);
    const Mat normalized = choi / trace;
    CHECK((normalized * normalized - normalized).norm() < 1e-12);  // projector
    Eigen::SelfAdjointEigenSolver<Mat> es(normalized);
    CHECK(std::abs(es.eigenvalues()(3) - 1.0) < 1e-12);
    CHECK(std::abs(es.eigenvalues()(2)) < 1e-12);
  }

  SUBCASE("transpose on M_2: the swap with eigenvalues {1,1,1,-1}") {
    const BundleMorphism transpose =
        morphism_from_matrix_map(ctx, [](const Mat& m) { return Mat(m.transpose()); });
    const Mat choi = choi_matrix(ctx, transpose, 0);
    Eigen::SelfAdjointEigenSolver<Mat> es(choi);
    CHECK(std::abs(es.eigenvalues()(0) + 1.0) < 1e-12);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(es.eigenvalues()(i) - 1.0) < 1e-12);
  }

  SUBCASE("the zero map has the zero Choi matrix") {
    const BundleMorphism zero = BundleMorphism::zero(m2.carrier, m2.carrier);
    CHECK(choi_matrix(ctx, zero, 0).norm() == 0.0);
    CHECK(is_completely_positive(ctx, zero).completely_positive);
  }
}

TEST_CASE("complete positivity") {
  Rng rng(113);
  const BaseSpace x = numbered("x", 2);
  const FrobeniusStructure f = trivial_frobenius(x, {2, 1});
  CpContext ctx(f, f, 5);

  SUBCASE("star homomorphisms are completely positive") {
    const BundleMorphism u = random_unitary(f.carrier, rng);
    const FrobeniusStructure g = conjugate_structure(f, u);
    REQUIRE(is_star_homomorphism(u, f, g));
    CpContext ctx_fg(f, g, 5);
    CHECK(is_completely_positive(ctx_fg, u).completely_positive);
    CHECK(cpstar_witness(ctx_fg, u).has_value());
  }

  SUBCASE("transpose is rejected, convex combinations of CP maps pass") {
    const BundleMorphism transpose = morphism_from_matrix_map(
        CpContext(trivial_frobenius(numbered("t", 1), {2}), trivial_frobenius(numbered("t", 1), {2}), 3),
        [](const Mat& m) { return Mat(m.transpose()); });
    // (already covered above for M_2; here: convex combinations)
    for (int trial = 0; trial < 5; ++trial) {
      const BundleMorphism a = random_kraus_map(ctx, rng, 2);
      const BundleMorphism b = random_kraus_map(ctx, rng, 1);
      const double lambda = std::abs(rng.real());
      const BundleMorphism mix =
          scale(lambda / (1 + lambda), a) + scale(1.0 / (1 + lambda), b);
      CHECK(is_completely_positive(ctx, mix).completely_positive);
      CHECK(cpstar_witness(ctx, mix).has_value());
    }
    (void)transpose;
  }

  SUBCASE("witness factorization satisfies the condition; absence reports the "
          "most negative eigenvalue") {
    const BundleMorphism id = BundleMorphism::identity(f.carrier);
    const auto witness = cpstar_witness(ctx, id);
    REQUIRE(witness.has_value());
    CHECK(witness->factorization_residual < 1e-9);
    CHECK(distance(dagger(witness->g) * witness->g, cp_condition_lhs(f, f, id)) < 1e-9);

    CpContext m2ctx(trivial_frobenius(numbered("t", 1), {2}),
                    trivial_frobenius(numbered("t", 1), {2}), 3);
    const BundleMorphism transpose =
        morphism_from_matrix_map(m2ctx, [](const Mat& m) { return Mat(m.transpose()); });
    CHECK_FALSE(cpstar_witness(m2ctx, transpose).has_value());
    CHECK(is_completely_positive(m2ctx, transpose).min_eigenvalue == doctest::Approx(-1.0));
  }

  SUBCASE("equivalence: is_completely_positive iff a witness exists, across "
          "seeded map families") {
    for (int trial = 0; trial < 40; ++trial) {
      BundleMorphism m = [&]() {
        switch (trial % 4) {
          case 0: return random_kraus_map(ctx, rng, 1 + trial % 3);
          case 1: {  // random linear map, usually not CP
            std::vector<Mat> blocks;
            for (int t = 0; t < 2; ++t)
              blocks.push_back(rng.matrix(f.carrier.dim(t), f.carrier.dim(t)));
            return BundleMorphism(f.carrier, f.carrier, blocks);
          }
          case 2: {  // CP minus a small multiple of a CP map: may dip negative
            const BundleMorphism a = random_kraus_map(ctx, rng, 1);
            const BundleMorphism b = random_kraus_map(ctx, rng, 1);
            return a - scale(0.2, b);
          }
          default:
            return BundleMorphism::identity(f.carrier);
        }
      }();
      const bool cp = is_completely_positive(ctx, m).completely_positive;
      const bool witnessed = cpstar_witness(ctx, m).has_value();
      CHECK(cp == witnessed);
    }
  }
}

TEST_CASE("closure of the CP* category") {
  Rng rng(127);
  const BaseSpace pt = numbered("t", 1);
  const FrobeniusStructure f = trivial_frobenius(pt, {2});
  CpContext ctx(f, f, 3);

  SUBCASE("identity composition is neutral") {
    const BundleMorphism id = BundleMorphism::identity(f.carrier);
    const CPMorphism cid{id, is_completely_positive(ctx, id)};
    const CPMorphism a{random_kraus_map(ctx, rng, 2),
                       is_completely_positive(ctx, random_kraus_map(ctx, rng, 2))};
    const CPMorphism composite = compose_cp(ctx, a, cid);
    CHECK(distance(composite.underlying, a.underlying) < 1e-12);
  }

  SUBCASE("composition and tensor of CP maps are CP; composites with non-CP "
          "maps are judged fresh") {
    const FrobeniusStructure ff = tensor_frobenius(f, f);
    CpContext ctx2(ff, ff, 3);
    for (int trial = 0; trial < 6; ++trial) {
      const BundleMorphism a = random_kraus_map(ctx, rng, 2);
      const BundleMorphism b = random_kraus_map(ctx, rng, 1);
      const CPMorphism ca{a, is_completely_positive(ctx, a)};
      const CPMorphism cb{b, is_completely_positive(ctx, b)};
      REQUIRE(ca.verdict.completely_positive);
      REQUIRE(cb.verdict.completely_positive);
      CHECK(compose_cp(ctx, ca, cb).verdict.completely_positive);
      CHECK(tensor_cp(ctx2, ca, cb).verdict.completely_positive);
    }

    const BundleMorphism transpose =
        morphism_from_matrix_map(ctx, [](const Mat& m) { return Mat(m.transpose()); });
    const CPMorphism ct{transpose, is_completely_positive(ctx, transpose)};
    REQUIRE_FALSE(ct.verdict.completely_positive);
    const BundleMorphism u = random_unitary(f.carrier, rng);
    // Conjugation is CP but transpose-then-conjugation is not.
    const FrobeniusStructure g = conjugate_structure(f, u);
    CpContext ctx_fg(f, g, 3);
    const CPMorphism cu{u, is_completely_positive(ctx_fg, u)};
    REQUIRE(cu.verdict.completely_positive);
    const CPMorphism bad = compose_cp(ctx_fg, cu, ct);
    CHECK_FALSE(bad.verdict.completely_positive);
  }
}

TEST_CASE("CP verdicts are invariant under unitary *-isomorphism") {
  Rng rng(131);
  const BaseSpace pt = numbered("t", 1);
  const FrobeniusStructure f = trivial_frobenius(pt, {2, 1});
  CpContext ctx(f, f, 3);

  for (int trial = 0; trial < 8; ++trial) {
    BundleMorphism m = (trial % 2 == 0)
                           ? random_kraus_map(ctx, rng, 2)
                           : BundleMorphism(f.carrier, f.carrier, {rng.matrix(5, 5)});
    const BundleMorphism u = random_unitary(f.carrier, rng);
    const BundleMorphism v = random_unitary(f.carrier, rng);
    const FrobeniusStructure fu = conjugate_structure(f, u);
    const FrobeniusStructure fv = conjugate_structure(f, v);
    CpContext ctx_uv(fu, fv, 3);
    const BundleMorphism transported = v * m * dagger(u);
    CHECK(is_completely_positive(ctx, m).completely_positive ==
          is_completely_positive(ctx_uv, transported).completely_positive);
  }
}
