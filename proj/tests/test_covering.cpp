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

#include "frobase/covering.hpp"

using namespace frobase;

namespace {

BaseSpace numbered(const std::string& prefix, int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
  return BaseSpace(std::move(pts));
}

Covering random_surjection(Rng& rng, int max_total, int max_base) {
  const int nx = rng.integer(1, max_base);
  const int ny = rng.integer(nx, max_total);
  std::vector<int> proj(ny);
  for (int t = 0; t < nx; ++t) proj[t] = t;
  for (int y = nx; y < ny; ++y) proj[y] = rng.integer(0, nx - 1);
  return Covering(numbered("y", ny), numbered("x", nx), std::move(proj));
}

}  // namespace

TEST_CASE("the induced Frobenius structure of a covering") {
  SUBCASE("two sheets over a point: the explicit inner product, counit and "
          "comultiplication values") {
    const BaseSpace pt({std::vector<std::string>{"*"}});
    const Covering p(BaseSpace({std::vector<std::string>{"a", "b"}}), pt, {0, 0});
    const FrobeniusStructure f = frobenius_from_covering(p);

    // <f,g>(t) = (conj(f_a) g_a + conj(f_b) g_b)/2.
    Vec fa(2), ga(2);
    fa << Complex(1, 1), Complex(2, 0);
    ga << Complex(0, 3), Complex(1, -1);
    const CFunction ip = inner_product(Section(f.carrier, {fa}), Section(f.carrier, {ga}));
    const Complex expected = (std::conj(fa[0]) * ga[0] + std::conj(fa[1]) * ga[1]) / 2.0;
    CHECK(std::abs(ip.at(0) - expected) < 1e-15);

    // gamma(g) = (g_a + g_b)/2.
    const BundleMorphism gamma = dagger(f.unit_morphism());
    CHECK(std::abs(gamma.blocks[0](0, 0) - Complex(0.5)) < 1e-15);
    CHECK(std::abs(gamma.blocks[0](0, 1) - Complex(0.5)) < 1e-15);

    // delta(h)(a,a) = 2 h(a), zero off the diagonal.
    const Mat delta = f.mult[0].adjoint() / f.carrier.weight(0);
    Vec h(2);
    h << Complex(5, -2), Complex(1, 1);
    const Vec dh = delta * h;
    CHECK(std::abs(dh[0] - 2.0 * h[0]) < 1e-15);  // (a,a)
    CHECK(std::abs(dh[3] - 2.0 * h[1]) < 1e-15);  // (b,b)
    CHECK(std::abs(dh[1]) + std::abs(dh[2]) < 1e-15);

    // eta! eta = id.
    const BundleMorphism eta = f.unit_morphism();
    CHECK(distance(dagger(eta) * eta, BundleMorphism::identity(eta.source)) < 1e-15);
  }

  SUBCASE("the identity covering induces the canonical unit structure") {
    const BaseSpace x = numbered("x", 3);
    const FrobeniusStructure f = frobenius_from_covering(Covering::identity(x));
    const FrobeniusStructure g = trivial_frobenius(x, {1});
    CHECK(f.carrier == g.carrier);
    for (int t = 0; t < 3; ++t) {
      CHECK((f.mult[t] - g.mult[t]).norm() == 0.0);
      CHECK((f.unit[t] - g.unit[t]).norm() == 0.0);
    }
  }

  SUBCASE("random surjections: commutative nondegenerate profile, unit pairing, "
          "speciality defect |fiber| - 1") {
    Rng rng(71);
    for (int trial = 0; trial < 12; ++trial) {
      const Covering p = random_surjection(rng, 8, 4);
      const FrobeniusStructure f = frobenius_from_covering(p);
      const LawReport r = verify_laws(f);
      CHECK(r.monoid_and_frobenius());
      CHECK(r.passes(Law::StrongFrobenius));
      CHECK(r.passes(Law::Commutativity));
      CHECK(r.passes(Law::Nondegeneracy));

      int max_fiber = 0;
      for (int t = 0; t < p.base.size(); ++t) max_fiber = std::max(max_fiber, p.fiber_size(t));
      CHECK(std::abs(r.residual.at(Law::Speciality) - double(max_fiber - 1)) < 1e-9);

      // Specialisable: the specialiser is 1/sqrt(fiber size) on each fiber.
      const SpecialiserResult sp = specialiser(f);
      for (int t = 0; t < p.base.size(); ++t) {
        const int k = p.fiber_size(t);
        CHECK(operator_norm(sp.d.blocks[t] - Mat::Identity(k, k) / std::sqrt(double(k))) < 1e-10);
      }
      CHECK(verify_laws(specialise(f)).passes(Law::Speciality));
    }
  }

  SUBCASE("non-surjective projections are rejected") {
    CHECK_THROWS_AS(Covering(numbered("y", 2), numbered("x", 2), {0, 0}), InputError);
    CHECK_NOTHROW(Covering(numbered("y", 2), numbered("x", 2), {0, 0}, true));
  }
}

TEST_CASE("pullback of a covering along itself") {
  SUBCASE("identity covering: pullback is the diagonal, idempotent everywhere 1") {
    const PullbackResult pb = pullback(Covering::identity(numbered("x", 2)));
    CHECK(pb.pullback.total.size() == 2);
    for (int t = 0; t < 2; ++t) CHECK((pb.diagonal_idempotent.vectors[t] - Vec::Ones(1)).norm() == 0.0);
  }

  SUBCASE("two sheets over a point: four points, two on the diagonal") {
    const BaseSpace pt({std::vector<std::string>{"*"}});
    const Covering p(numbered("y", 2), pt, {0, 0});
    const PullbackResult pb = pullback(p);
    CHECK(pb.pullback.total.size() == 4);
    CHECK(pb.diagonal_idempotent.vectors[0].real().sum() == doctest::Approx(2.0));

    // The diagonal indicator is an idempotent of the pullback structure.
    const FrobeniusStructure fpb = frobenius_from_covering(pb.pullback);
    const Vec d = pb.diagonal_idempotent.vectors[0];
    CHECK((fpb.fiber(0).multiply(d, d) - d).norm() < 1e-15);
  }

  SUBCASE("tensor square vs pullback on random coverings") {
    Rng rng(73);
    for (int trial = 0; trial < 8; ++trial) {
      const Covering p = random_surjection(rng, 6, 3);
      const PullbackResult pb = pullback(p);
      CHECK(unitarity_defect(pb.tensor_iso) < 1e-12);

      // Contracting delta against the isomorphism reproduces the diagonal
      // indicator scaled by the fiber size.
      const FrobeniusStructure f = frobenius_from_covering(p);
      const FrobeniusStructure fpb = frobenius_from_covering(pb.pullback);
      for (int t = 0; t < p.base.size(); ++t) {
        const Mat delta = f.mult[t].adjoint() / f.carrier.weight(t);
        const Vec image = pb.tensor_iso.blocks[t] * (delta * f.unit[t]);
        const Vec expected =
            double(p.fiber_size(t)) * pb.diagonal_idempotent.vectors[t];
        CHECK((image - expected).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("spectrum of a commutative structure") {
  SUBCASE("the unit bundle has the identity covering as spectrum") {
    const BaseSpace x = numbered("x", 3);
    const SpectrumResult sr = spectrum(trivial_frobenius(x, {1}), 7);
    CHECK(sr.covering.total.size() == 3);
    for (int t = 0; t < 3; ++t) CHECK(sr.covering.fiber_size(t) == 1);
  }

  SUBCASE("blocks [1,1] over three points is a two-sheeted covering") {
    const SpectrumResult sr = spectrum(trivial_frobenius(numbered("x", 3), {1, 1}), 7);
    for (int t = 0; t < 3; ++t) CHECK(sr.covering.fiber_size(t) == 2);
    CHECK(sr.covering.total.size() == 6);
  }

  SUBCASE("round trip against the originating covering") {
    Rng rng(79);
    for (int trial = 0; trial < 10; ++trial) {
      const Covering p = random_surjection(rng, 8, 4);
      const FrobeniusStructure f = frobenius_from_covering(p);
      const SpectrumResult sr = spectrum(f, rng.next());

      // Fiber sizes agree exactly and the sheet matching commutes with proj.
      for (int t = 0; t < p.base.size(); ++t) {
        REQUIRE(sr.covering.fiber_size(t) == p.fiber_size(t));
        const auto idems = sr.idempotents[t];
        std::vector<bool> used(idems.size(), false);
        for (const Vec& e : idems) {
          // Each idempotent is (up to the specialise rescaling) a sheet
          // indicator: it has one dominant coordinate.
          Eigen::Index arg;
          e.cwiseAbs().maxCoeff(&arg);
          CHECK_FALSE(used[arg]);
          used[arg] = true;
          Vec expected = Vec::Zero(e.size());
          expected[arg] = std::sqrt(double(p.fiber_size(t)));
          CHECK((e - expected).norm() < 1e-9);
        }
      }

      const RoundTrip rt = spectrum_round_trip(f, rng.next());
      CHECK(rt.unitarity_residual < 1e-9);
      CHECK(rt.star_hom_residual < 1e-9);
    }
  }

  SUBCASE("noncommutative structures are refused") {
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 1), {2});
    CHECK_THROWS_AS(spectrum(f, 7), VerificationError);
  }
}

TEST_CASE("covering morphisms induce star homomorphisms") {
  const BaseSpace x = numbered("x", 2);

  SUBCASE("the identity morphism gives the identity") {
    const Covering p = Covering(numbered("y", 3), x, {0, 0, 1});
    std::vector<int> id_map = {0, 1, 2};
    const BundleMorphism h = covering_to_star_hom(CoveringMorphism(p, p, id_map));
    CHECK(distance(h, BundleMorphism::identity(h.source)) == 0.0);
  }

  SUBCASE("the sheet swap of a double cover is the swap *-automorphism") {
    const BaseSpace pt({std::vector<std::string>{"*"}});
    const Covering p(numbered("y", 2), pt, {0, 0});
    const BundleMorphism h = covering_to_star_hom(CoveringMorphism(p, p, {1, 0}));
    const FrobeniusStructure f = frobenius_from_covering(p);
    CHECK(is_star_homomorphism(h, f, f));
    Mat swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK((h.blocks[0] - swap).norm() == 0.0);
  }

  SUBCASE("contravariant functoriality on random triples") {
    Rng rng(83);
    for (int trial = 0; trial < 8; ++trial) {
      // Build a chain Y1 -> Y2 -> Y3 over X by collapsing sheets.
      const Covering p3 = random_surjection(rng, 4, 2);
      // p2 doubles each sheet of p3, p1 doubles again.
      auto split = [&](const Covering& base_cov, const char* name) {
        std::vector<int> proj;
        std::vector<int> fold;
        for (int y = 0; y < base_cov.total.size(); ++y) {
          const int copies = rng.integer(1, 2);
          for (int c = 0; c < copies; ++c) {
            proj.push_back(base_cov.proj[y]);
            fold.push_back(y);
          }
        }
        Covering cov(numbered(name, static_cast<int>(proj.size())), base_cov.base, proj);
        return std::make_pair(cov, fold);
      };
      const auto [p2, fold2] = split(p3, "u");
      const auto [p1, fold1] = split(p2, "v");

      const CoveringMorphism m1(p1, p2, fold1);
      const CoveringMorphism m2(p2, p3, fold2);
      std::vector<int> composite(fold1.size());
      for (size_t i = 0; i < fold1.size(); ++i) composite[i] = fold2[fold1[i]];
      const CoveringMorphism m12(p1, p3, composite);

      const BundleMorphism h1 = covering_to_star_hom(m1);
      const BundleMorphism h2 = covering_to_star_hom(m2);
      const BundleMorphism h12 = covering_to_star_hom(m12);
      CHECK(distance(h12, h1 * h2) == 0.0);

      CHECK(is_star_homomorphism(h1, frobenius_from_covering(p2), frobenius_from_covering(p1)));
    }
  }

  SUBCASE("commutation failure is an input error") {
    const Covering p(numbered("y", 3), x, {0, 0, 1});
    CHECK_THROWS_AS(CoveringMorphism(p, p, std::vector<int>{2, 1, 0}), InputError);
  }
}

TEST_CASE("tensor of coverings corresponds to the fiber product") {
  Rng rng(89);
  for (int trial = 0; trial < 6; ++trial) {
    const Covering p = random_surjection(rng, 5, 2);
    // A second surjection onto the same base.
    const int nx = p.base.size();
    const int nz = rng.integer(nx, nx + 2);
    std::vector<int> proj(nz);
    for (int t = 0; t < nx; ++t) proj[t] = t;
    for (int z = nx; z < nz; ++z) proj[z] = rng.integer(0, nx - 1);
    const Covering q(numbered("z", nz), p.base, proj);

    const FiberProductResult fp = fiber_product(p, q);
    CHECK(unitarity_defect(fp.tensor_iso) < 1e-12);

    const FrobeniusStructure tensor_structure =
        tensor_frobenius(frobenius_from_covering(p), frobenius_from_covering(q));
    const FrobeniusStructure product_structure = frobenius_from_covering(fp.product);

    // The identification intertwines multiplications and units exactly.
    for (int t = 0; t < p.base.size(); ++t) {
      const Mat& u = fp.tensor_iso.blocks[t];
      CHECK((u * tensor_structure.mult[t] -
             product_structure.mult[t] * kron(u, u))
                .norm() < 1e-12);
      CHECK((u * tensor_structure.unit[t] - product_structure.unit[t]).norm() < 1e-12);
    }
  }
}
