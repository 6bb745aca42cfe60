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

BundleMorphism random_unitary(const HilbertBundle& e, Rng& rng) {
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) {
    Eigen::HouseholderQR<Mat> qr(rng.matrix(e.dim(t), e.dim(t)));
    blocks.push_back(Mat(qr.householderQ()));
  }
  return BundleMorphism(e, e, std::move(blocks));
}

Covering two_sheets_over_point() {
  return Covering(numbered("y", 2), BaseSpace({std::vector<std::string>{"*"}}), {0, 0});
}

}  // namespace

TEST_CASE("verify_laws") {
  const BaseSpace pt = numbered("t", 1);

  SUBCASE("matrix block [2] passes unit, associativity, Frobenius, speciality; "
          "not commutative") {
    const FrobeniusStructure f = trivial_frobenius(pt, {2});
    const LawReport r = verify_laws(f);
    CHECK(r.residual.at(Law::Unit) < 1e-10);
    CHECK(r.residual.at(Law::Associativity) < 1e-10);
    CHECK(r.residual.at(Law::Frobenius) < 1e-10);
    CHECK(r.residual.at(Law::Speciality) < 1e-10);
    CHECK(r.passes(Law::Nondegeneracy));
    CHECK_FALSE(r.passes(Law::Commutativity));
  }

  SUBCASE("covering structures pass the commutative nondegenerate profile") {
    const FrobeniusStructure f = frobenius_from_covering(two_sheets_over_point());
    const LawReport r = verify_laws(f);
    CHECK(r.monoid_and_frobenius());
    CHECK(r.passes(Law::StrongFrobenius));
    CHECK(r.passes(Law::Commutativity));
    CHECK(r.passes(Law::Nondegeneracy));
  }

  SUBCASE("perturbing one entry of mu fails associativity with a visible residual") {
    FrobeniusStructure f = trivial_frobenius(pt, {2});
    f.mult[0](0, 1) += 1e-3;
    const LawReport r = verify_laws(f);
    CHECK_FALSE(r.passes(Law::Associativity));
    CHECK(r.residual.at(Law::Associativity) >= 1e-4);
  }

  SUBCASE("strong Frobenius law comes for free from unit + associativity + Frobenius") {
    Rng rng(3);
    const FrobeniusStructure f =
        conjugate_structure(trivial_frobenius(pt, {2, 1}), random_unitary(trivial_frobenius(pt, {2, 1}).carrier, rng));
    const LawReport r = verify_laws(f);
    REQUIRE(r.monoid_and_frobenius());
    CHECK(r.residual.at(Law::StrongFrobenius) < 1e-10);
  }

  SUBCASE("nondegeneracy verdict equals direct invertibility of eta! eta on the support") {
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 2), {1, 1});
    const LawReport r = verify_laws(f);
    const BundleMorphism eta = f.unit_morphism();
    const BundleMorphism pairing = dagger(eta) * eta;
    double min_pairing = 1e300;
    for (int t = 0; t < 2; ++t)
      min_pairing = std::min(min_pairing, std::abs(pairing.blocks[t](0, 0)));
    CHECK(r.passes(Law::Nondegeneracy) == (min_pairing > r.tolerance));
    CHECK(r.min_unit_pairing == doctest::Approx(min_pairing));
  }

  SUBCASE("shape mismatch is an input error") {
    const FrobeniusStructure f = trivial_frobenius(pt, {2});
    CHECK_THROWS_AS(FrobeniusStructure(f.carrier, {Mat::Zero(3, 9)}, f.unit), InputError);
  }
}

TEST_CASE("involution and star") {
  const BaseSpace pt = numbered("t", 1);

  SUBCASE("on a matrix algebra star is the conjugate transpose") {
    for (MatrixScale scale : {MatrixScale::Special, MatrixScale::Trace}) {
      const FrobeniusStructure f = matrix_frobenius(pt, {2}, scale);
      const Involution inv = involution(f);
      // Basis vectors are (scaled) matrix units; star must transpose the
      // index pair and conjugate.
      const FiberAlgebra fiber = fiber_with_star(f, inv, 0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Vec e = Vec::Zero(4);
          e[a * 2 + b] = Complex(0.5, 1.5);
          Vec expected = Vec::Zero(4);
          expected[b * 2 + a] = Complex(0.5, -1.5);
          CHECK((fiber.star_of(e) - expected).norm() < 1e-12);
        }
    }
  }

  SUBCASE("on a covering structure star is pointwise conjugation") {
    const FrobeniusStructure f = frobenius_from_covering(two_sheets_over_point());
    const Involution inv = involution(f);
    const FiberAlgebra fiber = fiber_with_star(f, inv, 0);
    Vec v(2);
    v << Complex(1, 2), Complex(-3, 0.5);
    CHECK((fiber.star_of(v) - v.conjugate()).norm() < 1e-12);
  }

  SUBCASE("the unit is self-adjoint and star is an antimultiplicative involution") {
    Rng rng(11);
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 2), {2, 1});
    const Involution inv = involution(f);
    for (int t = 0; t < 2; ++t) {
      const FiberAlgebra fiber = fiber_with_star(f, inv, t);
      CHECK((fiber.star_of(f.unit[t]) - f.unit[t]).norm() < 1e-12);
      const Vec a = rng.vector(fiber.dim()), b = rng.vector(fiber.dim());
      CHECK((fiber.star_of(fiber.star_of(a)) - a).norm() < 1e-10);
      CHECK((fiber.star_of(fiber.multiply(a, b)) -
             fiber.multiply(fiber.star_of(b), fiber.star_of(a)))
                .norm() < 1e-10);
    }
  }

  SUBCASE("law failure refuses with a report") {
    FrobeniusStructure f = trivial_frobenius(pt, {2});
    f.mult[0](0, 1) += 0.5;
    CHECK_THROWS_AS(involution(f), VerificationError);
  }
}

TEST_CASE("specialiser and specialise") {
  const BaseSpace pt = numbered("t", 1);

  SUBCASE("already-special structures have d = id") {
    const FrobeniusStructure f = trivial_frobenius(pt, {2, 1});
    const SpecialiserResult sp = specialiser(f);
    CHECK(distance(sp.d, BundleMorphism::identity(f.carrier)) < 1e-10);
  }

  SUBCASE("M_n with the trace inner product has T = n id and d = n^{-1/2} id") {
    for (int n = 2; n <= 3; ++n) {
      const FrobeniusStructure f = matrix_frobenius(pt, {n}, MatrixScale::Trace);
      // T = mu mu! directly by contraction.
      const Mat t_mat = f.mult[0] * f.mult[0].adjoint() / f.carrier.weight(0);
      CHECK(operator_norm(t_mat - double(n) * Mat::Identity(n * n, n * n)) < 1e-12);
      const SpecialiserResult sp = specialiser(f);
      CHECK(operator_norm(sp.d.blocks[0] - Mat::Identity(n * n, n * n) / std::sqrt(double(n))) <
            1e-12);
      CHECK(sp.centrality_residual < 1e-10);
    }
  }

  SUBCASE("specialise produces a special structure") {
    const FrobeniusStructure f = matrix_frobenius(pt, {3}, MatrixScale::Trace);
    const LawReport r = verify_laws(specialise(f));
    CHECK(r.residual.at(Law::Speciality) < 1e-10);
    CHECK(r.monoid_and_frobenius());
  }

  SUBCASE("central self-adjointness and the defining equation") {
    Rng rng(13);
    FrobeniusStructure f = matrix_frobenius(numbered("x", 2), {2}, MatrixScale::Trace);
    f = conjugate_structure(f, random_unitary(f.carrier, rng));
    const SpecialiserResult sp = specialiser(f);
    for (int t = 0; t < 2; ++t) {
      CHECK((sp.d.blocks[t] - sp.d.blocks[t].adjoint()).norm() < 1e-10);
      const Mat md = f.mult[t].adjoint() / f.carrier.weight(t);
      CHECK(operator_norm(f.mult[t] * kron(sp.d.blocks[t], sp.d.blocks[t]) * md -
                          Mat::Identity(4, 4)) < 1e-10);
    }
  }
}

TEST_CASE("constructors") {
  const BaseSpace pt = numbered("t", 1);

  SUBCASE("blocks [1] is the canonical structure on the unit bundle") {
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 3), {1});
    CHECK(f.carrier == HilbertBundle::unit(numbered("x", 3)));
    for (int t = 0; t < 3; ++t) {
      CHECK(f.mult[t](0, 0) == Complex(1.0));
      CHECK(f.unit[t][0] == Complex(1.0));
    }
  }

  SUBCASE("blocks [2] is special, noncommutative, central") {
    const FrobeniusStructure f = trivial_frobenius(pt, {2});
    const LawReport r = verify_laws(f);
    CHECK(r.passes(Law::Speciality));
    CHECK_FALSE(r.passes(Law::Commutativity));
    CHECK(is_central(f));
  }

  SUBCASE("blocks [1,1] is special and commutative but not central") {
    const FrobeniusStructure f = trivial_frobenius(pt, {1, 1});
    const LawReport r = verify_laws(f);
    CHECK(r.passes(Law::Speciality));
    CHECK(r.passes(Law::Commutativity));
    CHECK_FALSE(is_central(f));
  }

  SUBCASE("endomorphism structure of the unit is the trivial one") {
    const BaseSpace x = numbered("x", 2);
    const FrobeniusStructure f = endomorphism_frobenius(HilbertBundle::unit(x));
    const FrobeniusStructure g = trivial_frobenius(x, {1});
    CHECK(f.carrier.dims() == g.carrier.dims());
    for (int t = 0; t < 2; ++t) {
      CHECK((f.mult[t] - g.mult[t]).norm() < 1e-14);
      CHECK((f.unit[t] - g.unit[t]).norm() < 1e-14);
    }
  }

  SUBCASE("endomorphism structure of dims (2) classifies as a single block [2]") {
    const HilbertBundle e(pt, {2});
    const FrobeniusStructure f = endomorphism_frobenius(e);
    REQUIRE(verify_laws(f).monoid_and_frobenius());
    const auto blocks = classify_fibers(f, 19);
    CHECK(blocks[0] == std::vector<int>{2});
  }

  SUBCASE("endomorphism structures are specialisable for dims up to 4") {
    Rng rng(17);
    for (int d = 1; d <= 4; ++d) {
      const HilbertBundle e(numbered("x", 2), {d, std::max(1, d - 1)});
      const FrobeniusStructure f = endomorphism_frobenius(e);
      const LawReport r = verify_laws(f);
      CHECK(r.monoid_and_frobenius());
      const SpecialiserResult sp = specialiser(f);
      CHECK(sp.speciality_residual < 1e-9);
    }
  }
}

TEST_CASE("cstar norm") {
  SUBCASE("the unit has norm one everywhere") {
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 2), {2, 1});
    const Section eta(f.carrier, f.unit);
    const CFunction norm = cstar_norm(f, eta);
    for (int t = 0; t < 2; ++t) CHECK(std::abs(norm.at(t) - Complex(1.0)) < 1e-10);
  }

  SUBCASE("a sheet indicator of a covering has norm 1 over its point, 0 elsewhere") {
    const BaseSpace x = numbered("x", 2);
    // Two sheets over x0, one over x1.
    const Covering p(numbered("y", 3), x, {0, 0, 1});
    const FrobeniusStructure raw = frobenius_from_covering(p);
    const FrobeniusStructure f = specialise(raw);  // cstar_norm wants speciality
    // The sheet indicator, as the idempotent of the specialised algebra.
    std::vector<Vec> v = {Vec::Zero(2), Vec::Zero(1)};
    v[0][0] = std::sqrt(2.0);
    REQUIRE((f.fiber(0).multiply(v[0], v[0]) - v[0]).norm() < 1e-12);
    const CFunction norm = cstar_norm(f, Section(f.carrier, v));
    CHECK(std::abs(norm.at(0) - Complex(1.0)) < 1e-9);
    CHECK(std::abs(norm.at(1)) < 1e-12);
  }

  SUBCASE("submultiplicativity and the C*-identity on random sections") {
    Rng rng(23);
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 2), {2, 1});
    const Involution inv = involution(f);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> xs, ys;
      for (int t = 0; t < 2; ++t) {
        xs.push_back(rng.vector(f.carrier.dim(t)));
        ys.push_back(rng.vector(f.carrier.dim(t)));
      }
      const Section sx(f.carrier, xs), sy(f.carrier, ys);
      const CFunction nx = cstar_norm(f, sx);
      const CFunction ny = cstar_norm(f, sy);

      std::vector<Vec> prod, star_prod;
      for (int t = 0; t < 2; ++t) {
        const FiberAlgebra fiber = fiber_with_star(f, inv, t);
        prod.push_back(fiber.multiply(xs[t], ys[t]));
        star_prod.push_back(fiber.multiply(fiber.star_of(xs[t]), xs[t]));
      }
      const CFunction nxy = cstar_norm(f, Section(f.carrier, prod));
      const CFunction nxx = cstar_norm(f, Section(f.carrier, star_prod));
      for (int t = 0; t < 2; ++t) {
        CHECK(nxy.at(t).real() <= nx.at(t).real() * ny.at(t).real() + 1e-9);
        CHECK(std::abs(nxx.at(t).real() - nx.at(t).real() * nx.at(t).real()) < 1e-9);
      }
    }
  }

  SUBCASE("non-special structures are refused") {
    const FrobeniusStructure f = frobenius_from_covering(two_sheets_over_point());
    CHECK_THROWS_AS(cstar_norm(f, Section(f.carrier, f.unit)), VerificationError);
  }
}

TEST_CASE("classification") {
  const BaseSpace pt = numbered("t", 1);

  SUBCASE("inverse of the trivial constructor") {
    const auto blocks = classify_fibers(trivial_frobenius(numbered("x", 2), {1, 2}), 29);
    for (int t = 0; t < 2; ++t) CHECK(blocks[t] == std::vector<int>{1, 2});
  }

  SUBCASE("invariant under unitary conjugation per fiber") {
    Rng rng(31);
    for (const auto& shape : std::vector<std::vector<int>>{{2}, {1, 1}, {2, 1}, {1, 1, 1}}) {
      const FrobeniusStructure f = trivial_frobenius(pt, shape);
      const FrobeniusStructure g = conjugate_structure(f, random_unitary(f.carrier, rng));
      CHECK(classify_fibers(f, 5) == classify_fibers(g, 7));
    }
  }

  SUBCASE("covering structures are all blocks of size one, counted by the fiber") {
    const Covering p(numbered("y", 5), numbered("x", 2), {0, 0, 0, 1, 1});
    const auto blocks = classify_fibers(frobenius_from_covering(p), 37);
    CHECK(blocks[0] == std::vector<int>(3, 1));
    CHECK(blocks[1] == std::vector<int>(2, 1));
  }

  SUBCASE("specialise commutes with classification") {
    Rng rng(41);
    FrobeniusStructure f = matrix_frobenius(pt, {2, 1}, MatrixScale::Trace);
    f = conjugate_structure(f, random_unitary(f.carrier, rng));
    CHECK(classify_fibers(f, 11) == classify_fibers(specialise(f), 11));
  }
}

TEST_CASE("centrality") {
  const BaseSpace pt = numbered("t", 1);
  CHECK(is_central(trivial_frobenius(pt, {1})));
  CHECK(is_central(trivial_frobenius(pt, {3})));
  CHECK_FALSE(is_central(trivial_frobenius(pt, {1, 1})));
  const Covering p(numbered("y", 3), numbered("x", 2), {0, 0, 1});
  CHECK_FALSE(is_central(frobenius_from_covering(p)));
}

TEST_CASE("phase group") {
  const BaseSpace x = numbered("x", 2);

  SUBCASE("the unit is a phase; twice the unit is not") {
    const FrobeniusStructure f = trivial_frobenius(x, {2});
    const Section eta(f.carrier, f.unit);
    CHECK(is_phase(f, eta));
    std::vector<Vec> twice;
    for (const Vec& u : f.unit) twice.push_back(2.0 * u);
    CHECK_FALSE(is_phase(f, Section(f.carrier, twice)));
  }

  SUBCASE("phases of the unit structure are the unit-modulus functions") {
    const FrobeniusStructure f = trivial_frobenius(x, {1});
    std::vector<Vec> v = {Vec::Constant(1, std::polar(1.0, 0.7)),
                          Vec::Constant(1, std::polar(1.0, -2.1))};
    CHECK(is_phase(f, Section(f.carrier, v)));
    v[0][0] = std::polar(0.9, 0.7);
    CHECK_FALSE(is_phase(f, Section(f.carrier, v)));
  }

  SUBCASE("phases form a group per fiber: closure and inverses on sampled pairs") {
    Rng rng(43);
    const FrobeniusStructure f = trivial_frobenius(x, {2});
    const Involution inv = involution(f);
    for (int sample = 0; sample < 20; ++sample) {
      // Random unitaries of each fiber algebra are phases.
      std::vector<Vec> u1, u2, prod, inverse;
      for (int t = 0; t < 2; ++t) {
        const FiberAlgebra fiber = fiber_with_star(f, inv, t);
        Eigen::HouseholderQR<Mat> qr1(rng.matrix(2, 2)), qr2(rng.matrix(2, 2));
        // Embed the 2x2 unitaries as elements of the fiber algebra.
        auto embed = [&](const Mat& m) {
          Vec v = Vec::Zero(4);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) v[a * 2 + b] = m(a, b) * std::sqrt(2.0);
          return v;
        };
        const Vec v1 = embed(Mat(qr1.householderQ()));
        const Vec v2 = embed(Mat(qr2.householderQ()));
        u1.push_back(v1);
        u2.push_back(v2);
        prod.push_back(fiber.multiply(v1, v2));
        inverse.push_back(fiber.star_of(v1));
      }
      CHECK(is_phase(f, Section(f.carrier, u1)));
      CHECK(is_phase(f, Section(f.carrier, prod)));
      CHECK(is_phase(f, Section(f.carrier, inverse)));
    }
  }
}

TEST_CASE("star homomorphisms") {
  const BaseSpace pt = numbered("t", 1);
  const FrobeniusStructure f = trivial_frobenius(pt, {2});

  SUBCASE("the identity is one") {
    CHECK(is_star_homomorphism(BundleMorphism::identity(f.carrier), f, f));
  }

  SUBCASE("unitary conjugation of the fiber algebra is one") {
    Rng rng(47);
    const BundleMorphism u = random_unitary(f.carrier, rng);
    const FrobeniusStructure g = conjugate_structure(f, u);
    CHECK(is_star_homomorphism(u, f, g));
  }

  SUBCASE("a random linear map is not, with a positive residual") {
    Rng rng(53);
    const BundleMorphism r(f.carrier, f.carrier, {rng.matrix(4, 4)});
    CHECK(star_homomorphism_residual(r, f, f) > 1e-3);
    CHECK_FALSE(is_star_homomorphism(r, f, f));
  }
}

TEST_CASE("support restriction") {
  SUBCASE("everywhere-positive dims keep the base") {
    const FrobeniusStructure f = trivial_frobenius(numbered("x", 3), {2});
    const SupportRestriction sr = support_restriction(f);
    CHECK(sr.support == numbered("x", 3).points());
    CHECK(sr.restricted.carrier == f.carrier);
  }

  SUBCASE("zero fibers drop out and the support scalar witnesses it") {
    // Build dims (2, 0, 3) from coverings: fibers of sizes 2, 0, 3 need the
    // degenerate flag, so assemble the structure directly instead.
    const BaseSpace x = numbered("x", 3);
    const FrobeniusStructure m2 = trivial_frobenius(BaseSpace({std::vector<std::string>{"a"}}), {1, 1});
    std::vector<int> dims = {2, 0, 2};
    std::vector<Mat> mult = {m2.mult[0], Mat::Zero(0, 0), m2.mult[0]};
    std::vector<Vec> unit = {m2.unit[0], Vec::Zero(0), m2.unit[0]};
    const FrobeniusStructure f(HilbertBundle(x, dims), mult, unit);
    const SupportRestriction sr = support_restriction(f);
    CHECK(sr.support == std::vector<std::string>{"x0", "x2"});
    CHECK(sr.restricted.carrier.dims() == std::vector<int>{2, 2});
    CHECK(std::abs(sr.support_scalar.at(1)) < 1e-12);
    CHECK(std::abs(sr.support_scalar.at(0)) > 1e-9);
    CHECK(verify_laws(sr.restricted).passes(Law::Nondegeneracy));
  }

  SUBCASE("support of the scalar matches on random structures") {
    Rng rng(59);
    for (int trial = 0; trial < 5; ++trial) {
      FrobeniusStructure f = trivial_frobenius(numbered("x", 2), {rng.integer(1, 2)});
      f = conjugate_structure(f, random_unitary(f.carrier, rng));
      const SupportRestriction sr = support_restriction(f);
      for (int t = 0; t < 2; ++t) CHECK(std::abs(sr.support_scalar.at(t)) > 1e-9);
    }
  }
}
