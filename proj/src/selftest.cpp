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

#include "frobase/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "frobase/bimod.hpp"
#include "frobase/cpstar.hpp"
#include "frobase/json_io.hpp"
#include "frobase/localization.hpp"

namespace frobase {

namespace {

BaseSpace make_space(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return BaseSpace(std::move(labels));
}

Covering random_surjection(Rng& rng, int max_total, int max_base) {
  const int nx = rng.integer(1, max_base);
  const int ny = rng.integer(nx, max_total);
  std::vector<int> proj(ny);
  for (int t = 0; t < nx; ++t) proj[t] = t;  // guarantee surjectivity
  for (int y = nx; y < ny; ++y) proj[y] = rng.integer(0, nx - 1);
  return Covering(make_space("y", ny), make_space("x", nx), std::move(proj));
}

BundleMorphism random_endo_unitary(const HilbertBundle& e, Rng& rng) {
  std::vector<Mat> blocks;
  for (int t = 0; t < e.points(); ++t) {
    const Mat m = rng.matrix(e.dim(t), e.dim(t));
    Eigen::HouseholderQR<Mat> qr(m);
    Mat q = qr.householderQ();
    blocks.push_back(std::move(q));
  }
  return BundleMorphism(e, e, std::move(blocks));
}

struct Check {
  std::string name;
  double residual;
  bool pass;
};

class Suite {
 public:
  Suite(double tol) : tol_(tol) {}

  void add(const std::string& name, double residual, double threshold) {
    checks_.push_back({name, residual, residual < threshold});
  }
  void add(const std::string& name, double residual) { add(name, residual, tol_); }
  void add_flag(const std::string& name, bool pass) {
    checks_.push_back({name, pass ? 0.0 : 1.0, pass});
  }
  void run(const std::string& name, const std::function<double()>& body, double threshold) {
    double residual;
    try {
      residual = body();
    } catch (const std::exception&) {
      checks_.push_back({name, 1e308, false});
      return;
    }
    add(name, residual, threshold);
  }

  const std::vector<Check>& checks() const { return checks_; }
  double tol() const { return tol_; }

 private:
  double tol_;
  std::vector<Check> checks_;
};

double law_residual_without(const LawReport& r, std::initializer_list<Law> skip) {
  double m = 0.0;
  for (Law l : all_laws()) {
    bool skipped = false;
    for (Law s : skip) skipped |= (s == l);
    if (l == Law::Nondegeneracy) skipped = true;
    if (!skipped) m = std::max(m, r.residual.at(l));
  }
  return m;
}

void base_checks(Suite& suite, Rng& rng) {
  // Subset <-> idempotent round trip, exhaustive on three points.
  const BaseSpace x3 = make_space("p", 3);
  bool roundtrip = true;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::string> subset;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) subset.push_back(x3.label(i));
    roundtrip &= subset_from_idempotent(idempotent_from_subset(x3, subset)) == subset;
  }
  suite.add_flag("base.subset_idempotent_roundtrip", roundtrip);

  // Radon duality is contravariantly functorial.
  double functorial = 0.0;
  for (int i = 0; i < 5; ++i) {
    const BaseSpace xs = make_space("x", rng.integer(1, 3));
    const BaseSpace ys = make_space("y", rng.integer(1, 3));
    const BaseSpace zs = make_space("z", rng.integer(1, 3));
    RealMat wf(xs.size(), ys.size()), wg(ys.size(), zs.size());
    for (int a = 0; a < wf.rows(); ++a)
      for (int b = 0; b < wf.cols(); ++b) wf(a, b) = std::abs(rng.real());
    for (int a = 0; a < wg.rows(); ++a)
      for (int b = 0; b < wg.cols(); ++b) wg(a, b) = std::abs(rng.real());
    const StochasticKernel f(xs, ys, wf), g(ys, zs, wg);
    const PositiveMap lhs = radon_to_cp(radon_compose(f, g));
    const PositiveMap rhs = compose_cp_maps(radon_to_cp(f), radon_to_cp(g));
    functorial = std::max(functorial, (lhs.matrix - rhs.matrix).norm());
  }
  suite.add("base.radon_functorial", functorial, 1e-12);

  // Expectation -> kernel with the fiber support condition.
  const BaseSpace src = make_space("u", 4), tgt = make_space("d", 2);
  std::vector<int> q = {0, 0, 1, 1};
  RealMat kernel = RealMat::Zero(2, 4);
  kernel(0, 0) = 0.3;
  kernel(0, 1) = 0.7;
  kernel(1, 2) = 1.0;
  const ConditionalExpectation ce = make_conditional_expectation(src, tgt, q, kernel);
  const RadonOfExpectation radon = ce_to_radon(ce);
  bool support_ok = true;
  for (int d = 0; d < 2; ++d)
    for (int x = 0; x < 4; ++x)
      if (radon.kernel.weight(d, x) > 0 && radon.q[x] != d) support_ok = false;
  suite.add_flag("base.ce_support_condition", support_ok);
  suite.add_flag("base.strictness_criterion", !is_strict(ce) && is_strict(identity_expectation(src)));
}

void hilbmod_checks(Suite& suite, Rng& rng) {
  const BaseSpace x = make_space("x", 3);
  const HilbertBundle e(x, {2, 3, 1}, {1.0, 0.5, 2.0});
  const HilbertBundle f(x, {3, 2, 2}, {2.0, 1.0, 1.0});

  // Dagger is the honest adjoint for the weighted inner products.
  std::vector<Mat> blocks;
  for (int t = 0; t < 3; ++t) blocks.push_back(rng.matrix(f.dim(t), e.dim(t)));
  const BundleMorphism g(e, f, blocks);
  const BundleMorphism gd = dagger(g);
  std::vector<Vec> xs, ys;
  for (int t = 0; t < 3; ++t) {
    xs.push_back(rng.vector(e.dim(t)));
    ys.push_back(rng.vector(f.dim(t)));
  }
  const Section sx(e, xs), sy(f, ys);
  const CFunction lhs = inner_product(g.apply(sx), sy);
  const CFunction rhs = inner_product(sx, gd.apply(sy));
  suite.add("hilbmod.dagger_adjointness", (lhs.values() - rhs.values()).cwiseAbs().maxCoeff(),
            1e-12);

  // Duality: snakes, dagger duality, categorical dimension.
  const Duality dd = dual(e);
  const BundleMorphism snake1 = left_unitor(e) * tensor_mor(dd.eps, BundleMorphism::identity(e)) *
                                associator(e, dd.dual, e) *
                                tensor_mor(BundleMorphism::identity(e), dd.zeta) *
                                dagger(right_unitor(e));
  double snake_res = distance(snake1, BundleMorphism::identity(e));
  snake_res = std::max(snake_res, distance(symmetry(e, dd.dual) * dagger(dd.eps), dd.zeta));
  suite.add("hilbmod.duality", snake_res, 1e-12);
  double dim_res = 0.0;
  const CFunction cdim = categorical_dimension(e);
  for (int t = 0; t < 3; ++t) dim_res = std::max(dim_res, std::abs(cdim.at(t) - double(e.dim(t))));
  suite.add("hilbmod.categorical_dimension", dim_res, 1e-10);

  // Kernels: isometry and annihilation.
  std::vector<Mat> kb;
  for (int t = 0; t < 3; ++t) {
    Mat m = rng.matrix(f.dim(t), e.dim(t));
    if (m.cols() > 1) m.col(0) = m.col(m.cols() - 1);  // force rank deficiency
    kb.push_back(std::move(m));
  }
  const BundleMorphism rank_def(e, f, kb);
  const Kernel ker = kernel(rank_def);
  suite.add("hilbmod.kernel_isometry",
            distance(dagger(ker.inclusion) * ker.inclusion, BundleMorphism::identity(ker.bundle)),
            1e-10);
  suite.add("hilbmod.kernel_annihilation", morphism_norm(rank_def * ker.inclusion), 1e-9);

  // Localization at a strict expectation is strong monoidal.
  const BaseSpace d2 = make_space("d", 2);
  RealMat strict_k = RealMat::Zero(2, 3);
  strict_k(0, 0) = 1.0;
  strict_k(1, 2) = 1.0;
  const ConditionalExpectation strict_ce =
      make_conditional_expectation(x, d2, {0, 0, 1}, strict_k);
  suite.add("hilbmod.localization_strict_monoidal",
            unitarity_defect(localization_tensor_comparison(strict_ce, e, f)), 1e-10);
}

void frobenius_checks(Suite& suite, Rng& rng) {
  const BaseSpace x = make_space("x", 2);

  const FrobeniusStructure m2 = trivial_frobenius(x, {2});
  const LawReport m2_report = verify_laws(m2, suite.tol());
  suite.add("frobenius.trivial_blocks2_laws", law_residual_without(m2_report, {Law::Commutativity}),
            1e-10);
  suite.add_flag("frobenius.trivial_blocks2_noncommutative",
                 !m2_report.passes(Law::Commutativity));

  // Involution squares to the identity and reverses products.
  const Involution inv = involution(m2);
  double star_res = 0.0;
  for (int t = 0; t < x.size(); ++t) {
    const FiberAlgebra fiber = fiber_with_star(m2, inv, t);
    const Vec a = rng.vector(fiber.dim()), b = rng.vector(fiber.dim());
    star_res = std::max(star_res, (fiber.star_of(fiber.star_of(a)) - a).norm());
    star_res = std::max(star_res, (fiber.star_of(fiber.multiply(a, b)) -
                                   fiber.multiply(fiber.star_of(b), fiber.star_of(a)))
                                      .norm());
  }
  suite.add("frobenius.involution", star_res, 1e-10);

  // Specialiser via the central positive square root.
  const FrobeniusStructure m3_trace = matrix_frobenius(x, {3}, MatrixScale::Trace);
  const SpecialiserResult sp = specialiser(m3_trace);
  double sp_res = 0.0;
  for (int t = 0; t < x.size(); ++t)
    sp_res = std::max(sp_res, operator_norm(sp.d.blocks[t] -
                                            Mat::Identity(9, 9) / std::sqrt(3.0)));
  suite.add("frobenius.specialiser_matrix", sp_res, 1e-10);
  suite.add("frobenius.specialise_special",
            verify_laws(specialise(m3_trace)).residual.at(Law::Speciality), 1e-10);

  // Classification is invariant under unitary conjugation.
  const FrobeniusStructure mixed = trivial_frobenius(x, {1, 2});
  const FrobeniusStructure conj =
      conjugate_structure(mixed, random_endo_unitary(mixed.carrier, rng));
  const auto before = classify_fibers(mixed, rng.next());
  const auto after = classify_fibers(conj, rng.next());
  suite.add_flag("frobenius.classification_invariance", before == after);
}

void covering_checks(Suite& suite, Rng& rng) {
  for (int i = 0; i < 3; ++i) {
    const Covering p = random_surjection(rng, 6, 3);
    const FrobeniusStructure f = frobenius_from_covering(p);
    const LawReport report = verify_laws(f, suite.tol());
    suite.add("covering.laws_" + std::to_string(i),
              law_residual_without(report, {Law::Speciality}), 1e-10);
    suite.add_flag("covering.commutative_" + std::to_string(i), report.passes(Law::Commutativity));

    // eta! eta = id and the speciality defect is exactly max fiber - 1.
    const BundleMorphism eta = f.unit_morphism();
    suite.add("covering.unit_pairing_" + std::to_string(i),
              distance(dagger(eta) * eta, BundleMorphism::identity(eta.source)), 1e-12);
    int max_fiber = 0;
    for (int t = 0; t < p.base.size(); ++t) max_fiber = std::max(max_fiber, p.fiber_size(t));
    suite.add("covering.speciality_defect_" + std::to_string(i),
              std::abs(report.residual.at(Law::Speciality) - double(max_fiber - 1)), 1e-9);

    const RoundTrip rt = spectrum_round_trip(f, rng.next());
    suite.add("covering.roundtrip_unitary_" + std::to_string(i), rt.unitarity_residual, 1e-9);
    suite.add("covering.roundtrip_starhom_" + std::to_string(i), rt.star_hom_residual, 1e-9);
    suite.add_flag("covering.spectrum_sizes_" + std::to_string(i),
                   [&] {
                     for (int t = 0; t < p.base.size(); ++t)
                       if (rt.spectrum.covering.fiber_size(t) != p.fiber_size(t)) return false;
                     return true;
                   }());
  }

  const Covering p = random_surjection(rng, 5, 2);
  const PullbackResult pb = pullback(p);
  suite.add("covering.pullback_iso_unitary", unitarity_defect(pb.tensor_iso), 1e-12);
}

void center_checks(Suite& suite, Rng& rng) {
  const BaseSpace pt = make_space("t", 1);
  // The paradigmatic matrix-algebra decomposition under the trace convention.
  for (int n = 2; n <= 3; ++n) {
    const FrobeniusStructure mn = matrix_frobenius(pt, {n}, MatrixScale::Trace);
    const CenterDecomposition dec = decompose(mn);
    double res = 0.0;
    const int d = n * n;
    Vec diag = Vec::Zero(d);
    for (int a = 0; a < n; ++a) diag[a * n + a] = 1.0 / std::sqrt(double(n));
    res = std::max(res, (dec.i1.blocks[0].col(0) - diag).norm());
    const Mat proj2 = dec.i2.blocks[0] * dec.p2.blocks[0];
    Mat expected = Mat::Identity(d, d);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) expected(a * n + a, b * n + b) -= 1.0 / double(n);
    res = std::max(res, operator_norm(proj2 - expected));
    suite.add("center.hattori_m" + std::to_string(n), res, 1e-12);
  }

  // Transitivity verdicts agree and the round trip is a unitary *-isomorphism.
  const BaseSpace x = make_space("x", 2);
  const std::vector<std::vector<int>> shapes = {{2}, {1, 1}, {2, 1}};
  int idx = 0;
  for (const auto& blocks : shapes) {
    FrobeniusStructure f = trivial_frobenius(x, blocks);
    f = conjugate_structure(f, random_endo_unitary(f.carrier, rng));
    const TransitivityReport rep = check_transitivity(f, suite.tol(), rng.next());
    suite.add_flag("center.transitivity_agree_" + std::to_string(idx), rep.side_i == rep.side_ii);
    const TransitivityRoundTrip rt = transitivity_round_trip(f, rng.next());
    suite.add("center.roundtrip_" + std::to_string(idx),
              std::max(rt.unitarity_residual, rt.star_hom_residual), 1e-9);
    ++idx;
  }
}

void cpstar_checks(Suite& suite, Rng& rng) {
  const BaseSpace pt = make_space("t", 1);
  const FrobeniusStructure m2 = trivial_frobenius(pt, {2});
  CpContext ctx(m2, m2, rng.next());

  // Transpose: Choi is the swap with eigenvalue -1.
  const BundleMorphism transpose =
      morphism_from_matrix_map(ctx, [](const Mat& m) { return m.transpose().eval(); });
  const CpVerdict tv = is_completely_positive(ctx, transpose);
  suite.add("cpstar.transpose_eigenvalue", std::abs(tv.min_eigenvalue + 1.0), 1e-12);
  suite.add_flag("cpstar.transpose_rejected",
                 !tv.completely_positive && !cpstar_witness(ctx, transpose).has_value());

  // Identity is CP with a witness.
  const BundleMorphism id = BundleMorphism::identity(m2.carrier);
  const auto witness = cpstar_witness(ctx, id);
  suite.add_flag("cpstar.identity_cp",
                 is_completely_positive(ctx, id).completely_positive && witness.has_value());

  // Equivalence on sampled maps.
  bool equivalence = true;
  for (int i = 0; i < 10; ++i) {
    std::vector<Mat> blocks = {rng.matrix(4, 4)};
    const BundleMorphism f(m2.carrier, m2.carrier, blocks);
    const bool cp = is_completely_positive(ctx, f).completely_positive;
    const bool witnessed = cpstar_witness(ctx, f).has_value();
    equivalence &= (cp == witnessed);
  }
  suite.add_flag("cpstar.equivalence_sampled", equivalence);
}

void bimod_checks(Suite& suite, Rng& rng) {
  const BaseSpace a = make_space("a", 2), b = make_space("b", 2), c = make_space("c", 2);
  for (int i = 0; i < 3; ++i) {
    Eigen::MatrixXi de(2, 2), df(2, 2), dg(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        de(r, s) = rng.integer(0, 2);
        df(r, s) = rng.integer(0, 2);
        dg(r, s) = rng.integer(0, 2);
      }
    const Cell1 e(a, b, de), f(b, c, df), g(c, a, dg);
    const CoherenceReport rep = coherence_check(e, f, g, rng.next());
    suite.add("bimod.pentagon_" + std::to_string(i), rep.pentagon_residual, 1e-12);
    suite.add("bimod.triangle_" + std::to_string(i), rep.triangle_residual, 1e-12);
    suite.add("bimod.interchange_" + std::to_string(i), rep.interchange_residual, 1e-12);

    const Eigen::MatrixXi prod = de * df;
    bool dims_ok = true;
    const Cell1 ef = hcompose(e, f);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) dims_ok &= (ef.dim(r, s) == prod(r, s));
    suite.add_flag("bimod.dims_product_" + std::to_string(i), dims_ok);
  }
}

}  // namespace

std::string selftest_report(uint64_t seed, const std::string& sizes, double tol, bool markdown) {
  Suite suite(tol);
  Rng rng(seed);

  base_checks(suite, rng);
  hilbmod_checks(suite, rng);
  frobenius_checks(suite, rng);
  covering_checks(suite, rng);
  center_checks(suite, rng);
  cpstar_checks(suite, rng);
  bimod_checks(suite, rng);

  if (sizes == "full") {
    // A second pass with fresh randomness widens coverage.
    covering_checks(suite, rng);
    center_checks(suite, rng);
    cpstar_checks(suite, rng);
  }

  int failures = 0;
  for (const Check& c : suite.checks())
    if (!c.pass) ++failures;

  if (markdown) {
    std::ostringstream out;
    out << "# selftest report\n\n";
    out << "seed: " << seed << ", sizes: " << sizes << ", tolerance: " << tol << "\n\n";
    out << "| check | residual | pass |\n|---|---|---|\n";
    for (const Check& c : suite.checks()) {
      std::ostringstream residual;
      residual << c.residual;
      out << "| " << c.name << " | " << residual.str() << " | " << (c.pass ? "yes" : "no")
          << " |\n";
    }
    out << "\nfailures: " << failures << "\n";
    return out.str();
  }

  Json checks = Json::array();
  for (const Check& c : suite.checks())
    checks.push_back(Json{{"name", c.name},
                          {"residual", std::isfinite(c.residual) ? c.residual : 1e308},
                          {"pass", c.pass}});
  Json report{{"command", "selftest"},
              {"version", version_string()},
              {"seed", seed},
              {"sizes", sizes},
              {"tolerance", tol},
              {"checks", std::move(checks)},
              {"failures", failures}};
  return report.dump(2) + "\n";
}

int selftest_failures(const std::string& report_json) {
  const Json j = parse_json(report_json);
  if (j.contains("failures")) return j["failures"].get<int>();
  return -1;
}

const char* version_string() { return "0.1.0"; }

}  // namespace frobase
