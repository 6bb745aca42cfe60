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

#include "frobase/cpstar.hpp"

#include <cmath>
#include <limits>

namespace frobase {

namespace {

void require_special(const FrobeniusStructure& f, double tol, const char* which) {
  const LawReport report = verify_laws(f, tol);
  if (!report.monoid_and_frobenius() || !report.passes(Law::Speciality))
    throw VerificationError(std::string("CP* context requires a special dagger Frobenius ") +
                            which + " structure (specialise it first)");
}

}  // namespace

CpContext::CpContext(FrobeniusStructure f1, FrobeniusStructure f2, uint64_t seed, double tol)
    : source(std::move(f1)), target(std::move(f2)) {
  if (source.carrier.base() != target.carrier.base())
    throw InputError("CP* context requires structures over the same base");
  require_special(source, tol, "source");
  require_special(target, tol, "target");

  const Involution inv1 = involution(source, tol);
  const Involution inv2 = involution(target, tol);
  Rng rng(seed);
  for (int t = 0; t < source.carrier.points(); ++t) {
    if (source.carrier.dim(t) > 0) {
      source_rep.push_back(fiber_representation(fiber_with_star(source, inv1, t), rng));
    } else {
      source_rep.emplace_back();
    }
    if (target.carrier.dim(t) > 0) {
      target_rep.push_back(fiber_representation(fiber_with_star(target, inv2, t), rng));
    } else {
      target_rep.emplace_back();
    }
  }
}

Mat choi_matrix(const CpContext& ctx, const BundleMorphism& f, int t) {
  if (f.source != ctx.source.carrier || f.target != ctx.target.carrier)
    throw InputError("morphism endpoints do not match the CP* context");
  const FiberRep& rep1 = ctx.source_rep[t];
  const FiberRep& rep2 = ctx.target_rep[t];
  const int n = rep1.matrix_dim();
  const int m = rep2.matrix_dim();
  Mat choi = Mat::Zero(n * m, n * m);
  int offset = 0, idx = 0;
  for (const auto& block : rep1.blocks) {
    for (int a = 0; a < block.size; ++a)
      for (int b = 0; b < block.size; ++b) {
        Mat e_ab = Mat::Zero(n, n);
        e_ab(offset + a, offset + b) = 1.0;
        const Mat image = rep2.to_matrix(f.blocks[t] * block.units[a * block.size + b]);
        choi += kron(e_ab, image);
        ++idx;
      }
    offset += block.size;
  }
  (void)idx;
  return choi;
}

CpVerdict is_completely_positive(const CpContext& ctx, const BundleMorphism& f, double tol) {
  CpVerdict out;
  out.completely_positive = true;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int t = 0; t < ctx.source.carrier.points(); ++t) {
    if (ctx.source.carrier.dim(t) == 0 || ctx.target.carrier.dim(t) == 0) {
      out.spectra.emplace_back(0);
      continue;
    }
    const Mat choi = choi_matrix(ctx, f, t);
    const double scale = std::max(1.0, choi.norm());
    const double herm = (choi - Mat(choi.adjoint())).norm();
    out.hermiticity_defect = std::max(out.hermiticity_defect, herm);

    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (choi + Mat(choi.adjoint())));
    Vec spectrum = es.eigenvalues().cast<Complex>();
    out.spectra.push_back(spectrum);
    const double lmin = es.eigenvalues()(0);
    out.min_eigenvalue = std::min(out.min_eigenvalue, lmin);

    if (herm > tol * scale) {
      out.completely_positive = false;
      continue;
    }
    const double trace = es.eigenvalues().sum();
    if (trace <= tol) {
      // Positive matrices have nonnegative trace; only the zero map passes.
      if (choi.norm() > tol * scale) out.completely_positive = false;
      continue;
    }
    if (lmin < -tol * trace) out.completely_positive = false;
  }
  if (std::isinf(out.min_eigenvalue)) out.min_eigenvalue = 0.0;
  return out;
}

BundleMorphism cp_condition_lhs(const FrobeniusStructure& f1, const FrobeniusStructure& f2,
                                const BundleMorphism& f) {
  const HilbertBundle ef = tensor(f1.carrier, f2.carrier);
  std::vector<Mat> blocks;
  for (int t = 0; t < f1.carrier.points(); ++t) {
    const int de = f1.carrier.dim(t);
    const int df = f2.carrier.dim(t);
    if (de * df == 0) {
      blocks.push_back(Mat::Zero(de * df, de * df));
      continue;
    }
    const Mat id_e = Mat::Identity(de, de);
    const Mat id_f = Mat::Identity(df, df);
    const Mat md_e = f1.mult[t].adjoint() / f1.carrier.weight(t);
    blocks.push_back(kron(id_e, f2.mult[t]) * kron(id_e, kron(f.blocks[t], id_f)) *
                     kron(md_e, id_f));
  }
  return BundleMorphism(ef, ef, std::move(blocks));
}

std::optional<CpWitness> cpstar_witness(const CpContext& ctx, const BundleMorphism& f,
                                        double tol) {
  const BundleMorphism lhs = cp_condition_lhs(ctx.source, ctx.target, f);
  const HilbertBundle& ef = lhs.source;

  std::vector<int> g_dims(ef.points());
  std::vector<Mat> g_blocks;
  for (int t = 0; t < ef.points(); ++t) {
    const Mat& l = lhs.blocks[t];
    if (l.rows() == 0) {
      g_dims[t] = 0;
      g_blocks.emplace_back(0, 0);
      continue;
    }
    const double scale = std::max(1.0, l.norm());
    if ((l - Mat(l.adjoint())).norm() > tol * scale) return std::nullopt;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (l + Mat(l.adjoint())));
    const double lmax = std::max(es.eigenvalues()(l.rows() - 1), 0.0);
    if (es.eigenvalues()(0) < -tol * std::max(1.0, lmax)) return std::nullopt;

    std::vector<int> keep;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > kRankRelTol * lmax) keep.push_back(static_cast<int>(i));
    Mat g(keep.size(), l.rows());
    for (size_t r = 0; r < keep.size(); ++r)
      g.row(r) = std::sqrt(es.eigenvalues()(keep[r])) * es.eigenvectors().col(keep[r]).adjoint();
    g_dims[t] = static_cast<int>(keep.size());
    g_blocks.push_back(std::move(g));
  }

  CpWitness out;
  // Giving G the tensor weight makes g! g reproduce the condition's left side
  // without extra scaling.
  std::vector<double> g_weights(ef.points());
  for (int t = 0; t < ef.points(); ++t) g_weights[t] = ef.dim(t) > 0 ? ef.weight(t) : 1.0;
  out.g_object = HilbertBundle(ef.base(), std::move(g_dims), std::move(g_weights));
  out.g = BundleMorphism(ef, out.g_object, std::move(g_blocks));
  out.factorization_residual = distance(dagger(out.g) * out.g, lhs);
  if (out.factorization_residual > std::sqrt(tol))
    throw NumericalError("witness factorization residual " +
                         std::to_string(out.factorization_residual));
  return out;
}

CPMorphism compose_cp(const CpContext& outer, const CPMorphism& f, const CPMorphism& g) {
  CPMorphism out;
  out.underlying = f.underlying * g.underlying;
  out.verdict = is_completely_positive(outer, out.underlying);
  return out;
}

CPMorphism tensor_cp(const CpContext& product_ctx, const CPMorphism& f, const CPMorphism& g) {
  CPMorphism out;
  out.underlying = tensor_mor(f.underlying, g.underlying);
  out.verdict = is_completely_positive(product_ctx, out.underlying);
  return out;
}

BundleMorphism morphism_from_matrix_map(const CpContext& ctx,
                                        const std::function<Mat(const Mat&)>& matrix_map) {
  std::vector<Mat> blocks;
  for (int t = 0; t < ctx.source.carrier.points(); ++t) {
    const int ds = ctx.source.carrier.dim(t);
    const int dt = ctx.target.carrier.dim(t);
    Mat b(dt, ds);
    for (int j = 0; j < ds; ++j) {
      Vec ej = Vec::Zero(ds);
      ej[j] = 1.0;
      b.col(j) = ctx.target_rep[t].from_matrix(matrix_map(ctx.source_rep[t].to_matrix(ej)));
    }
    blocks.push_back(std::move(b));
  }
  return BundleMorphism(ctx.source.carrier, ctx.target.carrier, std::move(blocks));
}

}  // namespace frobase
