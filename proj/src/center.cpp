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

#include "frobase/center.hpp"

#include <algorithm>
#include <cmath>

namespace frobase {

namespace {

// Rotate each column so its largest-magnitude coordinate is real positive.
void canonicalize_phases(Mat& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = 0.0;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      const double a = std::abs(basis(r, c));
      if (a > best + 1e-12) {
        best = a;
        arg = r;
      }
    }
    if (best > 0.0) basis.col(c) *= std::conj(basis(arg, c)) / best;
  }
}

}  // namespace

CenterDecomposition decompose(const FrobeniusStructure& f, double tol) {
  // Specialisable dagger Frobenius input: validate monoid + Frobenius and the
  // existence of the specialiser.
  require_monoid_frobenius(f, tol);
  specialiser(f, tol);

  CenterDecomposition out;
  std::vector<int> z_dims(f.carrier.points()), c_dims(f.carrier.points());
  std::vector<Mat> z_blocks, c_blocks;
  std::vector<Mat> z_mult;
  std::vector<Vec> z_unit;
  double ortho = 0.0;

  for (int t = 0; t < f.carrier.points(); ++t) {
    const FiberAlgebra fiber = f.fiber(t);
    Mat z = center_basis(fiber);
    canonicalize_phases(z);
    Mat c = commutator_basis(fiber);

    if (z.cols() + c.cols() != fiber.dim())
      throw NumericalError("center and commutator do not decompose the fiber at '" +
                           f.carrier.base().label(t) + "'");
    if (z.cols() > 0 && c.cols() > 0) ortho = std::max(ortho, operator_norm(Mat(z.adjoint() * c)));

    z_dims[t] = static_cast<int>(z.cols());
    c_dims[t] = static_cast<int>(c.cols());
    z_mult.push_back(Mat(z.adjoint() * fiber.mult * kron(z, z)));
    z_unit.push_back(Vec(z.adjoint() * fiber.unit));
    z_blocks.push_back(std::move(z));
    c_blocks.push_back(std::move(c));
  }
  out.orthogonality_residual = ortho;
  if (ortho > tol)
    throw NumericalError("center is not orthogonal to the commutator, residual " +
                         std::to_string(ortho));

  out.center = HilbertBundle(f.carrier.base(), std::move(z_dims), f.carrier.weights());
  out.commutator = HilbertBundle(f.carrier.base(), std::move(c_dims), f.carrier.weights());
  out.i1 = BundleMorphism(out.center, f.carrier, z_blocks);
  out.i2 = BundleMorphism(out.commutator, f.carrier, std::move(c_blocks));
  out.p1 = dagger(out.i1);
  out.p2 = dagger(out.i2);
  out.center_structure = FrobeniusStructure(out.center, std::move(z_mult), std::move(z_unit));
  return out;
}

RebasedStructure rebase_over_center(const FrobeniusStructure& f, uint64_t seed, double tol) {
  require_monoid_frobenius(f, tol);
  const Involution inv = involution(f, tol);
  Rng rng(seed);

  RebasedStructure out;
  std::vector<std::string> labels;
  std::vector<int> proj;
  std::vector<int> dims;
  std::vector<double> weights;
  std::vector<Mat> mult;
  std::vector<Vec> unit;

  for (int t = 0; t < f.carrier.points(); ++t) {
    if (f.carrier.dim(t) == 0) continue;
    FiberAlgebra fiber = fiber_with_star(f, inv, t);
    const Mat center = center_basis(fiber);
    std::vector<Vec> centrals = minimal_idempotents(fiber, center, rng);
    sort_idempotents_canonically(centrals, fiber, center);

    // Blocks e_i E as subspaces with the inherited inner products, ordered by
    // dimension (stable within equal dimensions).
    std::vector<Mat> bases(centrals.size());
    for (size_t i = 0; i < centrals.size(); ++i) {
      Mat columns(fiber.dim(), fiber.dim());
      for (int j = 0; j < fiber.dim(); ++j) {
        Vec bj = Vec::Zero(fiber.dim());
        bj[j] = 1.0;
        columns.col(j) = fiber.multiply(centrals[i], bj);
      }
      bases[i] = orthonormal_column_basis(columns);
      canonicalize_phases(bases[i]);
    }
    std::vector<int> order(centrals.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return bases[a].cols() < bases[b].cols(); });

    for (size_t oi = 0; oi < order.size(); ++oi) {
      const size_t i = order[oi];
      const Mat& basis = bases[i];
      const int bd = static_cast<int>(basis.cols());

      // Compressed multiplication; blocks of central idempotents are closed
      // under mu, so compression is restriction.
      Mat block_mult = basis.adjoint() * fiber.mult * kron(basis, basis);
      Vec block_unit = basis.adjoint() * centrals[i];

      labels.push_back(f.carrier.base().label(t) + "#" + std::to_string(oi));
      proj.push_back(t);
      dims.push_back(bd);
      weights.push_back(f.carrier.weight(t));
      mult.push_back(std::move(block_mult));
      unit.push_back(std::move(block_unit));
      out.embeddings.push_back(basis);
    }
  }

  out.new_base = BaseSpace(std::move(labels));
  out.covering_to_old = Covering(out.new_base, f.carrier.base(), std::move(proj));
  out.structure = FrobeniusStructure(HilbertBundle(out.new_base, std::move(dims), std::move(weights)),
                                     std::move(mult), std::move(unit));
  return out;
}

FrobeniusStructure compose_external(const FrobeniusStructure& inner, const Covering& q) {
  if (inner.carrier.base() != q.total)
    throw InputError("inner structure must live over the total space of the covering");

  std::vector<int> dims(q.base.size());
  std::vector<double> weights(q.base.size());
  std::vector<Mat> mult;
  std::vector<Vec> unit;

  for (int t = 0; t < q.base.size(); ++t) {
    const std::vector<int> fiber = q.fiber(t);
    int total = 0;
    bool equal_weights = true;
    double w0 = fiber.empty() ? 1.0 : inner.carrier.weight(fiber[0]);
    for (int u : fiber) {
      total += inner.carrier.dim(u);
      if (inner.carrier.weight(u) != w0) equal_weights = false;
    }
    dims[t] = total;
    weights[t] = equal_weights ? w0 : 1.0;

    Mat m = Mat::Zero(total, total * total);
    Vec eta = Vec::Zero(total);
    int offset = 0;
    for (int u : fiber) {
      const int d = inner.carrier.dim(u);
      const double s = equal_weights ? 1.0 : std::sqrt(inner.carrier.weight(u));
      // Coordinates rescaled by s carry weight 1; mu picks up 1/s, eta s.
      for (int a = 0; a < d; ++a) {
        eta[offset + a] = s * inner.unit[u][a];
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            m(offset + a, (offset + b) * total + (offset + c)) =
                inner.mult[u](a, b * d + c) / s;
      }
      offset += d;
    }
    mult.push_back(std::move(m));
    unit.push_back(std::move(eta));
  }
  return FrobeniusStructure(HilbertBundle(q.base, std::move(dims), std::move(weights)),
                            std::move(mult), std::move(unit));
}

TransitivityRoundTrip transitivity_round_trip(const FrobeniusStructure& f, uint64_t seed,
                                              double tol) {
  TransitivityRoundTrip out;
  out.rebased = rebase_over_center(f, seed, tol);
  out.recomposed = compose_external(out.rebased.structure, out.rebased.covering_to_old);

  // Assemble the block embeddings into the isomorphism fiber by fiber.
  std::vector<Mat> blocks;
  for (int t = 0; t < f.carrier.points(); ++t) {
    Mat u(f.carrier.dim(t), out.recomposed.carrier.dim(t));
    int offset = 0;
    for (int np = 0; np < out.rebased.new_base.size(); ++np) {
      if (out.rebased.covering_to_old.proj[np] != t) continue;
      const Mat& emb = out.rebased.embeddings[np];
      u.block(0, offset, f.carrier.dim(t), emb.cols()) = emb;
      offset += static_cast<int>(emb.cols());
    }
    blocks.push_back(std::move(u));
  }
  out.iso = BundleMorphism(out.recomposed.carrier, f.carrier, std::move(blocks));
  out.unitarity_residual = unitarity_defect(out.iso);
  out.star_hom_residual = star_homomorphism_residual(out.iso, out.recomposed, f);
  return out;
}

TransitivityReport check_transitivity(const FrobeniusStructure& f, double tol, uint64_t seed) {
  TransitivityReport out;
  out.base_laws = verify_laws(f, tol);
  out.side_i = out.base_laws.all_of(
      {Law::Unit, Law::Associativity, Law::Frobenius, Law::Speciality});

  try {
    const RebasedStructure rebased = rebase_over_center(f, seed, tol);
    out.rebase_ok = true;
    out.rebased_laws = verify_laws(rebased.structure, tol);
    const bool rebased_special = out.rebased_laws.all_of(
        {Law::Unit, Law::Associativity, Law::Frobenius, Law::Speciality});

    const CenterDecomposition dec = decompose(f, tol);
    bool z_ok = false;
    try {
      const FrobeniusStructure z_special = specialise(dec.center_structure, tol);
      const LawReport z_laws = verify_laws(z_special, tol);
      out.center_speciality_after = z_laws.residual.at(Law::Speciality);
      z_ok = z_laws.all_of({Law::Unit, Law::Associativity, Law::Frobenius, Law::Speciality});
    } catch (const VerificationError&) {
      z_ok = false;
    }
    out.center_specialisable = z_ok;
    out.side_ii = rebased_special && z_ok;
  } catch (const std::exception& e) {
    out.rebase_ok = false;
    out.failure = e.what();
    out.side_ii = false;
  }
  return out;
}

}  // namespace frobase
