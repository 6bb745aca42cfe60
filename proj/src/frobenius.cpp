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

#include "frobase/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frobase {

FrobeniusStructure::FrobeniusStructure(HilbertBundle c, std::vector<Mat> m, std::vector<Vec> u)
    : carrier(std::move(c)), mult(std::move(m)), unit(std::move(u)) {
  if (static_cast<int>(mult.size()) != carrier.points() ||
      static_cast<int>(unit.size()) != carrier.points())
    throw InputError("Frobenius structure needs mult and unit data at every point");
  for (int t = 0; t < carrier.points(); ++t) {
    const int d = carrier.dim(t);
    if (mult[t].rows() != d || mult[t].cols() != d * d)
      throw InputError("multiplication tensor shape mismatch at '" + carrier.base().label(t) + "'");
    if (unit[t].size() != d)
      throw InputError("unit vector shape mismatch at '" + carrier.base().label(t) + "'");
  }
}

BundleMorphism FrobeniusStructure::mult_morphism() const {
  return BundleMorphism(tensor(carrier, carrier), carrier, mult);
}

BundleMorphism FrobeniusStructure::unit_morphism() const {
  std::vector<Mat> blocks;
  for (int t = 0; t < carrier.points(); ++t) {
    Mat b(carrier.dim(t), 1);
    b.col(0) = unit[t];
    blocks.push_back(std::move(b));
  }
  return BundleMorphism(HilbertBundle::unit(carrier.base()), carrier, std::move(blocks));
}

FiberAlgebra FrobeniusStructure::fiber(int t) const {
  FiberAlgebra fa;
  fa.mult = mult[t];
  fa.unit = unit[t];
  fa.weight = carrier.weight(t);
  return fa;
}

std::string law_name(Law law) {
  switch (law) {
    case Law::Unit: return "unit";
    case Law::Associativity: return "associativity";
    case Law::Frobenius: return "frobenius";
    case Law::StrongFrobenius: return "strong-frobenius";
    case Law::Speciality: return "speciality";
    case Law::Commutativity: return "commutativity";
    case Law::Nondegeneracy: return "nondegeneracy";
  }
  return "?";
}

const std::vector<Law>& all_laws() {
  static const std::vector<Law> laws = {Law::Unit,       Law::Associativity, Law::Frobenius,
                                        Law::StrongFrobenius, Law::Speciality,
                                        Law::Commutativity,   Law::Nondegeneracy};
  return laws;
}

bool LawReport::monoid_and_frobenius() const {
  return passes(Law::Unit) && passes(Law::Associativity) && passes(Law::Frobenius);
}

bool LawReport::all_of(const std::vector<Law>& laws) const {
  for (Law l : laws)
    if (!passes(l)) return false;
  return true;
}

namespace {

Mat swap_matrix(int d) {
  Mat s = Mat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

}  // namespace

LawReport verify_laws(const FrobeniusStructure& f, double tol) {
  LawReport report;
  report.tolerance = tol;
  for (Law l : all_laws()) report.residual[l] = 0.0;

  double min_pairing = std::numeric_limits<double>::infinity();
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) continue;
    const double w = f.carrier.weight(t);
    const Mat& m = f.mult[t];
    const Vec& eta = f.unit[t];
    const Mat id = Mat::Identity(d, d);
    const Mat md = m.adjoint() / w;  // weighted adjoint of mu at t

    Mat eta_col(d, 1);
    eta_col.col(0) = eta;
    auto track = [&](Law law, const Mat& defect) {
      report.residual[law] = std::max(report.residual[law], operator_norm(defect));
    };

    track(Law::Unit, m * kron(eta_col, id) - id);
    track(Law::Unit, m * kron(id, eta_col) - id);
    track(Law::Associativity, m * kron(m, id) - m * kron(id, m));

    const Mat frob_left = kron(m, id) * kron(id, md);
    const Mat frob_right = kron(id, m) * kron(md, id);
    const Mat frob_mid = md * m;
    track(Law::Frobenius, frob_left - frob_right);
    track(Law::StrongFrobenius, frob_left - frob_mid);
    track(Law::StrongFrobenius, frob_right - frob_mid);

    track(Law::Speciality, m * md - id);
    track(Law::Commutativity, m * swap_matrix(d) - m);

    min_pairing = std::min(min_pairing, std::abs(w * eta.squaredNorm()));
  }

  report.min_unit_pairing = min_pairing;
  if (std::isinf(min_pairing)) {
    report.residual[Law::Nondegeneracy] = 0.0;  // vacuous on the zero bundle
  } else {
    report.residual[Law::Nondegeneracy] =
        min_pairing > 0.0 ? tol * tol / min_pairing : std::numeric_limits<double>::infinity();
  }
  for (Law l : all_laws()) report.verdict[l] = report.residual[l] < tol;
  return report;
}

void require_monoid_frobenius(const FrobeniusStructure& f, double tol) {
  const LawReport report = verify_laws(f, tol);
  for (Law l : {Law::Unit, Law::Associativity, Law::Frobenius}) {
    if (!report.passes(l))
      throw VerificationError("structure fails the " + law_name(l) +
                                  " law, residual = " + std::to_string(report.residual.at(l)),
                              report.residual.at(l));
  }
}

Involution involution(const FrobeniusStructure& f, double tol) {
  require_monoid_frobenius(f, tol);
  const Duality dd = dual(f.carrier);

  Involution out;
  std::vector<Mat> i_blocks, star_blocks;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    const double w = f.carrier.weight(t);
    const Mat& m = f.mult[t];
    const Vec& eta = f.unit[t];
    // i_{k,m} = w * sum_a conj(eta_a) mu_{a,(k,m)}; star = conj(i)/w.
    Mat i_mat(d, d);
    for (int k = 0; k < d; ++k)
      for (int mm = 0; mm < d; ++mm) {
        Complex acc = 0.0;
        for (int a = 0; a < d; ++a) acc += std::conj(eta[a]) * m(a, k * d + mm);
        i_mat(k, mm) = w * acc;
      }
    star_blocks.push_back(i_mat.conjugate() / w);
    i_blocks.push_back(std::move(i_mat));
  }
  out.i = BundleMorphism(f.carrier, dd.dual, std::move(i_blocks));
  out.star = std::move(star_blocks);
  return out;
}

FiberAlgebra fiber_with_star(const FrobeniusStructure& f, const Involution& inv, int t) {
  FiberAlgebra fa = f.fiber(t);
  fa.star = inv.star[t];
  return fa;
}

SpecialiserResult specialiser(const FrobeniusStructure& f, double tol) {
  require_monoid_frobenius(f, tol);
  SpecialiserResult out;
  std::vector<Mat> d_blocks;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) {
      d_blocks.emplace_back(0, 0);
      continue;
    }
    const double w = f.carrier.weight(t);
    const Mat& m = f.mult[t];
    const Mat big_t = m * m.adjoint() / w;  // T = mu mu!, central positive
    Eigen::SelfAdjointEigenSolver<Mat> es(big_t);
    const double lmax = es.eigenvalues()(d - 1);
    const double lmin = es.eigenvalues()(0);
    if (lmin <= tol * std::max(1.0, lmax))
      throw VerificationError("NotSpecialisable: mu mu! is singular at '" +
                                  f.carrier.base().label(t) + "', min eigenvalue " +
                                  std::to_string(lmin),
                              lmin);
    Mat root = es.eigenvectors() *
               es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
               es.eigenvectors().adjoint();
    d_blocks.push_back(std::move(root));
  }
  out.d = BundleMorphism(f.carrier, f.carrier, std::move(d_blocks));

  // Centrality: mu (id (x) d) = d mu = mu (d (x) id).
  double centrality = 0.0, speciality = 0.0;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) continue;
    const double w = f.carrier.weight(t);
    const Mat& m = f.mult[t];
    const Mat& dm = out.d.blocks[t];
    const Mat id = Mat::Identity(d, d);
    centrality = std::max(centrality, operator_norm(m * kron(id, dm) - dm * m));
    centrality = std::max(centrality, operator_norm(m * kron(dm, id) - dm * m));
    speciality = std::max(speciality,
                          operator_norm(m * kron(dm, dm) * (m.adjoint() / w) - id));
  }
  out.centrality_residual = centrality;
  out.speciality_residual = speciality;
  if (centrality > tol)
    throw VerificationError("NotSpecialisable: specialiser is not central, residual " +
                                std::to_string(centrality),
                            centrality);
  return out;
}

FrobeniusStructure specialise(const FrobeniusStructure& f, double tol) {
  const SpecialiserResult sp = specialiser(f, tol);
  std::vector<Mat> mult;
  std::vector<Vec> unit;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) {
      mult.emplace_back(0, 0);
      unit.emplace_back(0);
      continue;
    }
    mult.push_back(sp.d.blocks[t] * f.mult[t]);
    // d^{-1} via the same spectral data: d is invertible positive.
    unit.push_back(sp.d.blocks[t].inverse() * f.unit[t]);
  }
  return FrobeniusStructure(f.carrier, std::move(mult), std::move(unit));
}

FrobeniusStructure matrix_frobenius(const BaseSpace& base, const std::vector<int>& blocks,
                                    MatrixScale scale) {
  if (blocks.empty()) throw InputError("matrix structure needs at least one block");
  for (int n : blocks)
    if (n <= 0) throw InputError("block sizes must be positive");

  int dim = 0;
  for (int n : blocks) dim += n * n;

  // Index of basis vector E^{(i)}_{ab} / sqrt(c_i).
  std::vector<int> offset(blocks.size());
  int acc = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    offset[i] = acc;
    acc += blocks[i] * blocks[i];
  }
  auto idx = [&](size_t i, int a, int b) { return offset[i] + a * blocks[i] + b; };

  Mat m = Mat::Zero(dim, dim * dim);
  Vec eta = Vec::Zero(dim);
  for (size_t i = 0; i < blocks.size(); ++i) {
    const int n = blocks[i];
    const double c = (scale == MatrixScale::Special) ? double(n) : 1.0;
    const double root_c = std::sqrt(c);
    for (int a = 0; a < n; ++a) {
      eta[idx(i, a, a)] = root_c;
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d)
          m(idx(i, a, d), idx(i, a, b) * dim + idx(i, b, d)) = 1.0 / root_c;
    }
  }

  HilbertBundle carrier(base, std::vector<int>(base.size(), dim),
                        std::vector<double>(base.size(), 1.0));
  return FrobeniusStructure(carrier, std::vector<Mat>(base.size(), m),
                            std::vector<Vec>(base.size(), eta));
}

FrobeniusStructure trivial_frobenius(const BaseSpace& base, const std::vector<int>& blocks) {
  return matrix_frobenius(base, blocks, MatrixScale::Special);
}

FrobeniusStructure unit_structure(const BaseSpace& base) {
  return matrix_frobenius(base, {1}, MatrixScale::Special);
}

FrobeniusStructure endomorphism_frobenius(const HilbertBundle& e) {
  const Duality dd = dual(e);
  const HilbertBundle carrier = tensor(dd.dual, e);
  std::vector<Mat> mult;
  std::vector<Vec> unit;
  for (int t = 0; t < e.points(); ++t) {
    const int d = e.dim(t);
    const int dim = d * d;
    Mat m = Mat::Zero(dim, dim * dim);
    // mu = id_{E*} (x) eps (x) id_E on (k,l),(p,q) -> delta_{lp} (k,q).
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            if (l == p) m(k * d + q, (k * d + l) * dim + (p * d + q)) += 1.0;
    Vec eta = Vec::Zero(dim);
    for (int i = 0; i < d; ++i) eta[i * d + i] = 1.0;
    mult.push_back(std::move(m));
    unit.push_back(std::move(eta));
  }
  return FrobeniusStructure(carrier, std::move(mult), std::move(unit));
}

FrobeniusStructure tensor_frobenius(const FrobeniusStructure& f, const FrobeniusStructure& g) {
  const BundleMorphism mid = tensor_mor(
      tensor_mor(BundleMorphism::identity(f.carrier), symmetry(g.carrier, f.carrier)),
      BundleMorphism::identity(g.carrier));
  const BundleMorphism mm = tensor_mor(f.mult_morphism(), g.mult_morphism()) * mid;
  std::vector<Vec> unit;
  for (int t = 0; t < f.carrier.points(); ++t) unit.push_back(kron_vec(f.unit[t], g.unit[t]));
  return FrobeniusStructure(tensor(f.carrier, g.carrier), mm.blocks, std::move(unit));
}

FrobeniusStructure conjugate_structure(const FrobeniusStructure& f, const BundleMorphism& u) {
  if (u.source != f.carrier || u.target != f.carrier)
    throw InputError("conjugation requires an endomorphism of the carrier");
  const BundleMorphism ud = dagger(u);
  std::vector<Mat> mult;
  std::vector<Vec> unit;
  for (int t = 0; t < f.carrier.points(); ++t) {
    mult.push_back(u.blocks[t] * f.mult[t] * kron(ud.blocks[t], ud.blocks[t]));
    unit.push_back(u.blocks[t] * f.unit[t]);
  }
  return FrobeniusStructure(f.carrier, std::move(mult), std::move(unit));
}

CFunction cstar_norm(const FrobeniusStructure& f, const Section& x, double tol) {
  if (x.bundle != f.carrier) throw InputError("section does not live on the structure's carrier");
  const LawReport report = verify_laws(f, tol);
  if (!report.passes(Law::Speciality))
    throw VerificationError("cstar_norm requires a special structure, speciality residual = " +
                                std::to_string(report.residual.at(Law::Speciality)),
                            report.residual.at(Law::Speciality));
  Vec values(f.carrier.points());
  for (int t = 0; t < f.carrier.points(); ++t) {
    if (f.carrier.dim(t) == 0) {
      values[t] = 0.0;
      continue;
    }
    values[t] = operator_norm(f.fiber(t).left_mult(x.vectors[t]));
  }
  return CFunction(f.carrier.base(), values);
}

std::vector<std::vector<int>> classify_fibers(const FrobeniusStructure& f, uint64_t seed,
                                              double tol) {
  require_monoid_frobenius(f, tol);
  LawReport report = verify_laws(f, tol);
  FrobeniusStructure work = report.passes(Law::Speciality) ? f : specialise(f, tol);
  const Involution inv = involution(work, tol);

  Rng rng(seed);
  std::vector<std::vector<int>> out(f.carrier.points());
  for (int t = 0; t < f.carrier.points(); ++t) {
    if (f.carrier.dim(t) == 0) continue;
    FiberAlgebra fiber = fiber_with_star(work, inv, t);
    const Mat center = center_basis(fiber);
    std::vector<Vec> centrals = minimal_idempotents(fiber, center, rng);
    sort_idempotents_canonically(centrals, fiber, center);
    int total = 0;
    for (const Vec& e : centrals) {
      Mat columns(fiber.dim(), fiber.dim());
      for (int j = 0; j < fiber.dim(); ++j) {
        Vec bj = Vec::Zero(fiber.dim());
        bj[j] = 1.0;
        columns.col(j) = fiber.multiply(e, bj);
      }
      const int block_dim = static_cast<int>(orthonormal_column_basis(columns).cols());
      const int size = static_cast<int>(std::lround(std::sqrt(double(block_dim))));
      if (size * size != block_dim)
        throw NumericalError("block dimension " + std::to_string(block_dim) +
                             " at '" + f.carrier.base().label(t) + "' is not a perfect square");
      out[t].push_back(size);
      total += block_dim;
    }
    if (total != f.carrier.dim(t))
      throw NumericalError("blocks do not exhaust the fiber at '" + f.carrier.base().label(t) + "'");
    std::sort(out[t].begin(), out[t].end());
  }
  return out;
}

bool is_central(const FrobeniusStructure& f, double tol) {
  require_monoid_frobenius(f, tol);
  for (int t = 0; t < f.carrier.points(); ++t) {
    if (f.carrier.dim(t) == 0) return false;  // not faithful: sections over t kill C(X)
    if (f.unit[t].norm() <= tol) return false;
    if (center_basis(f.fiber(t)).cols() != 1) return false;
  }
  return true;
}

bool is_phase(const FrobeniusStructure& f, const Section& phi, double tol) {
  if (phi.bundle != f.carrier) throw InputError("phase candidate must be a section of the carrier");
  const LawReport report = verify_laws(f, tol);
  if (!report.passes(Law::Speciality))
    throw VerificationError("phase test requires a special structure");
  const Involution inv = involution(f, tol);

  double phase_defect = 0.0, unitary_defect = 0.0;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) continue;
    const double w = f.carrier.weight(t);
    const Mat md = f.mult[t].adjoint() / w;
    const Vec u = md * phi.vectors[t];  // mu! phi in E (x) E
    Vec a = Vec::Zero(d), b = Vec::Zero(d);
    for (int l = 0; l < d; ++l)
      for (int mm = 0; mm < d; ++mm) {
        a[mm] += w * std::conj(phi.vectors[t][l]) * u[l * d + mm];
        b[l] += w * u[l * d + mm] * std::conj(phi.vectors[t][mm]);
      }
    phase_defect = std::max(phase_defect, (a - f.unit[t]).norm());
    phase_defect = std::max(phase_defect, (b - f.unit[t]).norm());

    const FiberAlgebra fiber = fiber_with_star(f, inv, t);
    const Vec star_phi = fiber.star_of(phi.vectors[t]);
    unitary_defect =
        std::max(unitary_defect, (fiber.multiply(star_phi, phi.vectors[t]) - f.unit[t]).norm());
    unitary_defect =
        std::max(unitary_defect, (fiber.multiply(phi.vectors[t], star_phi) - f.unit[t]).norm());
  }
  const bool phase_ok = phase_defect < tol;
  const bool unitary_ok = unitary_defect < tol;
  if (phase_ok != unitary_ok)
    throw NumericalError("phase-group criteria disagree: phase defect " +
                         std::to_string(phase_defect) + ", unitarity defect " +
                         std::to_string(unitary_defect));
  return phase_ok;
}

double star_homomorphism_residual(const BundleMorphism& f, const FrobeniusStructure& f1,
                                  const FrobeniusStructure& f2) {
  if (f.source != f1.carrier || f.target != f2.carrier)
    throw InputError("morphism endpoints do not match the structures");
  const Involution inv1 = involution(f1);
  const Involution inv2 = involution(f2);
  double residual = 0.0;
  for (int t = 0; t < f1.carrier.points(); ++t) {
    const Mat& blk = f.blocks[t];
    residual = std::max(residual,
                        operator_norm(f2.mult[t] * kron(blk, blk) - blk * f1.mult[t]));
    residual = std::max(residual,
                        operator_norm(blk * inv1.star[t] - inv2.star[t] * blk.conjugate()));
  }
  return residual;
}

bool is_star_homomorphism(const BundleMorphism& f, const FrobeniusStructure& f1,
                          const FrobeniusStructure& f2, double tol) {
  return star_homomorphism_residual(f, f1, f2) < tol;
}

SupportRestriction support_restriction(const FrobeniusStructure& f, double tol) {
  require_monoid_frobenius(f, tol);
  std::vector<int> keep;
  std::vector<std::string> labels;
  for (int t = 0; t < f.carrier.points(); ++t)
    if (f.carrier.dim(t) > 0) {
      keep.push_back(t);
      labels.push_back(f.carrier.base().label(t));
    }

  // eta! mu mu! eta as a scalar function on X.
  Vec scalar(f.carrier.points());
  for (int t = 0; t < f.carrier.points(); ++t) {
    const int d = f.carrier.dim(t);
    if (d == 0) {
      scalar[t] = 0.0;
      continue;
    }
    const double w = f.carrier.weight(t);
    const Mat big_t = f.mult[t] * f.mult[t].adjoint() / w;
    scalar[t] = w * (f.unit[t].adjoint() * big_t * f.unit[t])(0, 0);
  }
  CFunction support_scalar(f.carrier.base(), scalar);
  for (int t = 0; t < f.carrier.points(); ++t) {
    const bool in_support = f.carrier.dim(t) > 0;
    if (in_support != (std::abs(scalar[t]) > tol))
      throw VerificationError("support scalar does not match the dimension support at '" +
                              f.carrier.base().label(t) + "'");
  }

  BaseSpace sub = f.carrier.base().restrict_to(keep);
  std::vector<int> dims;
  std::vector<double> weights;
  std::vector<Mat> mult;
  std::vector<Vec> unit;
  for (int t : keep) {
    dims.push_back(f.carrier.dim(t));
    weights.push_back(f.carrier.weight(t));
    mult.push_back(f.mult[t]);
    unit.push_back(f.unit[t]);
  }
  SupportRestriction out;
  out.support = std::move(labels);
  out.restricted = FrobeniusStructure(HilbertBundle(sub, std::move(dims), std::move(weights)),
                                      std::move(mult), std::move(unit));
  out.support_scalar = std::move(support_scalar);
  return out;
}

}  // namespace frobase
