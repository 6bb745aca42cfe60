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

#include "frobase/covering.hpp"

#include <cmath>

namespace frobase {

Covering::Covering(BaseSpace y, BaseSpace x, std::vector<int> p, bool allow_non_surjective)
    : total(std::move(y)), base(std::move(x)), proj(std::move(p)) {
  if (static_cast<int>(proj.size()) != total.size())
    throw InputError("covering projection must assign a base point to every total point");
  std::vector<bool> hit(base.size(), false);
  for (int v : proj) {
    if (v < 0 || v >= base.size()) throw InputError("covering projection value out of range");
    hit[v] = true;
  }
  if (!allow_non_surjective)
    for (int t = 0; t < base.size(); ++t)
      if (!hit[t])
        throw InputError("covering projection is not surjective, base '" + base.label(t) +
                         "' is not covered");
}

Covering Covering::identity(const BaseSpace& space) {
  std::vector<int> proj(space.size());
  for (int i = 0; i < space.size(); ++i) proj[i] = i;
  return Covering(space, space, std::move(proj));
}

std::vector<int> Covering::fiber(int t) const {
  std::vector<int> out;
  for (int y = 0; y < total.size(); ++y)
    if (proj[y] == t) out.push_back(y);
  return out;
}

int Covering::fiber_size(int t) const { return static_cast<int>(fiber(t).size()); }

CoveringMorphism::CoveringMorphism(Covering src, Covering tgt, std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (source.base != target.base) throw InputError("covering morphism requires a common base");
  if (static_cast<int>(map.size()) != source.total.size())
    throw InputError("covering morphism must map every total point");
  for (int y = 0; y < source.total.size(); ++y) {
    if (map[y] < 0 || map[y] >= target.total.size())
      throw InputError("covering morphism value out of range");
    if (target.proj[map[y]] != source.proj[y])
      throw InputError("covering morphism does not commute with the projections at '" +
                       source.total.label(y) + "'");
  }
}

FrobeniusStructure frobenius_from_covering(const Covering& p) {
  const int n = p.base.size();
  std::vector<int> dims(n);
  std::vector<double> weights(n);
  std::vector<Mat> mult;
  std::vector<Vec> unit;
  for (int t = 0; t < n; ++t) {
    const int k = p.fiber_size(t);
    dims[t] = k;
    weights[t] = k > 0 ? 1.0 / k : 1.0;
    Mat m = Mat::Zero(k, k * k);
    for (int i = 0; i < k; ++i) m(i, i * k + i) = 1.0;
    mult.push_back(std::move(m));
    unit.push_back(Vec::Ones(k));
  }
  HilbertBundle carrier(p.base, std::move(dims), std::move(weights));
  return FrobeniusStructure(carrier, std::move(mult), std::move(unit));
}

PullbackResult pullback(const Covering& p) {
  std::vector<std::string> labels;
  std::vector<int> proj;
  std::vector<bool> diagonal;
  for (int y1 = 0; y1 < p.total.size(); ++y1)
    for (int y2 = 0; y2 < p.total.size(); ++y2)
      if (p.proj[y1] == p.proj[y2]) {
        labels.push_back("(" + p.total.label(y1) + "," + p.total.label(y2) + ")");
        proj.push_back(p.proj[y1]);
        diagonal.push_back(y1 == y2);
      }
  Covering pb(BaseSpace(std::move(labels)), p.base, std::move(proj));
  const FrobeniusStructure fp = frobenius_from_covering(p);
  const FrobeniusStructure fpb = frobenius_from_covering(pb);

  // Within a fiber of the pullback, pairs are ordered lexicographically in the
  // total order, matching the row-major tensor flattening; the identification
  // is the identity matrix and has matching weights, hence is unitary.
  std::vector<Mat> iso_blocks;
  const HilbertBundle square = tensor(fp.carrier, fp.carrier);
  for (int t = 0; t < p.base.size(); ++t)
    iso_blocks.push_back(Mat::Identity(fpb.carrier.dim(t), square.dim(t)));
  BundleMorphism iso(square, fpb.carrier, std::move(iso_blocks));

  std::vector<Vec> diag_vecs;
  for (int t = 0; t < p.base.size(); ++t) {
    const std::vector<int> fiber = pb.fiber(t);
    Vec v = Vec::Zero(static_cast<int>(fiber.size()));
    for (size_t i = 0; i < fiber.size(); ++i) v[i] = diagonal[fiber[i]] ? 1.0 : 0.0;
    diag_vecs.push_back(std::move(v));
  }

  PullbackResult out;
  out.diagonal_idempotent = Section(fpb.carrier, std::move(diag_vecs));
  out.tensor_iso = std::move(iso);
  out.pullback = std::move(pb);
  return out;
}

FiberProductResult fiber_product(const Covering& p, const Covering& q) {
  if (p.base != q.base) throw InputError("fiber product requires coverings of the same base");
  std::vector<std::string> labels;
  std::vector<int> proj;
  for (int y = 0; y < p.total.size(); ++y)
    for (int z = 0; z < q.total.size(); ++z)
      if (p.proj[y] == q.proj[z]) {
        labels.push_back("(" + p.total.label(y) + "," + q.total.label(z) + ")");
        proj.push_back(p.proj[y]);
      }
  Covering prod(BaseSpace(std::move(labels)), p.base, std::move(proj));
  const FrobeniusStructure fprod = frobenius_from_covering(prod);
  const HilbertBundle square =
      tensor(frobenius_from_covering(p).carrier, frobenius_from_covering(q).carrier);
  std::vector<Mat> iso_blocks;
  for (int t = 0; t < p.base.size(); ++t)
    iso_blocks.push_back(Mat::Identity(fprod.carrier.dim(t), square.dim(t)));
  FiberProductResult out;
  out.tensor_iso = BundleMorphism(square, fprod.carrier, std::move(iso_blocks));
  out.product = std::move(prod);
  return out;
}

SpectrumResult spectrum(const FrobeniusStructure& f, uint64_t seed, double tol) {
  const LawReport report = verify_laws(f, tol);
  if (!report.monoid_and_frobenius())
    throw VerificationError("spectrum requires a dagger Frobenius structure");
  if (!report.passes(Law::Commutativity))
    throw VerificationError("spectrum requires a commutative structure, residual = " +
                                std::to_string(report.residual.at(Law::Commutativity)),
                            report.residual.at(Law::Commutativity));
  if (!report.passes(Law::Nondegeneracy))
    throw VerificationError("spectrum requires a nondegenerate structure");
  for (int t = 0; t < f.carrier.points(); ++t)
    if (f.carrier.dim(t) == 0)
      throw InputError("spectrum requires full support; restrict to the support first");

  const FrobeniusStructure work = report.passes(Law::Speciality) ? f : specialise(f, tol);
  const Involution inv = involution(work, tol);
  Rng rng(seed);

  SpectrumResult out;
  std::vector<std::string> labels;
  std::vector<int> proj;
  for (int t = 0; t < f.carrier.points(); ++t) {
    FiberAlgebra fiber = fiber_with_star(work, inv, t);
    const int d = fiber.dim();
    const Mat whole = Mat::Identity(d, d);
    std::vector<Vec> idems = minimal_idempotents(fiber, whole, rng);
    sort_idempotents_canonically(idems, fiber, whole);

    Mat chars(idems.size(), d);
    for (size_t i = 0; i < idems.size(); ++i) {
      for (int j = 0; j < d; ++j) {
        Vec bj = Vec::Zero(d);
        bj[j] = 1.0;
        chars(i, j) = idems[i].dot(fiber.multiply(bj, idems[i])) / idems[i].dot(idems[i]);
      }
      labels.push_back(f.carrier.base().label(t) + "#" + std::to_string(i));
      proj.push_back(t);
    }
    out.idempotents.push_back(std::move(idems));
    out.characters.push_back(std::move(chars));
  }
  out.covering = Covering(BaseSpace(std::move(labels)), f.carrier.base(), std::move(proj));
  return out;
}

RoundTrip spectrum_round_trip(const FrobeniusStructure& f, uint64_t seed, double tol) {
  RoundTrip out;
  out.spectrum = spectrum(f, seed, tol);
  const FrobeniusStructure g = frobenius_from_covering(out.spectrum.covering);
  out.reconstructed = specialise(g, tol);
  const LawReport report = verify_laws(f, tol);
  out.specialised = report.passes(Law::Speciality) ? f : specialise(f, tol);

  std::vector<Mat> blocks;
  for (int t = 0; t < f.carrier.points(); ++t) {
    const auto& idems = out.spectrum.idempotents[t];
    const int k = static_cast<int>(idems.size());
    Mat u(f.carrier.dim(t), k);
    for (int i = 0; i < k; ++i) u.col(i) = idems[i];
    blocks.push_back(u / std::sqrt(double(k)));
  }
  out.iso = BundleMorphism(out.reconstructed.carrier, out.specialised.carrier, std::move(blocks));
  out.unitarity_residual = unitarity_defect(out.iso);
  out.star_hom_residual = star_homomorphism_residual(out.iso, out.reconstructed, out.specialised);
  return out;
}

BundleMorphism covering_to_star_hom(const CoveringMorphism& m) {
  const FrobeniusStructure src_structure = frobenius_from_covering(m.target);
  const FrobeniusStructure tgt_structure = frobenius_from_covering(m.source);
  std::vector<Mat> blocks;
  for (int t = 0; t < m.source.base.size(); ++t) {
    const std::vector<int> fiber_y = m.source.fiber(t);
    const std::vector<int> fiber_y2 = m.target.fiber(t);
    Mat b = Mat::Zero(fiber_y.size(), fiber_y2.size());
    for (size_t r = 0; r < fiber_y.size(); ++r)
      for (size_t c = 0; c < fiber_y2.size(); ++c)
        if (m.map[fiber_y[r]] == fiber_y2[c]) b(r, c) = 1.0;
    blocks.push_back(std::move(b));
  }
  return BundleMorphism(src_structure.carrier, tgt_structure.carrier, std::move(blocks));
}

}  // namespace frobase
