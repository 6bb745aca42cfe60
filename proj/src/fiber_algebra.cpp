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

#include "frobase/fiber_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "frobase/monoidal.hpp"

namespace frobase {

Mat FiberAlgebra::left_mult(const Vec& a) const {
  const int d = dim();
  Mat out(d, d);
  for (int j = 0; j < d; ++j) {
    Vec ej = Vec::Zero(d);
    ej[j] = 1.0;
    out.col(j) = multiply(a, ej);
  }
  return out;
}

Mat FiberAlgebra::right_mult(const Vec& a) const {
  const int d = dim();
  Mat out(d, d);
  for (int j = 0; j < d; ++j) {
    Vec ej = Vec::Zero(d);
    ej[j] = 1.0;
    out.col(j) = multiply(ej, a);
  }
  return out;
}

Mat center_basis(const FiberAlgebra& fiber) {
  const int d = fiber.dim();
  if (d == 0) return Mat(0, 0);
  Mat gram = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    Vec bk = Vec::Zero(d);
    bk[k] = 1.0;
    const Mat comm = fiber.left_mult(bk) - fiber.right_mult(bk);
    gram += comm.adjoint() * comm;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  const auto& evals = es.eigenvalues();
  const double cutoff = kRankRelTol * std::max(evals(d - 1), 0.0);
  std::vector<int> keep;
  for (int i = 0; i < d; ++i)
    if (evals(i) <= cutoff) keep.push_back(i);
  Mat basis(d, keep.size());
  for (size_t k = 0; k < keep.size(); ++k) basis.col(k) = es.eigenvectors().col(keep[k]);
  return basis;
}

Mat commutator_basis(const FiberAlgebra& fiber) {
  const int d = fiber.dim();
  if (d == 0) return Mat(0, 0);
  Mat columns(d, d * (d - 1) / 2);
  int c = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec bi = Vec::Zero(d), bj = Vec::Zero(d);
      bi[i] = 1.0;
      bj[j] = 1.0;
      columns.col(c++) = fiber.multiply(bi, bj) - fiber.multiply(bj, bi);
    }
  return orthonormal_column_basis(columns);
}

namespace {

// A random self-adjoint element of the span of `basis` (star-closed span).
Vec random_self_adjoint(const FiberAlgebra& fiber, const Mat& basis, Rng& rng) {
  Vec a = Vec::Zero(fiber.dim());
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    const Vec b = basis.col(k);
    const Vec bs = fiber.star_of(b);
    a += rng.gaussian() * 0.5 * (b + bs);
    a += rng.gaussian() * Complex(0.0, 0.5) * (b - bs);
  }
  return a;
}

// Scale a joint eigenvector onto the idempotent it spans; returns false if
// the rescaling is degenerate or the result fails e*e = e.
bool normalize_idempotent(const FiberAlgebra& fiber, const Vec& v, Vec& out) {
  const Vec vv = fiber.multiply(v, v);
  const Complex c = v.dot(vv) / v.dot(v);
  if (std::abs(c) < 1e-8) return false;
  out = v / c;
  const double defect = (fiber.multiply(out, out) - out).norm();
  return defect <= 1e-7 * std::max(1.0, out.norm());
}

}  // namespace

std::vector<Vec> minimal_idempotents(const FiberAlgebra& fiber, const Mat& commutative_basis,
                                     Rng& rng, double gap, int max_retries,
                                     const Vec* subalgebra_unit) {
  const int k = static_cast<int>(commutative_basis.cols());
  if (k == 0) return {};
  const Vec unit = subalgebra_unit ? *subalgebra_unit : fiber.unit;

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const Vec a = random_self_adjoint(fiber, commutative_basis, rng);
    // Left multiplication restricted to the subalgebra; self-adjoint because
    // a is, so its eigenvectors separate the characters.
    const Mat la = commutative_basis.adjoint() * fiber.left_mult(a) * commutative_basis;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (la + Mat(la.adjoint())));
    const auto& evals = es.eigenvalues();
    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < k; ++i) min_gap = std::min(min_gap, evals(i + 1) - evals(i));
    if (k > 1 && min_gap < gap) continue;

    std::vector<Vec> idempotents;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      Vec e;
      ok = normalize_idempotent(fiber, commutative_basis * es.eigenvectors().col(i), e);
      if (ok) idempotents.push_back(std::move(e));
    }
    if (!ok) continue;

    Vec sum = Vec::Zero(fiber.dim());
    for (const Vec& e : idempotents) sum += e;
    if ((sum - unit).norm() > 1e-7 * std::max(1.0, unit.norm())) continue;

    bool orthogonal = true;
    for (size_t i = 0; i < idempotents.size() && orthogonal; ++i)
      for (size_t j = 0; j < idempotents.size() && orthogonal; ++j) {
        const Vec prod = fiber.multiply(idempotents[i], idempotents[j]);
        const Vec expected = (i == j) ? idempotents[i] : Vec(Vec::Zero(fiber.dim()));
        if ((prod - expected).norm() > 1e-7 * std::max(1.0, idempotents[i].norm())) orthogonal = false;
      }
    if (!orthogonal) continue;

    return idempotents;
  }
  throw NumericalError("minimal idempotent extraction failed to converge");
}

void sort_idempotents_canonically(std::vector<Vec>& idempotents, const FiberAlgebra& fiber,
                                  const Mat& basis) {
  const int k = static_cast<int>(idempotents.size());
  if (k <= 1) return;
  // Character values chi_i(b_j), recovered from b_j e_i = chi_i(b_j) e_i.
  Mat chars(k, basis.cols());
  for (int i = 0; i < k; ++i) {
    const Vec& e = idempotents[i];
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      const Vec prod = fiber.multiply(basis.col(j), e);
      chars(i, j) = e.dot(prod) / e.dot(e);
    }
  }
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  const double tol = 1e-7;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (Eigen::Index j = 0; j < chars.cols(); ++j) {
      if (chars(a, j).real() < chars(b, j).real() - tol) return true;
      if (chars(a, j).real() > chars(b, j).real() + tol) return false;
      if (chars(a, j).imag() < chars(b, j).imag() - tol) return true;
      if (chars(a, j).imag() > chars(b, j).imag() + tol) return false;
    }
    return false;
  });
  std::vector<Vec> sorted;
  sorted.reserve(k);
  for (int i : order) sorted.push_back(std::move(idempotents[i]));
  idempotents = std::move(sorted);
}

BlockUnits block_matrix_units(const FiberAlgebra& fiber, const Vec& central_idempotent,
                              const Mat& block_basis, Rng& rng, double gap, int max_retries) {
  const int dim2 = static_cast<int>(block_basis.cols());
  const int m = static_cast<int>(std::lround(std::sqrt(double(dim2))));
  if (m * m != dim2)
    throw NumericalError("block dimension " + std::to_string(dim2) + " is not a perfect square");

  BlockUnits out;
  out.size = m;
  if (m == 1) {
    out.units = {central_idempotent};
    return out;
  }

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    // Diagonal idempotents from the commutative subalgebra generated by a
    // generic self-adjoint element of the block.
    const Vec h = random_self_adjoint(fiber, block_basis, rng);
    Mat powers(fiber.dim(), m);
    Vec p = central_idempotent;
    for (int i = 0; i < m; ++i) {
      powers.col(i) = p;
      p = fiber.multiply(p, h);
    }
    const Mat gen = orthonormal_column_basis(powers);
    if (gen.cols() != m) continue;

    std::vector<Vec> diag;
    try {
      diag = minimal_idempotents(fiber, gen, rng, gap, 4, &central_idempotent);
    } catch (const NumericalError&) {
      continue;
    }
    if (static_cast<int>(diag.size()) != m) continue;
    sort_idempotents_canonically(diag, fiber, gen);

    // Partial isometries u_i with u_i u_i* = p_1, u_i* u_i = p_i.
    std::vector<Vec> row(m);
    row[0] = diag[0];
    bool ok = true;
    for (int i = 1; i < m && ok; ++i) {
      Vec w;
      double s = 0.0;
      for (int tries = 0; tries < 8; ++tries) {
        Vec b = Vec::Zero(fiber.dim());
        for (Eigen::Index c = 0; c < block_basis.cols(); ++c)
          b += rng.complex_gaussian() * block_basis.col(c);
        w = fiber.multiply(diag[0], fiber.multiply(b, diag[i]));
        const Vec ww = fiber.multiply(w, fiber.star_of(w));
        s = (diag[0].dot(ww) / diag[0].dot(diag[0])).real();
        if (s > 1e-10) break;
        s = 0.0;
      }
      if (s <= 0.0) {
        ok = false;
        break;
      }
      row[i] = w / std::sqrt(s);
    }
    if (!ok) continue;

    out.units.assign(m * m, Vec());
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        out.units[a * m + b] = fiber.multiply(fiber.star_of(row[a]), row[b]);

    // Validate the matrix-unit relations before accepting.
    double defect = 0.0;
    for (int a = 0; a < m && defect < 1e-7; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) {
            const Vec prod = fiber.multiply(out.units[a * m + b], out.units[c * m + d]);
            const Vec expected =
                (b == c) ? out.units[a * m + d] : Vec(Vec::Zero(fiber.dim()));
            defect = std::max(defect, (prod - expected).norm());
          }
    Vec unit_sum = Vec::Zero(fiber.dim());
    for (int a = 0; a < m; ++a) unit_sum += out.units[a * m + a];
    defect = std::max(defect, (unit_sum - central_idempotent).norm());
    if (defect < 1e-7) return out;
  }
  throw NumericalError("matrix unit construction failed to converge");
}

int FiberRep::matrix_dim() const {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  return n;
}

Mat FiberRep::block_matrix(const Vec& coords) const {
  const int n = matrix_dim();
  Mat out = Mat::Zero(n, n);
  int offset = 0, idx = 0;
  for (const auto& b : blocks) {
    for (int a = 0; a < b.size; ++a)
      for (int c = 0; c < b.size; ++c) out(offset + a, offset + c) = coords[idx++];
    offset += b.size;
  }
  return out;
}

Vec FiberRep::from_matrix(const Mat& m) const {
  Vec coords(to_fiber.cols());
  int offset = 0, idx = 0;
  for (const auto& b : blocks) {
    for (int a = 0; a < b.size; ++a)
      for (int c = 0; c < b.size; ++c) coords[idx++] = m(offset + a, offset + c);
    offset += b.size;
  }
  return to_fiber * coords;
}

FiberRep fiber_representation(const FiberAlgebra& fiber, Rng& rng) {
  const Mat center = center_basis(fiber);
  std::vector<Vec> centrals = minimal_idempotents(fiber, center, rng);
  sort_idempotents_canonically(centrals, fiber, center);

  FiberRep rep;
  int total_units = 0;
  for (const Vec& e : centrals) {
    // The block e.E as a subspace.
    Mat columns(fiber.dim(), fiber.dim());
    for (int j = 0; j < fiber.dim(); ++j) {
      Vec bj = Vec::Zero(fiber.dim());
      bj[j] = 1.0;
      columns.col(j) = fiber.multiply(e, bj);
    }
    const Mat block_basis = orthonormal_column_basis(columns);
    rep.blocks.push_back(block_matrix_units(fiber, e, block_basis, rng));
    total_units += rep.blocks.back().size * rep.blocks.back().size;
  }
  if (total_units != fiber.dim())
    throw NumericalError("matrix units do not span the fiber");

  rep.to_fiber = Mat(fiber.dim(), total_units);
  int c = 0;
  for (const auto& b : rep.blocks)
    for (const Vec& u : b.units) rep.to_fiber.col(c++) = u;
  rep.from_fiber = rep.to_fiber.completeOrthogonalDecomposition().pseudoInverse();
  return rep;
}

}  // namespace frobase
