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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobase/fiber_algebra.hpp"
#include "frobase/monoidal.hpp"

namespace frobase {

/// A dagger Frobenius structure: a carrier bundle with a per-point
/// multiplication tensor mu_t (dim x dim^2, inputs flattened row-major) and a
/// per-point unit vector eta_t.
struct FrobeniusStructure {
  HilbertBundle carrier;
  std::vector<Mat> mult;
  std::vector<Vec> unit;

  FrobeniusStructure() = default;
  FrobeniusStructure(HilbertBundle c, std::vector<Mat> m, std::vector<Vec> u);

  /// Multiplication and unit as bundle morphisms.
  BundleMorphism mult_morphism() const;
  BundleMorphism unit_morphism() const;

  /// The fiber at t as an algebra (star left empty).
  FiberAlgebra fiber(int t) const;
};

enum class Law {
  Unit,
  Associativity,
  Frobenius,
  StrongFrobenius,
  Speciality,
  Commutativity,
  Nondegeneracy,
};

std::string law_name(Law law);
const std::vector<Law>& all_laws();

/// Residuals are max over points of the operator norm of the defect block;
/// for nondegeneracy the verdict asks eta! eta to be bounded away from zero
/// on the support, recorded as residual tol^2 / min |eta! eta|.
struct LawReport {
  double tolerance = kDefaultTol;
  std::map<Law, double> residual;
  std::map<Law, bool> verdict;
  double min_unit_pairing = 0.0;  // min over support of |eta! eta|(t)

  bool passes(Law law) const { return verdict.at(law); }
  bool monoid_and_frobenius() const;
  bool all_of(const std::vector<Law>& laws) const;
};

/// Evaluates every law per point by tensor contraction against mu, eta and
/// their weighted adjoints.
LawReport verify_laws(const FrobeniusStructure& f, double tol = kDefaultTol);

/// Throws VerificationError unless unit, associativity and Frobenius hold.
void require_monoid_frobenius(const FrobeniusStructure& f, double tol = kDefaultTol);

struct Involution {
  BundleMorphism i;        // E -> E*, the contraction (id (x) eta!) (id (x) mu) (zeta (x) id)
  std::vector<Mat> star;   // antilinear x -> star_t * conj(x), per point
};

/// The involution of a structure passing monoid + Frobenius laws.
Involution involution(const FrobeniusStructure& f, double tol = kDefaultTol);

/// Attaches star maps to a fiber view (for idempotent machinery).
FiberAlgebra fiber_with_star(const FrobeniusStructure& f, const Involution& inv, int t);

struct SpecialiserResult {
  BundleMorphism d;              // central self-adjoint isomorphism, d = T^{-1/2}
  double centrality_residual = 0.0;
  double speciality_residual = 0.0;  // of mu (d (x) d) mu!
};

/// The positive central square root solving mu (d (x) d) mu! = id, via
/// spectral calculus on T = mu mu!. Throws VerificationError when T is
/// singular or not central.
SpecialiserResult specialiser(const FrobeniusStructure& f, double tol = kDefaultTol);

/// (E, d mu, d^{-1} eta): the special structure isomorphic to f.
FrobeniusStructure specialise(const FrobeniusStructure& f, double tol = kDefaultTol);

enum class MatrixScale {
  Special,  // per-block inner product n_i tr(a* b): the structure is special
  Trace,    // plain tr(a* b): specialisable with specialiser n^{-1/2}
};

/// Direct sum of matrix algebras M_{n_1} (+) ... with the same fiber at every
/// point, in orthonormalized coordinates (basis E_ab / sqrt(c_i)).
FrobeniusStructure matrix_frobenius(const BaseSpace& base, const std::vector<int>& blocks,
                                    MatrixScale scale = MatrixScale::Special);

/// matrix_frobenius with the special normalization; blocks [1] is the unit
/// bundle's canonical structure.
FrobeniusStructure trivial_frobenius(const BaseSpace& base, const std::vector<int>& blocks);

/// The endomorphism structure on E* (x) E with multiplication
/// id (x) eps (x) id and unit zeta.
FrobeniusStructure endomorphism_frobenius(const HilbertBundle& e);

/// Tensor product structure on E (x) F.
FrobeniusStructure tensor_frobenius(const FrobeniusStructure& f, const FrobeniusStructure& g);

/// Conjugates mu, eta by a unitary per point (u must be unitary for the
/// result to be a dagger Frobenius structure again).
FrobeniusStructure conjugate_structure(const FrobeniusStructure& f, const BundleMorphism& u);

/// Per point, the operator norm of left multiplication by x_t; satisfies the
/// C*-identity for special structures. Refuses non-special structures.
CFunction cstar_norm(const FrobeniusStructure& f, const Section& x, double tol = kDefaultTol);

/// Per-point multiset of Artin-Wedderburn block sizes. Accepts specialisable
/// structures (classification is invariant under specialising).
std::vector<std::vector<int>> classify_fibers(const FrobeniusStructure& f, uint64_t seed = 7,
                                              double tol = kDefaultTol);

/// Center one-dimensional at every point, with eta nonzero everywhere
/// (faithfulness over a finite discrete base).
bool is_central(const FrobeniusStructure& f, double tol = kDefaultTol);

/// Phase-group membership: (phi! (x) id) mu! phi = eta, cross-checked against
/// unitarity of phi in each fiber; the two criteria must agree.
bool is_phase(const FrobeniusStructure& f, const Section& phi, double tol = kDefaultTol);

/// mu2 (f (x) f) = f mu1 and f(x*) = f(x)* on a fiber basis.
bool is_star_homomorphism(const BundleMorphism& f, const FrobeniusStructure& f1,
                          const FrobeniusStructure& f2, double tol = kDefaultTol);
double star_homomorphism_residual(const BundleMorphism& f, const FrobeniusStructure& f1,
                                  const FrobeniusStructure& f2);

struct SupportRestriction {
  std::vector<std::string> support;  // U = {t : dim > 0}
  FrobeniusStructure restricted;
  CFunction support_scalar;  // eta! mu mu! eta, supported exactly on U
};

SupportRestriction support_restriction(const FrobeniusStructure& f, double tol = kDefaultTol);

/// The multiplication of every fiber of the unit bundle as a structure:
/// mu = 1, eta = 1 at each point.
FrobeniusStructure unit_structure(const BaseSpace& base);

}  // namespace frobase
