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

#include <vector>

#include "frobase/base_space.hpp"

namespace frobase {

/// A conditional expectation C(X) ->> C(D), encoded by the dual surjection
/// q : X ->> D of the embedding C(D) >-> C(X) and a nonnegative kernel K with
/// K(d,x) = 0 off q^{-1}(d) and unit row sums, so that the positive map
/// f(a)(d) = sum_x K(d,x) a(x) satisfies f(g(b)) = b.
class ConditionalExpectation {
 public:
  ConditionalExpectation() = default;

  const BaseSpace& source() const { return source_; }   // X
  const BaseSpace& target() const { return target_; }   // D
  int spectrum_map(int x) const { return q_[x]; }       // q : X -> D
  const std::vector<int>& spectrum_map() const { return q_; }
  double kernel(int d, int x) const { return kernel_(d, x); }
  const RealMat& kernel() const { return kernel_; }     // |D| x |X|, row-major in D

  /// Source points in the fiber q^{-1}(d), in source order.
  std::vector<int> fiber(int d) const;
  /// Source points in q^{-1}(d) with K(d,x) > 0.
  std::vector<int> support(int d) const;

  /// Applies the induced positive map: (f a)(d) = sum_x K(d,x) a(x).
  CFunction apply(const CFunction& a) const;
  /// Applies the embedding: (g b)(x) = b(q(x)).
  CFunction pullback(const CFunction& b) const;

  friend ConditionalExpectation make_conditional_expectation(const BaseSpace&, const BaseSpace&,
                                                             const std::vector<int>&, const RealMat&,
                                                             double);

 private:
  BaseSpace source_;
  BaseSpace target_;
  std::vector<int> q_;
  RealMat kernel_;
};

/// Validates and constructs; q must be surjective, K supported on fibers with
/// unit row sums. Violations name the offending target point.
ConditionalExpectation make_conditional_expectation(const BaseSpace& source, const BaseSpace& target,
                                                    const std::vector<int>& q, const RealMat& kernel,
                                                    double tol = kDefaultTol);

/// The identity expectation at X (q = id, K = identity kernel).
ConditionalExpectation identity_expectation(const BaseSpace& space);

/// Strict iff every fiber support {x in q^{-1}(d) : K(d,x) > 0} is a
/// singleton; equivalent to f(ab) = 0 => f(a) f(b) = 0 on positives.
bool is_strict(const ConditionalExpectation& ce, double tol = kDefaultTol);

/// A witness (a, b) of strictness failure: coordinate indicators with
/// f(ab) = 0 but f(a) f(b) != 0. Only valid when !is_strict(ce).
std::pair<CFunction, CFunction> strictness_witness(const ConditionalExpectation& ce,
                                                   double tol = kDefaultTol);

}  // namespace frobase
