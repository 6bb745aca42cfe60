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

#include "frobase/conditional_expectation.hpp"

#include <cmath>

namespace frobase {

std::vector<int> ConditionalExpectation::fiber(int d) const {
  std::vector<int> out;
  for (int x = 0; x < source_.size(); ++x)
    if (q_[x] == d) out.push_back(x);
  return out;
}

std::vector<int> ConditionalExpectation::support(int d) const {
  std::vector<int> out;
  for (int x = 0; x < source_.size(); ++x)
    if (q_[x] == d && kernel_(d, x) > 0.0) out.push_back(x);
  return out;
}

CFunction ConditionalExpectation::apply(const CFunction& a) const {
  if (a.space() != source_) throw InputError("expectation applied to a function on the wrong space");
  Vec out = Vec::Zero(target_.size());
  for (int d = 0; d < target_.size(); ++d)
    for (int x = 0; x < source_.size(); ++x) out[d] += kernel_(d, x) * a.at(x);
  return CFunction(target_, out);
}

CFunction ConditionalExpectation::pullback(const CFunction& b) const {
  if (b.space() != target_) throw InputError("pullback applied to a function on the wrong space");
  Vec out(source_.size());
  for (int x = 0; x < source_.size(); ++x) out[x] = b.at(q_[x]);
  return CFunction(source_, out);
}

ConditionalExpectation make_conditional_expectation(const BaseSpace& source, const BaseSpace& target,
                                                    const std::vector<int>& q, const RealMat& kernel,
                                                    double tol) {
  if (static_cast<int>(q.size()) != source.size())
    throw InputError("spectrum map must assign a target point to every source point");
  if (kernel.rows() != target.size() || kernel.cols() != source.size())
    throw InputError("kernel shape must be |target| x |source|");

  std::vector<bool> hit(target.size(), false);
  for (int x = 0; x < source.size(); ++x) {
    if (q[x] < 0 || q[x] >= target.size()) throw InputError("spectrum map value out of range");
    hit[q[x]] = true;
  }
  for (int d = 0; d < target.size(); ++d)
    if (!hit[d]) throw InputError("spectrum map is not surjective, target '" + target.label(d) + "' is not hit");

  for (int d = 0; d < target.size(); ++d) {
    double row_sum = 0.0;
    for (int x = 0; x < source.size(); ++x) {
      double w = kernel(d, x);
      if (w < 0.0) throw InputError("kernel weight is negative at ('" + target.label(d) + "', '" + source.label(x) + "')");
      if (q[x] != d && w > tol)
        throw InputError("kernel of '" + target.label(d) + "' has weight outside its fiber");
      row_sum += w;
    }
    if (std::abs(row_sum - 1.0) > tol)
      throw InputError("kernel row of '" + target.label(d) + "' sums to " + std::to_string(row_sum) +
                       ", expected 1");
  }

  ConditionalExpectation ce;
  ce.source_ = source;
  ce.target_ = target;
  ce.q_ = q;
  ce.kernel_ = kernel;
  return ce;
}

ConditionalExpectation identity_expectation(const BaseSpace& space) {
  std::vector<int> q(space.size());
  RealMat kernel = RealMat::Identity(space.size(), space.size());
  for (int i = 0; i < space.size(); ++i) q[i] = i;
  return make_conditional_expectation(space, space, q, kernel);
}

bool is_strict(const ConditionalExpectation& ce, double tol) {
  for (int d = 0; d < ce.target().size(); ++d) {
    int support = 0;
    for (int x = 0; x < ce.source().size(); ++x)
      if (ce.spectrum_map(x) == d && ce.kernel(d, x) > tol) ++support;
    if (support > 1) return false;
  }
  return true;
}

std::pair<CFunction, CFunction> strictness_witness(const ConditionalExpectation& ce, double tol) {
  for (int d = 0; d < ce.target().size(); ++d) {
    std::vector<int> support;
    for (int x = 0; x < ce.source().size(); ++x)
      if (ce.spectrum_map(x) == d && ce.kernel(d, x) > tol) support.push_back(x);
    if (support.size() > 1) {
      return {CFunction::indicator(ce.source(), {support[0]}),
              CFunction::indicator(ce.source(), {support[1]})};
    }
  }
  throw VerificationError("expectation is strict, no witness exists");
}

}  // namespace frobase
