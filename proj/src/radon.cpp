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

#include "frobase/radon.hpp"

namespace frobase {

StochasticKernel::StochasticKernel(BaseSpace src, BaseSpace tgt, RealMat w)
    : source(std::move(src)), target(std::move(tgt)), weight(std::move(w)) {
  if (weight.rows() != source.size() || weight.cols() != target.size())
    throw InputError("kernel shape must be |source| x |target|");
  for (int x = 0; x < weight.rows(); ++x)
    for (int y = 0; y < weight.cols(); ++y)
      if (weight(x, y) < 0.0) throw InputError("kernel weights must be nonnegative");
}

StochasticKernel StochasticKernel::identity(const BaseSpace& space) {
  return StochasticKernel(space, space, RealMat::Identity(space.size(), space.size()));
}

StochasticKernel radon_compose(const StochasticKernel& f, const StochasticKernel& g) {
  if (f.target != g.source) throw InputError("kernel composition endpoint mismatch");
  return StochasticKernel(f.source, g.target, f.weight * g.weight);
}

CFunction PositiveMap::apply(const CFunction& h) const {
  if (h.space() != source) throw InputError("positive map applied to a function on the wrong space");
  return CFunction(target, matrix.cast<Complex>() * h.values());
}

PositiveMap radon_to_cp(const StochasticKernel& f) {
  return PositiveMap{f.target, f.source, f.weight};
}

PositiveMap compose_cp_maps(const PositiveMap& second, const PositiveMap& first) {
  if (first.target != second.source) throw InputError("positive map composition endpoint mismatch");
  return PositiveMap{first.source, second.target, second.matrix * first.matrix};
}

RadonOfExpectation ce_to_radon(const ConditionalExpectation& ce) {
  StochasticKernel kernel(ce.target(), ce.source(), ce.kernel());
  return RadonOfExpectation{std::move(kernel), ce.spectrum_map()};
}

}  // namespace frobase
