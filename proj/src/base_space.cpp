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

#include "frobase/base_space.hpp"

#include <algorithm>

namespace frobase {

BaseSpace::BaseSpace(std::vector<std::string> points) : points_(std::move(points)) {
  for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
    auto [it, inserted] = index_.emplace(points_[i], i);
    if (!inserted) throw InputError("duplicate point label '" + points_[i] + "'");
  }
}

int BaseSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown point label '" + label + "'");
  return it->second;
}

BaseSpace BaseSpace::restrict_to(const std::vector<int>& keep) const {
  std::vector<std::string> pts;
  pts.reserve(keep.size());
  for (int i : keep) pts.push_back(label(i));
  return BaseSpace(std::move(pts));
}

CFunction::CFunction(BaseSpace space, Vec values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw InputError("CFunction value count does not match the base space");
}

CFunction CFunction::constant(const BaseSpace& space, Complex value) {
  return CFunction(space, Vec::Constant(space.size(), value));
}

CFunction CFunction::indicator(const BaseSpace& space, const std::vector<int>& support) {
  Vec v = Vec::Zero(space.size());
  for (int i : support) v[i] = 1.0;
  return CFunction(space, v);
}

CFunction CFunction::operator*(const CFunction& other) const {
  if (space_ != other.space_) throw InputError("CFunction base space mismatch");
  return CFunction(space_, values_.cwiseProduct(other.values_));
}

CFunction CFunction::operator+(const CFunction& other) const {
  if (space_ != other.space_) throw InputError("CFunction base space mismatch");
  return CFunction(space_, values_ + other.values_);
}

CFunction CFunction::conj() const { return CFunction(space_, values_.conjugate()); }

double CFunction::max_abs() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < values_.size(); ++i) m = std::max(m, std::abs(values_[i]));
  return m;
}

std::vector<int> resolve_subset(const BaseSpace& space, const std::vector<std::string>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const auto& label : subset) idx.push_back(space.index_of(label));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

CFunction idempotent_from_subset(const BaseSpace& space, const std::vector<std::string>& subset) {
  std::vector<int> idx = resolve_subset(space, subset);
  Vec v = Vec::Ones(space.size());
  for (int i : idx) v[i] = 0.0;
  return CFunction(space, v);
}

std::vector<std::string> subset_from_idempotent(const CFunction& s, double tol) {
  const CFunction defect = s * s + CFunction(s.space(), -s.values());
  double residual = defect.max_abs();
  if (residual > tol)
    throw VerificationError("scalar is not idempotent, max |s^2 - s| = " + std::to_string(residual),
                            residual);
  std::vector<std::string> subset;
  for (int i = 0; i < s.space().size(); ++i) {
    double v = std::abs(s.at(i));
    if (v < 0.5) subset.push_back(s.space().label(i));
  }
  return subset;
}

}  // namespace frobase
