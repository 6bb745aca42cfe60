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

#include <string>
#include <unordered_map>
#include <vector>

#include "frobase/types.hpp"

namespace frobase {

/// A finite labeled set of points, standing for a finite discrete compact
/// Hausdorff space. The label order is fixed and canonical: it determines the
/// row/column order of every matrix serialized against this space.
class BaseSpace {
 public:
  BaseSpace() = default;
  explicit BaseSpace(std::vector<std::string> points);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(int i) const { return points_.at(i); }
  bool contains(const std::string& label) const { return index_.count(label) > 0; }
  int index_of(const std::string& label) const;

  bool operator==(const BaseSpace& other) const { return points_ == other.points_; }
  bool operator!=(const BaseSpace& other) const { return !(*this == other); }

  /// Space with the points of this one that lie in `keep` (order preserved).
  BaseSpace restrict_to(const std::vector<int>& keep) const;

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, int> index_;
};

/// An element of C(X): one complex value per point of X.
class CFunction {
 public:
  CFunction() = default;
  CFunction(BaseSpace space, Vec values);
  static CFunction constant(const BaseSpace& space, Complex value);
  static CFunction indicator(const BaseSpace& space, const std::vector<int>& support);

  const BaseSpace& space() const { return space_; }
  const Vec& values() const { return values_; }
  Complex at(int i) const { return values_[i]; }

  CFunction operator*(const CFunction& other) const;
  CFunction operator+(const CFunction& other) const;
  CFunction conj() const;
  double max_abs() const;

 private:
  BaseSpace space_;
  Vec values_;
};

/// Indicator of the complement of U; the self-adjoint idempotent scalar the
/// dagger subobject for U composes to.
CFunction idempotent_from_subset(const BaseSpace& space, const std::vector<std::string>& subset);

/// Inverse of idempotent_from_subset. Rejects scalars whose values are not in
/// {0,1} within `tol`, reporting max |s^2 - s|.
std::vector<std::string> subset_from_idempotent(const CFunction& s, double tol = kDefaultTol);

/// Resolves a list of labels to point indices; unknown labels are an input
/// error.
std::vector<int> resolve_subset(const BaseSpace& space, const std::vector<std::string>& subset);

}  // namespace frobase
