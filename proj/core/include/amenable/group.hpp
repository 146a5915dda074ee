// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace amenable {

/// Upper bound on the coordinate count of an element (lattice rank or 3).
inline constexpr std::size_t kMaxCoordinates = 6;

enum class GroupKind : std::uint8_t { kIntegerLattice, kHeisenberg };

/// An element of Z^d or of the discrete Heisenberg group, stored in its
/// unique normal form. Two elements are equal iff their groups and
/// coordinate vectors agree. Ordering is lexicographic in the coordinates.
class GroupElement {
 public:
  GroupElement() = default;

  GroupKind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  std::span<const std::int64_t> coordinates() const {
    return {coords_.data(), rank_};
  }
  std::int64_t operator[](std::size_t axis) const { return coords_[axis]; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

 private:
  friend class Group;
  friend GroupElement multiply(const GroupElement& g, const GroupElement& h);
  friend GroupElement inverse(const GroupElement& g);

  GroupKind kind_ = GroupKind::kIntegerLattice;
  std::uint8_t rank_ = 0;
  std::array<std::int64_t, kMaxCoordinates> coords_{};
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// A finitely generated amenable group: Z^d (componentwise addition) or the
/// discrete Heisenberg group with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'),
/// where z is the upper-right entry of the unitriangular integer matrix.
class Group {
 public:
  static Group integer_lattice(std::size_t rank);
  static Group heisenberg();

  GroupKind kind() const { return kind_; }
  /// Number of coordinates of an element (d for Z^d, 3 for Heisenberg).
  std::size_t rank() const { return rank_; }
  std::string name() const;

  /// Symmetric generating set: +-e_i for Z^d, (+-1,0,0) and (0,+-1,0) for
  /// the Heisenberg group.
  const std::vector<GroupElement>& generators() const { return generators_; }

  bool contains(const GroupElement& g) const {
    return g.kind() == kind_ && g.rank() == rank_;
  }

  GroupElement identity() const;
  /// Throws UsageError if the coordinate count does not match the group.
  GroupElement element(std::span<const std::int64_t> coordinates) const;
  GroupElement element(std::initializer_list<std::int64_t> coordinates) const {
    return element(std::span<const std::int64_t>(coordinates.begin(),
                                                  coordinates.size()));
  }

  /// g*h in normal form. Throws UsageError on operands from another group.
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  Group(GroupKind kind, std::size_t rank);

  GroupKind kind_;
  std::size_t rank_;
  std::vector<GroupElement> generators_;
};

/// Group law dispatched on the operands' own group tag.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

}  // namespace amenable
