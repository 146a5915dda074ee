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

#include "amenable/group.hpp"

#include <string>

#include "amenable/errors.hpp"

namespace amenable {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

void require_same(const GroupElement& g, const GroupElement& h) {
  if (g.kind() != h.kind() || g.rank() != h.rank()) {
    throw UsageError("group operands " + g.to_string() + " and " + h.to_string() +
                     " belong to different groups");
  }
}

}  // namespace

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.kind()) * 31 + g.rank();
  for (std::int64_t c : g.coordinates()) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Group::Group(GroupKind kind, std::size_t rank) : kind_(kind), rank_(rank) {
  const std::size_t axes = kind == GroupKind::kHeisenberg ? 2 : rank;
  for (std::size_t axis = 0; axis < axes; ++axis) {
    for (std::int64_t sign : {1, -1}) {
      GroupElement g = identity();
      g.coords_[axis] = sign;
      generators_.push_back(g);
    }
  }
}

Group Group::integer_lattice(std::size_t rank) {
  if (rank < 1 || rank > kMaxCoordinates) {
    throw UsageError("lattice rank must be in [1, " + std::to_string(kMaxCoordinates) +
                     "], got " + std::to_string(rank));
  }
  return Group(GroupKind::kIntegerLattice, rank);
}

Group Group::heisenberg() { return Group(GroupKind::kHeisenberg, 3); }

std::string Group::name() const {
  if (kind_ == GroupKind::kHeisenberg) return "H3(Z)";
  return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
}

GroupElement Group::identity() const {
  GroupElement g;
  g.kind_ = kind_;
  g.rank_ = static_cast<std::uint8_t>(rank_);
  return g;
}

GroupElement Group::element(std::span<const std::int64_t> coordinates) const {
  if (coordinates.size() != rank_) {
    throw UsageError("element of " + name() + " needs " + std::to_string(rank_) +
                     " coordinates, got " + std::to_string(coordinates.size()));
  }
  GroupElement g = identity();
  for (std::size_t i = 0; i < rank_; ++i) g.coords_[i] = coordinates[i];
  return g;
}

GroupElement Group::multiply(const GroupElement& g, const GroupElement& h) const {
  if (!contains(g) || !contains(h)) {
    throw UsageError("operand does not belong to " + name());
  }
  return amenable::multiply(g, h);
}

GroupElement Group::inverse(const GroupElement& g) const {
  if (!contains(g)) throw UsageError("operand does not belong to " + name());
  return amenable::inverse(g);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same(g, h);
  GroupElement out = g;
  for (std::size_t i = 0; i < g.rank(); ++i) out.coords_[i] = checked_add(g[i], h[i]);
  if (g.kind() == GroupKind::kHeisenberg) {
    out.coords_[2] = checked_add(out.coords_[2], checked_mul(g[0], h[1]));
  }
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out = g;
  for (std::size_t i = 0; i < g.rank(); ++i) out.coords_[i] = -g[i];
  if (g.kind() == GroupKind::kHeisenberg) {
    // (x,y,z)^{-1} = (-x,-y,xy-z)
    out.coords_[2] = checked_add(checked_mul(g[0], g[1]), -g[2]);
  }
  return out;
}

}  // namespace amenable
