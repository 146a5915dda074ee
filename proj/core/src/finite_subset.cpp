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

#include "amenable/finite_subset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>

#include "amenable/errors.hpp"

namespace amenable {
namespace {

using Coords = std::array<std::int64_t, kMaxCoordinates>;

void require_same_group(const FiniteSubset& a, const FiniteSubset& b) {
  if (!(a.group() == b.group())) {
    throw UsageError("finite subsets of " + a.group().name() + " and " +
                     b.group().name() + " cannot be combined");
  }
}

std::int64_t add_or_throw(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

std::int64_t mul_or_throw(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

struct Bounds {
  Coords lo{};
  Coords hi{};
};

Bounds bounds_of(const FiniteSubset& s) {
  Bounds b;
  const std::size_t r = s.group().rank();
  for (std::size_t i = 0; i < r; ++i) {
    b.lo[i] = s[0][i];
    b.hi[i] = s[0][i];
  }
  for (const GroupElement& g : s) {
    for (std::size_t i = 0; i < r; ++i) {
      b.lo[i] = std::min(b.lo[i], g[i]);
      b.hi[i] = std::max(b.hi[i], g[i]);
    }
  }
  return b;
}

// Coordinate box containing every product k*a.
Bounds product_bounds(const Group& group, const Bounds& k, const Bounds& a) {
  Bounds out;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    out.lo[i] = add_or_throw(k.lo[i], a.lo[i]);
    out.hi[i] = add_or_throw(k.hi[i], a.hi[i]);
  }
  if (group.kind() == GroupKind::kHeisenberg) {
    const std::array<std::int64_t, 4> corners = {
        mul_or_throw(k.lo[0], a.lo[1]), mul_or_throw(k.lo[0], a.hi[1]),
        mul_or_throw(k.hi[0], a.lo[1]), mul_or_throw(k.hi[0], a.hi[1])};
    out.lo[2] = add_or_throw(out.lo[2], *std::min_element(corners.begin(), corners.end()));
    out.hi[2] = add_or_throw(out.hi[2], *std::max_element(corners.begin(), corners.end()));
  }
  return out;
}

// Raw product without per-call overflow checks; callers bound coordinates
// first via product_bounds.
inline GroupElement fast_product(const Group& group, const GroupElement& k,
                                 const GroupElement& a, Coords& scratch) {
  const std::size_t r = group.rank();
  for (std::size_t i = 0; i < r; ++i) scratch[i] = k[i] + a[i];
  if (group.kind() == GroupKind::kHeisenberg) scratch[2] += k[0] * a[1];
  return group.element(std::span<const std::int64_t>(scratch.data(), r));
}

constexpr std::uint64_t kDenseCellLimit = std::uint64_t{1} << 27;

}  // namespace

FiniteSubset::FiniteSubset(Group group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  for (const GroupElement& g : elements_) {
    if (!group_.contains(g)) {
      throw UsageError("element " + g.to_string() + " does not belong to " + group_.name());
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteSubset from_sorted(Group group, std::vector<GroupElement> elements) {
  return FiniteSubset(std::move(group), std::move(elements), FiniteSubset::Sorted{});
}

FiniteSubset FiniteSubset::box(const Group& lattice, std::span<const std::int64_t> lo,
                               std::span<const std::int64_t> hi) {
  if (lattice.kind() != GroupKind::kIntegerLattice) {
    throw UsageError("boxes are defined for lattice groups only");
  }
  const std::size_t r = lattice.rank();
  if (lo.size() != r || hi.size() != r) throw UsageError("box corner has wrong rank");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < r; ++i) {
    if (hi[i] <= lo[i]) return FiniteSubset(lattice);
  }
  Coords c{};
  for (std::size_t i = 0; i < r; ++i) c[i] = lo[i];
  // Odometer in lexicographic order (last axis fastest).
  while (true) {
    out.push_back(lattice.element(std::span<const std::int64_t>(c.data(), r)));
    std::size_t axis = r;
    while (axis > 0) {
      --axis;
      if (++c[axis] < hi[axis]) break;
      c[axis] = lo[axis];
      if (axis == 0) return from_sorted(lattice, std::move(out));
    }
  }
}

FiniteSubset FiniteSubset::cube(const Group& lattice, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> los(lattice.rank(), lo), his(lattice.rank(), hi);
  return box(lattice, los, his);
}

bool FiniteSubset::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::optional<std::size_t> FiniteSubset::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteSubset::is_subset_of(const FiniteSubset& other) const {
  return group_ == other.group_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

FiniteSubset left_translate(const GroupElement& g, const FiniteSubset& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const GroupElement& x : a) out.push_back(a.group().multiply(g, x));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset right_translate(const FiniteSubset& a, const GroupElement& g) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const GroupElement& x : a) out.push_back(a.group().multiply(x, g));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset product_set(const FiniteSubset& k, const FiniteSubset& a) {
  require_same_group(k, a);
  const Group& group = a.group();
  if (k.empty() || a.empty()) return FiniteSubset(group);

  const Bounds box = product_bounds(group, bounds_of(k), bounds_of(a));
  const std::size_t r = group.rank();
  std::uint64_t volume = 1;
  std::array<std::uint64_t, kMaxCoordinates> stride{};
  for (std::size_t i = r; i-- > 0;) {
    stride[i] = volume;
    const std::uint64_t extent =
        static_cast<std::uint64_t>(box.hi[i]) - static_cast<std::uint64_t>(box.lo[i]) + 1;
    if (extent == 0 || extent > kDenseCellLimit || volume > kDenseCellLimit / extent) {
      volume = kDenseCellLimit + 1;
      break;
    }
    volume *= extent;
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(k.size()) * a.size();
  Coords scratch{};

  if (volume <= kDenseCellLimit && volume <= 64 * pairs + 4096) {
    // Dense bitmap over the bounding box; bit order is lexicographic order.
    const std::size_t cells = static_cast<std::size_t>(volume);
    std::vector<std::uint64_t> bits((cells + 63) / 64, 0);
    const bool heisenberg = group.kind() == GroupKind::kHeisenberg;
    for (const GroupElement& x : k) {
      for (const GroupElement& y : a) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < r; ++i) {
          std::int64_t c = x[i] + y[i];
          if (heisenberg && i == 2) c += x[0] * y[1];
          index += static_cast<std::size_t>(c - box.lo[i]) * static_cast<std::size_t>(stride[i]);
        }
        bits[index >> 6] |= std::uint64_t{1} << (index & 63);
      }
    }
    std::vector<GroupElement> out;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        std::size_t index = w * 64 + static_cast<std::size_t>(bit);
        for (std::size_t i = 0; i < r; ++i) {
          const std::size_t s = static_cast<std::size_t>(stride[i]);
          scratch[i] = box.lo[i] + static_cast<std::int64_t>(index / s);
          index %= s;
        }
        out.push_back(group.element(std::span<const std::int64_t>(scratch.data(), r)));
      }
    }
    return from_sorted(group, std::move(out));
  }

  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(pairs));
  for (const GroupElement& x : k) {
    for (const GroupElement& y : a) out.push_back(fast_product(group, x, y, scratch));
  }
  return FiniteSubset(group, std::move(out));
}

FiniteSubset inverse_set(const FiniteSubset& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const GroupElement& x : a) out.push_back(inverse(x));
  return FiniteSubset(a.group(), std::move(out));
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_group(a, b);
  std::vector<GroupElement> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_sorted(a.group(), std::move(out));
}

FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_group(a, b);
  std::vector<GroupElement> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_sorted(a.group(), std::move(out));
}

FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_group(a, b);
  std::vector<GroupElement> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_sorted(a.group(), std::move(out));
}

FiniteSubset symmetric_difference(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_group(a, b);
  std::vector<GroupElement> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return from_sorted(a.group(), std::move(out));
}

Rational foelner_defect(const FiniteSubset& f, const GroupElement& g) {
  if (f.empty()) throw DomainError("Foelner defect of an empty set");
  if (!f.group().contains(g)) throw UsageError("translating element from another group");
  // |gF| = |F|, so |gF sym-diff F| = 2 |gF \ F|.
  std::size_t escaped = 0;
  for (const GroupElement& x : f) {
    if (!f.contains(multiply(g, x))) ++escaped;
  }
  return Rational(2 * escaped, f.size());
}

FiniteSubset k_boundary(const FiniteSubset& a, const FiniteSubset& k) {
  require_same_group(a, k);
  if (k.empty()) throw DomainError("K-boundary with empty K");
  // Kg meets A  <=>  g in K^{-1}A, so only those candidates need a check for
  // some kg outside A.
  const FiniteSubset candidates = product_set(inverse_set(k), a);
  std::vector<GroupElement> out;
  for (const GroupElement& g : candidates) {
    for (const GroupElement& x : k) {
      if (!a.contains(multiply(x, g))) {
        out.push_back(g);
        break;
      }
    }
  }
  return from_sorted(a.group(), std::move(out));
}

bool is_k_delta_invariant(const FiniteSubset& a, const FiniteSubset& k, const Rational& delta) {
  if (a.empty()) throw DomainError("(K,delta)-invariance of an empty set");
  if (delta <= 0) throw DomainError("delta must be positive");
  return Rational(k_boundary(a, k).size(), a.size()) < delta;
}

}  // namespace amenable
