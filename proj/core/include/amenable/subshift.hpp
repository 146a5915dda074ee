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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amenable/finite_subset.hpp"
#include "amenable/foelner.hpp"
#include "amenable/group.hpp"
#include "amenable/rational.hpp"

namespace amenable {

/// Index into a subshift's alphabet.
using Symbol = std::uint8_t;
inline constexpr std::size_t kMaxAlphabet = 255;

/// A finite pattern: a symbol for every element of a finite domain.
/// symbols()[k] belongs to domain()[k].
class Pattern {
 public:
  Pattern(FiniteSubset domain, std::vector<Symbol> symbols);
  static Pattern from_cells(const Group& group,
                            std::vector<std::pair<GroupElement, Symbol>> cells);
  /// Same symbol everywhere on the domain.
  static Pattern constant(FiniteSubset domain, Symbol symbol);

  const FiniteSubset& domain() const { return domain_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  std::optional<Symbol> find(const GroupElement& g) const;
  /// Throws UsageError when g is outside the domain.
  Symbol at(const GroupElement& g) const;
  /// Throws UsageError unless `sub` is inside the domain.
  Pattern restrict_to(const FiniteSubset& sub) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  FiniteSubset domain_;
  std::vector<Symbol> symbols_;
};

/// Subshift of finite type X in A^G given by a finite forbidden list. The
/// shift acts by (g'x)_g = x_{g g'}; a pattern P occurs in x at h when
/// x_{d h} = P_d for every d in dom(P).
class Subshift {
 public:
  Subshift(Group group, std::vector<std::string> alphabet, std::vector<Pattern> forbidden);

  static Subshift full_shift(const Group& group, std::size_t symbols);
  /// Z subshift over {0,1} forbidding the word 11.
  static Subshift golden_mean();
  /// Z^2 subshift over {0,1} forbidding horizontally or vertically adjacent 1s.
  static Subshift hard_square();

  const Group& group() const { return group_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }
  std::optional<Symbol> symbol_index(std::string_view name) const;

 private:
  Group group_;
  std::vector<std::string> alphabet_;
  std::vector<Pattern> forbidden_;
};

/// The cylinder [w]_{F_n}: all points agreeing with w on F_n.
struct Cylinder {
  std::size_t scale = 0;
  Pattern pattern;
};

/// Throws UsageError unless the pattern's domain is exactly F_scale.
Cylinder make_cylinder(const FoelnerSequence& seq, std::size_t scale, Pattern pattern);

/// True iff x agrees with the cylinder's pattern on all of F_n. Throws
/// UsageError when x is not defined on F_n.
bool cylinder_contains(const Pattern& x, const Cylinder& c);

/// The pattern of g'x: (g'x)_g = x_{g g'}, defined on dom(x) (g')^{-1}.
Pattern shift_pattern(const Pattern& x, const GroupElement& by);

/// No forbidden pattern occurs at any h with dom(P) h inside dom(x).
bool is_locally_admissible(const Subshift& sft, const Pattern& x);

/// Number of locally admissible patterns on F. Exact; uses a frontier
/// dynamic program over F in lexicographic cell order, so the cost is
/// governed by the number of distinct boundary states rather than |A|^|F|.
BigInt count_locally_admissible(const Subshift& sft, const FiniteSubset& f);

/// Number of patterns on F with at least one locally admissible extension to
/// `margin`. Throws UsageError unless F is inside margin.
BigInt count_extendable(const Subshift& sft, const FiniteSubset& f, const FiniteSubset& margin);

/// All locally admissible patterns on F in lexicographic order of their
/// symbol strings. Throws DomainError when more than `limit` exist.
std::vector<Pattern> enumerate_locally_admissible(const Subshift& sft, const FiniteSubset& f,
                                                  std::size_t limit = 1u << 22);

enum class CountMode { kLocal, kExtendable };

struct EntropyMode {
  CountMode kind = CountMode::kLocal;
  /// Extendable mode counts patterns on F_n extendable to F_{n+margin_growth}.
  std::size_t margin_growth = 1;
};

struct EntropyPoint {
  std::size_t n = 0;
  std::size_t cells = 0;  // |F_n|
  BigInt count;
  /// log(count) / |F_n|, natural log; -inf when count is zero.
  double rate = 0;
};

std::vector<EntropyPoint> entropy_curve(const Subshift& sft, const FoelnerSequence& seq,
                                        std::size_t n_max, EntropyMode mode = {});

/// d(x,y) = 1 if x and y differ on F_1, else exp(-|F_n|) for the largest
/// n <= depth with agreement on F_n; 0 when they agree on all of F_depth.
/// Throws UsageError when a domain misses F_depth.
double foelner_metric(const Pattern& x, const Pattern& y, const FoelnerSequence& seq,
                      std::size_t depth);

}  // namespace amenable
