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

#include <cstdint>
#include <vector>

namespace amenable::internal {

// Dinic's algorithm on an integer-capacity network. Each instance owns its
// residual graph, so separate instances may be used from separate threads.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  // Returns the id of the forward arc; its reverse is id ^ 1.
  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t solve(int source, int sink);
  std::int64_t flow_on(int edge) const { return edges_[edge ^ 1].capacity; }

 private:
  struct Edge {
    int to;
    std::int64_t capacity;  // residual
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace amenable::internal
