// Copyright 2026 The Edgedom Authors.
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

#ifndef EDGEDOM_CANONICAL_H_
#define EDGEDOM_CANONICAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "edgedom/graph.h"

namespace edgedom {

// Canonical relabeling of a graph. Two graphs have equal forms (order and
// rows) iff they are isomorphic.
struct CanonicalForm {
  int order = 0;
  // rows[i] is the neighborhood of canonical vertex i.
  std::vector<std::uint64_t> rows;
  // position[v] is the canonical index of input vertex v.
  std::vector<int> position;

  Graph ToGraph() const;
  // Compact hashable encoding of (order, rows).
  std::string Key() const;
  // Upper triangle packed into one word; requires order <= 11.
  std::uint64_t PackedKey() const;

  bool operator==(const CanonicalForm& o) const {
    return order == o.order && rows == o.rows;
  }
  bool operator<(const CanonicalForm& o) const {
    return order != o.order ? order < o.order : rows < o.rows;
  }
};

// Partition refinement plus individualization search with automorphism
// pruning. Practical up to a dozen or so vertices.
CanonicalForm Canonicalize(const Graph& g);
bool IsIsomorphic(const Graph& a, const Graph& b);

// Same encoding as CanonicalForm::PackedKey for graphs of order <= 11.
std::uint64_t PackUpperTriangle(const Graph& g);
Graph UnpackUpperTriangle(int order, std::uint64_t key);

}  // namespace edgedom

#endif  // EDGEDOM_CANONICAL_H_
