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

#ifndef EDGEDOM_GRAPH6_H_
#define EDGEDOM_GRAPH6_H_

#include <string>
#include <string_view>

#include "edgedom/graph.h"

namespace edgedom {

// McKay's graph6 format. Orders up to 62 use the one-byte header, 63 and 64
// the four-byte '~' form. An optional ">>graph6<<" prefix and trailing
// whitespace are accepted. Padding bits must be zero, so parse and write are
// mutually inverse. Throws InputError on malformed input.
Graph ParseGraph6(std::string_view text);
std::string WriteGraph6(const Graph& g);

// Graphviz export; vertices in increasing order, then edges in canonical
// order.
std::string ToDot(const Graph& g, std::string_view name = "G");

}  // namespace edgedom

#endif  // EDGEDOM_GRAPH6_H_
