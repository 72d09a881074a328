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

#include "edgedom/graph6.h"

#include <sstream>

#include "edgedom/error.h"

namespace edgedom {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int DataBytes(int n) {
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  return static_cast<int>((bits + 5) / 6);
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw InputError("graph6: byte outside 63..126 in '" +
                       std::string(text) + "'");
    }
  }

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw InputError("graph6: order exceeds 64");
    }
    if (text.size() < 4) throw InputError("graph6: truncated long header");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) |
        (text[3] - kBias);
    pos = 4;
    if (n < 63) {
      throw InputError("graph6: long header used for order " +
                       std::to_string(n));
    }
  }
  if (n > kMaxVertices) {
    throw InputError("graph6: order " + std::to_string(n) + " exceeds 64");
  }
  const int expected = DataBytes(n);
  if (static_cast<int>(text.size() - pos) != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) +
                     " data bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));
  }

  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.AddEdge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int last = text[pos + bit / 6] - kBias;
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw InputError("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string WriteGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

std::string ToDot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.Edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace edgedom
