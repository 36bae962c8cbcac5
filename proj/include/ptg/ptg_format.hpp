// Copyright 2026 The ptg Authors.
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

#ifndef PTG_PTG_FORMAT_HPP_
#define PTG_PTG_FORMAT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptg/colouring.hpp"
#include "ptg/target.hpp"

namespace ptg {

// Line-oriented graph file:
//   ptg 1
//   d <positive integer>
//   v <id> <neighbour>...        clockwise rotation
//   e <u> <v> <multiplicity>      each undirected edge exactly once
// '#' lines are comments; blank lines are ignored. Vertex ids are ASCII
// tokens without whitespace, '#' or '-'.
struct PtgDocument {
  int version = 1;
  int d = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
  struct EdgeRecord {
    std::string u, v;
    int m = 0;
  };
  std::vector<EdgeRecord> edges;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

// Syntax plus record-level consistency: header, d >= 1, no duplicate vertex
// or edge records, m >= 0, edge endpoints listed in each other's rotations,
// and an edge record for every rotation pair. Planarity is checked later by
// Embedding::build.
PtgDocument parse_ptg(std::string_view text);

// Canonical form: vertices in id order, each rotation starting at its least
// neighbour, edges in (u, v) order. emit(parse(text)) is byte-identical for
// canonical input.
std::string emit_ptg(const PtgDocument& doc);
std::string emit_ptg(const Target& t);

// Full build: planar Embedding plus multiplicities by edge id.
std::pair<Embedding, std::vector<int>> build_from_document(const PtgDocument& doc);

// Build without the planarity (Euler) requirement, for colouring runs on
// graphs that have no plane embedding.
struct LooseGraph {
  std::vector<std::string> ids;  // sorted; index order matches graph
  Multigraph graph;
};
LooseGraph build_multigraph_from_document(const PtgDocument& doc);

}  // namespace ptg

#endif  // PTG_PTG_FORMAT_HPP_
