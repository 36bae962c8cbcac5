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

#ifndef PTG_EMBEDDING_HPP_
#define PTG_EMBEDDING_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptg {

// Structured failure for graph construction and queries. `code` is a short
// stable token ("asymmetric rotation", "euler check failure", ...) that tests
// and the CLI match on; what() carries the full message.
class GraphError : public std::runtime_error {
 public:
  GraphError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Undirected edge between vertex indices, stored with u < v.
struct Edge {
  int u = -1;
  int v = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DirectedEdge {
  int from = -1;
  int to = -1;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// One face of the embedding. `boundary` is the cyclic sequence of directed
// edges produced by face tracing; `edge_ids` is the parallel list of
// undirected edge ids.
struct Region {
  int id = -1;
  std::vector<DirectedEdge> boundary;
  std::vector<int> edge_ids;
  int length() const { return static_cast<int>(boundary.size()); }
};

// Input description: per vertex, the cyclic clockwise list of neighbours.
struct RotationSystem {
  std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
};

// A connected simple graph embedded in the plane, given by a rotation system
// and certified planar by Euler's formula. Vertices are indexed 0..n-1 in
// lexicographic order of their string ids, so index order equals id order.
// Immutable after construction.
class Embedding {
 public:
  // Empty until assigned from build().
  Embedding() = default;

  // Validates and builds; throws GraphError with codes:
  //   "empty graph", "duplicate vertex", "unknown neighbour", "loop",
  //   "duplicate neighbour", "asymmetric rotation", "disconnected graph",
  //   "euler check failure".
  static Embedding build(const RotationSystem& system);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int region_count() const { return static_cast<int>(regions_.size()); }

  const std::string& id(int vertex) const { return ids_[vertex]; }
  std::optional<int> index_of(const std::string& id) const;
  const std::vector<std::string>& ids() const { return ids_; }

  const std::vector<int>& rotation(int vertex) const { return rotation_[vertex]; }
  int degree(int vertex) const { return static_cast<int>(rotation_[vertex].size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int edge_id) const { return edges_[edge_id]; }
  std::optional<int> edge_id(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_id(u, v).has_value(); }

  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(int region_id) const { return regions_[region_id]; }

  // The two regions incident with an edge, as traced from its two directed
  // versions. Equal entries mean the edge is a bridge (graph not
  // two-connected). First entry is the region of (u,v) with u < v.
  std::pair<int, int> incident_regions(int edge_id) const;

  // delta(X): all edges with exactly one end in X. X must name valid,
  // distinct vertices. Result is sorted.
  std::vector<int> cut_of_set(const std::vector<int>& vertex_set) const;
  std::vector<int> cut_of_mask(unsigned long long mask) const;

  // True iff the edge set is a cycle of the dual graph: at least three
  // edges, each touched region met by exactly two of them, connected.
  bool is_cocycle(const std::vector<int>& edge_ids) const;

  // No vertex cut of size <= 2. Needs |V| >= 4; smaller graphs get no
  // answer (nullopt).
  std::optional<bool> is_three_connected() const;

  // True iff removing the vertices in `removed` leaves the rest connected
  // and nonempty.
  bool connected_without(const std::vector<int>& removed) const;

  // Face-tracing successor of a directed edge: (a,b) -> (b,c) where c
  // follows a in the clockwise rotation at b.
  DirectedEdge next_on_face(const DirectedEdge& de) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> rotation_;
  std::vector<Edge> edges_;
  std::vector<Region> regions_;
  // Region of directed edge (u,v): dir_region_[2*e] for u < v direction,
  // dir_region_[2*e + 1] for the reverse.
  std::vector<int> dir_region_;
};

}  // namespace ptg

#endif  // PTG_EMBEDDING_HPP_
