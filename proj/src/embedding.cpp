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

#include "ptg/embedding.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ptg {

Embedding Embedding::build(const RotationSystem& system) {
  Embedding emb;
  std::map<std::string, std::vector<std::string>> by_id;
  for (const auto& [id, nbrs] : system.rotations) {
    if (id.empty()) throw GraphError("duplicate vertex", "empty vertex id");
    if (!by_id.emplace(id, nbrs).second)
      throw GraphError("duplicate vertex", "vertex '" + id + "' listed twice");
  }
  if (by_id.empty()) throw GraphError("empty graph", "no vertices");

  for (const auto& [id, nbrs] : by_id) emb.ids_.push_back(id);
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(emb.ids_.size()); ++i) index[emb.ids_[i]] = i;

  emb.rotation_.resize(emb.ids_.size());
  for (const auto& [id, nbrs] : by_id) {
    int v = index[id];
    std::set<int> seen;
    for (const auto& nbr : nbrs) {
      auto it = index.find(nbr);
      if (it == index.end())
        throw GraphError("unknown neighbour",
                         "vertex '" + id + "' lists unknown neighbour '" + nbr + "'");
      if (it->second == v)
        throw GraphError("loop", "vertex '" + id + "' lists itself");
      if (!seen.insert(it->second).second)
        throw GraphError("duplicate neighbour",
                         "vertex '" + id + "' lists '" + nbr + "' twice");
      emb.rotation_[v].push_back(it->second);
    }
  }

  // Rotations must be symmetric: u lists v iff v lists u.
  for (int v = 0; v < emb.vertex_count(); ++v) {
    for (int u : emb.rotation_[v]) {
      const auto& back = emb.rotation_[u];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw GraphError("asymmetric rotation", "'" + emb.ids_[v] + "' lists '" +
                                                    emb.ids_[u] + "' but not vice versa");
    }
  }

  for (int v = 0; v < emb.vertex_count(); ++v)
    for (int u : emb.rotation_[v])
      if (v < u) emb.edges_.push_back(Edge{v, u});
  std::sort(emb.edges_.begin(), emb.edges_.end());
  if (emb.edges_.empty()) throw GraphError("empty graph", "no edges");

  if (!emb.connected_without({}))
    throw GraphError("disconnected graph", "graph is not connected");

  // Face tracing: partition the directed edges, scanning in canonical order.
  emb.dir_region_.assign(2 * emb.edges_.size(), -1);
  auto dir_index = [&emb](const DirectedEdge& de) {
    int u = std::min(de.from, de.to);
    int v = std::max(de.from, de.to);
    int e = *emb.edge_id(u, v);
    return 2 * e + (de.from == u ? 0 : 1);
  };
  for (std::size_t start = 0; start < emb.dir_region_.size(); ++start) {
    if (emb.dir_region_[start] != -1) continue;
    Region region;
    region.id = static_cast<int>(emb.regions_.size());
    const Edge& e0 = emb.edges_[start / 2];
    DirectedEdge de = (start % 2 == 0) ? DirectedEdge{e0.u, e0.v} : DirectedEdge{e0.v, e0.u};
    DirectedEdge cur = de;
    do {
      emb.dir_region_[dir_index(cur)] = region.id;
      region.boundary.push_back(cur);
      region.edge_ids.push_back(static_cast<int>(dir_index(cur) / 2));
      cur = emb.next_on_face(cur);
    } while (cur != de);
    emb.regions_.push_back(std::move(region));
  }

  long euler = static_cast<long>(emb.vertex_count()) - emb.edge_count() + emb.region_count();
  if (euler != 2)
    throw GraphError("euler check failure",
                     "rotation system is not planar: V - E + R = " + std::to_string(euler));
  return emb;
}

std::optional<int> Embedding::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

std::optional<int> Embedding::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it == edges_.end() || *it != probe) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

DirectedEdge Embedding::next_on_face(const DirectedEdge& de) const {
  const auto& rot = rotation_[de.to];
  auto it = std::find(rot.begin(), rot.end(), de.from);
  std::size_t pos = static_cast<std::size_t>(it - rot.begin());
  int w = rot[(pos + 1) % rot.size()];
  return DirectedEdge{de.to, w};
}

std::pair<int, int> Embedding::incident_regions(int edge_id) const {
  if (edge_id < 0 || edge_id >= edge_count())
    throw GraphError("unknown edge", "edge id out of range");
  return {dir_region_[2 * edge_id], dir_region_[2 * edge_id + 1]};
}

std::vector<int> Embedding::cut_of_set(const std::vector<int>& vertex_set) const {
  unsigned long long mask = 0;
  for (int v : vertex_set) {
    if (v < 0 || v >= vertex_count())
      throw GraphError("unknown vertex", "vertex index out of range");
    mask |= 1ULL << v;
  }
  return cut_of_mask(mask);
}

std::vector<int> Embedding::cut_of_mask(unsigned long long mask) const {
  std::vector<int> cut;
  for (int e = 0; e < edge_count(); ++e) {
    bool in_u = (mask >> edges_[e].u) & 1ULL;
    bool in_v = (mask >> edges_[e].v) & 1ULL;
    if (in_u != in_v) cut.push_back(e);
  }
  return cut;
}

bool Embedding::is_cocycle(const std::vector<int>& edge_ids) const {
  if (edge_ids.size() < 3) return false;
  std::set<int> unique(edge_ids.begin(), edge_ids.end());
  if (unique.size() != edge_ids.size()) return false;
  // Dual degree of every region touched must be exactly two, and the dual
  // edges must form one connected cycle through pairwise distinct regions.
  std::map<int, std::vector<int>> dual_adj;  // region -> incident cut edges
  for (int e : edge_ids) {
    if (e < 0 || e >= edge_count()) return false;
    auto [r1, r2] = incident_regions(e);
    if (r1 == r2) return false;  // bridge: dual loop, never on a cycle
    dual_adj[r1].push_back(e);
    dual_adj[r2].push_back(e);
  }
  for (const auto& [r, inc] : dual_adj)
    if (inc.size() != 2) return false;
  if (dual_adj.size() != edge_ids.size()) return false;
  // Walk the dual cycle from one region and count the edges reached.
  int start = dual_adj.begin()->first;
  int prev_edge = -1;
  int at = start;
  std::size_t steps = 0;
  do {
    const auto& inc = dual_adj[at];
    int e = (inc[0] == prev_edge) ? inc[1] : inc[0];
    auto [r1, r2] = incident_regions(e);
    at = (r1 == at) ? r2 : r1;
    prev_edge = e;
    ++steps;
  } while (at != start && steps <= edge_ids.size());
  return at == start && steps == edge_ids.size();
}

bool Embedding::connected_without(const std::vector<int>& removed) const {
  std::vector<char> banned(vertex_count(), 0);
  for (int v : removed) banned[v] = 1;
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!banned[v]) {
      ++remaining;
      if (start == -1) start = v;
    }
  }
  if (remaining == 0) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::queue<int> frontier;
  frontier.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : rotation_[v]) {
      if (banned[u] || seen[u]) continue;
      seen[u] = 1;
      ++reached;
      frontier.push(u);
    }
  }
  return reached == remaining;
}

std::optional<bool> Embedding::is_three_connected() const {
  if (vertex_count() < 4) return std::nullopt;
  if (!connected_without({})) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (!connected_without({v})) return false;
  for (int v = 0; v < vertex_count(); ++v)
    for (int u = v + 1; u < vertex_count(); ++u)
      if (!connected_without({v, u})) return false;
  return true;
}

}  // namespace ptg
