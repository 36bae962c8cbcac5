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

#include "ptg/switching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace ptg {

namespace {

// Regions whose boundary passes through both vertices.
std::vector<int> common_regions(const Embedding& emb, int x, int y) {
  std::vector<int> out;
  for (const Region& region : emb.regions()) {
    bool has_x = false, has_y = false;
    for (const DirectedEdge& de : region.boundary) {
      has_x |= de.from == x;
      has_y |= de.from == y;
    }
    if (has_x && has_y) out.push_back(region.id);
  }
  return out;
}

// The position where the boundary transits a vertex: returns the neighbour
// the boundary arrives from. Requires a single transit (simple boundary).
int arrival_neighbour(const Region& region, int vertex) {
  int found = -1;
  for (const DirectedEdge& de : region.boundary) {
    if (de.to == vertex) {
      if (found != -1)
        throw GraphError("boundary not simple",
                         "region passes through the vertex more than once");
      found = de.from;
    }
  }
  if (found == -1)
    throw GraphError("edge off region", "vertex is not on the region boundary");
  return found;
}

}  // namespace

Target add_chord(const Target& t, int x, int y, std::optional<int> region) {
  const Embedding& emb = t.emb;
  if (x == y) throw GraphError("identical vertices", "chord needs distinct ends");
  if (x < 0 || y < 0 || x >= emb.vertex_count() || y >= emb.vertex_count())
    throw GraphError("unknown vertex", "vertex index out of range");
  if (emb.adjacent(x, y)) return t;

  std::vector<int> shared = common_regions(emb, x, y);
  if (shared.empty())
    throw GraphError("no common region", "'" + emb.id(x) + "' and '" + emb.id(y) +
                                             "' lie on no common region");
  int r;
  if (region.has_value()) {
    if (std::find(shared.begin(), shared.end(), *region) == shared.end())
      throw GraphError("no common region", "named region does not contain both ends");
    r = *region;
  } else if (shared.size() == 1) {
    r = shared[0];
  } else {
    throw GraphError("ambiguous region",
                     "ends share several regions; name one explicitly");
  }

  int before_x = arrival_neighbour(emb.region(r), x);
  int before_y = arrival_neighbour(emb.region(r), y);

  RotationSystem system;
  for (int v = 0; v < emb.vertex_count(); ++v) {
    std::vector<std::string> nbrs;
    for (int u : emb.rotation(v)) {
      nbrs.push_back(emb.id(u));
      if (v == x && u == before_x) nbrs.push_back(emb.id(y));
      if (v == y && u == before_y) nbrs.push_back(emb.id(x));
    }
    system.rotations.emplace_back(emb.id(v), std::move(nbrs));
  }
  Embedding extended = Embedding::build(system);

  std::vector<int> m(extended.edge_count(), 0);
  for (int e = 0; e < emb.edge_count(); ++e) {
    const Edge& old_edge = emb.edge(e);
    auto id = extended.edge_id(*extended.index_of(emb.id(old_edge.u)),
                               *extended.index_of(emb.id(old_edge.v)));
    m[*id] = t.m[e];
  }
  return Target{std::move(extended), t.d, std::move(m)};
}

SwitchResult switch_on_path(const Target& t, const SwitchSpec& spec) {
  const Embedding& emb = t.emb;
  int ids[4] = {spec.x, spec.u, spec.v, spec.y};
  for (int a = 0; a < 4; ++a) {
    if (ids[a] < 0 || ids[a] >= emb.vertex_count())
      throw GraphError("unknown vertex", "path vertex out of range");
    for (int b = a + 1; b < 4; ++b)
      if (ids[a] == ids[b])
        throw GraphError("degenerate path", "path vertices must be distinct");
  }
  auto xu = emb.edge_id(spec.x, spec.u);
  auto uv = emb.edge_id(spec.u, spec.v);
  auto vy = emb.edge_id(spec.v, spec.y);
  if (!xu || !uv || !vy)
    throw GraphError("missing path edge", "x-u-v-y must be a path of the graph");
  if (t.m[*xu] < 1)
    throw GraphError("negative multiplicity",
                     "m(" + emb.id(spec.x) + "-" + emb.id(spec.u) + ") is zero");
  if (t.m[*vy] < 1)
    throw GraphError("negative multiplicity",
                     "m(" + emb.id(spec.v) + "-" + emb.id(spec.y) + ") is zero");

  SwitchResult result{t, false, -1, {}};
  if (!emb.adjacent(spec.x, spec.y)) {
    result.target = add_chord(t, spec.x, spec.y, spec.chord_region);
    result.fresh_chord = true;
  }
  Target& switched = result.target;
  const Embedding& emb2 = switched.emb;
  auto id2 = [&emb2, &emb](int a, int b) {
    return *emb2.edge_id(*emb2.index_of(emb.id(a)), *emb2.index_of(emb.id(b)));
  };
  switched.m[id2(spec.x, spec.u)] -= 1;
  switched.m[id2(spec.u, spec.v)] += 1;
  switched.m[id2(spec.v, spec.y)] -= 1;
  result.chord_edge = id2(spec.x, spec.y);
  switched.m[result.chord_edge] += 1;

  result.revalidation = validate_target(emb2, switched.d, switched.m);
  if (result.revalidation.degree != Verdict::Pass)
    throw std::logic_error("switching must preserve the degree equation");
  return result;
}

SwitchableVerdict is_switchable(const Target& t, const SwitchSpec& spec,
                                const SolveOptions& options) {
  SwitchableVerdict verdict{SolveStatus::Unknown, {}, switch_on_path(t, spec)};
  SolveResult solved = solve_colouring(verdict.switched.target, options);
  verdict.status = solved.status;
  verdict.colouring = std::move(solved.colouring);
  return verdict;
}

GueninCheck verify_guenin_cut(const Target& switched, const Colouring& c,
                              const SwitchSpec& spec, int cls,
                              const std::vector<int>& cut,
                              const std::vector<int>& odd_set) {
  const Embedding& emb = switched.emb;
  GueninCheck check;
  int d = static_cast<int>(c.matchings.size());
  if (cls < 0 || cls >= d) {
    check.failures.push_back("class index out of range");
    return check;
  }
  auto uv = emb.edge_id(spec.u, spec.v);
  auto xy = emb.edge_id(spec.x, spec.y);
  auto ux = emb.edge_id(spec.u, spec.x);
  auto vy = emb.edge_id(spec.v, spec.y);
  if (!uv || !xy || !ux || !vy) {
    check.failures.push_back("switch path edges missing from the target");
    return check;
  }

  std::vector<char> in_cut(emb.edge_count(), 0);
  for (int e : cut) {
    if (e < 0 || e >= emb.edge_count()) {
      check.failures.push_back("cut names an unknown edge");
      return check;
    }
    in_cut[e] = 1;
  }

  check.preamble_no_shared_class = true;
  for (const Matching& f : c.matchings) {
    bool has_uv = std::find(f.begin(), f.end(), *uv) != f.end();
    bool has_xy = std::find(f.begin(), f.end(), *xy) != f.end();
    if (has_uv && has_xy) check.preamble_no_shared_class = false;
  }
  if (!check.preamble_no_shared_class)
    check.failures.push_back("a class contains both uv and xy");

  check.cocycle = emb.is_cocycle(cut);
  if (!check.cocycle) check.failures.push_back("cut is not a cocycle");

  std::vector<int> unique_set = odd_set;
  std::sort(unique_set.begin(), unique_set.end());
  unique_set.erase(std::unique(unique_set.begin(), unique_set.end()), unique_set.end());
  std::vector<int> delta = emb.cut_of_set(unique_set);
  std::vector<int> sorted_cut = cut;
  std::sort(sorted_cut.begin(), sorted_cut.end());
  check.cut_of_odd_set = unique_set.size() % 2 == 1 && delta == sorted_cut;
  if (!check.cut_of_odd_set)
    check.failures.push_back("cut is not delta of the odd set");

  check.singletons = true;
  check.heavy_class = true;
  for (int j = 0; j < d; ++j) {
    int count = 0;
    for (int e : c.matchings[j]) count += in_cut[e];
    if (j == cls) {
      check.heavy_class = count >= 5;
    } else if (count != 1) {
      check.singletons = false;
    }
  }
  if (!check.singletons)
    check.failures.push_back("a class other than i meets the cut != once");
  if (!check.heavy_class) check.failures.push_back("class i meets the cut < 5 times");

  check.contains_uv_xy = in_cut[*uv] && in_cut[*xy];
  if (!check.contains_uv_xy) check.failures.push_back("cut misses uv or xy");
  check.avoids_ux_vy = !in_cut[*ux] && !in_cut[*vy];
  if (!check.avoids_ux_vy) check.failures.push_back("cut contains ux or vy");
  return check;
}

CutSearchResult find_guenin_cut(const SwitchResult& switched, const Colouring& c,
                                const SwitchSpec& spec, int cls, int odd_set_cap) {
  const Target& t = switched.target;
  int d = static_cast<int>(c.matchings.size());
  if (cls < 0 || cls >= d)
    throw std::invalid_argument("class index out of range");
  if (switched.fresh_chord) {
    const Matching& f = c.matchings[cls];
    if (std::find(f.begin(), f.end(), switched.chord_edge) != f.end())
      throw GraphError("excluded class",
                       "the class containing a fresh chord admits no cut");
  }
  int n = t.emb.vertex_count();
  if (n > odd_set_cap) return {CutSearchStatus::CapExceeded, {}};

  // u is fixed inside X; delta(X) = delta of the complement.
  int u2 = spec.u;
  unsigned long long limit = 1ULL << n;
  for (unsigned long long mask = 1; mask < limit; ++mask) {
    if (!((mask >> u2) & 1ULL)) continue;
    if (std::popcount(mask) % 2 == 0) continue;
    std::vector<int> odd_set;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1ULL) odd_set.push_back(v);
    std::vector<int> cut = t.emb.cut_of_mask(mask);
    GueninCheck check = verify_guenin_cut(t, c, spec, cls, cut, odd_set);
    if (!check.ok()) continue;
    GueninCut found;
    found.cls = cls;
    found.cut = cut;
    found.odd_set = odd_set;
    for (int j = 0; j < d; ++j) {
      int count = 0;
      for (int e : c.matchings[j])
        if (std::find(cut.begin(), cut.end(), e) != cut.end()) ++count;
      found.intersections.push_back(count);
    }
    return {CutSearchStatus::Found, found};
  }
  return {CutSearchStatus::None, {}};
}

}  // namespace ptg
