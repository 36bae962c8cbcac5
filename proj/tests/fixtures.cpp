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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace ptg::fixtures {

Embedding from_drawing(const std::vector<DrawnVertex>& points,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::pair<double, double>> at;
  for (const DrawnVertex& p : points) at[p.id] = {p.x, p.y};
  std::map<std::string, std::vector<std::string>> nbrs;
  for (const auto& [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  RotationSystem system;
  for (const DrawnVertex& p : points) {
    auto list = nbrs[p.id];
    // Clockwise = decreasing angle around the vertex.
    std::sort(list.begin(), list.end(), [&](const std::string& a, const std::string& b) {
      double ta = std::atan2(at[a].second - p.y, at[a].first - p.x);
      double tb = std::atan2(at[b].second - p.y, at[b].first - p.x);
      if (ta != tb) return ta > tb;
      return a < b;
    });
    system.rotations.emplace_back(p.id, std::move(list));
  }
  return Embedding::build(system);
}

int eid(const Embedding& emb, const std::string& u, const std::string& v) {
  auto ui = emb.index_of(u);
  auto vi = emb.index_of(v);
  if (!ui || !vi) throw std::runtime_error("fixture names unknown vertex " + u + "/" + v);
  auto id = emb.edge_id(*ui, *vi);
  if (!id) throw std::runtime_error("fixture names missing edge " + u + "-" + v);
  return *id;
}

Target target_from(const Embedding& emb, int d,
                   const std::map<std::pair<std::string, std::string>, int>& m) {
  std::vector<int> mult(emb.edge_count(), -1);
  for (const auto& [ends, value] : m) mult[eid(emb, ends.first, ends.second)] = value;
  for (int e = 0; e < emb.edge_count(); ++e)
    if (mult[e] < 0) throw std::runtime_error("fixture multiplicity map incomplete");
  return Target{emb, d, std::move(mult)};
}

namespace {

std::vector<DrawnVertex> ring(const std::vector<std::string>& ids, double radius,
                              double phase_deg) {
  std::vector<DrawnVertex> out;
  double step = 360.0 / static_cast<double>(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double theta = (phase_deg - step * static_cast<double>(i)) * std::numbers::pi / 180.0;
    out.push_back({ids[i], radius * std::cos(theta), radius * std::sin(theta)});
  }
  return out;
}

}  // namespace

Embedding prism() { return ngon_prism(3); }

Target prism7() {
  Embedding emb = prism();
  std::map<std::pair<std::string, std::string>, int> m;
  for (auto [u, v] : {std::pair{"a0", "a1"}, {"a1", "a2"}, {"a0", "a2"}, {"b0", "b1"},
                      {"b1", "b2"}, {"b0", "b2"}})
    m[{u, v}] = 2;
  for (auto [u, v] : {std::pair{"a0", "b0"}, {"a1", "b1"}, {"a2", "b2"}}) m[{u, v}] = 3;
  return target_from(emb, 7, m);
}

Embedding k4() {
  return from_drawing({{"a", 0, 3}, {"b", 2.6, -1.5}, {"c", -2.6, -1.5}, {"d", 0, 0}},
                      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                       {"c", "d"}});
}

Target k4_unit() {
  Embedding emb = k4();
  std::map<std::pair<std::string, std::string>, int> m;
  for (auto [u, v] :
       {std::pair{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}})
    m[{u, v}] = 1;
  return target_from(emb, 3, m);
}

Embedding ngon_prism(int n) {
  std::vector<std::string> outer, inner;
  for (int i = 0; i < n; ++i) {
    outer.push_back("a" + std::to_string(i));
    inner.push_back("b" + std::to_string(i));
  }
  auto points = ring(outer, 4.0, 90.0);
  auto inner_points = ring(inner, 2.0, 90.0);
  points.insert(points.end(), inner_points.begin(), inner_points.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({outer[i], outer[(i + 1) % n]});
    edges.push_back({inner[i], inner[(i + 1) % n]});
    edges.push_back({outer[i], inner[i]});
  }
  return from_drawing(points, edges);
}

Embedding ngon_antiprism(int n) {
  std::vector<std::string> outer, inner;
  for (int i = 0; i < n; ++i) {
    outer.push_back("a" + std::to_string(i));
    inner.push_back("b" + std::to_string(i));
  }
  auto points = ring(outer, 4.0, 90.0);
  double step = 360.0 / static_cast<double>(n);
  // Strictly inside the outer polygon's chords (apothem 4 cos(pi/n)).
  auto inner_points = ring(inner, 1.3, 90.0 - step / 2.0);
  points.insert(points.end(), inner_points.begin(), inner_points.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({outer[i], outer[(i + 1) % n]});
    edges.push_back({inner[i], inner[(i + 1) % n]});
    edges.push_back({outer[i], inner[i]});
    edges.push_back({outer[(i + 1) % n], inner[i]});
  }
  return from_drawing(points, edges);
}

Multigraph make_multigraph(int n, std::vector<std::pair<std::pair<int, int>, int>> edges) {
  for (auto& [ends, m] : edges)
    if (ends.first > ends.second) std::swap(ends.first, ends.second);
  std::sort(edges.begin(), edges.end());
  Multigraph g;
  g.n = n;
  for (const auto& [ends, m] : edges) {
    g.edges.push_back(Edge{ends.first, ends.second});
    g.m.push_back(m);
  }
  return g;
}

Multigraph petersen() {
  std::vector<std::pair<std::pair<int, int>, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({{i, (i + 1) % 5}, 1});          // outer cycle
    edges.push_back({{i, i + 5}, 1});                // spokes
    edges.push_back({{i + 5, 5 + (i + 2) % 5}, 1});  // pentagram
  }
  return make_multigraph(10, std::move(edges));
}

namespace {

// Removes zero-multiplicity edges when the remainder still builds (stays
// connected); the witness matchings only use positive edges and are remapped.
bool try_drop_zero_edges(CorpusEntry& entry) {
  const Embedding& emb = entry.target.emb;
  bool has_zero = false;
  for (int v : entry.target.m) has_zero |= v == 0;
  if (!has_zero) return false;
  RotationSystem system;
  for (int v = 0; v < emb.vertex_count(); ++v) {
    std::vector<std::string> nbrs;
    for (int u : emb.rotation(v)) {
      int lo = std::min(v, u), hi = std::max(v, u);
      if (entry.target.m[*emb.edge_id(lo, hi)] > 0) nbrs.push_back(emb.id(u));
    }
    system.rotations.emplace_back(emb.id(v), std::move(nbrs));
  }
  try {
    Embedding reduced = Embedding::build(system);
    std::vector<int> m(reduced.edge_count(), 0);
    for (int e = 0; e < emb.edge_count(); ++e) {
      if (entry.target.m[e] == 0) continue;
      int u = *reduced.index_of(emb.id(emb.edge(e).u));
      int v = *reduced.index_of(emb.id(emb.edge(e).v));
      m[*reduced.edge_id(u, v)] = entry.target.m[e];
    }
    Colouring witness;
    for (const Matching& f : entry.witness.matchings) {
      Matching mapped;
      for (int e : f) {
        int u = *reduced.index_of(emb.id(emb.edge(e).u));
        int v = *reduced.index_of(emb.id(emb.edge(e).v));
        mapped.push_back(*reduced.edge_id(u, v));
      }
      std::sort(mapped.begin(), mapped.end());
      witness.matchings.push_back(std::move(mapped));
    }
    entry.target = Target{std::move(reduced), entry.target.d, std::move(m)};
    entry.witness = std::move(witness);
    return true;
  } catch (const GraphError&) {
    return false;  // deletion would disconnect; keep the zero edges
  }
}

}  // namespace

std::vector<CorpusEntry> corpus7(int count, unsigned seed) {
  struct Base {
    std::string name;
    Embedding emb;
  };
  std::vector<Base> bases;
  bases.push_back({"prism3", ngon_prism(3)});
  bases.push_back({"antiprism3", ngon_antiprism(3)});
  bases.push_back({"prism4", ngon_prism(4)});
  bases.push_back({"antiprism4", ngon_antiprism(4)});
  bases.push_back({"prism5", ngon_prism(5)});
  bases.push_back({"prism6", ngon_prism(6)});
  bases.push_back({"prism7", ngon_prism(7)});
  bases.push_back({"prism8", ngon_prism(8)});

  std::mt19937 rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const Base& base = bases[static_cast<std::size_t>(i) % bases.size()];
    std::vector<int> ones(base.emb.edge_count(), 1);
    Target support{base.emb, 7, ones};
    auto pms = enumerate_perfect_matchings(support, 100000);
    if (pms.matchings.empty()) throw std::runtime_error("corpus base has no matchings");
    CorpusEntry entry;
    entry.name = base.name + "#" + std::to_string(i);
    std::vector<int> m(base.emb.edge_count(), 0);
    Colouring witness;
    for (int k = 0; k < 7; ++k) {
      const Matching& pick =
          pms.matchings[rng() % pms.matchings.size()];
      for (int e : pick) ++m[e];
      witness.matchings.push_back(pick);
    }
    std::sort(witness.matchings.begin(), witness.matchings.end());
    entry.target = Target{base.emb, 7, std::move(m)};
    entry.witness = std::move(witness);
    if (rng() % 2 == 0) try_drop_zero_edges(entry);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<SmallInstance> small_instances() {
  std::vector<SmallInstance> out;

  auto push_graph = [&out](const Embedding& emb, const std::vector<int>& m, int d,
                           std::string name) {
    Multigraph g{emb.vertex_count(), emb.edges(), m};
    out.push_back({std::move(g), d, std::move(name)});
  };

  // K4, all multiplicities 1.
  Target k4 = k4_unit();
  push_graph(k4.emb, k4.m, 3, "k4-unit");

  // Prism, all 1.
  Embedding pr = prism();
  push_graph(pr, std::vector<int>(pr.edge_count(), 1), 3, "prism-unit");

  // Cube, all 1.
  Embedding cube = ngon_prism(4);
  push_graph(cube, std::vector<int>(cube.edge_count(), 1), 3, "cube-unit");

  // Two triangles joined by a bridge; support splits into odd components, so
  // these are degree-uniform but not colourable.
  //   d = 2: bridge multiplicity 0.
  Multigraph bowtie2 = make_multigraph(
      6, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}, {{2, 3}, 0}, {{3, 4}, 1}, {{4, 5}, 1},
          {{3, 5}, 1}});
  out.push_back({bowtie2, 2, "bowtie-bridge-d2"});
  //   d = 3: unique perfect matching covers one edge too rarely.
  Multigraph bowtie3 = make_multigraph(
      6, {{{0, 1}, 2}, {{1, 2}, 1}, {{0, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{3, 5}, 1},
          {{4, 5}, 2}});
  out.push_back({bowtie3, 3, "bowtie-bridge-d3"});

  // Random degree-uniform assignments: sums of d matchings, sometimes
  // shifted by a (+M1, -M2) swap that preserves degrees.
  std::mt19937 rng(20260811u);
  struct SmallBase {
    std::string name;
    Embedding emb;
  };
  std::vector<SmallBase> bases;
  bases.push_back({"k4", k4.emb});
  bases.push_back({"prism", pr});
  bases.push_back({"cube", cube});
  bases.push_back({"antiprism3", ngon_antiprism(3)});
  for (const SmallBase& base : bases) {
    std::vector<int> ones(base.emb.edge_count(), 1);
    auto pms = enumerate_perfect_matchings(Target{base.emb, 1, ones}, 100000);
    for (int d = 2; d <= 4; ++d) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> m(base.emb.edge_count(), 0);
        for (int k = 0; k < d; ++k)
          for (int e : pms.matchings[rng() % pms.matchings.size()]) ++m[e];
        for (int swaps = rng() % 3; swaps > 0; --swaps) {
          const Matching& plus = pms.matchings[rng() % pms.matchings.size()];
          const Matching& minus = pms.matchings[rng() % pms.matchings.size()];
          std::vector<int> shifted = m;
          for (int e : plus) ++shifted[e];
          bool fine = true;
          for (int e : minus) fine &= --shifted[e] >= 0;
          if (fine) m = shifted;
        }
        out.push_back({Multigraph{base.emb.vertex_count(), base.emb.edges(), m}, d,
                       base.name + "-d" + std::to_string(d) + "#" +
                           std::to_string(trial)});
      }
    }
  }
  return out;
}

CutFixture guenin_fixture() {
  // Outer pentagon A = x,u,p,q,s; inner pentagon B = y,b,v,c,e; six crossing
  // edges; chord vy inside B. Drawn so that partners line up without
  // crossings.
  std::vector<DrawnVertex> points;
  auto a_ring = ring({"x", "u", "p", "q", "s"}, 10.0, 90.0);
  auto b_ring = ring({"y", "b", "v", "c", "e"}, 5.0, 126.0);
  points.insert(points.end(), a_ring.begin(), a_ring.end());
  points.insert(points.end(), b_ring.begin(), b_ring.end());
  std::vector<std::pair<std::string, std::string>> edges = {
      // A cycle
      {"x", "u"}, {"u", "p"}, {"p", "q"}, {"q", "s"}, {"s", "x"},
      // B cycle
      {"y", "b"}, {"b", "v"}, {"v", "c"}, {"c", "e"}, {"e", "y"},
      // chord inside B
      {"v", "y"},
      // crossings (xy is created later by the switch)
      {"s", "y"}, {"x", "b"}, {"u", "v"}, {"p", "c"}, {"q", "e"}};
  Embedding emb = from_drawing(points, edges);

  std::map<std::pair<std::string, std::string>, int> m = {
      {{"x", "u"}, 3}, {{"u", "p"}, 3}, {{"p", "q"}, 2}, {{"q", "s"}, 3},
      {{"s", "x"}, 2}, {{"y", "b"}, 2}, {{"b", "v"}, 3}, {{"v", "c"}, 2},
      {{"c", "e"}, 3}, {{"e", "y"}, 2}, {{"v", "y"}, 1}, {{"s", "y"}, 2},
      {{"x", "b"}, 2}, {{"u", "v"}, 1}, {{"p", "c"}, 2}, {{"q", "e"}, 2}};
  CutFixture fixture{target_from(emb, 7, m), {}, {}, 0, {}};

  fixture.spec.x = *emb.index_of("x");
  fixture.spec.u = *emb.index_of("u");
  fixture.spec.v = *emb.index_of("v");
  fixture.spec.y = *emb.index_of("y");

  // Planted colouring of the switched target, by edge names.
  SwitchResult switched = switch_on_path(fixture.base, fixture.spec);
  const Embedding& emb2 = switched.target.emb;
  auto matching = [&emb2](std::vector<std::pair<std::string, std::string>> names) {
    Matching f;
    for (const auto& [u, v] : names) f.push_back(eid(emb2, u, v));
    std::sort(f.begin(), f.end());
    return f;
  };
  fixture.colouring.matchings = {
      matching({{"u", "v"}, {"x", "b"}, {"p", "c"}, {"q", "e"}, {"s", "y"}}),  // heavy
      matching({{"u", "v"}, {"p", "q"}, {"s", "x"}, {"y", "b"}, {"c", "e"}}),
      matching({{"x", "y"}, {"u", "p"}, {"q", "s"}, {"c", "e"}, {"b", "v"}}),
      matching({{"x", "b"}, {"u", "p"}, {"q", "s"}, {"e", "y"}, {"v", "c"}}),
      matching({{"p", "c"}, {"q", "s"}, {"x", "u"}, {"b", "v"}, {"e", "y"}}),
      matching({{"q", "e"}, {"s", "x"}, {"u", "p"}, {"v", "c"}, {"y", "b"}}),
      matching({{"s", "y"}, {"x", "u"}, {"p", "q"}, {"c", "e"}, {"b", "v"}})};
  fixture.heavy_class = 0;
  for (const char* id : {"x", "u", "p", "q", "s"})
    fixture.odd_set.push_back(*emb2.index_of(id));
  std::sort(fixture.odd_set.begin(), fixture.odd_set.end());
  return fixture;
}

}  // namespace ptg::fixtures
