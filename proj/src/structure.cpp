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

#include "ptg/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace ptg {

bool edges_disjoint(const Embedding& emb, int e, int f) {
  if (e == f) return false;
  const Edge& a = emb.edge(e);
  const Edge& b = emb.edge(f);
  return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

namespace {

bool edge_meets_vertex(const Embedding& emb, int e, int v) {
  return emb.edge(e).u == v || emb.edge(e).v == v;
}

int other_region(const Target& t, int edge, int region) {
  auto [r1, r2] = t.emb.incident_regions(edge);
  if (r1 == region) return r2;
  if (r2 == region) return r1;
  throw GraphError("edge off region", "edge is not on the region boundary");
}

bool on_region(const Embedding& emb, int edge, int region) {
  const auto& ids = emb.region(region).edge_ids;
  return std::find(ids.begin(), ids.end(), edge) != ids.end();
}

std::vector<int> boundary_vertices(const Embedding& emb, int region) {
  std::vector<int> cycle;
  for (const DirectedEdge& de : emb.region(region).boundary) cycle.push_back(de.from);
  return cycle;
}

bool simple_boundary(const Embedding& emb, int region) {
  auto cycle = boundary_vertices(emb, region);
  std::set<int> unique(cycle.begin(), cycle.end());
  return unique.size() == cycle.size();
}

bool is_triangle(const Embedding& emb, int region) {
  return emb.region(region).length() == 3;
}

// Third vertex of a triangle region relative to one of its edges.
int triangle_third(const Embedding& emb, int region, int edge) {
  for (int v : boundary_vertices(emb, region))
    if (!edge_meets_vertex(emb, edge, v)) return v;
  throw GraphError("edge off region", "edge is not on the triangle");
}

int triangle_multiplicity(const Target& t, int region) {
  int sum = 0;
  for (int e : t.emb.region(region).edge_ids) sum += t.m[e];
  return sum;
}

}  // namespace

bool is_door(const Target& t, int edge, int region) {
  if (t.m[edge] != 1) return false;
  int other = other_region(t, edge, region);
  for (int f : t.emb.region(other).edge_ids)
    if (t.m[f] == 1 && edges_disjoint(t.emb, edge, f)) return true;
  return false;
}

std::vector<int> doors_of(const Target& t, int region) {
  std::vector<int> doors;
  for (int e : t.emb.region(region).edge_ids)
    if (is_door(t, e, region)) doors.push_back(e);
  std::sort(doors.begin(), doors.end());
  doors.erase(std::unique(doors.begin(), doors.end()), doors.end());
  return doors;
}

bool is_big(const Target& t, int region) { return doors_of(t, region).size() >= 4; }

int heavy_value(const Target& t, int edge, int region) {
  int other = other_region(t, edge, region);
  if (other != region && is_triangle(t.emb, other)) {
    std::array<int, 2> rest{};
    int found = 0;
    for (int f : t.emb.region(other).edge_ids)
      if (f != edge) rest[found++] = t.m[f];
    return t.m[edge] + std::min(rest[0], rest[1]);
  }
  return t.m[edge];
}

EdgeContext edge_context(const Target& t, int edge, int region) {
  if (!on_region(t.emb, edge, region))
    throw GraphError("edge off region", "edge is not on the region boundary");
  EdgeContext ctx;
  ctx.edge = edge;
  ctx.region = region;
  ctx.other_region = other_region(t, edge, region);
  ctx.multiplicity = t.m[edge];
  ctx.door = is_door(t, edge, region);
  ctx.heavy = heavy_value(t, edge, region);
  return ctx;
}

int m_plus(const Target& t, int edge, const std::vector<int>& disc_regions) {
  auto [r1, r2] = t.emb.incident_regions(edge);
  bool in1 = std::find(disc_regions.begin(), disc_regions.end(), r1) != disc_regions.end();
  bool in2 = std::find(disc_regions.begin(), disc_regions.end(), r2) != disc_regions.end();
  if (in1 && in2)
    throw GraphError("edge interior to disc", "both incident regions are named");
  if (!in1 && !in2)
    throw GraphError("edge off disc", "neither incident region is named");
  int second = in1 ? r2 : r1;
  return t.m[edge] + (is_big(t, second) ? 0 : 1);
}

RegionClass classify_region(const Target& t, int region) {
  RegionClass cls;
  cls.region = region;
  cls.doors = doors_of(t, region);
  cls.big = cls.doors.size() >= 4;
  cls.triangle = is_triangle(t.emb, region);
  if (cls.triangle) {
    cls.multiplicity = triangle_multiplicity(t, region);
    int plus = 0;
    for (int e : t.emb.region(region).edge_ids) plus += m_plus(t, e, {region});
    cls.plus_multiplicity = plus;
    cls.tough = plus >= 7;
  }
  return cls;
}

namespace {

// ---- configuration predicates -------------------------------------------
//
// Each conf has a maker that evaluates the predicate on one labelled
// instance and returns the ConfMatch on success; the enumerators try all
// labellings and deduplicate under the configuration's own symmetries.
// recheck_conf re-runs the maker on the stored labelling.

int edge_of(const Target& t, int u, int v) {
  auto id = t.emb.edge_id(u, v);
  if (!id) throw GraphError("unknown edge", "named vertices are not adjacent");
  return *id;
}

bool triangle_region_on(const Target& t, int region, int a, int b, int c) {
  if (!is_triangle(t.emb, region)) return false;
  auto cycle = boundary_vertices(t.emb, region);
  std::set<int> have(cycle.begin(), cycle.end());
  return have == std::set<int>{a, b, c} && a != b && b != c && a != c;
}

std::optional<ConfMatch> make_conf1(const Target& t, int r, int u, int v, int w, int x) {
  if (!triangle_region_on(t, r, u, v, w)) return std::nullopt;
  if (t.emb.degree(u) != 3) return std::nullopt;
  if (x == v || x == w || !t.emb.adjacent(u, x)) return std::nullopt;
  int lhs = t.m[edge_of(t, u, x)];
  int rhs = t.m[edge_of(t, u, w)] + t.m[edge_of(t, v, w)];
  if (!(lhs < rhs)) return std::nullopt;
  return ConfMatch{1, {r}, {u, v, w, x}, {}, {lhs, rhs}};
}

std::optional<ConfMatch> make_conf2(const Target& t, int r1, int r2, int u, int v, int w,
                                    int x) {
  if (r1 == r2 || v == x) return std::nullopt;
  if (!triangle_region_on(t, r1, u, v, w) || !triangle_region_on(t, r2, u, w, x))
    return std::nullopt;
  int sum = t.m[edge_of(t, u, v)] + t.m[edge_of(t, u, w)] + t.m[edge_of(t, v, w)] +
            t.m[edge_of(t, u, x)];
  if (sum < 7) return std::nullopt;
  return ConfMatch{2, {r1, r2}, {u, v, w, x}, {}, {sum}};
}

bool square_cycle(const Target& t, int r, int a, int b, int c, int d) {
  if (t.emb.region(r).length() != 4 || !simple_boundary(t.emb, r)) return false;
  auto cycle = boundary_vertices(t.emb, r);
  for (int rot = 0; rot < 4; ++rot) {
    std::array<int, 4> fwd{cycle[rot], cycle[(rot + 1) % 4], cycle[(rot + 2) % 4],
                           cycle[(rot + 3) % 4]};
    std::array<int, 4> want{a, b, c, d};
    if (fwd == want) return true;
    std::array<int, 4> rev{cycle[rot], cycle[(rot + 3) % 4], cycle[(rot + 2) % 4],
                           cycle[(rot + 1) % 4]};
    if (rev == want) return true;
  }
  return false;
}

std::optional<ConfMatch> make_conf3(const Target& t, int r, int u, int v, int w, int x) {
  if (!square_cycle(t, r, u, v, w, x)) return std::nullopt;
  int sum = t.m[edge_of(t, u, v)] + t.m[edge_of(t, v, w)] + t.m[edge_of(t, u, x)];
  if (sum < 7) return std::nullopt;
  return ConfMatch{3, {r}, {u, v, w, x}, {}, {sum}};
}

std::optional<ConfMatch> make_conf4(const Target& t, int r1, int r2, int u, int v, int w,
                                    int x) {
  if (r1 == r2 || v == x) return std::nullopt;
  if (!triangle_region_on(t, r1, u, v, w) || !triangle_region_on(t, r2, u, w, x))
    return std::nullopt;
  std::vector<int> disc{r1, r2};
  int sum = m_plus(t, edge_of(t, u, v), disc) + t.m[edge_of(t, u, w)] +
            m_plus(t, edge_of(t, w, x), disc);
  if (sum < 6) return std::nullopt;
  return ConfMatch{4, {r1, r2}, {u, v, w, x}, {}, {sum}};
}

std::optional<ConfMatch> make_conf5(const Target& t, int r, int u, int v, int w, int x) {
  if (!square_cycle(t, r, u, v, w, x)) return std::nullopt;
  int sum = m_plus(t, edge_of(t, u, v), {r}) + m_plus(t, edge_of(t, w, x), {r});
  if (sum < 6) return std::nullopt;
  return ConfMatch{5, {r}, {u, v, w, x}, {}, {sum}};
}

std::optional<ConfMatch> make_conf6(const Target& t, int r, int u, int v, int w) {
  if (!triangle_region_on(t, r, u, v, w)) return std::nullopt;
  int muv = t.m[edge_of(t, u, v)];
  int muw = t.m[edge_of(t, u, w)];
  int mvw = t.m[edge_of(t, v, w)];
  int sum = m_plus(t, edge_of(t, u, v), {r}) + m_plus(t, edge_of(t, u, w), {r});
  if (sum != 6) return std::nullopt;
  bool extra = muv >= 3 || (muv == 2 && mvw == 2 && muw == 2) || t.emb.degree(u) >= 4;
  if (!extra) return std::nullopt;
  return ConfMatch{6, {r}, {u, v, w}, {}, {sum}};
}

std::optional<ConfMatch> make_conf7(const Target& t, int r, int e) {
  if (t.emb.region(r).length() < 4 || !simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, e, r)) return std::nullopt;
  if (m_plus(t, e, {r}) != 4) return std::nullopt;
  int not_three_heavy = 0;
  for (int f : t.emb.region(r).edge_ids) {
    if (!edges_disjoint(t.emb, e, f)) continue;
    int heavy = heavy_value(t, f, r);
    if (heavy < 2) return std::nullopt;
    int second = other_region(t, f, r);
    if (is_triangle(t.emb, second) && triangle_multiplicity(t, second) == 3)
      return std::nullopt;
    if (heavy < 3) ++not_three_heavy;
  }
  if (not_three_heavy > 3) return std::nullopt;
  return ConfMatch{7, {r}, {}, {e}, {not_three_heavy}};
}

std::optional<ConfMatch> make_conf8(const Target& t, int r, int e, int f) {
  if (!simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, e, r) || !on_region(t.emb, f, r)) return std::nullopt;
  if (!edges_disjoint(t.emb, e, f)) return std::nullopt;
  if (t.m[e] != 3 || m_plus(t, e, {r}) != 4) return std::nullopt;
  if (t.m[f] != 1 || m_plus(t, f, {r}) != 2) return std::nullopt;
  for (int g : t.emb.region(r).edge_ids) {
    if (g == f || !edges_disjoint(t.emb, e, g)) continue;
    if (heavy_value(t, g, r) < 3 || t.m[g] < 2) return std::nullopt;
  }
  return ConfMatch{8, {r}, {}, {e, f}, {}};
}

std::optional<ConfMatch> make_conf9(const Target& t, int r, int e) {
  if (t.emb.region(r).length() < 4 || !simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, e, r) || t.m[e] != 4) return std::nullopt;
  std::vector<int> doors = doors_of(t, r);
  for (int d : doors)
    if (edges_disjoint(t.emb, e, d)) return std::nullopt;
  for (int f : t.emb.region(r).edge_ids) {
    if (f == e || edges_disjoint(t.emb, e, f)) continue;  // consecutive edges only
    if (t.m[f] < 2) continue;
    for (int d : doors)
      if (edges_disjoint(t.emb, f, d)) return std::nullopt;
  }
  return ConfMatch{9, {r}, {}, {e}, {}};
}

std::optional<ConfMatch> make_conf10(const Target& t, int r, int e) {
  int len = t.emb.region(r).length();
  if (len < 4 || len > 6 || !simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, e, r) || t.m[e] != 4) return std::nullopt;
  for (int f : t.emb.region(r).edge_ids) {
    if (!edges_disjoint(t.emb, e, f)) continue;
    if (m_plus(t, f, {r}) < 2) return std::nullopt;
  }
  return ConfMatch{10, {r}, {}, {e}, {}};
}

std::optional<ConfMatch> make_conf11(const Target& t, int r, int e) {
  if (!simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, e, r)) return std::nullopt;
  int far_doors = 0;
  for (int d : doors_of(t, r))
    if (edges_disjoint(t.emb, e, d)) ++far_doors;
  if (t.m[e] == 5 && far_doors <= 5)
    return ConfMatch{11, {r}, {}, {e}, {0, far_doors}};
  if (t.m[e] == 4 && m_plus(t, e, {r}) == 5 && far_doors <= 4)
    return ConfMatch{11, {r}, {}, {e}, {1, far_doors}};
  return std::nullopt;
}

std::optional<ConfMatch> make_conf12(const Target& t, int r, int u, int v, int w) {
  auto uv = t.emb.edge_id(u, v);
  if (!uv || !on_region(t.emb, *uv, r)) return std::nullopt;
  if (!simple_boundary(t.emb, r)) return std::nullopt;
  int tri = other_region(t, *uv, r);
  if (tri == r || !triangle_region_on(t, tri, u, v, w)) return std::nullopt;
  if (t.m[*uv] + t.m[edge_of(t, v, w)] != 5) return std::nullopt;
  int far_doors = 0;
  for (int d : doors_of(t, r))
    if (!edge_meets_vertex(t.emb, d, v)) ++far_doors;
  if (far_doors > 5) return std::nullopt;
  return ConfMatch{12, {r, tri}, {u, v, w}, {}, {far_doors}};
}

std::optional<ConfMatch> make_conf13(const Target& t, int s, int tri, int x, int u, int v,
                                     int y, int z) {
  if (!square_cycle(t, s, x, u, v, y)) return std::nullopt;
  auto uv = t.emb.edge_id(u, v);
  if (!uv) return std::nullopt;
  if (other_region(t, *uv, s) != tri) return std::nullopt;
  if (!triangle_region_on(t, tri, u, v, z)) return std::nullopt;
  if (z == x || z == y) return std::nullopt;
  if (!classify_region(t, tri).tough) return std::nullopt;
  int xy = edge_of(t, x, y);
  int sum = t.m[*uv] + m_plus(t, xy, {s, tri});
  if (sum < 4 || t.m[xy] < 2) return std::nullopt;
  return ConfMatch{13, {s, tri}, {x, u, v, y, z}, {}, {sum, t.m[xy]}};
}

std::optional<ConfMatch> make_conf14(const Target& t, int r, int f0) {
  if (t.emb.region(r).length() != 5 || !simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, f0, r)) return std::nullopt;
  if (m_plus(t, f0, {r}) < 2) return std::nullopt;
  for (int e : t.emb.region(r).edge_ids) {
    if (!edges_disjoint(t.emb, f0, e)) continue;
    if (m_plus(t, e, {r}) < 4) return std::nullopt;
  }
  return ConfMatch{14, {r}, {}, {f0}, {m_plus(t, f0, {r})}};
}

std::optional<ConfMatch> make_conf15(const Target& t, int r, int f0) {
  if (t.emb.region(r).length() != 5 || !simple_boundary(t.emb, r)) return std::nullopt;
  if (!on_region(t.emb, f0, r)) return std::nullopt;
  if (heavy_value(t, f0, r) < 3 || t.m[f0] < 2) return std::nullopt;
  for (int e : t.emb.region(r).edge_ids) {
    if (!edges_disjoint(t.emb, f0, e)) continue;
    if (m_plus(t, e, {r}) < 3) return std::nullopt;
  }
  return ConfMatch{15, {r}, {}, {f0}, {}};
}

std::optional<ConfMatch> make_conf16(const Target& t, int r) {
  if (t.emb.region(r).length() != 6 || !simple_boundary(t.emb, r)) return std::nullopt;
  std::vector<int> qualifying;
  for (int e : t.emb.region(r).edge_ids)
    if (heavy_value(t, e, r) >= 3 && t.m[e] >= 2) qualifying.push_back(e);
  std::sort(qualifying.begin(), qualifying.end());
  if (qualifying.size() < 5) return std::nullopt;
  return ConfMatch{16, {r}, {}, qualifying, {static_cast<int>(qualifying.size())}};
}

bool labelling_less(const ConfMatch& a, const ConfMatch& b) {
  if (a.regions != b.regions) return a.regions < b.regions;
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.edges < b.edges;
}

// Keeps the lexicographically least labelling per dedupe key.
class Collector {
 public:
  void add(const std::vector<int>& key, ConfMatch match) {
    auto it = found_.find(key);
    if (it == found_.end())
      found_.emplace(key, std::move(match));
    else if (labelling_less(match, it->second))
      it->second = std::move(match);
  }
  std::vector<ConfMatch> take() {
    std::vector<ConfMatch> out;
    for (auto& [key, match] : found_) out.push_back(std::move(match));
    std::sort(out.begin(), out.end(), labelling_less);
    return out;
  }

 private:
  std::map<std::vector<int>, ConfMatch> found_;
};

std::vector<int> triangles_of(const Embedding& emb) {
  std::vector<int> out;
  for (const Region& r : emb.regions())
    if (r.length() == 3) out.push_back(r.id);
  return out;
}

// Ordered pairs of distinct triangle regions sharing exactly one edge,
// with distinct third vertices.
struct TrianglePair {
  int r1, r2, p, q, v, x;  // shared edge {p,q}; thirds v (r1) and x (r2)
};

std::vector<TrianglePair> adjacent_triangles(const Target& t) {
  std::vector<TrianglePair> out;
  auto tris = triangles_of(t.emb);
  for (int r1 : tris) {
    for (int r2 : tris) {
      if (r1 == r2) continue;
      std::vector<int> shared;
      for (int e : t.emb.region(r1).edge_ids)
        if (on_region(t.emb, e, r2)) shared.push_back(e);
      if (shared.size() != 1) continue;
      int s = shared[0];
      int v = triangle_third(t.emb, r1, s);
      int x = triangle_third(t.emb, r2, s);
      if (v == x) continue;
      out.push_back({r1, r2, t.emb.edge(s).u, t.emb.edge(s).v, v, x});
    }
  }
  return out;
}

std::vector<ConfMatch> scan_conf(const Target& t, int k) {
  Collector out;
  const Embedding& emb = t.emb;
  switch (k) {
    case 1:
      for (int r : triangles_of(emb)) {
        if (!simple_boundary(emb, r)) continue;
        auto verts = boundary_vertices(emb, r);
        for (int u : verts) {
          if (emb.degree(u) != 3) continue;
          int x = -1;
          for (int nbr : emb.rotation(u))
            if (std::find(verts.begin(), verts.end(), nbr) == verts.end()) x = nbr;
          if (x == -1) continue;
          std::vector<int> rest;
          for (int a : verts)
            if (a != u) rest.push_back(a);
          std::sort(rest.begin(), rest.end());
          for (auto [v, w] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}})
            if (auto match = make_conf1(t, r, u, v, w, x)) {
              out.add({r, u}, *match);
              break;
            }
        }
      }
      break;
    case 2:
      for (const TrianglePair& pair : adjacent_triangles(t))
        for (auto [u, w] : {std::pair{pair.p, pair.q}, std::pair{pair.q, pair.p}})
          if (auto match = make_conf2(t, pair.r1, pair.r2, u, pair.v, w, pair.x))
            out.add({pair.r1, pair.r2, u}, *match);
      break;
    case 3:
    case 5:
      for (const Region& region : emb.regions()) {
        if (region.length() != 4 || !simple_boundary(emb, region.id)) continue;
        auto cyc = boundary_vertices(emb, region.id);
        for (int rot = 0; rot < 4; ++rot) {
          for (int dir : {1, 3}) {
            int u = cyc[rot];
            int v = cyc[(rot + dir) % 4];
            int w = cyc[(rot + 2 * dir) % 4];
            int x = cyc[(rot + 3 * dir) % 4];
            auto match = (k == 3) ? make_conf3(t, region.id, u, v, w, x)
                                  : make_conf5(t, region.id, u, v, w, x);
            if (!match) continue;
            if (k == 3) {
              // symmetry (u,v,w,x) -> (v,u,x,w)
              auto canon = std::min(std::vector<int>{u, v, w, x}, std::vector<int>{v, u, x, w});
              std::vector<int> key{region.id};
              key.insert(key.end(), canon.begin(), canon.end());
              out.add(key, *match);
            } else {
              // symmetries: identity, (w,x,u,v), (v,u,x,w), (x,w,v,u)
              std::vector<int> canon = std::min(
                  {std::vector<int>{u, v, w, x}, std::vector<int>{w, x, u, v},
                   std::vector<int>{v, u, x, w}, std::vector<int>{x, w, v, u}});
              std::vector<int> key{region.id};
              key.insert(key.end(), canon.begin(), canon.end());
              out.add(key, *match);
            }
          }
        }
      }
      break;
    case 4:
      for (const TrianglePair& pair : adjacent_triangles(t))
        for (auto [u, w] : {std::pair{pair.p, pair.q}, std::pair{pair.q, pair.p}}) {
          auto match = make_conf4(t, pair.r1, pair.r2, u, pair.v, w, pair.x);
          if (!match) continue;
          // symmetry: (r1,r2,u,v,w,x) -> (r2,r1,w,x,u,v)
          std::vector<int> a{pair.r1, pair.r2, u, pair.v, w, pair.x};
          std::vector<int> b{pair.r2, pair.r1, w, pair.x, u, pair.v};
          out.add(std::min(a, b), *match);
        }
      break;
    case 6:
      for (int r : triangles_of(emb)) {
        if (!simple_boundary(emb, r)) continue;
        auto verts = boundary_vertices(emb, r);
        for (int u : verts) {
          std::vector<int> rest;
          for (int a : verts)
            if (a != u) rest.push_back(a);
          std::sort(rest.begin(), rest.end());
          for (auto [v, w] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}})
            if (auto match = make_conf6(t, r, u, v, w)) {
              out.add({r, u}, *match);
              break;
            }
        }
      }
      break;
    case 7:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf7(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 8:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          for (int f : region.edge_ids)
            if (auto match = make_conf8(t, region.id, e, f))
              out.add({region.id, e, f}, *match);
      break;
    case 9:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf9(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 10:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf10(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 11:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf11(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 12:
      for (const Region& region : emb.regions()) {
        if (!simple_boundary(emb, region.id)) continue;
        for (int e : region.edge_ids) {
          int tri = other_region(t, e, region.id);
          if (tri == region.id || !is_triangle(emb, tri)) continue;
          if (!simple_boundary(emb, tri)) continue;
          int w = triangle_third(emb, tri, e);
          for (auto [u, v] : {std::pair{emb.edge(e).u, emb.edge(e).v},
                              std::pair{emb.edge(e).v, emb.edge(e).u}})
            if (auto match = make_conf12(t, region.id, u, v, w))
              out.add({region.id, u, v}, *match);
        }
      }
      break;
    case 13:
      for (const Region& region : emb.regions()) {
        if (region.length() != 4 || !simple_boundary(emb, region.id)) continue;
        auto cyc = boundary_vertices(emb, region.id);
        for (int rot = 0; rot < 4; ++rot) {
          for (int dir : {1, 3}) {
            int x = cyc[rot];
            int u = cyc[(rot + dir) % 4];
            int v = cyc[(rot + 2 * dir) % 4];
            int y = cyc[(rot + 3 * dir) % 4];
            int uv = *emb.edge_id(u, v);
            int tri = other_region(t, uv, region.id);
            if (tri == region.id || !is_triangle(emb, tri)) continue;
            if (!simple_boundary(emb, tri)) continue;
            int z = triangle_third(emb, tri, uv);
            auto match = make_conf13(t, region.id, tri, x, u, v, y, z);
            if (!match) continue;
            // symmetry: (x,u,v,y) -> (y,v,u,x)
            std::vector<int> a{region.id, tri, x, u, v, y};
            std::vector<int> b{region.id, tri, y, v, u, x};
            out.add(std::min(a, b), *match);
          }
        }
      }
      break;
    case 14:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf14(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 15:
      for (const Region& region : emb.regions())
        for (int e : region.edge_ids)
          if (auto match = make_conf15(t, region.id, e)) out.add({region.id, e}, *match);
      break;
    case 16:
      for (const Region& region : emb.regions())
        if (auto match = make_conf16(t, region.id)) out.add({region.id}, *match);
      break;
    default:
      throw std::invalid_argument("configuration index must be 1..16");
  }
  return out.take();
}

}  // namespace

std::vector<ConfMatch> detect_conf(const Target& t, int k) { return scan_conf(t, k); }

bool recheck_conf(const Target& t, const ConfMatch& match) {
  const auto& R = match.regions;
  const auto& V = match.vertices;
  const auto& E = match.edges;
  std::optional<ConfMatch> again;
  switch (match.conf) {
    case 1: again = make_conf1(t, R[0], V[0], V[1], V[2], V[3]); break;
    case 2: again = make_conf2(t, R[0], R[1], V[0], V[1], V[2], V[3]); break;
    case 3: again = make_conf3(t, R[0], V[0], V[1], V[2], V[3]); break;
    case 4: again = make_conf4(t, R[0], R[1], V[0], V[1], V[2], V[3]); break;
    case 5: again = make_conf5(t, R[0], V[0], V[1], V[2], V[3]); break;
    case 6: again = make_conf6(t, R[0], V[0], V[1], V[2]); break;
    case 7: again = make_conf7(t, R[0], E[0]); break;
    case 8: again = make_conf8(t, R[0], E[0], E[1]); break;
    case 9: again = make_conf9(t, R[0], E[0]); break;
    case 10: again = make_conf10(t, R[0], E[0]); break;
    case 11: again = make_conf11(t, R[0], E[0]); break;
    case 12: again = make_conf12(t, R[0], V[0], V[1], V[2]); break;
    case 13: again = make_conf13(t, R[0], R[1], V[0], V[1], V[2], V[3], V[4]); break;
    case 14: again = make_conf14(t, R[0], E[0]); break;
    case 15: again = make_conf15(t, R[0], E[0]); break;
    case 16: again = make_conf16(t, R[0]); break;
    default: return false;
  }
  return again.has_value() && *again == match;
}

std::string describe_conf(const Embedding& emb, const ConfMatch& match) {
  static const std::map<int, std::pair<std::vector<std::string>, std::vector<std::string>>>
      kRoles = {
          {1, {{"r"}, {"u", "v", "w", "x"}}},
          {2, {{"r1", "r2"}, {"u", "v", "w", "x"}}},
          {3, {{"r"}, {"u", "v", "w", "x"}}},
          {4, {{"r1", "r2"}, {"u", "v", "w", "x"}}},
          {5, {{"r"}, {"u", "v", "w", "x"}}},
          {6, {{"r"}, {"u", "v", "w"}}},
          {7, {{"r"}, {}}},
          {8, {{"r"}, {}}},
          {9, {{"r"}, {}}},
          {10, {{"r"}, {}}},
          {11, {{"r"}, {}}},
          {12, {{"r", "t"}, {"u", "v", "w"}}},
          {13, {{"s", "t"}, {"x", "u", "v", "y", "z"}}},
          {14, {{"r"}, {}}},
          {15, {{"r"}, {}}},
          {16, {{"r"}, {}}},
      };
  static const std::map<int, std::vector<std::string>> kEdgeRoles = {
      {7, {"e"}},  {8, {"e", "f"}}, {9, {"e"}},   {10, {"e"}},
      {11, {"e"}}, {14, {"f0"}},    {15, {"f0"}}};
  std::string text = "conf" + std::to_string(match.conf);
  const auto& [region_roles, vertex_roles] = kRoles.at(match.conf);
  for (std::size_t i = 0; i < match.regions.size(); ++i)
    text += " " + region_roles[i] + "=" + std::to_string(match.regions[i]);
  for (std::size_t i = 0; i < match.vertices.size(); ++i)
    text += " " + vertex_roles[i] + "=" + emb.id(match.vertices[i]);
  auto edge_name = [&emb](int e) {
    return emb.id(emb.edge(e).u) + "-" + emb.id(emb.edge(e).v);
  };
  if (match.conf == 16) {
    std::string list;
    for (int e : match.edges) {
      if (!list.empty()) list += ",";
      list += edge_name(e);
    }
    text += " edges=" + list;
  } else if (kEdgeRoles.count(match.conf)) {
    const auto& roles = kEdgeRoles.at(match.conf);
    for (std::size_t i = 0; i < match.edges.size(); ++i)
      text += " " + roles[i] + "=" + edge_name(match.edges[i]);
  }
  return text;
}

PrimeVerdict is_prime(const Target& t, int odd_set_cap) {
  if (t.d != 7) throw std::invalid_argument("prime is defined for 7-targets");
  PrimeVerdict verdict;
  for (int e = 0; e < t.emb.edge_count(); ++e) {
    if (t.m[e] <= 0) {
      verdict.status = PrimeStatus::NotPrime;
      verdict.failed_condition = "zero multiplicity";
      verdict.witness_edge = e;
      return verdict;
    }
  }
  if (t.emb.vertex_count() < 6) {
    verdict.status = PrimeStatus::NotPrime;
    verdict.failed_condition = "fewer than six vertices";
    return verdict;
  }
  if (t.emb.vertex_count() > odd_set_cap) {
    verdict.status = PrimeStatus::Unknown;
    verdict.failed_condition = "odd-set cap exceeded";
    return verdict;
  }
  OddSetWitness cut = min_odd_cut(t, /*exclude_trivial=*/true, odd_set_cap);
  if (cut.value >= 0 && cut.value < 9) {
    verdict.status = PrimeStatus::NotPrime;
    verdict.failed_condition = "nontrivial odd cut below 9";
    verdict.witness_cut = cut;
    return verdict;
  }
  auto three = t.emb.is_three_connected();
  if (!three.has_value() || !*three) {
    verdict.status = PrimeStatus::NotPrime;
    verdict.failed_condition = "not three-connected";
    return verdict;
  }
  for (int e = 0; e < t.emb.edge_count(); ++e) {
    if (t.m[e] > 6) {
      verdict.status = PrimeStatus::NotPrime;
      verdict.failed_condition = "multiplicity above 6";
      verdict.witness_edge = e;
      return verdict;
    }
  }
  for (int k = 1; k <= 16; ++k) {
    auto matches = detect_conf(t, k);
    if (!matches.empty()) {
      verdict.status = PrimeStatus::NotPrime;
      verdict.failed_condition = "configuration";
      verdict.witness_conf = matches.front();
      return verdict;
    }
  }
  verdict.status = PrimeStatus::Prime;
  return verdict;
}

}  // namespace ptg
