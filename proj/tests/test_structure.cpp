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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "naive_scanner.hpp"
#include "ptg/structure.hpp"

using namespace ptg;
using fixtures::eid;

namespace {

int region_of_length_containing(const Embedding& emb, int length, int edge) {
  for (const Region& r : emb.regions()) {
    if (r.length() != length) continue;
    for (int e : r.edge_ids)
      if (e == edge) return r.id;
  }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("edge heaviness") {
  // K4 with tuned multiplicities; heaviness needs no target validity.
  Embedding emb = fixtures::k4();
  std::map<std::pair<std::string, std::string>, int> m{
      {{"a", "b"}, 2}, {{"a", "d"}, 1}, {{"b", "d"}, 3},
      {{"a", "c"}, 1}, {{"b", "c"}, 1}, {{"c", "d"}, 1}};
  Target t = fixtures::target_from(emb, 7, m);
  int ab = eid(emb, "a", "b");
  // The region on the other side of ab is the triangle abd for one side,
  // abc for the other.
  auto [r1, r2] = emb.incident_regions(ab);
  int abd = -1, abc = -1;
  for (int r : {r1, r2}) {
    auto verts = emb.region(r).boundary;
    bool has_d = false;
    for (const auto& de : verts) has_d |= emb.id(de.from) == "d";
    (has_d ? abd : abc) = r;
  }
  // For the region whose other side is abd: 2 + min(1,3) = 3-heavy, not 4.
  EdgeContext ctx = edge_context(t, ab, abc);
  CHECK(ctx.other_region == abd);
  CHECK(ctx.heavy == 3);
  CHECK(ctx.is_heavy(2));
  CHECK(ctx.is_heavy(3));
  CHECK_FALSE(ctx.is_heavy(4));

  // m(e) >= i branch alone.
  t.m[ab] = 4;
  CHECK(edge_context(t, ab, abc).heavy == 4 + 1);  // triangle bonus still adds min = 1
  t.m[eid(emb, "a", "d")] = 0;
  CHECK(edge_context(t, ab, abc).heavy == 4);  // min drops to zero
  CHECK(edge_context(t, ab, abc).is_heavy(4));
}

TEST_CASE("doors and big regions") {
  // Prism with all multiplicities 1: vertical edges are doors for the
  // squares (the opposite vertical on the neighbouring square has m = 1),
  // triangle edges are not (a triangle has no edge disjoint from them).
  Embedding emb = fixtures::prism();
  std::map<std::pair<std::string, std::string>, int> ones;
  for (int e = 0; e < emb.edge_count(); ++e)
    ones[{emb.id(emb.edge(e).u), emb.id(emb.edge(e).v)}] = 1;
  Target t = fixtures::target_from(emb, 3, ones);
  int vertical = eid(emb, "a0", "b0");
  int square = region_of_length_containing(emb, 4, vertical);
  // Other side of the vertical is the second square, which has a disjoint
  // vertical of multiplicity one.
  CHECK(is_door(t, vertical, square));
  int tri_edge = eid(emb, "a0", "a1");
  int triangle = region_of_length_containing(emb, 3, tri_edge);
  // Seen from the triangle, the other side is a square carrying b0-b1.
  CHECK(is_door(t, tri_edge, triangle));
  // Seen from the square, the other side is the triangle: nothing disjoint.
  int tri_square = region_of_length_containing(emb, 4, tri_edge);
  CHECK_FALSE(is_door(t, tri_edge, tri_square));
}

TEST_CASE("a cube face with unit multiplicities is big") {
  Embedding cube = fixtures::ngon_prism(4);
  std::vector<int> ones(cube.edge_count(), 1);
  Target t{cube, 3, ones};
  for (const Region& r : cube.regions()) {
    RegionClass cls = classify_region(t, r.id);
    CHECK(cls.doors.size() == 4);
    CHECK(cls.big);
    CHECK_FALSE(cls.triangle);
  }
}

TEST_CASE("m_plus against the PRISM7 fixtures") {
  Target t = fixtures::prism7();
  int ab = eid(t.emb, "a0", "a1");
  int top = region_of_length_containing(t.emb, 3, ab);
  CHECK(m_plus(t, ab, {top}) == 3);  // second region is a doorless square

  int vertical = eid(t.emb, "a0", "b0");
  int square = region_of_length_containing(t.emb, 4, vertical);
  CHECK(m_plus(t, vertical, {square}) == 4);

  // Interior edges are refused.
  int other_square = -1;
  auto [r1, r2] = t.emb.incident_regions(vertical);
  other_square = (r1 == square) ? r2 : r1;
  CHECK_THROWS_AS(m_plus(t, vertical, {square, other_square}), GraphError);
  int bottom = region_of_length_containing(t.emb, 3, eid(t.emb, "b0", "b1"));
  CHECK_THROWS_AS(m_plus(t, ab, {bottom}), GraphError);
}

TEST_CASE("PRISM7 region classes") {
  Target t = fixtures::prism7();
  int triangles = 0, squares = 0;
  for (const Region& r : t.emb.regions()) {
    RegionClass cls = classify_region(t, r.id);
    CHECK(cls.doors.empty());
    CHECK_FALSE(cls.big);
    if (cls.triangle) {
      ++triangles;
      CHECK(*cls.multiplicity == 6);
      CHECK(*cls.plus_multiplicity == 9);
      CHECK(cls.tough);
    } else {
      ++squares;
      CHECK_FALSE(cls.tough);
    }
  }
  CHECK(triangles == 2);
  CHECK(squares == 3);
}

TEST_CASE("tough implies small, big implies not triangle") {
  for (const auto& entry : fixtures::corpus7(20, 17)) {
    for (const Region& r : entry.target.emb.regions()) {
      RegionClass cls = classify_region(entry.target, r.id);
      if (cls.tough) CHECK_FALSE(cls.big);
      if (cls.big) CHECK_FALSE(cls.triangle);
    }
  }
}

TEST_CASE("PRISM7 configuration scan") {
  Target t = fixtures::prism7();
  std::set<int> expected_present{1, 3, 5, 6, 7, 13};
  for (int k = 1; k <= 16; ++k) {
    auto matches = detect_conf(t, k);
    CAPTURE(k);
    CHECK(matches.empty() == (expected_present.count(k) == 0));
    for (const auto& match : matches) CHECK(recheck_conf(t, match));
  }
  // Counts pinned by hand on the fixture.
  CHECK(detect_conf(t, 1).size() == 6);   // every vertex is a degree-3 apex
  CHECK(detect_conf(t, 6).size() == 6);   // both triangles, all three apexes
  CHECK(detect_conf(t, 7).size() == 6);   // each square via its two verticals
  CHECK(detect_conf(t, 11).empty());      // no multiplicity 4 or 5 edge
  CHECK(detect_conf(t, 13).size() == 6);  // each square against each triangle
}

TEST_CASE("scanner agrees with the quantifier transcription") {
  for (const auto& entry : fixtures::corpus7(20, 123)) {
    for (int k = 1; k <= 16; ++k) {
      CAPTURE(entry.name);
      CAPTURE(k);
      CHECK(naive::present(entry.target, k) == !detect_conf(entry.target, k).empty());
    }
  }
  Target prism = fixtures::prism7();
  for (int k = 1; k <= 16; ++k)
    CHECK(naive::present(prism, k) == !detect_conf(prism, k).empty());
}

TEST_CASE("door sets only depend on the local neighbourhood") {
  for (const auto& entry : fixtures::corpus7(6, 77)) {
    const Target& t = entry.target;
    for (const Region& r : t.emb.regions()) {
      // Regions sharing an edge with r.
      std::set<int> nearby{r.id};
      for (int e : r.edge_ids) {
        auto [r1, r2] = t.emb.incident_regions(e);
        nearby.insert(r1);
        nearby.insert(r2);
      }
      for (int e = 0; e < t.emb.edge_count(); ++e) {
        bool on_nearby = false;
        for (int nr : nearby)
          for (int f : t.emb.region(nr).edge_ids) on_nearby |= (f == e);
        if (on_nearby) continue;
        Target bumped = t;
        bumped.m[e] += 1;
        CHECK(doors_of(bumped, r.id) == doors_of(t, r.id));
      }
    }
  }
}

TEST_CASE("structure queries reject edges off the region") {
  Target t = fixtures::prism7();
  int ab = eid(t.emb, "a0", "a1");
  int bottom = region_of_length_containing(t.emb, 3, eid(t.emb, "b0", "b1"));
  CHECK_THROWS_AS(edge_context(t, ab, bottom), GraphError);
  CHECK_THROWS_AS(detect_conf(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(detect_conf(t, 17), std::invalid_argument);
}

TEST_CASE("is_prime on PRISM7: refuted by a configuration") {
  Target t = fixtures::prism7();
  PrimeVerdict verdict = is_prime(t);
  CHECK(verdict.status == PrimeStatus::NotPrime);
  CHECK(verdict.failed_condition == "configuration");
  REQUIRE(verdict.witness_conf.has_value());
  CHECK(verdict.witness_conf->conf == 1);
  CHECK(recheck_conf(t, *verdict.witness_conf));
  // The fixture also carries a conf(6) instance at each triangle.
  CHECK_FALSE(detect_conf(t, 6).empty());
}

TEST_CASE("is_prime structural bullets") {
  // A 7-target on four vertices: degree 7 via multiplicities 3/2/2.
  Embedding emb = fixtures::k4();
  std::map<std::pair<std::string, std::string>, int> m{
      {{"a", "b"}, 3}, {{"c", "d"}, 3}, {{"a", "c"}, 2},
      {{"b", "d"}, 2}, {{"a", "d"}, 2}, {{"b", "c"}, 2}};
  Target small = fixtures::target_from(emb, 7, m);
  CHECK(validate_target(small.emb, 7, small.m).ok());
  PrimeVerdict verdict = is_prime(small);
  CHECK(verdict.status == PrimeStatus::NotPrime);
  CHECK(verdict.failed_condition == "fewer than six vertices");

  // Zero multiplicity wins over everything else.
  Target prism = fixtures::prism7();
  Target chorded = add_chord(prism, *prism.emb.index_of("a0"), *prism.emb.index_of("b1"));
  PrimeVerdict zero = is_prime(chorded);
  CHECK(zero.status == PrimeStatus::NotPrime);
  CHECK(zero.failed_condition == "zero multiplicity");

  // Cap produces unknown.
  CHECK(is_prime(prism, /*odd_set_cap=*/3).status == PrimeStatus::Unknown);
  CHECK_THROWS_AS(is_prime(fixtures::k4_unit()), std::invalid_argument);
}

TEST_CASE("no corpus 7-target is prime and witnesses recheck") {
  for (const auto& entry : fixtures::corpus7(15, 2024)) {
    PrimeVerdict verdict = is_prime(entry.target);
    REQUIRE(verdict.status == PrimeStatus::NotPrime);
    if (verdict.witness_conf) CHECK(recheck_conf(entry.target, *verdict.witness_conf));
    if (verdict.witness_cut)
      CHECK(entry.target.m_of_cut(entry.target.emb.cut_of_set(
                verdict.witness_cut->vertices)) == verdict.witness_cut->value);
    if (verdict.failed_condition == "zero multiplicity") {
      REQUIRE(verdict.witness_edge.has_value());
      CHECK(entry.target.m[*verdict.witness_edge] == 0);
    }
  }
}
