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

#ifndef PTG_TESTS_FIXTURES_HPP_
#define PTG_TESTS_FIXTURES_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ptg/colouring.hpp"
#include "ptg/switching.hpp"
#include "ptg/target.hpp"

namespace ptg::fixtures {

struct DrawnVertex {
  std::string id;
  double x = 0;
  double y = 0;
};

// Embedding from a planar straight-line drawing: each rotation is the
// neighbour list sorted clockwise around the vertex.
Embedding from_drawing(const std::vector<DrawnVertex>& points,
                       const std::vector<std::pair<std::string, std::string>>& edges);

int eid(const Embedding& emb, const std::string& u, const std::string& v);

// Multiplicities by endpoint names; every edge must be covered exactly once.
Target target_from(const Embedding& emb, int d,
                   const std::map<std::pair<std::string, std::string>, int>& m);

Embedding prism();  // a b c / a' b' c'
Target prism7();    // triangle edges 2, verticals 3, d = 7
Embedding k4();     // a b c d
Target k4_unit();   // m = 1, d = 3

Embedding ngon_prism(int n);      // an..., bn... (outer/inner cycle + spokes)
Embedding ngon_antiprism(int n);  // 4-regular

Multigraph petersen();  // m = 1; no plane embedding exists

Multigraph make_multigraph(int n, std::vector<std::pair<std::pair<int, int>, int>> edges);

// Deterministic random 7-targets built as sums of seven perfect matchings of
// small planar graphs (hence valid by construction), some with their
// zero-multiplicity edges deleted.
struct CorpusEntry {
  Target target;
  Colouring witness;  // seven matchings summing to m
  std::string name;
};
std::vector<CorpusEntry> corpus7(int count, unsigned seed);

// Degree-uniform small instances (|V| <= 8, d <= 4), some colourable, some
// provably not, for solver/oracle comparison.
struct SmallInstance {
  Multigraph graph;
  int d = 0;
  std::string name;
};
std::vector<SmallInstance> small_instances();

// Ten-vertex cylinder with a planted cut: two pentagons A = {x,u,p,q,s} and
// B = {y,b,v,c,e} joined by six crossing edges. Switching the base target on
// x-u-v-y yields a target whose planted colouring sends one class across
// delta(A) five times and every other class once.
struct CutFixture {
  Target base;
  SwitchSpec spec;
  Colouring colouring;        // for the switched target, by switched edge ids
  int heavy_class = 0;        // 0-based index into colouring
  std::vector<int> odd_set;   // the planted X, switched-target vertex indices
};
CutFixture guenin_fixture();

}  // namespace ptg::fixtures

#endif  // PTG_TESTS_FIXTURES_HPP_
