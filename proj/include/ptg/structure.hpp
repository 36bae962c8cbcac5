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

#ifndef PTG_STRUCTURE_HPP_
#define PTG_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ptg/target.hpp"

namespace ptg {

// Two edges are disjoint when they are distinct and share no end.
bool edges_disjoint(const Embedding& emb, int e, int f);

// A door for region r: an edge e of C_r with m(e) = 1 such that the other
// region incident with e carries an edge disjoint from e with multiplicity 1.
bool is_door(const Target& t, int edge, int region);
std::vector<int> doors_of(const Target& t, int region);

// Big: at least four doors. Everything else is small.
bool is_big(const Target& t, int region);

// Largest i for which the edge is i-heavy for r (meaningful for i >= 2):
// m(e), raised to m(e) + min of the other two multiplicities when the other
// side is a triangle.
int heavy_value(const Target& t, int edge, int region);

struct EdgeContext {
  int edge = -1;
  int region = -1;
  int other_region = -1;
  int multiplicity = 0;
  bool door = false;
  int heavy = 0;
  bool is_heavy(int i) const { return heavy >= i; }
};

EdgeContext edge_context(const Target& t, int edge, int region);

// m+(e) relative to a disc of named regions: m(e), plus one when the region
// incident with e outside the disc is small. The edge must lie on the disc
// boundary (exactly one incident region named).
int m_plus(const Target& t, int edge, const std::vector<int>& disc_regions);

struct RegionClass {
  int region = -1;
  std::vector<int> doors;
  bool big = false;
  bool triangle = false;
  std::optional<int> multiplicity;       // triangles only
  std::optional<int> plus_multiplicity;  // triangles only, disc = {region}
  bool tough = false;                    // triangle with m+(r) >= 7
};

RegionClass classify_region(const Target& t, int region);

// One located occurrence of a configuration. The component role orders are
// fixed per configuration (see describe_conf); re-running the predicate on
// the named instance must hold.
struct ConfMatch {
  int conf = 0;
  std::vector<int> regions;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> values;
  friend bool operator==(const ConfMatch&, const ConfMatch&) = default;
};

// All occurrences of configuration k (1..16), one per instance under the
// configuration's own symmetries, sorted canonically.
std::vector<ConfMatch> detect_conf(const Target& t, int k);

// Re-evaluates the configuration predicate on the named instance.
bool recheck_conf(const Target& t, const ConfMatch& match);

std::string describe_conf(const Embedding& emb, const ConfMatch& match);

enum class PrimeStatus { Prime, NotPrime, Unknown };

struct PrimeVerdict {
  PrimeStatus status = PrimeStatus::Unknown;
  // Empty when prime; otherwise one of: "zero multiplicity",
  // "fewer than six vertices", "nontrivial odd cut below 9",
  // "not three-connected", "multiplicity above 6", "configuration".
  std::string failed_condition;
  std::optional<int> witness_edge;
  std::optional<OddSetWitness> witness_cut;
  std::optional<ConfMatch> witness_conf;
};

// The five structural conditions of a prime 7-target followed by the
// sixteen configuration scans; the witness is the first failure in that
// order. Requires d = 7.
PrimeVerdict is_prime(const Target& t, int odd_set_cap = kOddSetCap);

}  // namespace ptg

#endif  // PTG_STRUCTURE_HPP_
