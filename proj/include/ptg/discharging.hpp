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

#ifndef PTG_DISCHARGING_HPP_
#define PTG_DISCHARGING_HPP_

#include <string>
#include <vector>

#include "ptg/structure.hpp"

namespace ptg {

// The charge constants (14, 7, total 28) are specific to d = 7; every entry
// point below rejects other d.

// alpha(r) = 14 - 7 |E(C_r)| + 2 sum of m over the boundary.
int alpha(const Target& t, int region);

enum class BetaRule {
  SameClass,      // both big, both tough, or both small-and-not-tough
  ToughToSmall,   // [b0] tough pays 1 to a small non-tough region
  Door,           // [b1] door into the big region: no transfer
  HeavyTriangle,  // [b2] small triangle with multiplicity >= 5 pays 2 to big
  SmallToBig,     // [b3] small pays 1 to big
};

std::string to_string(BetaRule rule);

struct EdgeBeta {
  int edge = -1;
  int region_a = -1;  // region traced from (u,v), u < v
  int region_b = -1;
  int beta_a = 0;
  int beta_b = 0;
  BetaRule rule = BetaRule::SameClass;
};

EdgeBeta beta_edge(const Target& t, int edge);

// Sum of the per-edge transfers received by the region.
int beta(const Target& t, int region);

enum class RegionKind { Big, ToughTriangle, Triangle, Small };

std::string to_string(RegionKind kind);

struct RegionCharge {
  int region = -1;
  int alpha = 0;
  int beta = 0;
  RegionKind kind = RegionKind::Small;
  int charge() const { return alpha + beta; }
};

struct DischargeReport {
  std::vector<RegionCharge> regions;  // by region id
  std::vector<EdgeBeta> edges;        // by edge id
  long sum_alpha = 0;                 // always 28
  long sum_beta = 0;                  // always 0
  std::vector<int> overcharged;       // regions with alpha + beta > 0
};

// Full charge accounting. Refuses targets that fail the degree or boundary
// conditions (the odd-cut axiom is not needed for the identities and is left
// to validate_target). A sum differing from 28/0 is an internal bug and
// raises logic_error.
DischargeReport discharge(const Target& t);

}  // namespace ptg

#endif  // PTG_DISCHARGING_HPP_
