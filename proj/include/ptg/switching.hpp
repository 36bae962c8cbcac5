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

#ifndef PTG_SWITCHING_HPP_
#define PTG_SWITCHING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ptg/colouring.hpp"
#include "ptg/target.hpp"

namespace ptg {

// The three-edge path x-u-v-y whose outer multiplicities get shifted onto
// the middle edge and the chord xy. When x,y are non-adjacent and share more
// than one region, `chord_region` names where the chord is drawn.
struct SwitchSpec {
  int x = -1, u = -1, v = -1, y = -1;
  std::optional<int> chord_region;
};

// Adds the edge xy with multiplicity 0 inside a region both x and y lie on
// (the unique common region, or `region` when given). Identity when x,y are
// already adjacent. Rotations at x and y are extended where that region's
// boundary passes through them, so the region splits in two.
Target add_chord(const Target& t, int x, int y, std::optional<int> region = {});

struct SwitchResult {
  Target target;
  bool fresh_chord = false;
  int chord_edge = -1;  // edge id of xy in the switched target
  // Degree equation is preserved by construction; the odd-cut axiom can fail
  // in general and is surfaced here, never silently accepted.
  ValidationReport revalidation;
};

// m(xu) -= 1, m(uv) += 1, m(vy) -= 1, m(xy) += 1 (chord added at 0 first if
// missing). Throws GraphError("negative multiplicity") when m(xu) or m(vy)
// is zero.
SwitchResult switch_on_path(const Target& t, const SwitchSpec& spec);

struct SwitchableVerdict {
  SolveStatus status = SolveStatus::Unknown;  // Colourable = switchable
  std::optional<Colouring> colouring;
  SwitchResult switched;
};

SwitchableVerdict is_switchable(const Target& t, const SwitchSpec& spec,
                                const SolveOptions& options = {});

struct GueninCut {
  int cls = -1;                    // the class meeting the cut >= 5 times
  std::vector<int> cut;            // sorted edge ids (the cocycle)
  std::vector<int> odd_set;        // sorted vertex indices, delta = cut
  std::vector<int> intersections;  // |F_j cap cut| per class
};

struct GueninCheck {
  bool preamble_no_shared_class = false;  // no class holds both uv and xy
  bool cocycle = false;
  bool cut_of_odd_set = false;
  bool singletons = false;   // |F_j cap Q| = 1 for j != cls
  bool heavy_class = false;  // |F_cls cap Q| >= 5
  bool contains_uv_xy = false;
  bool avoids_ux_vy = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the cut contract for a colouring of a switched target: Q a cocycle;
// Q = delta(X) with |X| odd; every class except `cls` meets Q once and
// F_cls meets it at least five times; uv, xy in Q; ux, vy not in Q; and no
// class contains both uv and xy.
GueninCheck verify_guenin_cut(const Target& switched, const Colouring& c,
                              const SwitchSpec& spec, int cls,
                              const std::vector<int>& cut,
                              const std::vector<int>& odd_set);

enum class CutSearchStatus { Found, None, CapExceeded };

struct CutSearchResult {
  CutSearchStatus status = CutSearchStatus::None;
  std::optional<GueninCut> cut;
};

// Exhaustive search over odd vertex sets containing u (complements carry the
// same cut), in canonical order; first set whose delta passes the verifier
// wins. When the chord is fresh, the class containing xy is excluded and
// asking for it is an error.
CutSearchResult find_guenin_cut(const SwitchResult& switched, const Colouring& c,
                                const SwitchSpec& spec, int cls,
                                int odd_set_cap = kOddSetCap);

}  // namespace ptg

#endif  // PTG_SWITCHING_HPP_
