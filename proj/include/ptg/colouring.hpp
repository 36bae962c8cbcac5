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

#ifndef PTG_COLOURING_HPP_
#define PTG_COLOURING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptg/target.hpp"

namespace ptg {

// The solver works on plain multigraphs: perfect-matching decomposition does
// not care about the embedding, and some classic negative instances (the
// Petersen graph) have none.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, simple
  std::vector<int> m;       // by edge index
};

Multigraph as_multigraph(const Target& t);

// A matching is a sorted list of edge ids. A colouring is a list of d perfect
// matchings, kept sorted so equal colourings compare equal structurally.
using Matching = std::vector<int>;

struct Colouring {
  std::vector<Matching> matchings;
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

struct MatchingEnumeration {
  std::vector<Matching> matchings;  // canonical (lexicographic) order
  bool truncated = false;
};

// All perfect matchings of the support (edges with m >= 1), in lexicographic
// order of their sorted edge lists, stopping after `limit` many.
MatchingEnumeration enumerate_perfect_matchings(const Multigraph& g, std::size_t limit);
MatchingEnumeration enumerate_perfect_matchings(const Target& t, std::size_t limit);

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct SolveOptions {
  std::uint64_t budget = kDefaultBudget;  // search nodes
  bool odd_cut_prune = false;             // exponential per node; off by default
  std::size_t matching_limit = 2'000'000;
};

enum class SolveStatus { Colourable, NotColourable, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Colouring> colouring;
  std::uint64_t nodes = 0;
  std::string note;
};

// Backtracking decomposition into d perfect matchings covering each edge e
// exactly m(e) times. Deterministic: the returned colouring is the
// lexicographically least non-decreasing list of canonical matchings.
// "NotColourable" is only reported after exhaustive search; running out of
// budget yields "Unknown".
SolveResult solve_colouring(const Multigraph& g, int d, const SolveOptions& options = {});
SolveResult solve_colouring(const Target& t, const SolveOptions& options = {});

struct ColouringFault {
  enum class Kind { WrongSize, NotPerfect, Coverage };
  Kind kind;
  int matching = -1;  // index of offending matching
  int vertex = -1;    // covered != 1 times
  int edge = -1;      // wrong coverage count
  long count = 0;
  long expected = 0;
};

struct ColouringCheck {
  std::vector<ColouringFault> faults;
  bool ok() const { return faults.empty(); }
};

ColouringCheck verify_colouring(const Multigraph& g, int d, const Colouring& c);
ColouringCheck verify_colouring(const Target& t, const Colouring& c);

struct RecombineResult {
  bool ok = false;
  Matching first;
  Matching second;
  int offending_edge = -1;
  std::string reason;
};

// Exchange the inside-X parts of two perfect matchings. Precondition: exactly
// one edge of delta(X) lies in F1 or F2, and it lies in both. With Z the
// edges having both ends in X, returns (F1 cap Z) cup (F2 minus Z) and
// (F2 cap Z) cup (F1 minus Z); both outputs are certified perfect matchings,
// and substituting them for F1, F2 keeps any containing colouring valid.
RecombineResult recombine_across_cut(const Multigraph& g, const Matching& f1,
                                     const Matching& f2, const std::vector<int>& odd_set);
RecombineResult recombine_across_cut(const Target& t, const Matching& f1, const Matching& f2,
                                     const std::vector<int>& odd_set);

}  // namespace ptg

#endif  // PTG_COLOURING_HPP_
