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

#ifndef PTG_TARGET_HPP_
#define PTG_TARGET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ptg/embedding.hpp"

namespace ptg {

// Exhaustive odd-set checks are O(2^V); above this many vertices they report
// "unchecked" instead of silently passing.
inline constexpr int kOddSetCap = 20;

// A plane graph with an integer multiplicity per edge, aiming at the axioms
// m(delta(v)) = d for every vertex and m(delta(X)) >= d for every odd X.
// Construct through make_target to get those axioms enforced; switching can
// produce Target values that fail the odd-cut axiom, which callers detect
// through the attached ValidationReport.
struct Target {
  Embedding emb;
  int d = 0;
  std::vector<int> m;  // by edge id

  int multiplicity(int edge_id) const { return m[edge_id]; }
  long m_of_cut(const std::vector<int>& edge_ids) const;
  long m_of_vertex(int vertex) const;
};

enum class Verdict { Pass, Fail, Unchecked };

struct OddSetWitness {
  std::vector<int> vertices;  // sorted indices
  long value = 0;
};

struct ValidationReport {
  Verdict nonnegative = Verdict::Pass;
  std::optional<int> negative_edge;

  Verdict degree = Verdict::Pass;
  std::optional<int> bad_vertex;
  long bad_vertex_value = 0;

  Verdict odd_cut = Verdict::Pass;
  std::optional<OddSetWitness> odd_cut_witness;

  // Every edge must lie on two distinct regions (fails on bridges).
  Verdict boundary = Verdict::Pass;
  std::optional<int> bridge_edge;

  bool has_zero_edges = false;  // accepted, but flagged

  bool ok() const {
    return nonnegative == Verdict::Pass && degree == Verdict::Pass &&
           odd_cut == Verdict::Pass && boundary == Verdict::Pass;
  }
  bool unchecked() const { return odd_cut == Verdict::Unchecked; }
  std::string summary(const Embedding& emb) const;
};

ValidationReport validate_target(const Embedding& emb, int d, const std::vector<int>& m,
                                 int odd_set_cap = kOddSetCap);

class TargetError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Validates and constructs; throws TargetError when a verdict fails or the
// odd-cut check hits the cap.
Target make_target(Embedding emb, int d, std::vector<int> m, int odd_set_cap = kOddSetCap);

class CapExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

// Minimizing odd vertex set; with exclude_trivial, restricted to
// 1 < |X| < |V| - 1 (value -1 with an empty set when no odd set qualifies,
// as on four vertices). Witness is the first minimizer in canonical subset
// order. Throws CapExceeded above the cap.
OddSetWitness min_odd_cut(const Target& t, bool exclude_trivial, int odd_set_cap = kOddSetCap);

// The preconditions a smallest non-colourable d-target would have to meet:
// |V| >= 6, every nontrivial odd cut >= d+2, three-connected, every
// multiplicity in 1..d-2.
struct CounterexampleReport {
  Verdict min_vertices = Verdict::Pass;
  Verdict nontrivial_odd_cuts = Verdict::Pass;
  std::optional<OddSetWitness> odd_cut_witness;
  Verdict three_connected = Verdict::Pass;
  Verdict multiplicity_bound = Verdict::Pass;
  std::optional<int> heavy_edge;
  Verdict positive_multiplicity = Verdict::Pass;
  std::optional<int> zero_edge;
  bool all_pass() const {
    return min_vertices == Verdict::Pass && nontrivial_odd_cuts == Verdict::Pass &&
           three_connected == Verdict::Pass && multiplicity_bound == Verdict::Pass &&
           positive_multiplicity == Verdict::Pass;
  }
};

CounterexampleReport check_counterexample_conditions(const Target& t,
                                                     int odd_set_cap = kOddSetCap);

// counts[i] = number of edges with multiplicity i, for i = 0..d.
struct ScoreSequence {
  std::vector<long> counts;
};

ScoreSequence score_sequence(const Target& t);

// The well-order used to pick minimum counterexamples: fewer vertices wins;
// with equal vertex counts, compare counts from index d downwards, a strictly
// larger count at the first difference wins; with all of 1..d equal, fewer
// multiplicity-0 edges wins.
bool is_smaller(const Target& a, const Target& b);
bool is_smaller(int vertices_a, const ScoreSequence& a, int vertices_b, const ScoreSequence& b);

}  // namespace ptg

#endif  // PTG_TARGET_HPP_
