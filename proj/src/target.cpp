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

#include "ptg/target.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ptg {

long Target::m_of_cut(const std::vector<int>& edge_ids) const {
  long total = 0;
  for (int e : edge_ids) total += m[e];
  return total;
}

long Target::m_of_vertex(int vertex) const {
  long total = 0;
  for (int u : emb.rotation(vertex)) {
    int lo = std::min(vertex, u), hi = std::max(vertex, u);
    total += m[*emb.edge_id(lo, hi)];
  }
  return total;
}

std::string ValidationReport::summary(const Embedding& emb) const {
  if (ok()) return "valid";
  if (nonnegative == Verdict::Fail)
    return "negative multiplicity on edge " + emb.id(emb.edge(*negative_edge).u) + "-" +
           emb.id(emb.edge(*negative_edge).v);
  if (degree == Verdict::Fail)
    return "vertex " + emb.id(*bad_vertex) + " has m-degree " +
           std::to_string(bad_vertex_value);
  if (boundary == Verdict::Fail)
    return "edge " + emb.id(emb.edge(*bridge_edge).u) + "-" +
           emb.id(emb.edge(*bridge_edge).v) + " is a bridge";
  if (odd_cut == Verdict::Fail) {
    std::string names;
    for (int v : odd_cut_witness->vertices) {
      if (!names.empty()) names += " ";
      names += emb.id(v);
    }
    return "odd set {" + names + "} has cut value " +
           std::to_string(odd_cut_witness->value);
  }
  return "odd-cut axiom unchecked (vertex cap exceeded)";
}

namespace {

// Scans all odd subsets (as bitmasks in increasing order) and reports the
// first minimizer. With skip_trivial, only 1 < |X| < |V|-1.
OddSetWitness scan_odd_sets(const Embedding& emb, const std::vector<int>& m,
                            bool skip_trivial) {
  int n = emb.vertex_count();
  std::vector<std::pair<int, int>> ends(emb.edge_count());
  for (int e = 0; e < emb.edge_count(); ++e)
    ends[e] = {emb.edge(e).u, emb.edge(e).v};
  long best = -1;
  unsigned long long best_mask = 0;
  unsigned long long limit = 1ULL << n;
  for (unsigned long long mask = 1; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size % 2 == 0) continue;
    if (skip_trivial && (size <= 1 || size >= n - 1)) continue;
    long value = 0;
    for (int e = 0; e < emb.edge_count(); ++e) {
      bool a = (mask >> ends[e].first) & 1ULL;
      bool b = (mask >> ends[e].second) & 1ULL;
      if (a != b) value += m[e];
    }
    if (best < 0 || value < best) {
      best = value;
      best_mask = mask;
    }
  }
  OddSetWitness witness;
  witness.value = best;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1ULL) witness.vertices.push_back(v);
  return witness;
}

}  // namespace

ValidationReport validate_target(const Embedding& emb, int d, const std::vector<int>& m,
                                 int odd_set_cap) {
  if (d < 1) throw GraphError("invalid d", "d must be positive");
  if (static_cast<int>(m.size()) != emb.edge_count())
    throw GraphError("multiplicity mismatch", "one multiplicity per edge required");

  ValidationReport report;
  for (int e = 0; e < emb.edge_count(); ++e) {
    if (m[e] < 0) {
      report.nonnegative = Verdict::Fail;
      report.negative_edge = e;
      break;
    }
    if (m[e] == 0) report.has_zero_edges = true;
  }

  for (int v = 0; v < emb.vertex_count() && report.degree == Verdict::Pass; ++v) {
    long total = 0;
    for (int u : emb.rotation(v)) {
      int lo = std::min(v, u), hi = std::max(v, u);
      total += m[*emb.edge_id(lo, hi)];
    }
    if (total != d) {
      report.degree = Verdict::Fail;
      report.bad_vertex = v;
      report.bad_vertex_value = total;
    }
  }

  for (int e = 0; e < emb.edge_count(); ++e) {
    auto [r1, r2] = emb.incident_regions(e);
    if (r1 == r2) {
      report.boundary = Verdict::Fail;
      report.bridge_edge = e;
      break;
    }
  }

  if (report.nonnegative == Verdict::Pass) {
    if (emb.vertex_count() > odd_set_cap) {
      report.odd_cut = Verdict::Unchecked;
    } else {
      OddSetWitness witness = scan_odd_sets(emb, m, /*skip_trivial=*/false);
      if (witness.value < d) {
        report.odd_cut = Verdict::Fail;
        report.odd_cut_witness = witness;
      }
    }
  } else {
    report.odd_cut = Verdict::Unchecked;
  }
  return report;
}

Target make_target(Embedding emb, int d, std::vector<int> m, int odd_set_cap) {
  ValidationReport report = validate_target(emb, d, m, odd_set_cap);
  if (!report.ok()) {
    if (report.unchecked() && report.nonnegative == Verdict::Pass &&
        report.degree == Verdict::Pass && report.boundary == Verdict::Pass)
      throw TargetError("odd cut unchecked", "odd-cut axiom unchecked: " +
                                                 std::to_string(emb.vertex_count()) +
                                                 " vertices exceed the cap");
    throw TargetError("invalid target", report.summary(emb));
  }
  return Target{std::move(emb), d, std::move(m)};
}

OddSetWitness min_odd_cut(const Target& t, bool exclude_trivial, int odd_set_cap) {
  if (t.emb.vertex_count() > odd_set_cap)
    throw CapExceeded("cap exceeded", "odd-set enumeration cap exceeded");
  return scan_odd_sets(t.emb, t.m, exclude_trivial);
}

CounterexampleReport check_counterexample_conditions(const Target& t, int odd_set_cap) {
  CounterexampleReport report;
  if (t.emb.vertex_count() < 6) report.min_vertices = Verdict::Fail;

  if (t.emb.vertex_count() > odd_set_cap) {
    report.nontrivial_odd_cuts = Verdict::Unchecked;
  } else if (t.emb.vertex_count() >= 4) {
    OddSetWitness witness = scan_odd_sets(t.emb, t.m, /*skip_trivial=*/true);
    if (witness.value >= 0 && witness.value < t.d + 2) {
      report.nontrivial_odd_cuts = Verdict::Fail;
      report.odd_cut_witness = witness;
    }
  }

  auto three = t.emb.is_three_connected();
  if (!three.has_value())
    report.three_connected = Verdict::Unchecked;
  else if (!*three)
    report.three_connected = Verdict::Fail;

  for (int e = 0; e < t.emb.edge_count(); ++e) {
    if (t.m[e] > t.d - 2) {
      report.multiplicity_bound = Verdict::Fail;
      report.heavy_edge = e;
      break;
    }
  }
  for (int e = 0; e < t.emb.edge_count(); ++e) {
    if (t.m[e] == 0) {
      report.positive_multiplicity = Verdict::Fail;
      report.zero_edge = e;
      break;
    }
  }
  return report;
}

ScoreSequence score_sequence(const Target& t) {
  ScoreSequence score;
  score.counts.assign(t.d + 1, 0);
  for (int e = 0; e < t.emb.edge_count(); ++e) {
    if (t.m[e] < 0 || t.m[e] > t.d)
      throw GraphError("invalid target", "multiplicity out of range for score sequence");
    ++score.counts[t.m[e]];
  }
  return score;
}

bool is_smaller(int vertices_a, const ScoreSequence& a, int vertices_b,
                const ScoreSequence& b) {
  if (a.counts.size() != b.counts.size())
    throw std::invalid_argument("score sequences for different d");
  if (vertices_a != vertices_b) return vertices_a < vertices_b;
  int d = static_cast<int>(a.counts.size()) - 1;
  for (int j = d; j >= 1; --j) {
    if (a.counts[j] != b.counts[j]) return a.counts[j] > b.counts[j];
  }
  return a.counts[0] < b.counts[0];
}

bool is_smaller(const Target& a, const Target& b) {
  if (a.d != b.d) throw std::invalid_argument("targets with different d are not comparable");
  return is_smaller(a.emb.vertex_count(), score_sequence(a), b.emb.vertex_count(),
                    score_sequence(b));
}

}  // namespace ptg
