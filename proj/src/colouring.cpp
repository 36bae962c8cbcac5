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

#include "ptg/colouring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ptg {

Multigraph as_multigraph(const Target& t) {
  return Multigraph{t.emb.vertex_count(), t.emb.edges(), t.m};
}

namespace {

void extend_matchings(const Multigraph& g, const std::vector<std::vector<int>>& incident,
                      std::vector<char>& used, Matching& partial, std::size_t limit,
                      MatchingEnumeration& out) {
  if (out.truncated) return;
  int pivot = -1;
  for (int v = 0; v < g.n; ++v) {
    if (!used[v]) {
      pivot = v;
      break;
    }
  }
  if (pivot == -1) {
    if (out.matchings.size() == limit) {
      out.truncated = true;
      return;
    }
    out.matchings.push_back(partial);
    return;
  }
  // Covering the lowest uncovered vertex with edges in increasing id order
  // yields the matchings in lexicographic order of their sorted edge lists.
  for (int e : incident[pivot]) {
    if (g.m[e] < 1) continue;
    int other = g.edges[e].u == pivot ? g.edges[e].v : g.edges[e].u;
    if (used[other]) continue;
    if (other < pivot) continue;  // smaller vertices are already covered
    used[pivot] = used[other] = 1;
    partial.push_back(e);
    extend_matchings(g, incident, used, partial, limit, out);
    partial.pop_back();
    used[pivot] = used[other] = 0;
    if (out.truncated) return;
  }
}

std::vector<std::vector<int>> incidence_lists(const Multigraph& g) {
  std::vector<std::vector<int>> incident(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    incident[g.edges[e].u].push_back(e);
    incident[g.edges[e].v].push_back(e);
  }
  return incident;
}

}  // namespace

MatchingEnumeration enumerate_perfect_matchings(const Multigraph& g, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("matching limit must be >= 1");
  MatchingEnumeration out;
  if (g.n == 0 || g.n % 2 != 0) return out;
  auto incident = incidence_lists(g);
  std::vector<char> used(g.n, 0);
  Matching partial;
  extend_matchings(g, incident, used, partial, limit, out);
  return out;
}

MatchingEnumeration enumerate_perfect_matchings(const Target& t, std::size_t limit) {
  return enumerate_perfect_matchings(as_multigraph(t), limit);
}

namespace {

struct Solver {
  const Multigraph& g;
  int d;
  const SolveOptions& options;
  const std::vector<Matching>& pool;
  std::vector<int> residual;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  bool residual_oddly_connected(int remaining) const {
    // Necessary condition: every odd vertex set keeps cut value >= remaining.
    if (g.n > kOddSetCap) return true;
    unsigned long long limit = 1ULL << g.n;
    for (unsigned long long mask = 1; mask < limit; ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      long value = 0;
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        bool a = (mask >> g.edges[e].u) & 1ULL;
        bool b = (mask >> g.edges[e].v) & 1ULL;
        if (a != b) value += residual[e];
      }
      if (value < remaining) return false;
    }
    return true;
  }

  bool search(int placed, std::size_t from) {
    if (++nodes > options.budget) {
      out_of_budget = true;
      return false;
    }
    if (placed == d) return true;
    int remaining = d - placed;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      if (residual[e] > remaining) return false;
    if (options.odd_cut_prune && !residual_oddly_connected(remaining)) return false;
    for (std::size_t i = from; i < pool.size(); ++i) {
      const Matching& candidate = pool[i];
      bool usable = true;
      for (int e : candidate) {
        if (residual[e] < 1) {
          usable = false;
          break;
        }
      }
      if (!usable) continue;
      for (int e : candidate) --residual[e];
      chosen.push_back(static_cast<int>(i));
      if (search(placed + 1, i)) return true;
      chosen.pop_back();
      for (int e : candidate) ++residual[e];
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SolveResult solve_colouring(const Multigraph& g, int d, const SolveOptions& options) {
  SolveResult result;
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (g.n % 2 != 0) {
    result.status = SolveStatus::NotColourable;
    result.note = "odd vertex count admits no perfect matching";
    return result;
  }
  std::vector<long> degree(g.n, 0);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (g.m[e] < 0) throw std::invalid_argument("negative multiplicity");
    degree[g.edges[e].u] += g.m[e];
    degree[g.edges[e].v] += g.m[e];
  }
  for (int v = 0; v < g.n; ++v) {
    if (degree[v] != d) {
      result.status = SolveStatus::NotColourable;
      result.note = "vertex with m-degree != d cannot be covered exactly d times";
      return result;
    }
  }

  MatchingEnumeration pool = enumerate_perfect_matchings(g, options.matching_limit);
  Solver solver{g, d, options, pool.matchings, g.m, {}, 0, false};
  bool found = solver.search(0, 0);
  result.nodes = solver.nodes;
  if (found) {
    Colouring colouring;
    for (int i : solver.chosen) colouring.matchings.push_back(pool.matchings[i]);
    result.status = SolveStatus::Colourable;
    result.colouring = std::move(colouring);
  } else if (solver.out_of_budget) {
    result.status = SolveStatus::Unknown;
    result.note = "search budget exhausted";
  } else if (pool.truncated) {
    result.status = SolveStatus::Unknown;
    result.note = "matching enumeration truncated";
  } else {
    result.status = SolveStatus::NotColourable;
    result.note = "exhaustive search";
  }
  return result;
}

SolveResult solve_colouring(const Target& t, const SolveOptions& options) {
  return solve_colouring(as_multigraph(t), t.d, options);
}

ColouringCheck verify_colouring(const Multigraph& g, int d, const Colouring& c) {
  ColouringCheck check;
  if (static_cast<int>(c.matchings.size()) != d) {
    check.faults.push_back({ColouringFault::Kind::WrongSize, -1, -1, -1,
                            static_cast<long>(c.matchings.size()), d});
    return check;
  }
  std::vector<long> coverage(g.edges.size(), 0);
  for (int i = 0; i < d; ++i) {
    std::vector<int> times(g.n, 0);
    for (int e : c.matchings[i]) {
      if (e < 0 || e >= static_cast<int>(g.edges.size())) {
        check.faults.push_back({ColouringFault::Kind::NotPerfect, i, -1, e, 0, 0});
        return check;
      }
      ++times[g.edges[e].u];
      ++times[g.edges[e].v];
      ++coverage[e];
    }
    for (int v = 0; v < g.n; ++v) {
      if (times[v] != 1)
        check.faults.push_back(
            {ColouringFault::Kind::NotPerfect, i, v, -1, times[v], 1});
    }
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (coverage[e] != g.m[e])
      check.faults.push_back(
          {ColouringFault::Kind::Coverage, -1, -1, e, coverage[e], g.m[e]});
  }
  return check;
}

ColouringCheck verify_colouring(const Target& t, const Colouring& c) {
  return verify_colouring(as_multigraph(t), t.d, c);
}

namespace {

bool is_perfect_matching(const Multigraph& g, const Matching& f) {
  std::vector<int> times(g.n, 0);
  for (int e : f) {
    ++times[g.edges[e].u];
    ++times[g.edges[e].v];
  }
  for (int v = 0; v < g.n; ++v)
    if (times[v] != 1) return false;
  return true;
}

}  // namespace

RecombineResult recombine_across_cut(const Multigraph& g, const Matching& f1,
                                     const Matching& f2, const std::vector<int>& odd_set) {
  RecombineResult result;
  if (odd_set.size() % 2 == 0) {
    result.reason = "vertex set is not odd";
    return result;
  }
  std::vector<char> in_x(g.n, 0);
  for (int v : odd_set) {
    if (v < 0 || v >= g.n) {
      result.reason = "unknown vertex in set";
      return result;
    }
    in_x[v] = 1;
  }
  auto side_count = [&](int e) {
    return static_cast<int>(in_x[g.edges[e].u]) + static_cast<int>(in_x[g.edges[e].v]);
  };
  std::vector<char> in_f1(g.edges.size(), 0), in_f2(g.edges.size(), 0);
  for (int e : f1) in_f1[e] = 1;
  for (int e : f2) in_f2[e] = 1;
  int shared = -1;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (side_count(e) != 1) continue;
    if (!in_f1[e] && !in_f2[e]) continue;
    if (shared != -1) {
      result.offending_edge = e;
      result.reason = "second cut edge in the matchings";
      return result;
    }
    if (!(in_f1[e] && in_f2[e])) {
      result.offending_edge = e;
      result.reason = "cut edge is not shared by both matchings";
      return result;
    }
    shared = e;
  }
  if (shared == -1) {
    result.reason = "no cut edge in the matchings";
    return result;
  }

  auto in_z = [&](int e) { return side_count(e) == 2; };
  for (int e : f1)
    if (in_z(e)) result.first.push_back(e);
  for (int e : f2)
    if (!in_z(e)) result.first.push_back(e);
  for (int e : f2)
    if (in_z(e)) result.second.push_back(e);
  for (int e : f1)
    if (!in_z(e)) result.second.push_back(e);
  std::sort(result.first.begin(), result.first.end());
  std::sort(result.second.begin(), result.second.end());
  if (!is_perfect_matching(g, result.first) || !is_perfect_matching(g, result.second))
    throw std::logic_error("recombination produced a non-matching despite preconditions");
  result.ok = true;
  return result;
}

RecombineResult recombine_across_cut(const Target& t, const Matching& f1, const Matching& f2,
                                     const std::vector<int>& odd_set) {
  return recombine_across_cut(as_multigraph(t), f1, f2, odd_set);
}

}  // namespace ptg
