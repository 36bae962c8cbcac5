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

#include "ptg/discharging.hpp"

#include <stdexcept>

namespace ptg {

namespace {

void require_seven(const Target& t) {
  if (t.d != 7)
    throw std::invalid_argument("discharging constants are specific to d = 7");
}

enum class Category { Big, Tough, SmallNotTough };

Category category_of(const RegionClass& cls) {
  if (cls.big) return Category::Big;
  if (cls.tough) return Category::Tough;
  return Category::SmallNotTough;
}

}  // namespace

int alpha(const Target& t, int region) {
  require_seven(t);
  int sum = 0;
  for (int e : t.emb.region(region).edge_ids) sum += t.m[e];
  return 14 - 7 * t.emb.region(region).length() + 2 * sum;
}

std::string to_string(BetaRule rule) {
  switch (rule) {
    case BetaRule::SameClass: return "zero";
    case BetaRule::ToughToSmall: return "b0";
    case BetaRule::Door: return "b1";
    case BetaRule::HeavyTriangle: return "b2";
    case BetaRule::SmallToBig: return "b3";
  }
  return "?";
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Big: return "big";
    case RegionKind::ToughTriangle: return "tough-triangle";
    case RegionKind::Triangle: return "non-tough-triangle";
    case RegionKind::Small: return "small";
  }
  return "?";
}

EdgeBeta beta_edge(const Target& t, int edge) {
  require_seven(t);
  EdgeBeta out;
  out.edge = edge;
  auto [ra, rb] = t.emb.incident_regions(edge);
  out.region_a = ra;
  out.region_b = rb;
  if (ra == rb)
    throw TargetError("invalid target", "bridge edge has one incident region");

  RegionClass cls_a = classify_region(t, ra);
  RegionClass cls_b = classify_region(t, rb);
  Category cat_a = category_of(cls_a);
  Category cat_b = category_of(cls_b);

  if (cat_a == cat_b) {
    out.rule = BetaRule::SameClass;
    return out;
  }
  if (cat_a != Category::Big && cat_b != Category::Big) {
    // One tough, one small and not tough: the tough triangle pays 1.
    out.rule = BetaRule::ToughToSmall;
    bool a_tough = cat_a == Category::Tough;
    out.beta_a = a_tough ? -1 : 1;
    out.beta_b = -out.beta_a;
    return out;
  }
  // One big, one small (tough or not).
  bool a_big = cat_a == Category::Big;
  const RegionClass& big_cls = a_big ? cls_a : cls_b;
  const RegionClass& small_cls = a_big ? cls_b : cls_a;
  int transfer;
  if (is_door(t, edge, big_cls.region)) {
    out.rule = BetaRule::Door;
    transfer = 0;
  } else if (small_cls.triangle && *small_cls.multiplicity >= 5) {
    out.rule = BetaRule::HeavyTriangle;
    transfer = 2;
  } else {
    out.rule = BetaRule::SmallToBig;
    transfer = 1;
  }
  out.beta_a = a_big ? transfer : -transfer;
  out.beta_b = -out.beta_a;
  return out;
}

int beta(const Target& t, int region) {
  require_seven(t);
  int total = 0;
  for (int e : t.emb.region(region).edge_ids) {
    EdgeBeta eb = beta_edge(t, e);
    if (eb.region_a == region) total += eb.beta_a;
    else total += eb.beta_b;
  }
  return total;
}

DischargeReport discharge(const Target& t) {
  require_seven(t);
  ValidationReport validation = validate_target(t.emb, t.d, t.m, /*odd_set_cap=*/0);
  if (validation.nonnegative != Verdict::Pass || validation.degree != Verdict::Pass ||
      validation.boundary != Verdict::Pass)
    throw TargetError("invalid target",
                      "discharge requires a 7-target: " + validation.summary(t.emb));

  DischargeReport report;
  for (int e = 0; e < t.emb.edge_count(); ++e) report.edges.push_back(beta_edge(t, e));

  std::vector<int> beta_sum(t.emb.region_count(), 0);
  for (const EdgeBeta& eb : report.edges) {
    beta_sum[eb.region_a] += eb.beta_a;
    beta_sum[eb.region_b] += eb.beta_b;
    if (eb.beta_a + eb.beta_b != 0)
      throw std::logic_error("edge transfers must cancel");
  }

  for (int r = 0; r < t.emb.region_count(); ++r) {
    RegionClass cls = classify_region(t, r);
    RegionKind kind = cls.big          ? RegionKind::Big
                      : cls.tough      ? RegionKind::ToughTriangle
                      : cls.triangle   ? RegionKind::Triangle
                                       : RegionKind::Small;
    RegionCharge charge{r, alpha(t, r), beta_sum[r], kind};
    report.sum_alpha += charge.alpha;
    report.sum_beta += charge.beta;
    if (charge.charge() > 0) report.overcharged.push_back(r);
    report.regions.push_back(charge);
  }
  if (report.sum_alpha != 28)
    throw std::logic_error("alpha total is " + std::to_string(report.sum_alpha) +
                           ", expected 28");
  if (report.sum_beta != 0)
    throw std::logic_error("beta total is " + std::to_string(report.sum_beta) +
                           ", expected 0");
  return report;
}

}  // namespace ptg
