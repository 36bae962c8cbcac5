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

#include "ptg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ptg/colouring.hpp"
#include "ptg/discharging.hpp"
#include "ptg/ptg_format.hpp"
#include "ptg/structure.hpp"
#include "ptg/switching.hpp"
#include "ptg/target.hpp"

namespace ptg {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string edge_name(const Embedding& emb, int e) {
  return emb.id(emb.edge(e).u) + "-" + emb.id(emb.edge(e).v);
}

std::string vertex_list(const Embedding& emb, const std::vector<int>& vertices) {
  std::string out;
  for (int v : vertices) {
    if (!out.empty()) out += " ";
    out += emb.id(v);
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unchecked: return "unchecked";
  }
  return "?";
}

struct Options {
  std::string file;
  std::vector<std::string> positional;
  std::optional<long> budget;
  std::optional<int> conf;
  std::optional<int> region;
  std::optional<int> cls;
};

Options parse_options(const std::vector<std::string>& args, std::size_t from) {
  Options opt;
  auto number = [](const std::string& flag, const std::string& value) {
    try {
      std::size_t pos = 0;
      long parsed = std::stol(value, &pos);
      if (pos != value.size()) throw std::invalid_argument("trailing");
      return parsed;
    } catch (const std::exception&) {
      throw UsageError("flag " + flag + " needs an integer, got '" + value + "'");
    }
  };
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError("flag " + arg + " needs a value");
      return args[++i];
    };
    if (arg == "--budget") opt.budget = number(arg, next());
    else if (arg == "--conf") opt.conf = static_cast<int>(number(arg, next()));
    else if (arg == "--region") opt.region = static_cast<int>(number(arg, next()));
    else if (arg == "--class") opt.cls = static_cast<int>(number(arg, next()));
    else if (arg.rfind("--", 0) == 0) throw UsageError("unknown flag " + arg);
    else if (opt.file.empty()) opt.file = arg;
    else opt.positional.push_back(arg);
  }
  if (opt.file.empty()) throw UsageError("missing FILE argument");
  return opt;
}

SolveOptions solve_options(const Options& opt) {
  SolveOptions options;
  if (const char* env = std::getenv("PTG_BUDGET")) {
    std::string value(env);
    std::size_t pos = 0;
    long parsed = 0;
    try {
      parsed = std::stol(value, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != value.size() || parsed < 1)
      throw UsageError("PTG_BUDGET must be a positive integer");
    options.budget = static_cast<std::uint64_t>(parsed);
  }
  if (opt.budget) {
    if (*opt.budget < 0) throw UsageError("--budget must be >= 0");
    options.budget = static_cast<std::uint64_t>(*opt.budget);
  }
  return options;
}

Target load_target(const Options& opt, std::ostream& err) {
  auto doc = parse_ptg(read_file(opt.file));
  auto [emb, m] = build_from_document(doc);
  ValidationReport report = validate_target(emb, doc.d, m);
  if (!report.ok()) {
    err << "error: invalid target: " << report.summary(emb) << "\n";
    throw UsageError("");
  }
  return Target{std::move(emb), doc.d, std::move(m)};
}

SwitchSpec path_spec(const Options& opt, const Embedding& emb) {
  if (opt.positional.size() != 4)
    throw UsageError("expected four path vertices x u v y");
  SwitchSpec spec;
  int* slots[4] = {&spec.x, &spec.u, &spec.v, &spec.y};
  for (int i = 0; i < 4; ++i) {
    auto idx = emb.index_of(opt.positional[i]);
    if (!idx) throw UsageError("unknown vertex '" + opt.positional[i] + "'");
    *slots[i] = *idx;
  }
  spec.chord_region = opt.region;
  return spec;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  auto doc = parse_ptg(read_file(opt.file));
  auto [emb, m] = build_from_document(doc);
  ValidationReport report = validate_target(emb, doc.d, m);
  out << "vertices: " << emb.vertex_count() << "\n";
  out << "edges: " << emb.edge_count() << "\n";
  out << "d: " << doc.d << "\n";
  out << "nonnegative: " << verdict_name(report.nonnegative) << "\n";
  out << "degree: " << verdict_name(report.degree) << "\n";
  out << "boundary: " << verdict_name(report.boundary) << "\n";
  out << "odd_cut: " << verdict_name(report.odd_cut) << "\n";
  int zero_edges = 0;
  for (int v : m)
    if (v == 0) ++zero_edges;
  out << "zero_edges: " << zero_edges << "\n";
  if (report.ok()) {
    out << "valid: yes\n";
    return kExitHolds;
  }
  if (report.unchecked() && report.degree == Verdict::Pass &&
      report.nonnegative == Verdict::Pass && report.boundary == Verdict::Pass) {
    out << "valid: unknown\n";
    return kExitUnknown;
  }
  out << "witness: " << report.summary(emb) << "\n";
  out << "valid: no\n";
  return kExitFails;
}

int cmd_score(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  ScoreSequence score = score_sequence(t);
  out << "vertices: " << t.emb.vertex_count() << "\n";
  out << "edges: " << t.emb.edge_count() << "\n";
  out << "score:";
  for (long count : score.counts) out << " " << count;
  out << "\n";
  return kExitHolds;
}

int cmd_colour(const Options& opt, std::ostream& out) {
  auto doc = parse_ptg(read_file(opt.file));
  LooseGraph loose = build_multigraph_from_document(doc);
  SolveResult result = solve_colouring(loose.graph, doc.d, solve_options(opt));
  switch (result.status) {
    case SolveStatus::Colourable: {
      out << "colourable: yes\n";
      const auto& matchings = result.colouring->matchings;
      for (std::size_t i = 0; i < matchings.size(); ++i) {
        out << "matching " << (i + 1) << ":";
        for (int e : matchings[i])
          out << " " << loose.ids[loose.graph.edges[e].u] << "-"
              << loose.ids[loose.graph.edges[e].v];
        out << "\n";
      }
      return kExitHolds;
    }
    case SolveStatus::NotColourable:
      out << "colourable: no\n";
      out << "reason: " << result.note << "\n";
      return kExitFails;
    case SolveStatus::Unknown:
      out << "colourable: unknown\n";
      out << "reason: " << result.note << "\n";
      return kExitUnknown;
  }
  return kExitError;
}

int cmd_scan(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  if (opt.conf && (*opt.conf < 1 || *opt.conf > 16))
    throw UsageError("--conf must be 1..16");
  int from = opt.conf.value_or(1);
  int to = opt.conf.value_or(16);
  for (int k = from; k <= to; ++k) {
    auto matches = detect_conf(t, k);
    out << "conf" << k << ": " << matches.size() << "\n";
    for (const auto& match : matches)
      out << "match: " << describe_conf(t.emb, match) << "\n";
  }
  return kExitHolds;
}

int cmd_discharge(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  DischargeReport report = discharge(t);
  out << "regions: " << report.regions.size() << "\n";
  out << "sum_alpha: " << report.sum_alpha << "\n";
  out << "sum_beta: " << report.sum_beta << "\n";
  out << "overcharged: " << report.overcharged.size() << "\n";
  for (const RegionCharge& rc : report.regions) {
    const Region& region = t.emb.region(rc.region);
    std::string boundary;
    for (const DirectedEdge& de : region.boundary) {
      if (!boundary.empty()) boundary += "-";
      boundary += t.emb.id(de.from);
    }
    out << "region " << rc.region << ": length=" << region.length()
        << " boundary=" << boundary << " class=" << to_string(rc.kind)
        << " alpha=" << rc.alpha << " beta=" << rc.beta << " charge=" << rc.charge()
        << (rc.charge() > 0 ? " overcharged=yes" : " overcharged=no") << "\n";
  }
  for (const EdgeBeta& eb : report.edges) {
    out << "edge " << edge_name(t.emb, eb.edge) << ": rule=" << to_string(eb.rule)
        << " r" << eb.region_a << "=" << eb.beta_a << " r" << eb.region_b << "="
        << eb.beta_b << "\n";
  }
  return kExitHolds;
}

int cmd_prime(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  if (t.d != 7) {
    err << "error: prime is defined for 7-targets\n";
    return kExitError;
  }
  PrimeVerdict verdict = is_prime(t);
  switch (verdict.status) {
    case PrimeStatus::Prime:
      out << "prime: yes\n";
      return kExitHolds;
    case PrimeStatus::Unknown:
      out << "prime: unknown\n";
      out << "reason: " << verdict.failed_condition << "\n";
      return kExitUnknown;
    case PrimeStatus::NotPrime:
      out << "prime: no\n";
      if (verdict.witness_conf) {
        out << "witness: " << describe_conf(t.emb, *verdict.witness_conf) << "\n";
      } else if (verdict.witness_cut) {
        out << "witness: " << verdict.failed_condition << " at {"
            << vertex_list(t.emb, verdict.witness_cut->vertices)
            << "} value=" << verdict.witness_cut->value << "\n";
      } else if (verdict.witness_edge) {
        out << "witness: " << verdict.failed_condition << " at edge "
            << edge_name(t.emb, *verdict.witness_edge) << "\n";
      } else {
        out << "witness: " << verdict.failed_condition << "\n";
      }
      return kExitFails;
  }
  return kExitError;
}

int cmd_switch(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  SwitchSpec spec = path_spec(opt, t.emb);
  std::optional<SwitchResult> switched;
  try {
    switched = switch_on_path(t, spec);
  } catch (const GraphError& e) {
    out << "switch: illegal\n";
    out << "witness: " << e.what() << "\n";
    return kExitFails;
  }
  const SwitchResult& result = *switched;
  out << "# switched on " << t.emb.id(spec.x) << "-" << t.emb.id(spec.u) << "-"
      << t.emb.id(spec.v) << "-" << t.emb.id(spec.y) << "\n";
  out << "# fresh chord: " << (result.fresh_chord ? "yes" : "no") << "\n";
  if (result.revalidation.ok()) {
    out << "# revalidation: pass\n";
  } else if (result.revalidation.odd_cut == Verdict::Fail) {
    out << "# warning: odd-cut axiom fails in the switched target: "
        << result.revalidation.summary(result.target.emb) << "\n";
  } else {
    out << "# warning: odd-cut axiom unchecked\n";
  }
  out << emit_ptg(result.target);
  return kExitHolds;
}

int cmd_cuts(const Options& opt, std::ostream& out, std::ostream& err) {
  Target t = load_target(opt, err);
  SwitchSpec spec = path_spec(opt, t.emb);
  if (!opt.cls) throw UsageError("cuts needs --class I");
  SwitchResult switched = switch_on_path(t, spec);
  out << "switched: " << t.emb.id(spec.x) << "-" << t.emb.id(spec.u) << "-"
      << t.emb.id(spec.v) << "-" << t.emb.id(spec.y) << "\n";
  out << "fresh_chord: " << (switched.fresh_chord ? "yes" : "no") << "\n";
  SolveResult solved = solve_colouring(switched.target, solve_options(opt));
  if (solved.status == SolveStatus::Unknown) {
    out << "colourable: unknown\n";
    return kExitUnknown;
  }
  if (solved.status == SolveStatus::NotColourable) {
    out << "colourable: no\n";
    out << "cut: none\n";
    return kExitFails;
  }
  out << "colourable: yes\n";
  int d = static_cast<int>(solved.colouring->matchings.size());
  if (*opt.cls < 1 || *opt.cls > d) throw UsageError("--class must be 1.." + std::to_string(d));
  int cls = *opt.cls - 1;
  out << "class: " << *opt.cls << "\n";
  CutSearchResult search = find_guenin_cut(switched, *solved.colouring, spec, cls);
  switch (search.status) {
    case CutSearchStatus::CapExceeded:
      out << "cut: unknown\n";
      return kExitUnknown;
    case CutSearchStatus::None:
      out << "cut: none\n";
      return kExitFails;
    case CutSearchStatus::Found: {
      const Embedding& emb = switched.target.emb;
      out << "cut: found\n";
      out << "X: " << vertex_list(emb, search.cut->odd_set) << "\n";
      out << "Q:";
      for (int e : search.cut->cut) out << " " << edge_name(emb, e);
      out << "\n";
      out << "intersections:";
      for (int count : search.cut->intersections) out << " " << count;
      out << "\n";
      return kExitHolds;
    }
  }
  return kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "usage: ptg <validate|score|colour|scan|discharge|prime|switch|cuts> FILE ...\n";
    return kExitError;
  }
  const std::string& command = args[0];
  try {
    Options opt = parse_options(args, 1);
    if (command == "validate") return cmd_validate(opt, out);
    if (command == "score") return cmd_score(opt, out, err);
    if (command == "colour") return cmd_colour(opt, out);
    if (command == "scan") return cmd_scan(opt, out, err);
    if (command == "discharge") return cmd_discharge(opt, out, err);
    if (command == "prime") return cmd_prime(opt, out, err);
    if (command == "switch") return cmd_switch(opt, out, err);
    if (command == "cuts") return cmd_cuts(opt, out, err);
    err << "error: unknown command '" << command << "'\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const UsageError& e) {
    if (e.what()[0] != '\0') err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ptg
