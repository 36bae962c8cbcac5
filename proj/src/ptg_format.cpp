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

#include "ptg/ptg_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ptg {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& token, int line, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, token.column, std::string(what) + " is not an integer");
  }
  if (pos != token.text.size())
    throw ParseError(line, token.column, std::string(what) + " is not an integer");
  return value;
}

void check_id(const Token& token, int line) {
  for (char ch : token.text) {
    if (ch == '-' || ch == '#' || !std::isgraph(static_cast<unsigned char>(ch)))
      throw ParseError(line, token.column,
                       "vertex id '" + token.text + "' contains a forbidden character");
  }
}

}  // namespace

PtgDocument parse_ptg(std::string_view text) {
  PtgDocument doc;
  std::map<std::string, std::set<std::string>> listed;  // id -> neighbours
  std::map<std::string, int> vertex_line;
  std::set<std::pair<std::string, std::string>> edge_seen;
  int stage = 0;  // 0: expect header, 1: expect d, 2: records
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;

    if (stage == 0) {
      if (tokens.size() != 2 || tokens[0].text != "ptg")
        throw ParseError(line_no, tokens[0].column, "expected header 'ptg 1'");
      if (parse_int(tokens[1], line_no, "version") != 1)
        throw ParseError(line_no, tokens[1].column, "unsupported version");
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (tokens.size() != 2 || tokens[0].text != "d")
        throw ParseError(line_no, tokens[0].column, "expected 'd <positive integer>'");
      doc.d = parse_int(tokens[1], line_no, "d");
      if (doc.d < 1)
        throw ParseError(line_no, tokens[1].column, "d must be positive");
      stage = 2;
      continue;
    }
    if (tokens[0].text == "v") {
      if (tokens.size() < 2)
        throw ParseError(line_no, tokens[0].column, "vertex record needs an id");
      check_id(tokens[1], line_no);
      const std::string& id = tokens[1].text;
      if (vertex_line.count(id))
        throw ParseError(line_no, tokens[1].column, "duplicate vertex '" + id + "'");
      vertex_line[id] = line_no;
      std::vector<std::string> nbrs;
      std::set<std::string> seen;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        check_id(tokens[i], line_no);
        if (tokens[i].text == id)
          throw ParseError(line_no, tokens[i].column, "vertex lists itself");
        if (!seen.insert(tokens[i].text).second)
          throw ParseError(line_no, tokens[i].column,
                           "neighbour '" + tokens[i].text + "' repeated");
        nbrs.push_back(tokens[i].text);
      }
      listed[id] = seen;
      doc.rotations.emplace_back(id, std::move(nbrs));
      continue;
    }
    if (tokens[0].text == "e") {
      if (tokens.size() != 4)
        throw ParseError(line_no, tokens[0].column, "expected 'e <u> <v> <m>'");
      check_id(tokens[1], line_no);
      check_id(tokens[2], line_no);
      PtgDocument::EdgeRecord record;
      record.u = tokens[1].text;
      record.v = tokens[2].text;
      record.m = parse_int(tokens[3], line_no, "multiplicity");
      if (record.u == record.v)
        throw ParseError(line_no, tokens[2].column, "loop edges are not allowed");
      if (record.m < 0)
        throw ParseError(line_no, tokens[3].column, "multiplicity must be >= 0");
      auto key = std::minmax(record.u, record.v);
      if (!edge_seen.insert({key.first, key.second}).second)
        throw ParseError(line_no, tokens[1].column,
                         "duplicate edge " + key.first + "-" + key.second);
      doc.edges.push_back(std::move(record));
      continue;
    }
    throw ParseError(line_no, tokens[0].column,
                     "unknown record '" + tokens[0].text + "'");
  }
  if (stage < 2) throw ParseError(line_no, 1, "missing header or d record");

  for (const auto& record : doc.edges) {
    auto u_it = listed.find(record.u);
    auto v_it = listed.find(record.v);
    if (u_it == listed.end() || v_it == listed.end())
      throw ParseError(line_no, 1,
                       "edge " + record.u + "-" + record.v + " names an unknown vertex");
    if (!u_it->second.count(record.v) || !v_it->second.count(record.u))
      throw ParseError(line_no, 1, "edge " + record.u + "-" + record.v +
                                       " is not in both rotations");
  }
  std::set<std::pair<std::string, std::string>> rotation_pairs;
  for (const auto& [id, nbrs] : listed) {
    for (const auto& nbr : nbrs) {
      if (!listed.count(nbr))
        throw ParseError(vertex_line[id], 1,
                         "rotation of '" + id + "' lists unknown vertex '" + nbr + "'");
      auto key = std::minmax(id, nbr);
      rotation_pairs.insert({key.first, key.second});
    }
  }
  for (const auto& pair : rotation_pairs) {
    if (!edge_seen.count(pair))
      throw ParseError(line_no, 1,
                       "missing edge record for " + pair.first + "-" + pair.second);
  }
  return doc;
}

std::string emit_ptg(const PtgDocument& doc) {
  std::string out = "ptg 1\nd " + std::to_string(doc.d) + "\n";
  auto rotations = doc.rotations;
  std::sort(rotations.begin(), rotations.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [id, nbrs] : rotations) {
    out += "v " + id;
    if (!nbrs.empty()) {
      std::size_t least = 0;
      for (std::size_t i = 1; i < nbrs.size(); ++i)
        if (nbrs[i] < nbrs[least]) least = i;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        out += " " + nbrs[(least + i) % nbrs.size()];
    }
    out += "\n";
  }
  std::vector<PtgDocument::EdgeRecord> edges = doc.edges;
  for (auto& record : edges)
    if (record.v < record.u) std::swap(record.u, record.v);
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (const auto& record : edges)
    out += "e " + record.u + " " + record.v + " " + std::to_string(record.m) + "\n";
  return out;
}

std::string emit_ptg(const Target& t) {
  PtgDocument doc;
  doc.d = t.d;
  for (int v = 0; v < t.emb.vertex_count(); ++v) {
    std::vector<std::string> nbrs;
    for (int u : t.emb.rotation(v)) nbrs.push_back(t.emb.id(u));
    doc.rotations.emplace_back(t.emb.id(v), std::move(nbrs));
  }
  for (int e = 0; e < t.emb.edge_count(); ++e)
    doc.edges.push_back(
        {t.emb.id(t.emb.edge(e).u), t.emb.id(t.emb.edge(e).v), t.m[e]});
  return emit_ptg(doc);
}

std::pair<Embedding, std::vector<int>> build_from_document(const PtgDocument& doc) {
  RotationSystem system;
  system.rotations = doc.rotations;
  Embedding emb = Embedding::build(system);
  std::vector<int> m(emb.edge_count(), 0);
  for (const auto& record : doc.edges) {
    int u = *emb.index_of(record.u);
    int v = *emb.index_of(record.v);
    m[*emb.edge_id(u, v)] = record.m;
  }
  return {std::move(emb), std::move(m)};
}

LooseGraph build_multigraph_from_document(const PtgDocument& doc) {
  LooseGraph out;
  for (const auto& [id, nbrs] : doc.rotations) out.ids.push_back(id);
  std::sort(out.ids.begin(), out.ids.end());
  auto index_of = [&out](const std::string& id) {
    return static_cast<int>(std::lower_bound(out.ids.begin(), out.ids.end(), id) -
                            out.ids.begin());
  };
  out.graph.n = static_cast<int>(out.ids.size());
  std::vector<std::pair<Edge, int>> edges;
  for (const auto& record : doc.edges) {
    int u = index_of(record.u);
    int v = index_of(record.v);
    if (u > v) std::swap(u, v);
    edges.push_back({Edge{u, v}, record.m});
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [edge, m] : edges) {
    out.graph.edges.push_back(edge);
    out.graph.m.push_back(m);
  }
  return out;
}

}  // namespace ptg
