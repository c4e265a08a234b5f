// Copyright 2026 The GFL Authors
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

#include "gfl/graph_json.h"

#include <fstream>
#include <sstream>

#include "gfl/errors.h"
#include "json.hpp"

namespace gfl {

using nlohmann::json;

FiniteGraph ParseGraphJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedGraphError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) {
    throw MalformedGraphError("$", "expected an object with vertices/edges");
  }
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("vertices")) {
    const json& vs = doc.at("vertices");
    if (!vs.is_array()) throw MalformedGraphError("vertices", "expected array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_string()) {
        throw MalformedGraphError("vertices[" + std::to_string(i) + "]",
                                  "vertex id must be a string");
      }
      ids.push_back(vs[i].get<std::string>());
    }
  }
  if (doc.contains("edges")) {
    const json& es = doc.at("edges");
    if (!es.is_array()) throw MalformedGraphError("edges", "expected array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const json& e = es[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string()) {
        throw MalformedGraphError("edges[" + std::to_string(i) + "]",
                                  "edge must be a pair of vertex ids");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges") {
      throw MalformedGraphError(key, "unexpected key");
    }
  }
  return FiniteGraph::Build(std::move(ids), edges);
}

FiniteGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGraphJson(buffer.str());
  } catch (const MalformedGraphError& e) {
    throw MalformedGraphError(path + ": " + e.position(), e.reason());
  }
}

std::string GraphToJson(const FiniteGraph& g, int indent) {
  json doc;
  doc["vertices"] = g.ids();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  doc["edges"] = std::move(edges);
  return doc.dump(indent);
}

}  // namespace gfl
