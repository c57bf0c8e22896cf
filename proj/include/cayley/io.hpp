#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cayley/count.hpp"
#include "cayley/graph.hpp"

namespace cayley {

using json = nlohmann::ordered_json;

json group_to_json(const GroupSpec& g);
/// {"group":{"factors":[...]}, "generators":[[...],...]}
json graph_to_json(const CayleyGraph& g, const json& provenance = nullptr);
/// {"kind":"explicit","vertex_count":n,"edges":[[u,v],...],"parts":{...}}
json graph_to_json(const Graph& g, const json& provenance = nullptr);

struct LoadedGraph {
  Graph graph;
  std::optional<CayleyGraph> cayley;
  json provenance;
};
/// InvalidInput on malformed documents.
LoadedGraph graph_from_json(const json& doc);

/// Plain edge list: "n m" header, then one "u v" line per edge.
std::string edge_list(const Graph& g);

/// CSV with header a,g,t,count.
std::string table_csv(const ContainerTable& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cayley
