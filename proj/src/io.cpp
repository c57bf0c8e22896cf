#include "cayley/io.hpp"

#include <fstream>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

json group_to_json(const GroupSpec& g) { return json{{"factors", g.factors()}}; }

json graph_to_json(const CayleyGraph& g, const json& provenance) {
  json gens = json::array();
  for (int x : g.generators().ids()) gens.push_back(g.group().element(x).coords);
  json doc{{"group", group_to_json(g.group())}, {"generators", gens}};
  if (!provenance.is_null()) doc["provenance"] = provenance;
  return doc;
}

json graph_to_json(const Graph& g, const json& provenance) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json doc{{"kind", "explicit"}, {"vertex_count", g.vertex_count()}, {"edges", edges}};
  if (g.parts())
    doc["parts"] = {{"x", g.parts()->x.members()}, {"y", g.parts()->y.members()}};
  if (!provenance.is_null()) doc["provenance"] = provenance;
  return doc;
}

LoadedGraph graph_from_json(const json& doc) {
  LoadedGraph out;
  try {
    if (doc.contains("provenance")) out.provenance = doc.at("provenance");
    if (doc.contains("group")) {
      GroupSpec group =
          GroupSpec::with_coordinates(doc.at("group").at("factors").get<std::vector<int>>());
      std::vector<Element> elems;
      for (const auto& e : doc.at("generators"))
        elems.push_back(Element{e.is_array() ? e.get<std::vector<int>>()
                                             : std::vector<int>{e.get<int>()}});
      CayleyGraph cg = build_cayley(group, make_generators(group, elems));
      out.graph = cg.graph();
      out.cayley = std::move(cg);
      return out;
    }
    const int n = doc.at("vertex_count").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    out.graph = Graph::from_edges(n, edges);
    if (doc.contains("parts")) {
      Bipartition p{VertexSet::from_range(n, doc.at("parts").at("x").get<std::vector<int>>()),
                    VertexSet::from_range(n, doc.at("parts").at("y").get<std::vector<int>>())};
      out.graph.set_parts(std::move(p));
    } else {
      out.graph.detect_bipartition();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed graph document: ") + e.what());
  }
  return out;
}

std::string edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string table_csv(const ContainerTable& t) {
  std::ostringstream os;
  os << "a,g,t,count\n";
  for (const auto& [key, count] : t.entries)
    os << key.first << ',' << key.second << ',' << key.second - key.first << ','
       << to_decimal(count) << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace cayley
