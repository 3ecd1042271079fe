#include "balforest/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "balforest/errors.hpp"

namespace balforest::io {
namespace {

std::string next_content_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw InvalidInput(std::string("unexpected end of input while reading ") + what);
}

}  // namespace

void write_colouring(std::ostream& out, const ColouredCompleteGraph& g) {
  out << g.n() << '\n';
  std::string row;
  for (Vertex i = 1; i < g.n(); ++i) {
    row.clear();
    for (Vertex j = 0; j < i; ++j) row.push_back(g.is_red(i, j) ? 'R' : 'B');
    out << row << '\n';
  }
}

ColouredCompleteGraph read_colouring(std::istream& in) {
  const std::string header = next_content_line(in, "colouring header");
  int n = 0;
  {
    std::istringstream hs(header);
    if (!(hs >> n) || n < 2) throw InvalidInput("colouring header must be an integer n >= 2");
  }
  ColouredCompleteGraph::Builder builder(n);
  for (Vertex i = 1; i < n; ++i) {
    const std::string row = next_content_line(in, "colouring row");
    if (static_cast<int>(row.size()) != i) {
      throw InvalidInput("colouring row " + std::to_string(i) + " must have " + std::to_string(i) + " characters");
    }
    for (Vertex j = 0; j < i; ++j) {
      switch (row[static_cast<std::size_t>(j)]) {
        case 'R':
          builder.set(i, j, Colour::Red);
          break;
        case 'B':
          break;
        default:
          throw InvalidInput("colouring rows may only contain R and B");
      }
    }
  }
  return builder.build();
}

void write_forest(std::ostream& out, const Forest& forest) {
  out << forest.n() << ' ' << forest.edge_count() << '\n';
  for (const auto& [u, v] : forest.edges()) out << u << ' ' << v << '\n';
}

Forest read_forest(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw InvalidInput("forest header must be 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    Edge e{};
    if (!(in >> e.u >> e.v)) throw InvalidInput("forest file ends after " + std::to_string(k) + " edges");
    edges.push_back(e);
  }
  return Forest(n, std::move(edges));
}

nlohmann::json embedding_to_json(const Embedding& f) {
  return {{"map", std::vector<Vertex>(f.map().begin(), f.map().end())}, {"sum", f.sum()}};
}

Embedding embedding_from_json(const nlohmann::json& j, const Forest& forest, const ColouredCompleteGraph& g) {
  if (!j.is_object() || !j.contains("map")) throw InvalidInput("embedding JSON needs a \"map\" array");
  Embedding f(j.at("map").get<std::vector<Vertex>>(), forest, g);
  if (j.contains("sum") && j.at("sum").get<int>() != f.sum()) {
    throw InvalidInput("embedding JSON sum " + j.at("sum").dump() + " disagrees with recomputed sum " +
                       std::to_string(f.sum()));
  }
  return f;
}

nlohmann::json partial_to_json(const PartialEmbedding& p) {
  nlohmann::json map = nlohmann::json::array();
  for (Vertex v = 0; v < p.forest_size(); ++v) {
    if (p.contains(v)) {
      map.push_back(p.image(v));
    } else {
      map.push_back(nullptr);
    }
  }
  return {{"map", map}};
}

PartialEmbedding partial_from_json(const nlohmann::json& j, int host_size) {
  if (!j.is_object() || !j.contains("map") || !j.at("map").is_array()) {
    throw InvalidInput("partial embedding JSON needs a \"map\" array");
  }
  std::vector<Vertex> map;
  for (const auto& entry : j.at("map")) {
    map.push_back(entry.is_null() ? PartialEmbedding::kUnassigned : entry.get<Vertex>());
  }
  return PartialEmbedding(std::move(map), host_size);
}

ColouredCompleteGraph load_colouring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open colouring file " + path);
  return read_colouring(in);
}

Forest load_forest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open forest file " + path);
  return read_forest(in);
}

void save_colouring(const std::string& path, const ColouredCompleteGraph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_colouring(out, g);
}

void save_forest(const std::string& path, const Forest& forest) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_forest(out, forest);
}

}  // namespace balforest::io
