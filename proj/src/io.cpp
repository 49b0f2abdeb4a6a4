#include "aspectra/io.hpp"

#include <fstream>

namespace aspectra {

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["format"] = 1;
  j["k"] = h.k();
  j["n"] = h.vertex_count();
  j["edges"] = h.edges();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
    fail(Errc::InvalidParameter, "hypergraph JSON needs k, n and edges fields");
  int k = j.at("k").get<int>();
  int n = j.at("n").get<int>();
  auto edges = j.at("edges").get<std::vector<Edge>>();
  return Hypergraph::build(k, n, std::move(edges));
}

Hypergraph load_hypergraph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(Errc::InvalidParameter, "cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidParameter, "bad JSON in " + file.string() + ": " + e.what());
  }
  return hypergraph_from_json(j);
}

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) fail(Errc::InvalidParameter, "cannot write " + file.string());
  out << dump_json(hypergraph_to_json(h));
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace aspectra
