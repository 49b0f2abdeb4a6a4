#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "aspectra/hypergraph.hpp"

namespace aspectra {

/// {"format": 1, "k": ..., "n": ..., "edges": [[...], ...]} with edges in
/// the normalized sorted order. Parsing tolerates a missing "format" field
/// and unsorted input edges; emit(parse(emit(h))) == emit(h).
nlohmann::json hypergraph_to_json(const Hypergraph& h);

Hypergraph hypergraph_from_json(const nlohmann::json& j);

Hypergraph load_hypergraph(const std::filesystem::path& file);

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& file);

/// Serialized with 2-space indentation and a trailing newline; byte-stable
/// for identical inputs.
std::string dump_json(const nlohmann::json& j);

}  // namespace aspectra
