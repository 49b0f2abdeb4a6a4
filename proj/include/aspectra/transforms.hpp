#pragma once

#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aspectra/hypergraph.hpp"

namespace aspectra {

/// What a structural perturbation removed and added, so verification reports
/// can cite the exact premises. Transforms never mutate their input.
struct MoveRecord {
  enum class Kind { EdgeMove, TwoSwitch, OperationI };

  Kind kind = Kind::EdgeMove;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::vector<Vertex> pivots;   // EdgeMove/OperationI: vertices edges moved away from
  Vertex receiver = -1;         // EdgeMove/OperationI: vertex edges moved onto

  nlohmann::json to_json() const;
};

/// One move per entry: edge `moves[i].first` loses vertex `moves[i].second`
/// and gains `receiver`. The receiver must lie outside each moved edge, the
/// lost vertex inside, and no rewritten edge may collide with an existing or
/// another rewritten edge. Connectivity of the result is the caller's
/// concern.
std::pair<Hypergraph, MoveRecord> move_edges(const Hypergraph& g, Vertex receiver,
                                             std::span<const std::pair<int, Vertex>> moves);

/// Swaps the blocks u1 (of edge e) and v1 (of edge f):
/// e' = u1 ∪ (f \ v1), f' = v1 ∪ (e \ u1). Requires 1 <= |u1| = |v1| <= k-1,
/// both replacement edges to be k-sets not already present. Every vertex
/// degree is preserved.
std::pair<Hypergraph, MoveRecord> two_switch(const Hypergraph& g, int e, int f,
                                             std::vector<Vertex> u1, std::vector<Vertex> v1);

/// For an edge e of a linear hypergraph with at least three vertices of
/// degree >= 2: keeps v1 and v2, and re-pivots every other incident edge of
/// the remaining degree->=2 vertices of e onto v1.
std::pair<Hypergraph, MoveRecord> operation_I(const Hypergraph& g, int e, Vertex v1, Vertex v2);

}  // namespace aspectra
