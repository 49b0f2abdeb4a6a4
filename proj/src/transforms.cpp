#include "aspectra/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace aspectra {

nlohmann::json MoveRecord::to_json() const {
  const char* kind_name = kind == Kind::EdgeMove     ? "edge-move"
                          : kind == Kind::TwoSwitch ? "two-switch"
                                                    : "operation-I";
  nlohmann::json j{{"kind", kind_name}, {"removed", removed}, {"added", added}};
  if (kind != Kind::TwoSwitch) {
    j["pivots"] = pivots;
    j["receiver"] = receiver;
  }
  return j;
}

namespace {

Edge rewritten_edge(const Edge& e, Vertex drop, Vertex gain) {
  Edge out;
  out.reserve(e.size());
  for (Vertex v : e)
    if (v != drop) out.push_back(v);
  out.push_back(gain);
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph rebuild(const Hypergraph& g, const std::vector<int>& removed_indices,
                   const std::vector<Edge>& added) {
  std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
  for (int i : removed_indices) drop[static_cast<std::size_t>(i)] = true;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (int i = 0; i < g.edge_count(); ++i)
    if (!drop[static_cast<std::size_t>(i)]) edges.push_back(g.edge(i));
  for (const Edge& e : added) edges.push_back(e);
  return Hypergraph::build(g.k(), g.vertex_count(), std::move(edges));
}

}  // namespace

std::pair<Hypergraph, MoveRecord> move_edges(const Hypergraph& g, Vertex receiver,
                                             std::span<const std::pair<int, Vertex>> moves) {
  if (receiver < 0 || receiver >= g.vertex_count())
    fail(Errc::VertexOutOfRange, "receiver outside the hypergraph");
  MoveRecord rec;
  rec.kind = MoveRecord::Kind::EdgeMove;
  rec.receiver = receiver;
  std::vector<int> removed_indices;
  std::set<Edge> fresh;
  for (auto [ei, pivot] : moves) {
    if (ei < 0 || ei >= g.edge_count()) fail(Errc::InvalidParameter, "edge index out of range");
    const Edge& e = g.edge(ei);
    if (std::binary_search(e.begin(), e.end(), receiver))
      fail(Errc::PivotInEdge, "receiver already lies in a moved edge");
    if (!std::binary_search(e.begin(), e.end(), pivot))
      fail(Errc::MissingVertex, "pivot vertex not in the edge");
    Edge moved = rewritten_edge(e, pivot, receiver);
    if (g.contains_edge(moved) || !fresh.insert(moved).second)
      fail(Errc::EdgeCollision, "rewritten edge already present");
    removed_indices.push_back(ei);
    rec.removed.push_back(e);
    rec.added.push_back(moved);
    rec.pivots.push_back(pivot);
  }
  std::sort(removed_indices.begin(), removed_indices.end());
  if (std::adjacent_find(removed_indices.begin(), removed_indices.end()) != removed_indices.end())
    fail(Errc::InvalidParameter, "the same edge moved twice");
  return {rebuild(g, removed_indices, rec.added), rec};
}

std::pair<Hypergraph, MoveRecord> two_switch(const Hypergraph& g, int e, int f,
                                             std::vector<Vertex> u1, std::vector<Vertex> v1) {
  if (e < 0 || e >= g.edge_count() || f < 0 || f >= g.edge_count() || e == f)
    fail(Errc::InvalidParameter, "two_switch needs two distinct edge indices");
  std::sort(u1.begin(), u1.end());
  std::sort(v1.begin(), v1.end());
  if (u1.size() != v1.size() || u1.empty() || static_cast<int>(u1.size()) > g.k() - 1)
    fail(Errc::SizeMismatch, "blocks must satisfy 1 <= |U1| = |V1| <= k-1");
  const Edge& ee = g.edge(e);
  const Edge& fe = g.edge(f);
  if (!std::includes(ee.begin(), ee.end(), u1.begin(), u1.end()) ||
      std::adjacent_find(u1.begin(), u1.end()) != u1.end())
    fail(Errc::InvalidParameter, "U1 is not a subset of e");
  if (!std::includes(fe.begin(), fe.end(), v1.begin(), v1.end()) ||
      std::adjacent_find(v1.begin(), v1.end()) != v1.end())
    fail(Errc::InvalidParameter, "V1 is not a subset of f");
  Edge u2, v2;
  std::set_difference(ee.begin(), ee.end(), u1.begin(), u1.end(), std::back_inserter(u2));
  std::set_difference(fe.begin(), fe.end(), v1.begin(), v1.end(), std::back_inserter(v2));
  Edge e_new, f_new;
  std::set_union(u1.begin(), u1.end(), v2.begin(), v2.end(), std::back_inserter(e_new));
  std::set_union(v1.begin(), v1.end(), u2.begin(), u2.end(), std::back_inserter(f_new));
  if (static_cast<int>(e_new.size()) != g.k() || static_cast<int>(f_new.size()) != g.k())
    fail(Errc::NotKSet, "swapped blocks overlap; replacement is not a k-set");
  if (g.contains_edge(e_new) || g.contains_edge(f_new) || e_new == f_new)
    fail(Errc::EdgeCollision, "replacement edge already present");

  MoveRecord rec;
  rec.kind = MoveRecord::Kind::TwoSwitch;
  rec.removed = {ee, fe};
  rec.added = {e_new, f_new};
  Hypergraph out = rebuild(g, {e, f}, rec.added);
  if (out.degrees() != g.degrees())
    throw std::logic_error("two_switch changed a vertex degree");
  return {out, rec};
}

std::pair<Hypergraph, MoveRecord> operation_I(const Hypergraph& g, int e, Vertex v1, Vertex v2) {
  if (g.k() < 3) fail(Errc::InvalidParameter, "Operation I needs k >= 3");
  if (e < 0 || e >= g.edge_count()) fail(Errc::InvalidParameter, "edge index out of range");
  const Edge& edge = g.edge(e);
  std::vector<Vertex> heavy;
  for (Vertex v : edge)
    if (g.degree(v) >= 2) heavy.push_back(v);
  if (static_cast<int>(heavy.size()) < 3)
    fail(Errc::NotApplicable, "edge has fewer than three vertices of degree >= 2");
  auto is_heavy = [&](Vertex v) { return std::find(heavy.begin(), heavy.end(), v) != heavy.end(); };
  if (v1 == v2 || !is_heavy(v1) || !is_heavy(v2))
    fail(Errc::InvalidParameter, "kept vertices must be distinct degree->=2 vertices of e");

  std::vector<std::pair<int, Vertex>> moves;
  for (Vertex w : heavy) {
    if (w == v1 || w == v2) continue;
    for (int ei : g.incident_edges(w))
      if (ei != e) moves.emplace_back(ei, w);
  }
  auto [out, rec] = move_edges(g, v1, moves);
  rec.kind = MoveRecord::Kind::OperationI;
  return {std::move(out), std::move(rec)};
}

}  // namespace aspectra
