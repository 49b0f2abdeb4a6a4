#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "aspectra/errors.hpp"

namespace aspectra {

using Vertex = int;
using Edge = std::vector<Vertex>;  // sorted ascending, exactly k distinct labels

/**
 * Immutable k-uniform hypergraph over dense vertex labels 0..n-1.
 *
 * Edges are stored sorted (each edge ascending, the edge list lexicographic),
 * so two builds from the same edge sets produce byte-identical objects.
 * All queries are pure; instances are safe to share across threads.
 */
class Hypergraph {
public:
  /// Validates and normalizes an edge list. Throws NonUniformEdge,
  /// DuplicateEdge or VertexOutOfRange.
  static Hypergraph build(int k, int n, std::vector<Edge> edges);

  int k() const noexcept { return k_; }
  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  int degree(Vertex v) const { return degree_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& degrees() const noexcept { return degree_; }

  /// Edge indices containing v, ascending.
  const std::vector<int>& incident_edges(Vertex v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  /// Index of the given (sorted) edge, or -1.
  int find_edge(const Edge& sorted_edge) const;
  bool contains_edge(const Edge& sorted_edge) const { return find_edge(sorted_edge) >= 0; }

  bool operator==(const Hypergraph& other) const {
    return k_ == other.k_ && n_ == other.n_ && edges_ == other.edges_;
  }

private:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int k_ = 2;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> incidence_;
};

/// Per-vertex degree data with pendant (d=1) and branching (d>=3) flags.
struct VertexStats {
  std::vector<int> degree;
  std::vector<bool> pendant;
  std::vector<bool> branching;
};

VertexStats vertex_stats(const Hypergraph& h);

/// Alternating vertex/edge walk v0 e1 v1 ... e_d v_d. For supertrees the
/// unique shortest path between two vertices is always of this form.
struct PathTrace {
  std::vector<Vertex> vertices;  // d+1 entries
  std::vector<int> edges;        // d entries (edge indices)

  int length() const noexcept { return static_cast<int>(edges.size()); }
};

enum class EdgeClass {
  Pendant,    // at most one vertex of degree >= 2
  Branching,  // at least three vertices of degree >= 2
  Other,      // exactly two vertices of degree >= 2
};

/// Isomorphism-invariant encoding of a supertree: equal keys iff isomorphic.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

bool is_connected(const Hypergraph& h);

/// Connected and Berge-acyclic; for connected linear hypergraphs this is
/// equivalent to n = m(k-1)+1, which is what we test.
bool is_supertree(const Hypergraph& h);

/// Minimum edge count over vertex-to-vertex walks between the sets.
/// Requires h connected and both sets nonempty.
int distance(const Hypergraph& h, const std::vector<Vertex>& from, const std::vector<Vertex>& to);

int distance(const Hypergraph& h, Vertex from, Vertex to);

/// Lexicographically smallest shortest path between two vertices
/// (vertex-label sequence first, then edge indices).
PathTrace path_between(const Hypergraph& h, Vertex from, Vertex to);

/// Maximum eccentricity in the edge-count metric plus one witnessing path.
/// Among all maximum-length shortest paths the witness minimizes the vertex
/// label sequence lexicographically.
std::pair<int, PathTrace> diameter_and_diametral_path(const Hypergraph& h);

std::vector<EdgeClass> classify_edges(const Hypergraph& h);

/// Removes all pendant edges simultaneously and reports whether the rest is
/// a loose path. The empty remainder counts as a loose path, so stars and
/// short paths qualify. Requires a supertree.
bool is_caterpillar(const Hypergraph& h);

/// Number of vertices of degree >= 2.
int count_non_pendant(const Hypergraph& h);

/// AHU-style canonical encoding of the incidence tree rooted at its center,
/// with vertex nodes and edge nodes tagged. Requires a supertree.
CanonicalKey canonical_key(const Hypergraph& h);

/// True when the edge set, in some order, satisfies |e_i ∩ e_j| = 1 for
/// |i-j| = 1 and 0 otherwise. Empty and singleton edge sets qualify.
bool is_loose_path_edge_set(const std::vector<Edge>& edges);

/// Endpoint degrees >= 3 and interior vertices have no edges outside the path.
bool is_internal_path(const Hypergraph& h, const PathTrace& trace);

/// First endpoint degree >= 3, every other path vertex has no edges outside.
bool is_pendant_path(const Hypergraph& h, const PathTrace& trace);

}  // namespace aspectra
