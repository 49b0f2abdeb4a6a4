#pragma once

#include <utility>
#include <vector>

#include "aspectra/hypergraph.hpp"

namespace aspectra {

/// Parametric description of a named family, mostly for CLI dispatch.
struct FamilySpec {
  enum class Kind { LoosePath, PowerOfTree, Star, DoubleStar, TTree, H1, H2 };

  Kind kind = Kind::LoosePath;
  int k = 3;
  int d = 0;  // path length / diameter
  int m = 0;  // edge count (star, h1, h2)
  int a = 0, b = 0;
  int s = 0, t = 0;
  std::vector<std::pair<int, int>> tree_edges;  // PowerOfTree only
};

/// Loose path with d edges: the k-th power of the ordinary path 0-1-...-d.
/// Consecutive edges share exactly one vertex.
Hypergraph loose_path(int k, int d);

/// k-th power of a 2-graph tree: every tree edge gains k-2 fresh vertices.
/// Original labels are kept; fresh vertices are appended per edge in input
/// order, so outputs are byte-stable.
Hypergraph power_hypergraph(const std::vector<std::pair<int, int>>& tree_edges, int k);

/// Hyperstar: k-th power of the star with m edges, center 0.
Hypergraph star(int k, int m);

/// k-th power of the double star S(a,b): a central edge {0,1} with a pendant
/// edges at 0 and b pendant edges at 1.
Hypergraph double_star(int k, int a, int b);

/// k-th power of T(s,t;a,b): the double star S(s,t) with two paths of lengths
/// a and b attached to the center of degree t+1. That center is vertex 1;
/// a or b may be 0, in which case the tree degenerates towards S(s,t).
Hypergraph t_tree(int k, int s, int t, int a, int b);

/// Largest non-caterpillar candidates with m edges and diameter d,
/// valid for m >= 6 and 4 <= d <= m-2.
Hypergraph h1(int k, int m, int d);
Hypergraph h2(int k, int m, int d);

Hypergraph construct(const FamilySpec& spec);

/// Attaches a pendant loose path of p edges at u and another of q edges at
/// v (u = v allowed; p or q may be 0). Fresh vertices are appended, u-side
/// path first.
Hypergraph attach_pendant_paths(const Hypergraph& g, Vertex u, int p, Vertex v, int q);

/// Same, but also reports both attached paths as traces into the result
/// (trace vertices are the consecutive junctions ending at a pendant tip).
struct AttachedPaths {
  Hypergraph graph;
  PathTrace at_u;  // p edges
  PathTrace at_v;  // q edges
};

AttachedPaths attach_pendant_paths_traced(const Hypergraph& g, Vertex u, int p, Vertex v, int q);

}  // namespace aspectra
