#include "aspectra/families.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace aspectra {

namespace {

void check_tree(const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) fail(Errc::NotATree, "tree needs at least one edge");
  int t = 0;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a == b) fail(Errc::NotATree, "bad 2-graph edge");
    t = std::max({t, a + 1, b + 1});
  }
  if (static_cast<int>(edges.size()) != t - 1)
    fail(Errc::NotATree, "edge count does not match a tree on dense labels");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        q.push(u);
      }
  }
  if (reached != t) fail(Errc::NotATree, "2-graph is not connected");
}

// Tree diameter via double BFS; valid because supertree metrics are tree
// metrics on the incidence tree.
int supertree_diameter(const Hypergraph& h) {
  auto far = [&](Vertex s) {
    std::vector<int> dist(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<bool> edge_seen(static_cast<std::size_t>(h.edge_count()), false);
    std::queue<Vertex> q;
    q.push(s);
    dist[static_cast<std::size_t>(s)] = 0;
    Vertex best = s;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)] ||
          (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(best)] && v < best))
        best = v;
      for (int ei : h.incident_edges(v)) {
        if (edge_seen[static_cast<std::size_t>(ei)]) continue;
        edge_seen[static_cast<std::size_t>(ei)] = true;
        for (Vertex u : h.edge(ei))
          if (dist[static_cast<std::size_t>(u)] == -1) {
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push(u);
          }
      }
    }
    return std::pair<Vertex, int>{best, dist[static_cast<std::size_t>(best)]};
  };
  auto [u, du] = far(0);
  auto [w, dw] = far(u);
  (void)w;
  return std::max(du, dw);
}

}  // namespace

Hypergraph power_hypergraph(const std::vector<std::pair<int, int>>& tree_edges, int k) {
  if (k < 2) fail(Errc::InvalidParameter, "k must be >= 2");
  check_tree(tree_edges);
  int t = 0;
  for (auto [a, b] : tree_edges) t = std::max({t, a + 1, b + 1});
  std::vector<Edge> edges;
  edges.reserve(tree_edges.size());
  int next = t;
  for (auto [a, b] : tree_edges) {
    Edge e{a, b};
    for (int j = 0; j < k - 2; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k, next, std::move(edges));
}

Hypergraph loose_path(int k, int d) {
  if (d < 1 || k < 2) fail(Errc::InvalidParameter, "loose path needs d >= 1, k >= 2");
  std::vector<std::pair<int, int>> tree;
  for (int i = 0; i < d; ++i) tree.emplace_back(i, i + 1);
  return power_hypergraph(tree, k);
}

Hypergraph star(int k, int m) {
  if (m < 1) fail(Errc::InvalidParameter, "star needs m >= 1");
  std::vector<std::pair<int, int>> tree;
  for (int i = 0; i < m; ++i) tree.emplace_back(0, i + 1);
  return power_hypergraph(tree, k);
}

Hypergraph double_star(int k, int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) fail(Errc::InvalidParameter, "double star needs a,b >= 0, a+b >= 1");
  std::vector<std::pair<int, int>> tree;
  tree.emplace_back(0, 1);
  for (int i = 0; i < a; ++i) tree.emplace_back(0, 2 + i);
  for (int j = 0; j < b; ++j) tree.emplace_back(1, 2 + a + j);
  return power_hypergraph(tree, k);
}

Hypergraph t_tree(int k, int s, int t, int a, int b) {
  if (s < 0 || t < 0 || a < 0 || b < 0) fail(Errc::InvalidParameter, "t_tree parameters must be >= 0");
  std::vector<std::pair<int, int>> tree;
  tree.emplace_back(0, 1);  // u = 0 (degree s+1), v = 1 (degree t+1 before paths)
  int next = 2;
  for (int i = 0; i < s; ++i) tree.emplace_back(0, next++);
  for (int j = 0; j < t; ++j) tree.emplace_back(1, next++);
  int anchor = 1;
  for (int i = 0; i < a; ++i) {
    tree.emplace_back(anchor, next);
    anchor = next++;
  }
  anchor = 1;
  for (int j = 0; j < b; ++j) {
    tree.emplace_back(anchor, next);
    anchor = next++;
  }
  return power_hypergraph(tree, k);
}

namespace {

Hypergraph nc_candidate(int k, int m, int d, int s, int t) {
  Hypergraph h = t_tree(k, s, t, d / 2, d - d / 2);
  if (h.edge_count() != m) fail(Errc::InvalidParameter, "construction lost edges");
  if (supertree_diameter(h) != d) fail(Errc::InvalidParameter, "construction has wrong diameter");
  if (is_caterpillar(h)) fail(Errc::InvalidParameter, "construction is a caterpillar");
  return h;
}

}  // namespace

Hypergraph h1(int k, int m, int d) {
  if (m < 6 || d < 4 || d > m - 2)
    fail(Errc::InvalidParameter, "h1 needs m >= 6 and 4 <= d <= m-2");
  return nc_candidate(k, m, d, 1, m - d - 2);
}

Hypergraph h2(int k, int m, int d) {
  if (m < 6 || d < 4 || d > m - 2)
    fail(Errc::InvalidParameter, "h2 needs m >= 6 and 4 <= d <= m-2");
  return nc_candidate(k, m, d, m - d - 1, 0);
}

Hypergraph construct(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::LoosePath: return loose_path(spec.k, spec.d);
    case FamilySpec::Kind::PowerOfTree: return power_hypergraph(spec.tree_edges, spec.k);
    case FamilySpec::Kind::Star: return star(spec.k, spec.m);
    case FamilySpec::Kind::DoubleStar: return double_star(spec.k, spec.a, spec.b);
    case FamilySpec::Kind::TTree: return t_tree(spec.k, spec.s, spec.t, spec.a, spec.b);
    case FamilySpec::Kind::H1: return h1(spec.k, spec.m, spec.d);
    case FamilySpec::Kind::H2: return h2(spec.k, spec.m, spec.d);
  }
  fail(Errc::InvalidParameter, "unknown family kind");
}

AttachedPaths attach_pendant_paths_traced(const Hypergraph& g, Vertex u, int p, Vertex v, int q) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    fail(Errc::VertexOutOfRange, "attachment vertex outside the hypergraph");
  if (p < 0 || q < 0) fail(Errc::InvalidParameter, "path lengths must be >= 0");
  const int k = g.k();
  std::vector<Edge> edges = g.edges();
  int next = g.vertex_count();
  auto grow = [&](Vertex anchor, int len) {
    std::vector<Vertex> junctions{anchor};
    std::vector<Edge> raw;
    for (int i = 0; i < len; ++i) {
      // The anchor label is always below the fresh ones, so e is sorted.
      Edge e{junctions.back()};
      for (int j = 0; j < k - 1; ++j) e.push_back(next++);
      junctions.push_back(e.back());
      raw.push_back(e);
      edges.push_back(e);
    }
    return std::pair<std::vector<Vertex>, std::vector<Edge>>{junctions, raw};
  };
  auto [ju, raw_u] = grow(u, p);
  auto [jv, raw_v] = grow(v, q);
  Hypergraph out = Hypergraph::build(k, next, std::move(edges));
  auto trace_of = [&](const std::vector<Vertex>& junctions, std::vector<Edge> raw) {
    PathTrace tr;
    tr.vertices = junctions;
    for (Edge& e : raw) {
      std::sort(e.begin(), e.end());
      tr.edges.push_back(out.find_edge(e));
    }
    return tr;
  };
  return AttachedPaths{out, trace_of(ju, raw_u), trace_of(jv, raw_v)};
}

Hypergraph attach_pendant_paths(const Hypergraph& g, Vertex u, int p, Vertex v, int q) {
  return attach_pendant_paths_traced(g, u, p, v, q).graph;
}

}  // namespace aspectra
