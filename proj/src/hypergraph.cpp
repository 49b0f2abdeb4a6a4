#include "aspectra/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>

namespace aspectra {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonUniformEdge: return "NonUniformEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotASupertree: return "NotASupertree";
    case Errc::NotATree: return "NotATree";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::PivotInEdge: return "PivotInEdge";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::EdgeCollision: return "EdgeCollision";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotKSet: return "NotKSet";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

Hypergraph Hypergraph::build(int k, int n, std::vector<Edge> edges) {
  if (k < 2) fail(Errc::InvalidParameter, "uniformity k must be >= 2");
  if (n < 1) fail(Errc::InvalidParameter, "vertex count must be >= 1");
  for (Edge& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k || std::adjacent_find(e.begin(), e.end()) != e.end())
      fail(Errc::NonUniformEdge, "edge is not a set of exactly k distinct vertices");
    if (e.front() < 0 || e.back() >= n)
      fail(Errc::VertexOutOfRange, "edge references a vertex outside 0..n-1");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::DuplicateEdge, "two edges are equal as sets");
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  degree_.assign(static_cast<std::size_t>(n_), 0);
  incidence_.assign(static_cast<std::size_t>(n_), {});
  for (int i = 0; i < edge_count(); ++i) {
    for (Vertex v : edges_[static_cast<std::size_t>(i)]) {
      ++degree_[static_cast<std::size_t>(v)];
      incidence_[static_cast<std::size_t>(v)].push_back(i);
    }
  }
}

int Hypergraph::find_edge(const Edge& sorted_edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_edge);
  if (it != edges_.end() && *it == sorted_edge)
    return static_cast<int>(it - edges_.begin());
  return -1;
}

VertexStats vertex_stats(const Hypergraph& h) {
  VertexStats s;
  s.degree = h.degrees();
  s.pendant.resize(s.degree.size());
  s.branching.resize(s.degree.size());
  for (std::size_t v = 0; v < s.degree.size(); ++v) {
    s.pendant[v] = s.degree[v] == 1;
    s.branching[v] = s.degree[v] >= 3;
  }
  return s;
}

namespace {

// Single-source BFS in the edge-count metric. Each edge is expanded once.
std::vector<int> bfs_distances(const Hypergraph& h, const std::vector<Vertex>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(h.vertex_count()), -1);
  std::vector<bool> edge_seen(static_cast<std::size_t>(h.edge_count()), false);
  std::queue<Vertex> queue;
  for (Vertex s : sources) {
    if (s < 0 || s >= h.vertex_count()) fail(Errc::VertexOutOfRange, "BFS source out of range");
    if (dist[static_cast<std::size_t>(s)] == -1) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (int ei : h.incident_edges(v)) {
      if (edge_seen[static_cast<std::size_t>(ei)]) continue;
      edge_seen[static_cast<std::size_t>(ei)] = true;
      for (Vertex u : h.edge(ei)) {
        auto& du = dist[static_cast<std::size_t>(u)];
        if (du == -1) {
          du = dist[static_cast<std::size_t>(v)] + 1;
          queue.push(u);
        }
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Hypergraph& h) {
  if (h.vertex_count() <= 1) return true;
  auto dist = bfs_distances(h, {0});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

bool is_supertree(const Hypergraph& h) {
  if (!is_connected(h)) return false;
  long expected = static_cast<long>(h.edge_count()) * (h.k() - 1) + 1;
  return static_cast<long>(h.vertex_count()) == expected;
}

int distance(const Hypergraph& h, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (from.empty() || to.empty()) fail(Errc::InvalidParameter, "distance between empty sets");
  if (!is_connected(h)) fail(Errc::Disconnected, "distance requires a connected hypergraph");
  auto dist = bfs_distances(h, from);
  int best = std::numeric_limits<int>::max();
  for (Vertex t : to) {
    if (t < 0 || t >= h.vertex_count()) fail(Errc::VertexOutOfRange, "distance target out of range");
    best = std::min(best, dist[static_cast<std::size_t>(t)]);
  }
  return best;
}

int distance(const Hypergraph& h, Vertex from, Vertex to) {
  return distance(h, std::vector<Vertex>{from}, std::vector<Vertex>{to});
}

namespace {

// Greedy lexicographic walk from `from` towards any target in `targets` at
// shortest-path distance `len`: at each step take the smallest-label vertex
// that still admits a completion, then the smallest edge realizing the hop.
PathTrace lex_min_shortest_path(const Hypergraph& h, Vertex from,
                                const std::vector<Vertex>& targets, int len,
                                const std::vector<std::vector<int>>& all_dist) {
  PathTrace trace;
  trace.vertices.push_back(from);
  Vertex cur = from;
  const auto& dist_from = all_dist[static_cast<std::size_t>(from)];
  for (int step = 0; step < len; ++step) {
    Vertex best_next = -1;
    int best_edge = -1;
    for (int ei : h.incident_edges(cur)) {
      for (Vertex u : h.edge(ei)) {
        if (dist_from[static_cast<std::size_t>(u)] != step + 1) continue;
        const auto& dist_u = all_dist[static_cast<std::size_t>(u)];
        bool completes = std::any_of(targets.begin(), targets.end(), [&](Vertex t) {
          return dist_u[static_cast<std::size_t>(t)] == len - step - 1;
        });
        if (!completes) continue;
        if (best_next == -1 || u < best_next || (u == best_next && ei < best_edge)) {
          best_next = u;
          best_edge = ei;
        }
      }
    }
    trace.vertices.push_back(best_next);
    trace.edges.push_back(best_edge);
    cur = best_next;
  }
  return trace;
}

}  // namespace

PathTrace path_between(const Hypergraph& h, Vertex from, Vertex to) {
  if (!is_connected(h)) fail(Errc::Disconnected, "path_between requires a connected hypergraph");
  std::vector<std::vector<int>> all_dist(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) all_dist[static_cast<std::size_t>(v)] = bfs_distances(h, {v});
  int len = all_dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  return lex_min_shortest_path(h, from, {to}, len, all_dist);
}

std::pair<int, PathTrace> diameter_and_diametral_path(const Hypergraph& h) {
  if (h.edge_count() < 1) fail(Errc::InvalidParameter, "diameter requires at least one edge");
  if (!is_connected(h)) fail(Errc::Disconnected, "diameter requires a connected hypergraph");
  const int n = h.vertex_count();
  std::vector<std::vector<int>> all_dist(static_cast<std::size_t>(n));
  int diam = 0;
  for (Vertex v = 0; v < n; ++v) {
    all_dist[static_cast<std::size_t>(v)] = bfs_distances(h, {v});
    diam = std::max(diam, *std::max_element(all_dist[static_cast<std::size_t>(v)].begin(),
                                            all_dist[static_cast<std::size_t>(v)].end()));
  }
  Vertex start = -1;
  for (Vertex v = 0; v < n && start == -1; ++v) {
    const auto& dv = all_dist[static_cast<std::size_t>(v)];
    if (*std::max_element(dv.begin(), dv.end()) == diam) start = v;
  }
  std::vector<Vertex> targets;
  const auto& ds = all_dist[static_cast<std::size_t>(start)];
  for (Vertex t = 0; t < n; ++t)
    if (ds[static_cast<std::size_t>(t)] == diam) targets.push_back(t);
  return {diam, lex_min_shortest_path(h, start, targets, diam, all_dist)};
}

std::vector<EdgeClass> classify_edges(const Hypergraph& h) {
  std::vector<EdgeClass> out;
  out.reserve(static_cast<std::size_t>(h.edge_count()));
  for (const Edge& e : h.edges()) {
    int heavy = 0;
    for (Vertex v : e)
      if (h.degree(v) >= 2) ++heavy;
    if (heavy <= 1)
      out.push_back(EdgeClass::Pendant);
    else if (heavy >= 3)
      out.push_back(EdgeClass::Branching);
    else
      out.push_back(EdgeClass::Other);
  }
  return out;
}

bool is_loose_path_edge_set(const std::vector<Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m <= 1) return true;
  // Pairwise intersection sizes; a loose path needs them all in {0,1}.
  std::vector<std::vector<int>> common(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<Vertex> tmp;
      std::set_intersection(edges[static_cast<std::size_t>(i)].begin(), edges[static_cast<std::size_t>(i)].end(),
                            edges[static_cast<std::size_t>(j)].begin(), edges[static_cast<std::size_t>(j)].end(),
                            std::back_inserter(tmp));
      if (tmp.size() > 1) return false;
      common[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          common[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(tmp.size());
    }
  std::vector<int> touch(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (j != i) touch[static_cast<std::size_t>(i)] += common[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  // A path ordering exists iff exactly two edges touch one neighbor, the
  // rest touch two, and the touch graph is connected with m-1 contacts.
  int ends = 0, total = 0;
  for (int t : touch) {
    if (t == 0 || t > 2) return false;
    if (t == 1) ++ends;
    total += t;
  }
  if (ends != 2 || total != 2 * (m - 1)) return false;
  // Walk the ordering from one end and confirm it covers every edge.
  int cur = static_cast<int>(std::find(touch.begin(), touch.end(), 1) - touch.begin());
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  used[static_cast<std::size_t>(cur)] = true;
  for (int step = 1; step < m; ++step) {
    int next = -1;
    for (int j = 0; j < m; ++j)
      if (!used[static_cast<std::size_t>(j)] && common[static_cast<std::size_t>(cur)][static_cast<std::size_t>(j)] == 1)
        next = j;
    if (next == -1) return false;
    used[static_cast<std::size_t>(next)] = true;
    cur = next;
  }
  return true;
}

bool is_caterpillar(const Hypergraph& h) {
  if (!is_supertree(h)) fail(Errc::NotASupertree, "is_caterpillar requires a supertree");
  auto classes = classify_edges(h);
  std::vector<Edge> remainder;
  for (int i = 0; i < h.edge_count(); ++i)
    if (classes[static_cast<std::size_t>(i)] != EdgeClass::Pendant) remainder.push_back(h.edge(i));
  return is_loose_path_edge_set(remainder);
}

int count_non_pendant(const Hypergraph& h) {
  int c = 0;
  for (int d : h.degrees())
    if (d >= 2) ++c;
  return c;
}

namespace {

// AHU encoding of the incidence tree. Nodes 0..n-1 are vertex nodes,
// n..n+m-1 edge nodes; the two kinds carry distinct tags so a vertex node
// can never match an edge node.
struct IncidenceTree {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

IncidenceTree incidence_tree(const Hypergraph& h) {
  IncidenceTree t;
  t.n = h.vertex_count() + h.edge_count();
  t.adj.assign(static_cast<std::size_t>(t.n), {});
  for (int ei = 0; ei < h.edge_count(); ++ei) {
    int enode = h.vertex_count() + ei;
    for (Vertex v : h.edge(ei)) {
      t.adj[static_cast<std::size_t>(v)].push_back(enode);
      t.adj[static_cast<std::size_t>(enode)].push_back(v);
    }
  }
  return t;
}

std::vector<int> tree_centers(const IncidenceTree& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.n));
  std::deque<int> leaves;
  for (int v = 0; v < t.n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(t.adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
  }
  int remaining = t.n;
  std::vector<int> current(leaves.begin(), leaves.end());
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(current.size());
    for (int v : current) {
      for (int u : t.adj[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

// Iterative AHU: children encodings sorted, wrapped with the node tag.
std::string ahu_encode(const IncidenceTree& t, int root, int skip, int vertex_nodes) {
  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(t.n), -2);
  order.push_back(root);
  parent[static_cast<std::size_t>(root)] = skip;  // pretend skip is the parent
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (u == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(u)] = v;
      order.push_back(u);
    }
  }
  std::vector<std::string> enc(static_cast<std::size_t>(t.n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> childs;
    for (int u : t.adj[static_cast<std::size_t>(v)])
      if (u != parent[static_cast<std::size_t>(v)]) childs.push_back(std::move(enc[static_cast<std::size_t>(u)]));
    std::sort(childs.begin(), childs.end());
    std::string s;
    s += '(';
    s += (v < vertex_nodes) ? 'v' : 'e';
    for (const auto& c : childs) s += c;
    s += ')';
    enc[static_cast<std::size_t>(v)] = std::move(s);
  }
  return enc[static_cast<std::size_t>(root)];
}

}  // namespace

CanonicalKey canonical_key(const Hypergraph& h) {
  if (!is_supertree(h)) fail(Errc::NotASupertree, "canonical_key requires a supertree");
  IncidenceTree t = incidence_tree(h);
  auto centers = tree_centers(t);
  if (centers.size() == 1) {
    return CanonicalKey{"U" + ahu_encode(t, centers[0], -1, h.vertex_count())};
  }
  // Bicentral: the incidence tree is bipartite by node kind, so one center
  // is a vertex node and the other an edge node; list the vertex half first.
  int a = centers[0], b = centers[1];
  if (a >= h.vertex_count()) std::swap(a, b);
  return CanonicalKey{"B" + ahu_encode(t, a, b, h.vertex_count()) + "|" +
                      ahu_encode(t, b, a, h.vertex_count())};
}

bool is_internal_path(const Hypergraph& h, const PathTrace& trace) {
  if (trace.vertices.empty()) fail(Errc::InvalidParameter, "empty path trace");
  Vertex u = trace.vertices.front();
  Vertex v = trace.vertices.back();
  if (trace.length() == 0) return u == v && h.degree(u) >= 3;
  if (h.degree(u) < 3 || h.degree(v) < 3) return false;
  // Interior vertices (everything on the path's edges except the endpoints)
  // must have all their incident edges on the path.
  std::vector<bool> on_path_edge(static_cast<std::size_t>(h.edge_count()), false);
  for (int ei : trace.edges) on_path_edge[static_cast<std::size_t>(ei)] = true;
  for (int ei : trace.edges) {
    for (Vertex w : h.edge(ei)) {
      if (w == u || w == v) continue;
      for (int fi : h.incident_edges(w))
        if (!on_path_edge[static_cast<std::size_t>(fi)]) return false;
    }
  }
  return true;
}

bool is_pendant_path(const Hypergraph& h, const PathTrace& trace) {
  if (trace.vertices.empty()) fail(Errc::InvalidParameter, "empty path trace");
  Vertex u = trace.vertices.front();
  if (h.degree(u) < 3) return false;
  std::vector<bool> on_path_edge(static_cast<std::size_t>(h.edge_count()), false);
  for (int ei : trace.edges) on_path_edge[static_cast<std::size_t>(ei)] = true;
  for (int ei : trace.edges) {
    for (Vertex w : h.edge(ei)) {
      if (w == u) continue;
      for (int fi : h.incident_edges(w))
        if (!on_path_edge[static_cast<std::size_t>(fi)]) return false;
    }
  }
  return true;
}

}  // namespace aspectra
