#pragma once

// Test-only oracles. Each one is deliberately independent of the library
// code path it is used to check: the 2-graph eigenvalue oracle works on a
// dense adjacency matrix, the canonical-form oracle tries every vertex
// permutation, and the diameter oracle is a plain BFS over explicit edge
// lists.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracles {

/// Adjacency spectral radius of a connected 2-graph via shifted power
/// iteration on the dense matrix, certified by the matrix Collatz-Wielandt
/// quotients.
inline double two_graph_rho(const std::vector<std::pair<int, int>>& edges) {
  int n = 0;
  for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
  std::vector<std::vector<double>> adj(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1.0;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1.0;
  }
  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(static_cast<std::size_t>(n));
  double low = 0.0, high = 0.0;
  for (long iter = 0; iter < 2'000'000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = x[static_cast<std::size_t>(i)];  // +1 shift keeps bipartite cases convergent
      for (int j = 0; j < n; ++j) s += adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = s;
    }
    low = std::numeric_limits<double>::infinity();
    high = -low;
    for (int i = 0; i < n; ++i) {
      double r = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
      low = std::min(low, r);
      high = std::max(high, r);
    }
    if (high - low < 1e-12) break;
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
  }
  return 0.5 * (low + high) - 1.0;
}

using EdgeList = std::vector<std::vector<int>>;

/// Lexicographically smallest relabeled sorted edge list over every vertex
/// permutation. Two hypergraphs on the same number of vertices are
/// isomorphic iff their forms match. Factorial cost; keep n <= 10.
inline EdgeList brute_canonical_form(int n, const EdgeList& edges) {
  if (n > 10) throw std::runtime_error("brute_canonical_form: n too large");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList relabeled;
    relabeled.reserve(edges.size());
    for (const auto& e : edges) {
      std::vector<int> r;
      r.reserve(e.size());
      for (int v : e) r.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(r.begin(), r.end());
      relabeled.push_back(std::move(r));
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Edge-count diameter by BFS over the "shares an edge" vertex graph.
inline int bfs_diameter(int n, const EdgeList& edges) {
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(n));
  for (const auto& e : edges)
    for (int a : e)
      for (int b : e)
        if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    q.push(s);
    dist[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : nbr[static_cast<std::size_t>(v)])
        if (dist[static_cast<std::size_t>(u)] == -1) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(u);
        }
    }
    for (int d : dist) {
      if (d < 0) throw std::runtime_error("bfs_diameter: disconnected input");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

/// All isomorphism classes of k-uniform supertrees with m edges, generated
/// by trying every attachment sequence and deduplicating with brute-force
/// canonical forms. Exponential; keep k = 3, m <= 4.
inline std::vector<EdgeList> brute_enumerate_supertrees(int k, int m) {
  std::vector<int> base(static_cast<std::size_t>(k));
  std::iota(base.begin(), base.end(), 0);
  std::set<EdgeList> level{EdgeList{base}};
  int vertices = k;
  for (int edges = 2; edges <= m; ++edges) {
    std::set<EdgeList> next;
    int grown_vertices = vertices + k - 1;
    for (const EdgeList& h : level) {
      for (int v = 0; v < vertices; ++v) {
        EdgeList g = h;
        std::vector<int> fresh{v};
        for (int j = 0; j < k - 1; ++j) fresh.push_back(vertices + j);
        std::sort(fresh.begin(), fresh.end());
        g.push_back(fresh);
        std::sort(g.begin(), g.end());
        next.insert(brute_canonical_form(grown_vertices, g));
      }
    }
    level = std::move(next);
    vertices = grown_vertices;
  }
  return {level.begin(), level.end()};
}

}  // namespace oracles
