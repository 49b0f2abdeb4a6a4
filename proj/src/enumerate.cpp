#include "aspectra/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace aspectra {

bool ClassFilter::matches(const Hypergraph& h) const {
  if (diameter && diameter_and_diametral_path(h).first != *diameter) return false;
  if (caterpillar != Tri::Any && is_caterpillar(h) != (caterpillar == Tri::Yes)) return false;
  if (non_pendant_count && count_non_pendant(h) != *non_pendant_count) return false;
  return true;
}

std::vector<Hypergraph> enumerate_supertrees(int k, int m, long budget) {
  if (k < 3 || m < 1) fail(Errc::InvalidParameter, "enumeration needs k >= 3 and m >= 1");

  std::vector<Edge> seed_edge(1);
  for (int i = 0; i < k; ++i) seed_edge[0].push_back(i);
  std::vector<Hypergraph> level{Hypergraph::build(k, k, seed_edge)};

  for (int edges = 2; edges <= m; ++edges) {
    std::map<CanonicalKey, Hypergraph> next;
    const int count = static_cast<int>(level.size());
    std::vector<std::vector<std::pair<CanonicalKey, Hypergraph>>> grown(
        static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int ci = 0; ci < count; ++ci) {
      const Hypergraph& h = level[static_cast<std::size_t>(ci)];
      for (Vertex v = 0; v < h.vertex_count(); ++v) {
        std::vector<Edge> grown_edges = h.edges();
        Edge fresh{v};
        for (int j = 0; j < k - 1; ++j) fresh.push_back(h.vertex_count() + j);
        grown_edges.push_back(std::move(fresh));
        Hypergraph g = Hypergraph::build(k, h.vertex_count() + k - 1, std::move(grown_edges));
        if (static_cast<long>(g.vertex_count()) != static_cast<long>(g.edge_count()) * (k - 1) + 1)
          throw std::logic_error("enumeration produced a non-supertree");
        grown[static_cast<std::size_t>(ci)].emplace_back(canonical_key(g), std::move(g));
      }
    }
    for (auto& bucket : grown)
      for (auto& [key, g] : bucket) next.emplace(std::move(key), std::move(g));
    if (static_cast<long>(next.size()) > budget)
      fail(Errc::BudgetExceeded, "class count exceeds budget at m=" + std::to_string(edges));
    level.clear();
    level.reserve(next.size());
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Hypergraph> filter_classes(std::span<const Hypergraph> classes, const ClassFilter& f) {
  std::vector<Hypergraph> out;
  for (const Hypergraph& h : classes)
    if (f.matches(h)) out.push_back(h);
  return out;
}

}  // namespace aspectra
