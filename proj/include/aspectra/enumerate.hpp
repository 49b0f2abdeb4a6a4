#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aspectra/hypergraph.hpp"

namespace aspectra {

/// Composable structural predicates used to carve out the classes the
/// extremal statements quantify over (diameter-d, caterpillar or not,
/// number of non-pendant vertices).
struct ClassFilter {
  enum class Tri { Any, Yes, No };

  std::optional<int> diameter;
  Tri caterpillar = Tri::Any;
  std::optional<int> non_pendant_count;

  bool matches(const Hypergraph& h) const;
};

/// All k-uniform supertrees with m edges, one representative per isomorphism
/// class, sorted by canonical key. Grows edge by edge (every new edge shares
/// exactly one vertex with the current supertree) and dedupes by canonical
/// key at every level; completeness follows from every supertree having a
/// leaf edge whose removal keeps a supertree. Throws BudgetExceeded when a
/// level outgrows `budget` classes.
std::vector<Hypergraph> enumerate_supertrees(int k, int m, long budget = 500000);

std::vector<Hypergraph> filter_classes(std::span<const Hypergraph> classes, const ClassFilter& f);

}  // namespace aspectra
