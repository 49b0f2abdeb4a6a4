#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "aspectra/enumerate.hpp"
#include "aspectra/families.hpp"
#include "aspectra/transforms.hpp"
#include "oracles.hpp"

using namespace aspectra;

TEST_CASE("class counts match the brute-force oracle up to m = 4") {
  for (int m = 1; m <= 4; ++m) {
    auto classes = enumerate_supertrees(3, m);
    auto brute = oracles::brute_enumerate_supertrees(3, m);
    CHECK(classes.size() == brute.size());
  }
  CHECK(enumerate_supertrees(3, 1).size() == 1);
  CHECK(enumerate_supertrees(3, 2).size() == 1);
  CHECK(enumerate_supertrees(3, 3).size() == 2);
  CHECK(enumerate_supertrees(3, 4).size() == 4);
}

TEST_CASE("canonical keys agree with brute-force isomorphism up to m = 4") {
  for (int m = 1; m <= 4; ++m) {
    auto classes = enumerate_supertrees(3, m);
    // Distinct keys must mean distinct brute-force forms, pairwise.
    std::set<oracles::EdgeList> forms;
    for (const auto& h : classes) {
      oracles::EdgeList e{h.edges().begin(), h.edges().end()};
      forms.insert(oracles::brute_canonical_form(h.vertex_count(), e));
    }
    CHECK(forms.size() == classes.size());
    // And a relabeled copy must land on the same key.
    for (const auto& h : classes) {
      int n = h.vertex_count();
      std::vector<Edge> edges;
      for (const Edge& e : h.edges()) {
        Edge r;
        for (Vertex v : e) r.push_back(n - 1 - v);
        edges.push_back(r);
      }
      CHECK(canonical_key(Hypergraph::build(3, n, edges)) == canonical_key(h));
    }
  }
}

TEST_CASE("every enumerated class is a supertree with the right size") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& h : enumerate_supertrees(3, m)) {
      CHECK(h.edge_count() == m);
      CHECK(h.vertex_count() == m * 2 + 1);
      CHECK(is_connected(h));
      CHECK(is_supertree(h));
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  auto a = enumerate_supertrees(3, 5);
  auto b = enumerate_supertrees(3, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    CHECK(canonical_key(a[i]) < canonical_key(a[i + 1]));
}

TEST_CASE("filters") {
  auto m6 = enumerate_supertrees(3, 6);

  ClassFilter nc64;
  nc64.diameter = 4;
  nc64.caterpillar = ClassFilter::Tri::No;
  auto selected = filter_classes(m6, nc64);
  CHECK(!selected.empty());
  std::set<CanonicalKey> keys;
  for (const auto& h : selected) keys.insert(canonical_key(h));
  CHECK(keys.count(canonical_key(h1(3, 6, 4))) == 1);
  CHECK(keys.count(canonical_key(h2(3, 6, 4))) == 1);

  ClassFilter noncat;
  noncat.caterpillar = ClassFilter::Tri::No;
  CHECK(filter_classes(enumerate_supertrees(3, 5), noncat).empty());

  for (int m : {4, 5}) {
    ClassFilter star_only;
    star_only.non_pendant_count = 1;
    auto stars = filter_classes(enumerate_supertrees(3, m), star_only);
    REQUIRE(stars.size() == 1);
    CHECK(canonical_key(stars[0]) == canonical_key(star(3, m)));
  }
}

TEST_CASE("caterpillars and non-caterpillars partition each diameter") {
  auto m6 = enumerate_supertrees(3, 6);
  for (int d = 2; d <= 6; ++d) {
    ClassFilter all_d, cat_d, nc_d;
    all_d.diameter = d;
    cat_d.diameter = d;
    cat_d.caterpillar = ClassFilter::Tri::Yes;
    nc_d.diameter = d;
    nc_d.caterpillar = ClassFilter::Tri::No;
    CHECK(filter_classes(m6, all_d).size() ==
          filter_classes(m6, cat_d).size() + filter_classes(m6, nc_d).size());
  }
}

TEST_CASE("enumeration is closed under degree-preserving transforms") {
  auto m4 = enumerate_supertrees(3, 4);
  std::set<CanonicalKey> keys;
  for (const auto& h : m4) keys.insert(canonical_key(h));

  for (const auto& h : m4) {
    // Any single-edge move with a connected result stays inside the family.
    for (int ei = 0; ei < h.edge_count() && ei < 2; ++ei) {
      for (Vertex pivot : h.edge(ei)) {
        for (Vertex u = 0; u < h.vertex_count(); ++u) {
          if (std::binary_search(h.edge(ei).begin(), h.edge(ei).end(), u)) continue;
          try {
            auto [moved, rec] = move_edges(h, u, std::vector<std::pair<int, Vertex>>{{ei, pivot}});
            if (is_connected(moved)) CHECK(keys.count(canonical_key(moved)) == 1);
          } catch (const Error&) {
          }
        }
      }
    }
    // Operation I where applicable.
    auto cls = classify_edges(h);
    for (int ei = 0; ei < h.edge_count(); ++ei) {
      if (cls[static_cast<std::size_t>(ei)] != EdgeClass::Branching) continue;
      std::vector<Vertex> heavy;
      for (Vertex v : h.edge(ei))
        if (h.degree(v) >= 2) heavy.push_back(v);
      auto [moved, rec] = operation_I(h, ei, heavy[0], heavy[1]);
      CHECK(keys.count(canonical_key(moved)) == 1);
    }
  }
}

TEST_CASE("budget cap") {
  CHECK_THROWS_AS(enumerate_supertrees(3, 7, 5), Error);
  try {
    enumerate_supertrees(3, 7, 5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(enumerate_supertrees(2, 3), Error);
  CHECK_THROWS_AS(enumerate_supertrees(3, 0), Error);
}
