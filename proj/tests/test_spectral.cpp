#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "aspectra/enumerate.hpp"
#include "aspectra/families.hpp"
#include "aspectra/spectral.hpp"
#include "oracles.hpp"

using namespace aspectra;

namespace {

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidParameter;
}

std::vector<double> uniform_normalized(int n, int k) {
  return std::vector<double>(static_cast<std::size_t>(n),
                             std::pow(static_cast<double>(n), -1.0 / k));
}

std::vector<std::pair<int, int>> path_tree(int d) {
  std::vector<std::pair<int, int>> t;
  for (int i = 0; i < d; ++i) t.emplace_back(i, i + 1);
  return t;
}

}  // namespace

TEST_CASE("apply_a_alpha on hand-checked inputs") {
  auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
  std::vector<double> ones(3, 1.0);
  CHECK(apply_a_alpha(single, 0.0, ones) == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(apply_a_alpha(single, 0.5, ones) == std::vector<double>{1.0, 1.0, 1.0});

  auto s = Hypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}});
  std::vector<double> x(5, 1.0);
  auto y = apply_a_alpha(s, 0.0, x);
  CHECK(y[0] == doctest::Approx(2.0));
  CHECK(y[1] == doctest::Approx(1.0));
  CHECK(y[4] == doctest::Approx(1.0));

  std::vector<double> bad(3, 1.0);
  bad[1] = 0.0;
  CHECK(thrown_code([&] { apply_a_alpha(single, 0.0, bad); }) == Errc::NonPositiveInput);
}

TEST_CASE("parallel kernel matches the serial reference") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  for (int m = 2; m <= 5; ++m) {
    for (const auto& h : enumerate_supertrees(3, m)) {
      std::vector<double> x(static_cast<std::size_t>(h.vertex_count()));
      for (double& v : x) v = dist(rng);
      for (double alpha : {0.0, 0.4, 0.9}) {
        auto fast = apply_a_alpha(h, alpha, x);
        auto ref = apply_a_alpha_reference(h, alpha, x);
        for (std::size_t i = 0; i < fast.size(); ++i)
          CHECK(fast[i] == doctest::Approx(ref[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("rayleigh quotient on hand-checked inputs") {
  auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
  auto xu = uniform_normalized(3, 3);
  for (double alpha : {0.0, 0.3, 0.7}) CHECK(rayleigh(single, alpha, xu) == doctest::Approx(1.0));

  auto s = Hypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}});
  CHECK(rayleigh(s, 0.0, uniform_normalized(5, 3)) == doctest::Approx(1.2));

  std::vector<double> not_normalized(5, 0.5);
  CHECK(thrown_code([&] { rayleigh(s, 0.0, not_normalized); }) == Errc::NotNormalized);
}

TEST_CASE("collatz-wielandt bounds") {
  auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
  auto [lo, hi] = cw_bounds(single, 0.0, uniform_normalized(3, 3));
  CHECK(lo == doctest::Approx(1.0));
  CHECK(hi == doctest::Approx(1.0));

  auto s = Hypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}});
  auto [lo2, hi2] = cw_bounds(s, 0.0, std::vector<double>(5, 0.7));
  CHECK(lo2 == doctest::Approx(1.0));
  CHECK(hi2 == doctest::Approx(2.0));

  auto res = spectral_radius(s);
  auto [plo, phi] = cw_bounds(s, 0.0, res.perron);
  CHECK(phi - plo <= 10 * 1e-10);
}

TEST_CASE("single edge has rho 1 for every alpha") {
  auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
  for (double alpha : {0.0, 0.25, 0.5}) {
    SolverOptions so;
    so.alpha = alpha;
    auto r = spectral_radius(single, so);
    CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.cw_gap <= 1e-10);
    CHECK(r.residual <= 1e-9);
  }
}

TEST_CASE("hyperstars against the power relationship") {
  // rho_0 of the k-th power of a 2-graph is rho_2^(2/k); stars have
  // rho_2 = sqrt(m), so the hyperstar value is m^(1/3) at k=3.
  for (int m : {2, 3, 4}) {
    std::vector<std::pair<int, int>> tree;
    for (int i = 0; i < m; ++i) tree.emplace_back(0, i + 1);
    double rho2 = oracles::two_graph_rho(tree);
    CHECK(rho2 == doctest::Approx(std::sqrt(m)).epsilon(1e-10));
    auto r = spectral_radius(star(3, m));
    CHECK(r.rho == doctest::Approx(std::pow(rho2, 2.0 / 3.0)).epsilon(1e-6));
    CHECK(r.rho == doctest::Approx(std::cbrt(m)).epsilon(1e-9));
  }
  CHECK(spectral_radius(star(3, 2)).rho == doctest::Approx(1.2599210498948732).epsilon(1e-9));
}

TEST_CASE("loose path P3 matches the 2-graph oracle") {
  double rho2 = oracles::two_graph_rho(path_tree(3));
  CHECK(rho2 == doctest::Approx(2 * std::cos(M_PI / 5)).epsilon(1e-10));
  auto r = spectral_radius(loose_path(3, 3));
  CHECK(r.rho == doctest::Approx(std::pow(2 * std::cos(M_PI / 5), 2.0 / 3.0)).epsilon(1e-6));
  CHECK(r.rho == doctest::Approx(1.37824).epsilon(1e-5));
}

TEST_CASE("power relationship across families and uniformities") {
  for (int k : {3, 4}) {
    for (int d = 1; d <= 4; ++d) {
      double rho2 = oracles::two_graph_rho(path_tree(d));
      auto r = spectral_radius(power_hypergraph(path_tree(d), k));
      CHECK(std::abs(r.rho - std::pow(rho2, 2.0 / k)) <= 1e-6);
    }
  }
  // k=2 smoke: the solver reduces to the matrix case.
  auto p2 = Hypergraph::build(2, 3, {{0, 1}, {1, 2}});
  CHECK(spectral_radius(p2).rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("solver rejects bad inputs") {
  auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
  SolverOptions bad;
  bad.alpha = 1.0;
  CHECK(thrown_code([&] { spectral_radius(single, bad); }) == Errc::AlphaOutOfRange);
  bad.alpha = -0.1;
  CHECK(thrown_code([&] { spectral_radius(single, bad); }) == Errc::AlphaOutOfRange);
  CHECK(thrown_code([] {
          spectral_radius(Hypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}}));
        }) == Errc::Disconnected);
  CHECK(thrown_code([] { spectral_radius(Hypergraph::build(3, 1, {})); }) ==
        Errc::InvalidParameter);
  SolverOptions capped;
  capped.max_iterations = 1;
  capped.tolerance = 1e-15;
  try {
    spectral_radius(loose_path(3, 4), capped);
    FAIL("expected IterationError");
  } catch (const IterationError& e) {
    CHECK(e.low() <= e.high());
    CHECK(e.iterations() == 1);
  }
}

TEST_CASE("rayleigh of the perron vector reproduces rho") {
  for (const auto& h : {loose_path(3, 3), star(3, 4), double_star(3, 1, 2)}) {
    for (double alpha : {0.0, 0.5}) {
      SolverOptions so;
      so.alpha = alpha;
      auto r = spectral_radius(h, so);
      CHECK(rayleigh(h, alpha, r.perron) == doctest::Approx(r.rho).epsilon(1e-9));
    }
  }
}

TEST_CASE("variational dominance over random positive vectors") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  for (const auto& h : {loose_path(3, 3), star(3, 4), h1(3, 6, 4)}) {
    for (double alpha : {0.0, 0.5}) {
      SolverOptions so;
      so.alpha = alpha;
      double rho = spectral_radius(h, so).rho;
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(static_cast<std::size_t>(h.vertex_count()));
        double norm = 0.0;
        for (double& v : x) {
          v = dist(rng);
          norm += v * v * v;
        }
        for (double& v : x) v /= std::cbrt(norm);
        CHECK(rayleigh(h, alpha, x) <= rho + 1e-9);
      }
    }
  }
}

TEST_CASE("per-edge and per-vertex evaluations agree: x.(A x) equals the rayleigh form") {
  // rayleigh sums over edges; apply_a_alpha gathers per vertex. For any
  // normalized positive x the dot product of x with the gather must equal
  // the per-edge sum, tying the two routes together.
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  for (const auto& h : {loose_path(3, 4), h1(3, 7, 4), star(4, 3)}) {
    const int k = h.k();
    for (double alpha : {0.0, 0.3, 0.8}) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(static_cast<std::size_t>(h.vertex_count()));
        double norm = 0.0;
        for (double& v : x) {
          v = dist(rng);
          double p = 1.0;
          for (int i = 0; i < k; ++i) p *= v;
          norm += p;
        }
        for (double& v : x) v /= std::pow(norm, 1.0 / k);
        auto y = apply_a_alpha(h, alpha, x);
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
        CHECK(dot == doctest::Approx(rayleigh(h, alpha, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("rho is nondecreasing in alpha (observed, not assumed)") {
  for (const auto& h : {double_star(3, 1, 2), loose_path(3, 4)}) {
    double prev = -1.0;
    for (int i = 0; i <= 9; ++i) {
      SolverOptions so;
      so.alpha = 0.1 * i;
      double rho = spectral_radius(h, so).rho;
      WARN_GE(rho, prev - 1e-12);
      prev = rho;
    }
  }
}

TEST_CASE("diagonal lower bound for positive alpha") {
  for (const auto& h : {star(3, 4), h1(3, 6, 4)}) {
    int max_deg = *std::max_element(h.degrees().begin(), h.degrees().end());
    for (double alpha : {0.25, 0.75}) {
      SolverOptions so;
      so.alpha = alpha;
      CHECK(spectral_radius(h, so).rho >= alpha * max_deg - 1e-12);
    }
  }
}

TEST_CASE("relabeling leaves rho unchanged and permutes the perron vector") {
  auto h = double_star(3, 1, 2);
  int n = h.vertex_count();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(2024);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge r;
    for (Vertex v : e) r.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(r);
  }
  auto relabeled = Hypergraph::build(3, n, edges);
  for (double alpha : {0.0, 0.5}) {
    SolverOptions so;
    so.alpha = alpha;
    auto a = spectral_radius(h, so);
    auto b = spectral_radius(relabeled, so);
    CHECK(std::abs(a.rho - b.rho) <= 1e-12);
    for (Vertex v = 0; v < n; ++v)
      CHECK(b.perron[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] ==
            doctest::Approx(a.perron[static_cast<std::size_t>(v)]).epsilon(1e-8));
  }
}

TEST_CASE("certified comparisons") {
  SolverOptions so;
  CHECK(compare_rho(star(3, 5), double_star(3, 1, 3), so, 1e-8) == Comparison::Greater);
  CHECK(compare_rho(star(3, 5), star(3, 5), so, 1e-8) == Comparison::Inconclusive);
  CHECK(compare_rho(double_star(3, 1, 3), star(3, 5), so, 1e-8) == Comparison::Less);
  SolverOptions half;
  half.alpha = 0.5;
  CHECK(compare_rho(double_star(3, 1, 3), double_star(3, 2, 2), half, 1e-8) ==
        Comparison::Greater);
}
