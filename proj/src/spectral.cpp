#include "aspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace aspectra {

namespace {

constexpr int kParallelCutoff = 4096;  // below this a thread team costs more than it saves
constexpr double kTinyEntry = 1e-150;  // switch to direct products to avoid x_e / x_v blowup

double pow_int(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_positive(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n) fail(Errc::InvalidParameter, "vector length mismatch");
  for (double v : x)
    if (!(v > 0.0) || !std::isfinite(v)) fail(Errc::NonPositiveInput, "vector must be strictly positive");
}

double product_excluding(const Edge& e, Vertex skip, std::span<const double> x) {
  double p = 1.0;
  for (Vertex u : e)
    if (u != skip) p *= x[static_cast<std::size_t>(u)];
  return p;
}

}  // namespace

void apply_a_alpha_into(const Hypergraph& h, double alpha, std::span<const double> x,
                        std::span<double> edge_products, std::span<double> out) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  const int k = h.k();
  const auto& edges = h.edges();

#pragma omp parallel for schedule(static) if (m >= kParallelCutoff)
  for (int ei = 0; ei < m; ++ei) {
    double p = 1.0;
    for (Vertex u : edges[static_cast<std::size_t>(ei)]) p *= x[static_cast<std::size_t>(u)];
    edge_products[static_cast<std::size_t>(ei)] = p;
  }

  // Per-vertex gather in ascending edge order keeps the result independent
  // of the thread count.
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int v = 0; v < n; ++v) {
    const double xv = x[static_cast<std::size_t>(v)];
    double acc = 0.0;
    if (xv >= kTinyEntry) {
      const double inv = 1.0 / xv;
      for (int ei : h.incident_edges(v)) acc += edge_products[static_cast<std::size_t>(ei)] * inv;
    } else {
      for (int ei : h.incident_edges(v)) acc += product_excluding(h.edge(ei), v, x);
    }
    out[static_cast<std::size_t>(v)] =
        alpha * h.degree(v) * pow_int(xv, k - 1) + (1.0 - alpha) * acc;
  }
}

std::vector<double> apply_a_alpha(const Hypergraph& h, double alpha, std::span<const double> x) {
  check_positive(x, h.vertex_count());
  std::vector<double> out(static_cast<std::size_t>(h.vertex_count()));
  std::vector<double> products(static_cast<std::size_t>(h.edge_count()));
  apply_a_alpha_into(h, alpha, x, products, out);
  return out;
}

std::vector<double> apply_a_alpha_reference(const Hypergraph& h, double alpha,
                                            std::span<const double> x) {
  check_positive(x, h.vertex_count());
  const int k = h.k();
  std::vector<double> out(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    double acc = 0.0;
    for (int ei : h.incident_edges(v)) acc += product_excluding(h.edge(ei), v, x);
    out[static_cast<std::size_t>(v)] =
        alpha * h.degree(v) * pow_int(x[static_cast<std::size_t>(v)], k - 1) + (1.0 - alpha) * acc;
  }
  return out;
}

double rayleigh(const Hypergraph& h, double alpha, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.vertex_count())
    fail(Errc::InvalidParameter, "vector length mismatch");
  const int k = h.k();
  double norm = 0.0;
  for (double v : x) {
    if (v < 0.0 || !std::isfinite(v)) fail(Errc::NonPositiveInput, "vector must be nonnegative");
    norm += pow_int(v, k);
  }
  if (std::abs(norm - 1.0) > 1e-9) fail(Errc::NotNormalized, "sum of x_v^k must be 1");
  double total = 0.0;
  for (const Edge& e : h.edges()) {
    double powers = 0.0;
    double prod = 1.0;
    for (Vertex u : e) {
      powers += pow_int(x[static_cast<std::size_t>(u)], k);
      prod *= x[static_cast<std::size_t>(u)];
    }
    total += alpha * powers + (1.0 - alpha) * k * prod;
  }
  return total;
}

std::pair<double, double> cw_bounds(const Hypergraph& h, double alpha, std::span<const double> x) {
  check_positive(x, h.vertex_count());
  auto y = apply_a_alpha(h, alpha, x);
  const int k = h.k();
  double low = std::numeric_limits<double>::infinity();
  double high = -std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    double denom = std::max(pow_int(x[static_cast<std::size_t>(v)], k - 1),
                            std::numeric_limits<double>::min());
    double r = y[static_cast<std::size_t>(v)] / denom;
    low = std::min(low, r);
    high = std::max(high, r);
  }
  return {low, high};
}

SpectralResult spectral_radius(const Hypergraph& h, const SolverOptions& opts) {
  if (!(opts.alpha >= 0.0 && opts.alpha < 1.0))
    fail(Errc::AlphaOutOfRange, "alpha must satisfy 0 <= alpha < 1");
  if (h.edge_count() < 1) fail(Errc::InvalidParameter, "spectral radius needs at least one edge");
  if (!(opts.tolerance > 0.0) || opts.shift < 0.0 || opts.max_iterations < 1)
    fail(Errc::InvalidParameter, "bad solver options");
  if (!is_connected(h)) fail(Errc::Disconnected, "spectral radius requires a connected hypergraph");

  const int n = h.vertex_count();
  const int k = h.k();
  std::vector<double> x(static_cast<std::size_t>(n),
                        std::pow(static_cast<double>(n), -1.0 / k));
  std::vector<double> y(static_cast<std::size_t>(n));
  std::vector<double> products(static_cast<std::size_t>(h.edge_count()));

  double best_low = -std::numeric_limits<double>::infinity();
  double best_high = std::numeric_limits<double>::infinity();
  double low = 0.0, high = 0.0;
  long iter = 0;
  for (;;) {
    ++iter;
    apply_a_alpha_into(h, opts.alpha, x, products, y);
    low = std::numeric_limits<double>::infinity();
    high = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      double denom = std::max(pow_int(x[static_cast<std::size_t>(v)], k - 1),
                              std::numeric_limits<double>::min());
      double r = y[static_cast<std::size_t>(v)] / denom;
      low = std::min(low, r);
      high = std::max(high, r);
    }
    best_low = std::max(best_low, low);
    best_high = std::min(best_high, high);
    if (high - low <= opts.tolerance) break;
    if (iter >= opts.max_iterations)
      throw IterationError(best_low, best_high, iter,
                           "power iteration did not reach the requested gap");
    // Shifted update keeps the iteration convergent for weakly irreducible
    // nonnegative tensors; renormalize in the k-norm.
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
      double zv = std::pow(y[static_cast<std::size_t>(v)] +
                               opts.shift * pow_int(x[static_cast<std::size_t>(v)], k - 1),
                           1.0 / (k - 1));
      x[static_cast<std::size_t>(v)] = zv;
      norm += pow_int(zv, k);
    }
    double scale = std::pow(norm, -1.0 / k);
    for (double& xv : x) xv *= scale;
  }

  SpectralResult res;
  res.cw_low = low;
  res.cw_high = high;
  res.cw_gap = high - low;
  res.rho = 0.5 * (low + high);
  res.iterations = iter;
  double resid = 0.0;
  for (int v = 0; v < n; ++v)
    resid = std::max(resid, std::abs(y[static_cast<std::size_t>(v)] -
                                     res.rho * pow_int(x[static_cast<std::size_t>(v)], k - 1)));
  res.residual = resid;
  res.perron = std::move(x);
  return res;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Greater: return "Greater";
    case Comparison::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Comparison compare_results(const SpectralResult& a, const SpectralResult& b, double margin) {
  if (a.cw_low > b.cw_high + margin) return Comparison::Greater;
  if (b.cw_low > a.cw_high + margin) return Comparison::Less;
  return Comparison::Inconclusive;
}

Comparison compare_rho(const Hypergraph& a, const Hypergraph& b, const SolverOptions& opts,
                       double margin) {
  return compare_results(spectral_radius(a, opts), spectral_radius(b, opts), margin);
}

}  // namespace aspectra
