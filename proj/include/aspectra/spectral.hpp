#pragma once

#include <span>
#include <vector>

#include "aspectra/hypergraph.hpp"

namespace aspectra {

/// Options for the shifted power iteration. alpha weights the degree tensor
/// against the adjacency tensor; alpha = 1 is rejected (the tensor becomes
/// diagonal and every theorem hypothesis excludes it).
struct SolverOptions {
  double alpha = 0.0;
  double tolerance = 1e-10;  // stop when the Collatz-Wielandt gap is below this
  long max_iterations = 1'000'000;
  double shift = 1.0;
};

struct SpectralResult {
  double rho = 0.0;              // midpoint of the final Collatz-Wielandt interval
  double cw_low = 0.0;           // certified lower bound on rho
  double cw_high = 0.0;          // certified upper bound on rho
  double cw_gap = 0.0;           // cw_high - cw_low
  double residual = 0.0;         // max_v |(A_alpha x)_v - rho x_v^{k-1}|
  long iterations = 0;
  std::vector<double> perron;    // positive, normalized so sum x_v^k = 1
};

/// Applies the A_alpha tensor: out_v = alpha d_v x_v^{k-1}
/// + (1-alpha) sum over edges e containing v of prod_{u in e, u != v} x_u.
/// Parallel over edges and vertices for large inputs; the summation order
/// per vertex is fixed (ascending edge index), so results do not depend on
/// the thread count. Requires x strictly positive.
std::vector<double> apply_a_alpha(const Hypergraph& h, double alpha, std::span<const double> x);

/// Workspace form of apply_a_alpha used by the solver and the benchmark.
/// edge_products must have edge_count entries, out vertex_count entries.
void apply_a_alpha_into(const Hypergraph& h, double alpha, std::span<const double> x,
                        std::span<double> edge_products, std::span<double> out);

/// Straightforward serial evaluation with per-vertex products computed
/// directly (no division trick). Kept as the reference the parallel kernel
/// is tested and benchmarked against.
std::vector<double> apply_a_alpha_reference(const Hypergraph& h, double alpha,
                                            std::span<const double> x);

/// x^T A_alpha x for x normalized in the k-norm (sum x_v^k = 1). Never
/// exceeds the alpha-spectral radius.
double rayleigh(const Hypergraph& h, double alpha, std::span<const double> x);

/// Collatz-Wielandt bounds min/max over v of (A_alpha x)_v / x_v^{k-1}
/// for strictly positive x; they always sandwich the alpha-spectral radius.
std::pair<double, double> cw_bounds(const Hypergraph& h, double alpha, std::span<const double> x);

/// Alpha-spectral radius with Perron vector by shifted power iteration.
/// Requires h connected with at least one edge and 0 <= alpha < 1. Throws
/// IterationError with the best bounds when the iteration cap is reached.
SpectralResult spectral_radius(const Hypergraph& h, const SolverOptions& opts = {});

enum class Comparison { Less, Greater, Inconclusive };

const char* to_string(Comparison c);

/// Certified interval comparison of two alpha-spectral radii: Greater only
/// when the lower bound for a exceeds the upper bound for b by more than
/// margin, and symmetrically; Inconclusive when the intervals overlap.
Comparison compare_rho(const Hypergraph& a, const Hypergraph& b, const SolverOptions& opts,
                       double margin);

Comparison compare_results(const SpectralResult& a, const SpectralResult& b, double margin);

}  // namespace aspectra
