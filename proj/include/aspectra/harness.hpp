#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspectra/enumerate.hpp"
#include "aspectra/families.hpp"
#include "aspectra/hypergraph.hpp"
#include "aspectra/spectral.hpp"
#include "aspectra/transforms.hpp"

namespace aspectra {

/// Shared knobs for every verification suite. Strict-inequality premises on
/// Perron entries are evaluated with `premise_slack`; near-ties route to
/// premise-not-met instead of risking a false violation. Spectral claims are
/// certified with disjoint Collatz-Wielandt intervals separated by `margin`.
struct SuiteOptions {
  int k = 3;
  int m = 5;
  int d = 0;  // nc suite only; 0 means every valid diameter
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75};
  double tolerance = 1e-10;
  double margin = 1e-8;
  double premise_slack = 1e-12;
  std::uint64_t seed = 20260801;
  int per_class_cap = 24;  // deterministic sample cap for moving/switch instances
  long budget = 500000;

  SolverOptions solver(double alpha) const {
    SolverOptions s;
    s.alpha = alpha;
    s.tolerance = tolerance;
    return s;
  }
};

struct InstanceRecord {
  std::string description;
  double alpha = 0.0;
  std::string verdict;  // confirmed | violated | inconclusive | premise-not-met | suite-specific
  nlohmann::json details;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json options;
  std::vector<InstanceRecord> instances;
  std::vector<std::string> notes;

  std::map<std::string, int> counts() const;
  bool has_violations() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

// ---- instance descriptions ------------------------------------------------

struct MoveInstance {
  Hypergraph g;
  Vertex receiver = -1;
  std::vector<std::pair<int, Vertex>> moves;  // (edge index, pivot)
  std::string label;
};

struct SwitchInstance {
  Hypergraph g;
  int e = -1, f = -1;
  std::vector<Vertex> u1, v1;
  std::string label;
};

enum class GraftKind { SameVertex, PendantEdge, InternalPath };

struct GraftInstance {
  Hypergraph base;
  Vertex u = -1, v = -1;
  int s = 0;  // internal path length joining u,v; 0 for u == v
  int p = 1, q = 1;
  GraftKind kind = GraftKind::SameVertex;
  std::string label;
};

struct OperationIInstance {
  Hypergraph g;
  int e = -1;
  Vertex v1 = -1, v2 = -1;
  std::string label;
};

// ---- deterministic instance generators -------------------------------------

std::vector<MoveInstance> standard_moving_instances(const SuiteOptions& opts);
std::vector<SwitchInstance> standard_switch_instances(const SuiteOptions& opts);
std::vector<GraftInstance> standard_grafting_instances(const SuiteOptions& opts);
std::vector<OperationIInstance> standard_operation_I_instances(const SuiteOptions& opts);

// ---- suites ----------------------------------------------------------------

/// Edge moving: when the receiver's Perron entry dominates every pivot's,
/// the rewritten hypergraph must have a strictly larger alpha-spectral
/// radius.
VerificationReport verify_edge_moving(std::span<const MoveInstance> instances,
                                      const SuiteOptions& opts);

/// 2-switch: under the block-product premises the radius may not drop; when
/// both premises are strict the increase must be strict.
VerificationReport verify_two_switch(std::span<const SwitchInstance> instances,
                                     const SuiteOptions& opts);

/// Grafting: shifting pendant-path length from the short to the long side,
/// (p,q) -> (p+1,q-1), strictly lowers the radius.
VerificationReport verify_grafting(std::span<const GraftInstance> instances,
                                   const SuiteOptions& opts);

/// Operation I strictly raises the radius; chains terminate in a power
/// hypergraph.
VerificationReport verify_operation_I(std::span<const OperationIInstance> instances,
                                      const SuiteOptions& opts);

/// Perron profile along the two grafted paths: if rho(p,q) <= rho(p+1,q-1)
/// then the long-side entries dominate pairwise. Confirmed when the profile
/// holds or the hypothesis certifiably fails (contrapositive consistency).
VerificationReport verify_lemma1_profile(std::span<const GraftInstance> instances,
                                         const SuiteOptions& opts);

/// Full ranking of all classes with m edges: unique maximum (the
/// hyperstar), unique second place (the double star S(1,m-2)), the full
/// double-star chain, and the non-pendant-count reduction step.
VerificationReport extremal_scan(const SuiteOptions& opts);

/// Non-caterpillar classes with diameter d: maximum attained by H1 or H2
/// with certified margin; conjecture status of H1 vs H2 per alpha; for the
/// full d range, the global maximum must sit at d = 4.
VerificationReport nc_scan(const SuiteOptions& opts);

/// Runs the named suite ("moving", "switch", "grafting", "op1", "extremal",
/// "nc", "lemma1") or "all", with the standard instance generators.
std::vector<VerificationReport> run_suites(const std::string& which, const SuiteOptions& opts);

}  // namespace aspectra
