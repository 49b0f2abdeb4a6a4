#include "aspectra/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aspectra {

namespace {

constexpr const char* kConfirmed = "confirmed";
constexpr const char* kViolated = "violated";
constexpr const char* kInconclusive = "inconclusive";
constexpr const char* kPremiseNotMet = "premise-not-met";

nlohmann::json options_json(const SuiteOptions& o) {
  return nlohmann::json{{"k", o.k},
                        {"m", o.m},
                        {"d", o.d},
                        {"alphas", o.alphas},
                        {"tolerance", o.tolerance},
                        {"margin", o.margin},
                        {"premise_slack", o.premise_slack},
                        {"seed", o.seed},
                        {"per_class_cap", o.per_class_cap},
                        {"budget", o.budget}};
}

nlohmann::json interval_json(const SpectralResult& r) {
  return nlohmann::json{{"rho", r.rho},
                        {"low", r.cw_low},
                        {"high", r.cw_high},
                        {"iterations", r.iterations},
                        {"residual", r.residual}};
}

// Runs jobs in parallel; exceptions are collected and the first one rethrown
// once every job has finished.
template <typename F>
void run_jobs(int count, F&& f) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      f(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string class_label(const SuiteOptions& o, int index) {
  std::ostringstream s;
  s << "k" << o.k << " m" << o.m << " class#" << index;
  return s.str();
}

template <typename T>
void cap_per_class(std::vector<T>& candidates, std::vector<T>& out, int cap, std::uint64_t seed) {
  if (cap > 0 && static_cast<int>(candidates.size()) > cap) {
    std::mt19937_64 rng(seed);
    std::vector<T> picked;
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(picked),
                static_cast<std::size_t>(cap), rng);
    for (auto& c : picked) out.push_back(std::move(c));
  } else {
    for (auto& c : candidates) out.push_back(std::move(c));
  }
  candidates.clear();
}

double perron_product(const std::vector<double>& x, const std::vector<Vertex>& set) {
  double p = 1.0;
  for (Vertex v : set) p *= x[static_cast<std::size_t>(v)];
  return p;
}

}  // namespace

std::map<std::string, int> VerificationReport::counts() const {
  std::map<std::string, int> c;
  for (const auto& r : instances) ++c[r.verdict];
  return c;
}

bool VerificationReport::has_violations() const {
  for (const auto& r : instances)
    if (r.verdict == kViolated) return true;
  return false;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  for (const auto& r : instances)
    inst.push_back(nlohmann::json{{"description", r.description},
                                  {"alpha", r.alpha},
                                  {"verdict", r.verdict},
                                  {"details", r.details}});
  return nlohmann::json{{"format", 1},
                        {"suite", suite},
                        {"options", options},
                        {"instances", inst},
                        {"counts", counts()},
                        {"notes", notes}};
}

std::string VerificationReport::summary() const {
  std::ostringstream s;
  s << "suite=" << suite << " instances=" << instances.size();
  for (const auto& [verdict, n] : counts()) s << " " << verdict << "=" << n;
  for (const auto& note : notes) s << "\n  note: " << note;
  for (const auto& r : instances)
    if (r.verdict == kViolated) s << "\n  VIOLATED: " << r.description << " alpha=" << r.alpha;
  return s.str();
}

// ---- generators -------------------------------------------------------------

std::vector<MoveInstance> standard_moving_instances(const SuiteOptions& opts) {
  auto classes = enumerate_supertrees(opts.k, opts.m, opts.budget);
  std::vector<MoveInstance> out;
  for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
    const Hypergraph& g = classes[static_cast<std::size_t>(ci)];
    std::vector<MoveInstance> cand;
    // Single-edge moves: every (edge, pivot, receiver) triple whose result
    // is simple and connected.
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      for (Vertex pivot : g.edge(ei)) {
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
          if (std::binary_search(g.edge(ei).begin(), g.edge(ei).end(), u)) continue;
          std::vector<std::pair<int, Vertex>> mv{{ei, pivot}};
          try {
            auto [gp, rec] = move_edges(g, u, mv);
            if (!is_connected(gp)) continue;
            std::ostringstream lab;
            lab << class_label(opts, ci) << ": move e" << ei << "@v" << pivot << " -> u" << u;
            cand.push_back(MoveInstance{g, u, mv, lab.str()});
          } catch (const Error&) {
          }
        }
      }
    }
    // Corollary-1 pattern: both directions of "move every off-edge of one
    // heavy vertex onto the other heavy vertex of a shared edge".
    auto g_key = canonical_key(g);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      std::vector<Vertex> heavy;
      for (Vertex v : g.edge(ei))
        if (g.degree(v) >= 2) heavy.push_back(v);
      for (Vertex u1 : heavy) {
        for (Vertex u2 : heavy) {
          if (u1 == u2) continue;
          std::vector<std::pair<int, Vertex>> mv;
          for (int fi : g.incident_edges(u2))
            if (!std::binary_search(g.edge(fi).begin(), g.edge(fi).end(), u1))
              mv.emplace_back(fi, u2);
          if (mv.empty()) continue;
          bool u1_has_off = false;
          for (int fi : g.incident_edges(u1))
            if (!std::binary_search(g.edge(fi).begin(), g.edge(fi).end(), u2)) u1_has_off = true;
          if (!u1_has_off) continue;
          try {
            auto [gp, rec] = move_edges(g, u1, mv);
            if (!is_connected(gp) || canonical_key(gp) == g_key) continue;
            std::ostringstream lab;
            lab << class_label(opts, ci) << ": cor1 u1=" << u1 << " u2=" << u2 << " ("
                << mv.size() << " edges)";
            cand.push_back(MoveInstance{g, u1, mv, lab.str()});
          } catch (const Error&) {
          }
        }
      }
    }
    cap_per_class(cand, out, opts.per_class_cap,
                  opts.seed + 1000003ull * static_cast<std::uint64_t>(ci));
  }
  return out;
}

std::vector<SwitchInstance> standard_switch_instances(const SuiteOptions& opts) {
  auto classes = enumerate_supertrees(opts.k, opts.m, opts.budget);
  std::vector<SwitchInstance> out;
  const int k = opts.k;
  for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
    const Hypergraph& g = classes[static_cast<std::size_t>(ci)];
    std::vector<SwitchInstance> cand;
    for (int e = 0; e < g.edge_count(); ++e) {
      for (int f = e + 1; f < g.edge_count(); ++f) {
        std::vector<Vertex> shared;
        std::set_intersection(g.edge(e).begin(), g.edge(e).end(), g.edge(f).begin(),
                              g.edge(f).end(), std::back_inserter(shared));
        if (!shared.empty()) continue;  // disjoint pairs match the corollary setting
        for (int mask_e = 1; mask_e < (1 << k) - 1; ++mask_e) {
          for (int mask_f = 1; mask_f < (1 << k) - 1; ++mask_f) {
            if (std::popcount(static_cast<unsigned>(mask_e)) !=
                std::popcount(static_cast<unsigned>(mask_f)))
              continue;
            std::vector<Vertex> u1, v1;
            for (int b = 0; b < k; ++b) {
              if (mask_e & (1 << b)) u1.push_back(g.edge(e)[static_cast<std::size_t>(b)]);
              if (mask_f & (1 << b)) v1.push_back(g.edge(f)[static_cast<std::size_t>(b)]);
            }
            try {
              auto [gp, rec] = two_switch(g, e, f, u1, v1);
              if (!is_connected(gp)) continue;
              std::ostringstream lab;
              lab << class_label(opts, ci) << ": switch e" << e << "/e" << f << " |U1|="
                  << u1.size();
              cand.push_back(SwitchInstance{g, e, f, u1, v1, lab.str()});
            } catch (const Error&) {
            }
          }
        }
      }
    }
    cap_per_class(cand, out, opts.per_class_cap,
                  opts.seed + 2000003ull * static_cast<std::uint64_t>(ci) + 1);
  }
  return out;
}

std::vector<GraftInstance> standard_grafting_instances(const SuiteOptions& opts) {
  std::vector<GraftInstance> out;
  const int max_total = 6;  // p + q budget per instance family
  // Skip relocations that merely relabel the same class (e.g. both
  // attachments on one pendant edge of a single-edge base give loose paths
  // for every split); the strict inequality has nothing to separate there.
  auto degenerate = [](const Hypergraph& base, Vertex u, Vertex v, int p, int q) {
    Hypergraph a = attach_pendant_paths(base, u, p, v, q);
    Hypergraph b = attach_pendant_paths(base, u, p + 1, v, q - 1);
    return is_supertree(a) && is_supertree(b) && canonical_key(a) == canonical_key(b);
  };
  for (int mb = 1; mb <= 3; ++mb) {
    auto bases = enumerate_supertrees(opts.k, mb, opts.budget);
    for (int ci = 0; ci < static_cast<int>(bases.size()); ++ci) {
      const Hypergraph& base = bases[static_cast<std::size_t>(ci)];
      auto pq_pairs = [&](int s_min) {
        std::vector<std::pair<int, int>> pq;
        for (int p = 1; p <= max_total - 1; ++p)
          for (int q = 1; q <= p && p + q <= max_total; ++q)
            if (p - q + 1 >= s_min) pq.emplace_back(p, q);
        return pq;
      };
      auto label = [&](const char* kind, Vertex u, Vertex v, int s, int p, int q) {
        std::ostringstream lab;
        lab << "base k" << opts.k << " m" << mb << " class#" << ci << " " << kind << " u=" << u
            << " v=" << v << " s=" << s << " (p,q)=(" << p << "," << q << ")";
        return lab.str();
      };
      // Same-vertex grafting at every vertex of the base.
      for (Vertex u = 0; u < base.vertex_count(); ++u)
        for (auto [p, q] : pq_pairs(0))
          if (!degenerate(base, u, u, p, q))
            out.push_back(GraftInstance{base, u, u, 0, p, q, GraftKind::SameVertex,
                                        label("same-vertex", u, u, 0, p, q)});
      // Pendant-edge endpoints: pairs of degree-1 vertices inside a pendant edge.
      auto cls = classify_edges(base);
      for (int ei = 0; ei < base.edge_count(); ++ei) {
        if (cls[static_cast<std::size_t>(ei)] != EdgeClass::Pendant) continue;
        const Edge& e = base.edge(ei);
        for (std::size_t i = 0; i < e.size(); ++i)
          for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (base.degree(e[i]) != 1 || base.degree(e[j]) != 1) continue;
            for (auto [p, q] : pq_pairs(0))
              if (!degenerate(base, e[i], e[j], p, q))
                out.push_back(GraftInstance{base, e[i], e[j], 0, p, q, GraftKind::PendantEdge,
                                            label("pendant-edge", e[i], e[j], 0, p, q)});
          }
      }
      // Internal-path pairs: both endpoints of degree >= 2 joined by a path
      // whose interior stays inside the path.
      for (Vertex u = 0; u < base.vertex_count(); ++u) {
        if (base.degree(u) < 2) continue;
        for (auto [p, q] : pq_pairs(0))
          if (!degenerate(base, u, u, p, q))
            out.push_back(GraftInstance{base, u, u, 0, p, q, GraftKind::InternalPath,
                                        label("internal-path", u, u, 0, p, q)});
        for (Vertex v = u + 1; v < base.vertex_count(); ++v) {
          if (base.degree(v) < 2) continue;
          PathTrace tr = path_between(base, u, v);
          int s = tr.length();
          bool clean = true;
          for (int ei : tr.edges)
            for (Vertex w : base.edge(ei)) {
              if (w == u || w == v) continue;
              int on_path = 0;
              for (int fi : base.incident_edges(w))
                if (std::find(tr.edges.begin(), tr.edges.end(), fi) != tr.edges.end()) ++on_path;
              if (on_path != base.degree(w)) clean = false;
            }
          if (!clean) continue;
          for (auto [p, q] : pq_pairs(s))
            if (!degenerate(base, u, v, p, q))
              out.push_back(GraftInstance{base, u, v, s, p, q, GraftKind::InternalPath,
                                          label("internal-path", u, v, s, p, q)});
        }
      }
    }
  }
  return out;
}

std::vector<OperationIInstance> standard_operation_I_instances(const SuiteOptions& opts) {
  auto classes = enumerate_supertrees(opts.k, opts.m, opts.budget);
  std::vector<OperationIInstance> out;
  for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
    const Hypergraph& g = classes[static_cast<std::size_t>(ci)];
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      std::vector<Vertex> heavy;
      for (Vertex v : g.edge(ei))
        if (g.degree(v) >= 2) heavy.push_back(v);
      if (static_cast<int>(heavy.size()) < 3) continue;
      for (Vertex a : heavy)
        for (Vertex b : heavy) {
          if (a == b) continue;
          std::ostringstream lab;
          lab << class_label(opts, ci) << ": op1 e" << ei << " recv " << a << " keep " << b;
          out.push_back(OperationIInstance{g, ei, a, b, lab.str()});
        }
    }
    // Deterministic chain: first branching edge, two smallest heavy labels,
    // repeated until the class becomes a power hypergraph.
    Hypergraph cur = g;
    int step = 0;
    for (;;) {
      auto cls = classify_edges(cur);
      int branching = -1;
      for (int ei = 0; ei < cur.edge_count() && branching < 0; ++ei)
        if (cls[static_cast<std::size_t>(ei)] == EdgeClass::Branching) branching = ei;
      if (branching < 0) break;
      std::vector<Vertex> heavy;
      for (Vertex v : cur.edge(branching))
        if (cur.degree(v) >= 2) heavy.push_back(v);
      std::ostringstream lab;
      lab << class_label(opts, ci) << ": op1-chain step " << step;
      out.push_back(OperationIInstance{cur, branching, heavy[0], heavy[1], lab.str()});
      cur = operation_I(cur, branching, heavy[0], heavy[1]).first;
      ++step;
    }
  }
  return out;
}

// ---- suite implementations ---------------------------------------------------

VerificationReport verify_edge_moving(std::span<const MoveInstance> instances,
                                      const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "moving";
  rep.options = options_json(opts);
  const int na = static_cast<int>(opts.alphas.size());
  rep.instances.resize(instances.size() * static_cast<std::size_t>(na));
  run_jobs(static_cast<int>(rep.instances.size()), [&](int job) {
    const MoveInstance& inst = instances[static_cast<std::size_t>(job / na)];
    const double alpha = opts.alphas[static_cast<std::size_t>(job % na)];
    InstanceRecord& rec = rep.instances[static_cast<std::size_t>(job)];
    rec.description = inst.label;
    rec.alpha = alpha;
    auto before = spectral_radius(inst.g, opts.solver(alpha));
    double x_recv = before.perron[static_cast<std::size_t>(inst.receiver)];
    double x_pivot = 0.0;
    for (auto [ei, v] : inst.moves)
      x_pivot = std::max(x_pivot, before.perron[static_cast<std::size_t>(v)]);
    bool premise = x_recv >= x_pivot - opts.premise_slack;
    rec.details["x_receiver"] = x_recv;
    rec.details["x_pivot_max"] = x_pivot;
    rec.details["rho_before"] = interval_json(before);
    auto [moved, record] = move_edges(inst.g, inst.receiver, inst.moves);
    rec.details["move"] = record.to_json();
    if (!is_connected(moved)) {
      rec.verdict = kPremiseNotMet;
      rec.details["note"] = "result disconnected";
      return;
    }
    auto after = spectral_radius(moved, opts.solver(alpha));
    rec.details["rho_after"] = interval_json(after);
    if (!premise) {
      rec.verdict = kPremiseNotMet;
      return;
    }
    switch (compare_results(after, before, opts.margin)) {
      case Comparison::Greater: rec.verdict = kConfirmed; break;
      case Comparison::Less: rec.verdict = kViolated; break;
      case Comparison::Inconclusive: rec.verdict = kInconclusive; break;
    }
  });
  return rep;
}

VerificationReport verify_two_switch(std::span<const SwitchInstance> instances,
                                     const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "switch";
  rep.options = options_json(opts);
  const int na = static_cast<int>(opts.alphas.size());
  rep.instances.resize(instances.size() * static_cast<std::size_t>(na));
  run_jobs(static_cast<int>(rep.instances.size()), [&](int job) {
    const SwitchInstance& inst = instances[static_cast<std::size_t>(job / na)];
    const double alpha = opts.alphas[static_cast<std::size_t>(job % na)];
    InstanceRecord& rec = rep.instances[static_cast<std::size_t>(job)];
    rec.description = inst.label;
    rec.alpha = alpha;
    auto before = spectral_radius(inst.g, opts.solver(alpha));
    Edge u2, v2;
    std::set_difference(inst.g.edge(inst.e).begin(), inst.g.edge(inst.e).end(), inst.u1.begin(),
                        inst.u1.end(), std::back_inserter(u2));
    std::set_difference(inst.g.edge(inst.f).begin(), inst.g.edge(inst.f).end(), inst.v1.begin(),
                        inst.v1.end(), std::back_inserter(v2));
    double xu1 = perron_product(before.perron, inst.u1);
    double xv1 = perron_product(before.perron, inst.v1);
    double xu2 = perron_product(before.perron, u2);
    double xv2 = perron_product(before.perron, v2);
    rec.details["x_U1"] = xu1;
    rec.details["x_V1"] = xv1;
    rec.details["x_U2"] = xu2;
    rec.details["x_V2"] = xv2;
    rec.details["rho_before"] = interval_json(before);
    bool premise = xu1 >= xv1 - opts.premise_slack && xu2 <= xv2 + opts.premise_slack;
    bool strict = xu1 > xv1 + 1e-9 && xv2 > xu2 + 1e-9;
    rec.details["strict"] = strict;
    auto [switched, record] = two_switch(inst.g, inst.e, inst.f, inst.u1, inst.v1);
    rec.details["move"] = record.to_json();
    if (!is_connected(switched)) {
      rec.verdict = kPremiseNotMet;
      rec.details["note"] = "result disconnected";
      return;
    }
    auto after = spectral_radius(switched, opts.solver(alpha));
    rec.details["rho_after"] = interval_json(after);
    if (!premise) {
      rec.verdict = kPremiseNotMet;
      return;
    }
    if (strict) {
      switch (compare_results(after, before, opts.margin)) {
        case Comparison::Greater: rec.verdict = kConfirmed; break;
        case Comparison::Less: rec.verdict = kViolated; break;
        case Comparison::Inconclusive: rec.verdict = kInconclusive; break;
      }
      return;
    }
    // Non-strict claim: rho may not drop by more than the certification slack.
    if (after.cw_high < before.cw_low - 1e-9)
      rec.verdict = kViolated;
    else if (after.cw_low >= before.cw_high - 1e-9)
      rec.verdict = kConfirmed;
    else
      rec.verdict = kInconclusive;
  });
  return rep;
}

VerificationReport verify_grafting(std::span<const GraftInstance> instances,
                                   const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "grafting";
  rep.options = options_json(opts);
  const int na = static_cast<int>(opts.alphas.size());
  rep.instances.resize(instances.size() * static_cast<std::size_t>(na));
  run_jobs(static_cast<int>(rep.instances.size()), [&](int job) {
    const GraftInstance& inst = instances[static_cast<std::size_t>(job / na)];
    const double alpha = opts.alphas[static_cast<std::size_t>(job % na)];
    InstanceRecord& rec = rep.instances[static_cast<std::size_t>(job)];
    rec.description = inst.label;
    rec.alpha = alpha;
    Hypergraph current = attach_pendant_paths(inst.base, inst.u, inst.p, inst.v, inst.q);
    Hypergraph next = attach_pendant_paths(inst.base, inst.u, inst.p + 1, inst.v, inst.q - 1);
    // Degenerate relocations (only possible with u != v on tiny bases) swap
    // isomorphic graphs; the strict claim does not apply to them.
    if (is_supertree(current) && is_supertree(next) &&
        canonical_key(current) == canonical_key(next)) {
      rec.verdict = kPremiseNotMet;
      rec.details["note"] = "isomorphic pair";
      return;
    }
    auto r_cur = spectral_radius(current, opts.solver(alpha));
    auto r_next = spectral_radius(next, opts.solver(alpha));
    rec.details["rho_pq"] = interval_json(r_cur);
    rec.details["rho_next"] = interval_json(r_next);
    switch (compare_results(r_cur, r_next, opts.margin)) {
      case Comparison::Greater: rec.verdict = kConfirmed; break;
      case Comparison::Less: rec.verdict = kViolated; break;
      case Comparison::Inconclusive: rec.verdict = kInconclusive; break;
    }
  });
  return rep;
}

VerificationReport verify_operation_I(std::span<const OperationIInstance> instances,
                                      const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "op1";
  rep.options = options_json(opts);
  const int na = static_cast<int>(opts.alphas.size());
  rep.instances.resize(instances.size() * static_cast<std::size_t>(na));
  run_jobs(static_cast<int>(rep.instances.size()), [&](int job) {
    const OperationIInstance& inst = instances[static_cast<std::size_t>(job / na)];
    const double alpha = opts.alphas[static_cast<std::size_t>(job % na)];
    InstanceRecord& rec = rep.instances[static_cast<std::size_t>(job)];
    rec.description = inst.label;
    rec.alpha = alpha;
    auto before = spectral_radius(inst.g, opts.solver(alpha));
    rec.details["rho_before"] = interval_json(before);
    Hypergraph moved = inst.g;
    try {
      auto [result, record] = operation_I(inst.g, inst.e, inst.v1, inst.v2);
      moved = std::move(result);
      rec.details["move"] = record.to_json();
    } catch (const Error& err) {
      if (err.code() == Errc::NotApplicable) {
        rec.verdict = kPremiseNotMet;
        rec.details["note"] = "operation not applicable";
        return;
      }
      throw;
    }
    auto after = spectral_radius(moved, opts.solver(alpha));
    rec.details["rho_after"] = interval_json(after);
    switch (compare_results(after, before, opts.margin)) {
      case Comparison::Greater: rec.verdict = kConfirmed; break;
      case Comparison::Less: rec.verdict = kViolated; break;
      case Comparison::Inconclusive: rec.verdict = kInconclusive; break;
    }
  });
  return rep;
}

VerificationReport verify_lemma1_profile(std::span<const GraftInstance> instances,
                                         const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "lemma1";
  rep.options = options_json(opts);
  const int na = static_cast<int>(opts.alphas.size());
  rep.instances.resize(instances.size() * static_cast<std::size_t>(na));
  run_jobs(static_cast<int>(rep.instances.size()), [&](int job) {
    const GraftInstance& inst = instances[static_cast<std::size_t>(job / na)];
    const double alpha = opts.alphas[static_cast<std::size_t>(job % na)];
    InstanceRecord& rec = rep.instances[static_cast<std::size_t>(job)];
    rec.description = inst.label;
    rec.alpha = alpha;
    auto current = attach_pendant_paths(inst.base, inst.u, inst.p, inst.v, inst.q);
    auto longer = attach_pendant_paths_traced(inst.base, inst.u, inst.p + 1, inst.v, inst.q - 1);
    auto r_cur = spectral_radius(current, opts.solver(alpha));
    auto r_long = spectral_radius(longer.graph, opts.solver(alpha));
    rec.details["rho_pq"] = interval_json(r_cur);
    rec.details["rho_next"] = interval_json(r_long);
    // Profile x[u_{p-i}] > x[v_{q-1-i}] along the paths of G(p+1, q-1).
    bool profile = true;
    double min_gap = std::numeric_limits<double>::infinity();
    nlohmann::json pairs = nlohmann::json::array();
    for (int i = 0; i < inst.q; ++i) {
      double xu = r_long.perron[static_cast<std::size_t>(
          longer.at_u.vertices[static_cast<std::size_t>(inst.p - i)])];
      double xv = r_long.perron[static_cast<std::size_t>(
          longer.at_v.vertices[static_cast<std::size_t>(inst.q - 1 - i)])];
      min_gap = std::min(min_gap, xu - xv);
      pairs.push_back(nlohmann::json{{"i", i}, {"x_u", xu}, {"x_v", xv}});
      if (!(xu > xv - opts.premise_slack)) profile = false;
    }
    rec.details["profile"] = pairs;
    rec.details["profile_holds"] = profile;
    rec.details["min_profile_gap"] = min_gap;
    bool hyp_false = r_cur.cw_low > r_long.cw_high;  // rho(p,q) > rho(p+1,q-1) certified
    bool hyp_true = r_long.cw_low >= r_cur.cw_high;  // rho(p,q) <= rho(p+1,q-1) certified
    if (profile || hyp_false)
      rec.verdict = kConfirmed;
    else
      rec.verdict = hyp_true ? kViolated : kInconclusive;
  });
  return rep;
}

VerificationReport extremal_scan(const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "extremal";
  rep.options = options_json(opts);
  if (opts.m < 3) {
    rep.notes.push_back("skipped: extremal ranking needs m >= 3");
    return rep;
  }
  auto classes = enumerate_supertrees(opts.k, opts.m, opts.budget);
  const int nc = static_cast<int>(classes.size());
  const int na = static_cast<int>(opts.alphas.size());

  CanonicalKey star_key = canonical_key(star(opts.k, opts.m));
  int star_idx = -1;
  std::vector<int> dstar_idx(static_cast<std::size_t>((opts.m - 1) / 2) + 1, -1);
  for (int a = 1; 2 * a <= opts.m - 1; ++a) {
    CanonicalKey key = canonical_key(double_star(opts.k, a, opts.m - 1 - a));
    for (int ci = 0; ci < nc; ++ci)
      if (canonical_key(classes[static_cast<std::size_t>(ci)]) == key)
        dstar_idx[static_cast<std::size_t>(a)] = ci;
  }
  for (int ci = 0; ci < nc; ++ci)
    if (canonical_key(classes[static_cast<std::size_t>(ci)]) == star_key) star_idx = ci;
  dstar_idx[0] = star_idx;  // S(0, m-1) is the hyperstar
  if (star_idx < 0 || dstar_idx[1] < 0)
    throw std::logic_error("enumeration is missing the star or the double star");

  std::vector<int> n2(static_cast<std::size_t>(nc));
  for (int ci = 0; ci < nc; ++ci)
    n2[static_cast<std::size_t>(ci)] = count_non_pendant(classes[static_cast<std::size_t>(ci)]);

  std::vector<SpectralResult> results(static_cast<std::size_t>(nc * na));
  run_jobs(nc * na, [&](int job) {
    results[static_cast<std::size_t>(job)] = spectral_radius(
        classes[static_cast<std::size_t>(job / na)],
        opts.solver(opts.alphas[static_cast<std::size_t>(job % na)]));
  });
  auto res = [&](int ci, int ai) -> const SpectralResult& {
    return results[static_cast<std::size_t>(ci * na + ai)];
  };

  for (int ai = 0; ai < na; ++ai) {
    const double alpha = opts.alphas[static_cast<std::size_t>(ai)];
    // Unique maximum: the hyperstar beats everything else with margin.
    {
      InstanceRecord rec;
      rec.description = "hyperstar-maximum";
      rec.alpha = alpha;
      double worst = std::numeric_limits<double>::infinity();
      int runner = -1;
      bool ok = true;
      for (int ci = 0; ci < nc; ++ci) {
        if (ci == star_idx) continue;
        double gap = res(star_idx, ai).cw_low - res(ci, ai).cw_high;
        if (gap < worst) {
          worst = gap;
          runner = ci;
        }
        if (gap <= opts.margin) ok = false;
      }
      rec.verdict = ok ? kConfirmed : kViolated;
      rec.details["classes"] = nc;
      rec.details["min_margin"] = worst;
      rec.details["closest_class"] = runner;
      rec.details["rho_star"] = interval_json(res(star_idx, ai));
      rep.instances.push_back(std::move(rec));
    }
    // Unique second: S(1, m-2) beats every class that is not the star.
    {
      InstanceRecord rec;
      rec.description = "second-place S(1,m-2)";
      rec.alpha = alpha;
      double worst = std::numeric_limits<double>::infinity();
      bool ok = res(star_idx, ai).cw_low - res(dstar_idx[1], ai).cw_high > opts.margin;
      for (int ci = 0; ci < nc; ++ci) {
        if (ci == star_idx || ci == dstar_idx[1]) continue;
        double gap = res(dstar_idx[1], ai).cw_low - res(ci, ai).cw_high;
        worst = std::min(worst, gap);
        if (gap <= opts.margin) ok = false;
      }
      rec.verdict = ok ? kConfirmed : kViolated;
      rec.details["min_margin"] = worst;
      rec.details["rho_second"] = interval_json(res(dstar_idx[1], ai));
      rep.instances.push_back(std::move(rec));
    }
    // Full double-star chain S(a, m-1-a) ordered by a.
    for (int a = 0; 2 * a <= opts.m - 1; ++a) {
      for (int c = a + 1; 2 * c <= opts.m - 1; ++c) {
        InstanceRecord rec;
        std::ostringstream d;
        d << "double-star chain S(" << a << "," << opts.m - 1 - a << ") > S(" << c << ","
          << opts.m - 1 - c << ")";
        rec.description = d.str();
        rec.alpha = alpha;
        double gap =
            res(dstar_idx[static_cast<std::size_t>(a)], ai).cw_low -
            res(dstar_idx[static_cast<std::size_t>(c)], ai).cw_high;
        rec.details["margin"] = gap;
        rec.verdict = gap > opts.margin ? kConfirmed : kViolated;
        rep.instances.push_back(std::move(rec));
      }
    }
    // Non-pendant-count reduction: every class at level j >= 2 is beaten by
    // some class at level j-1.
    int max_n2 = *std::max_element(n2.begin(), n2.end());
    for (int j = 2; j <= max_n2; ++j) {
      InstanceRecord rec;
      std::ostringstream d;
      d << "N2-reduction level " << j << " -> " << j - 1;
      rec.description = d.str();
      rec.alpha = alpha;
      double best_lower = -std::numeric_limits<double>::infinity();
      for (int ci = 0; ci < nc; ++ci)
        if (n2[static_cast<std::size_t>(ci)] == j - 1)
          best_lower = std::max(best_lower, res(ci, ai).cw_low);
      bool ok = true;
      double worst = std::numeric_limits<double>::infinity();
      int count = 0;
      for (int ci = 0; ci < nc; ++ci) {
        if (n2[static_cast<std::size_t>(ci)] != j) continue;
        ++count;
        double gap = best_lower - res(ci, ai).cw_high;
        worst = std::min(worst, gap);
        if (gap <= opts.margin) ok = false;
      }
      if (count == 0) continue;
      rec.details["classes_at_level"] = count;
      rec.details["min_margin"] = worst;
      rec.verdict = ok ? kConfirmed : kViolated;
      rep.instances.push_back(std::move(rec));
    }
  }
  return rep;
}

VerificationReport nc_scan(const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = "nc";
  rep.options = options_json(opts);
  if (opts.m < 6) {
    rep.notes.push_back("skipped: NC(m,d) is empty for m < 6");
    return rep;
  }
  std::vector<int> ds;
  if (opts.d > 0) {
    if (opts.d < 4 || opts.d > opts.m - 2)
      fail(Errc::InvalidParameter, "nc scan needs 4 <= d <= m-2");
    ds.push_back(opts.d);
  } else {
    for (int d = 4; d <= opts.m - 2; ++d) ds.push_back(d);
  }
  auto classes = enumerate_supertrees(opts.k, opts.m, opts.budget);
  const int nc = static_cast<int>(classes.size());
  const int na = static_cast<int>(opts.alphas.size());
  std::vector<int> diam(static_cast<std::size_t>(nc));
  std::vector<bool> cat(static_cast<std::size_t>(nc));
  std::vector<CanonicalKey> keys(static_cast<std::size_t>(nc));
  run_jobs(nc, [&](int ci) {
    const Hypergraph& h = classes[static_cast<std::size_t>(ci)];
    diam[static_cast<std::size_t>(ci)] = diameter_and_diametral_path(h).first;
    cat[static_cast<std::size_t>(ci)] = is_caterpillar(h);
    keys[static_cast<std::size_t>(ci)] = canonical_key(h);
  });

  std::vector<int> nc_all;  // every non-caterpillar class in the scanned range
  std::vector<std::vector<int>> ncd(ds.size());
  for (std::size_t di = 0; di < ds.size(); ++di)
    for (int ci = 0; ci < nc; ++ci)
      if (!cat[static_cast<std::size_t>(ci)] && diam[static_cast<std::size_t>(ci)] == ds[di])
        ncd[di].push_back(ci);
  for (const auto& v : ncd) nc_all.insert(nc_all.end(), v.begin(), v.end());

  std::vector<SpectralResult> results(static_cast<std::size_t>(nc) * static_cast<std::size_t>(na));
  std::vector<char> solved(static_cast<std::size_t>(nc), 0);
  for (int ci : nc_all) solved[static_cast<std::size_t>(ci)] = 1;
  std::vector<int> to_solve;
  for (int ci = 0; ci < nc; ++ci)
    if (solved[static_cast<std::size_t>(ci)]) to_solve.push_back(ci);
  run_jobs(static_cast<int>(to_solve.size()) * na, [&](int job) {
    int ci = to_solve[static_cast<std::size_t>(job / na)];
    int ai = job % na;
    results[static_cast<std::size_t>(ci * na + ai)] = spectral_radius(
        classes[static_cast<std::size_t>(ci)], opts.solver(opts.alphas[static_cast<std::size_t>(ai)]));
  });
  auto res = [&](int ci, int ai) -> const SpectralResult& {
    return results[static_cast<std::size_t>(ci * na + ai)];
  };

  for (std::size_t di = 0; di < ds.size(); ++di) {
    const int d = ds[di];
    CanonicalKey k1 = canonical_key(h1(opts.k, opts.m, d));
    CanonicalKey k2 = canonical_key(h2(opts.k, opts.m, d));
    int i1 = -1, i2 = -1;
    for (int ci : ncd[di]) {
      if (keys[static_cast<std::size_t>(ci)] == k1) i1 = ci;
      if (keys[static_cast<std::size_t>(ci)] == k2) i2 = ci;
    }
    if (i1 < 0 || i2 < 0) throw std::logic_error("H1/H2 not found among NC(m,d) classes");
    for (int ai = 0; ai < na; ++ai) {
      const double alpha = opts.alphas[static_cast<std::size_t>(ai)];
      InstanceRecord rec;
      std::ostringstream desc;
      desc << "nc-maximum m=" << opts.m << " d=" << d;
      rec.description = desc.str();
      rec.alpha = alpha;
      double best = std::max(res(i1, ai).cw_low, res(i2, ai).cw_low);
      bool ok = true;
      double worst = std::numeric_limits<double>::infinity();
      for (int ci : ncd[di]) {
        if (ci == i1 || ci == i2) continue;
        double gap = best - res(ci, ai).cw_high;
        worst = std::min(worst, gap);
        if (gap <= opts.margin) ok = false;
      }
      rec.details["nc_classes"] = ncd[di].size();
      rec.details["rho_h1"] = interval_json(res(i1, ai));
      rec.details["rho_h2"] = interval_json(res(i2, ai));
      if (ncd[di].size() > 2) rec.details["min_margin"] = worst;
      rec.verdict = ok ? kConfirmed : kViolated;
      rep.instances.push_back(std::move(rec));

      InstanceRecord conj;
      std::ostringstream cdesc;
      cdesc << "conjecture H1>H2 m=" << opts.m << " d=" << d;
      conj.description = cdesc.str();
      conj.alpha = alpha;
      conj.details["h1_h2_isomorphic"] = (k1 == k2);
      if (k1 == k2)
        conj.verdict = "inconclusive";
      else if (res(i1, ai).cw_low > res(i2, ai).cw_high + opts.margin)
        conj.verdict = "supported";
      else if (res(i2, ai).cw_low > res(i1, ai).cw_high + opts.margin)
        conj.verdict = "contradicted-candidate";
      else
        conj.verdict = "inconclusive";
      rep.instances.push_back(std::move(conj));
    }
  }

  // Global maximum of NC(m) must sit at diameter 4.
  if (opts.d <= 0 && ds.size() > 1) {
    for (int ai = 0; ai < na; ++ai) {
      InstanceRecord rec;
      rec.description = "nc-global-maximum at d=4";
      rec.alpha = opts.alphas[static_cast<std::size_t>(ai)];
      double best4 = -std::numeric_limits<double>::infinity();
      for (int ci : ncd[0]) best4 = std::max(best4, res(ci, ai).cw_low);
      bool ok = true;
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t di = 1; di < ds.size(); ++di)
        for (int ci : ncd[di]) {
          double gap = best4 - res(ci, ai).cw_high;
          worst = std::min(worst, gap);
          if (gap <= opts.margin) ok = false;
        }
      rec.details["min_margin"] = worst;
      rec.verdict = ok ? kConfirmed : kViolated;
      rep.instances.push_back(std::move(rec));
    }
  }
  return rep;
}

std::vector<VerificationReport> run_suites(const std::string& which, const SuiteOptions& opts) {
  std::vector<VerificationReport> out;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("moving")) {
    auto inst = standard_moving_instances(opts);
    out.push_back(verify_edge_moving(inst, opts));
  }
  if (want("switch")) {
    auto inst = standard_switch_instances(opts);
    out.push_back(verify_two_switch(inst, opts));
  }
  if (want("grafting") || want("lemma1")) {
    auto inst = standard_grafting_instances(opts);
    if (want("grafting")) out.push_back(verify_grafting(inst, opts));
    if (want("lemma1")) out.push_back(verify_lemma1_profile(inst, opts));
  }
  if (want("op1")) {
    auto inst = standard_operation_I_instances(opts);
    out.push_back(verify_operation_I(inst, opts));
  }
  if (want("extremal")) out.push_back(extremal_scan(opts));
  if (want("nc")) out.push_back(nc_scan(opts));
  if (out.empty()) fail(Errc::InvalidParameter, "unknown suite: " + which);
  return out;
}

}  // namespace aspectra
