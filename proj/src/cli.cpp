#include "aspectra/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aspectra/enumerate.hpp"
#include "aspectra/families.hpp"
#include "aspectra/harness.hpp"
#include "aspectra/io.hpp"
#include "aspectra/spectral.hpp"

namespace aspectra {

namespace {

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.10g", v);
  return buf;
}

std::string interval_str(double low, double high) {
  return "[" + fmt10(low) + ", " + fmt10(high) + "]";
}

std::vector<double> parse_alphas(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::InvalidParameter, "bad alpha value: " + item);
    }
  }
  if (out.empty()) fail(Errc::InvalidParameter, "empty alpha list");
  return out;
}

// Canonical-key dictionary of the named families at a given (k, m), used to
// label ranking rows.
std::map<CanonicalKey, std::string> family_names(int k, int m) {
  std::map<CanonicalKey, std::string> names;
  auto put = [&](const Hypergraph& h, const std::string& name) {
    names.emplace(canonical_key(h), name);
  };
  put(star(k, m), "K1," + std::to_string(m) + "^" + std::to_string(k));
  if (m >= 1) put(loose_path(k, m), "P_" + std::to_string(m));
  for (int a = 1; 2 * a <= m - 1; ++a)
    put(double_star(k, a, m - 1 - a),
        "S(" + std::to_string(a) + "," + std::to_string(m - 1 - a) + ")");
  for (int d = 4; m >= 6 && d <= m - 2; ++d) {
    put(h1(k, m, d), "H1(" + std::to_string(m) + "," + std::to_string(d) + ")");
    put(h2(k, m, d), "H2(" + std::to_string(m) + "," + std::to_string(d) + ")");
  }
  return names;
}

struct RhoArgs {
  std::string input;
  double alpha = 0.0;
  double tol = 1e-10;
  double shift = 1.0;
  long max_iter = 1'000'000;
  bool as_json = false;
};

struct FamilyArgs {
  std::string kind;
  int k = 3;
  int d = 0, m = 0, a = 0, b = 0, s = 0, t = 0;
  std::string out_file;
};

struct EnumArgs {
  int k = 3;
  int m = 1;
  int diameter = 0;
  std::string caterpillar = "any";
  int n2 = -1;
  long budget = 500000;
  std::string out_dir;
};

struct VerifyArgs {
  std::string suite = "all";
  SuiteOptions opts;
  std::string alphas_csv = "0,0.25,0.5,0.75";
  std::string json_file;
};

struct RankArgs {
  int k = 3;
  int m = 4;
  double alpha = 0.0;
  int top = 10;
  long budget = 500000;
};

int do_rho(const RhoArgs& a, std::ostream& out) {
  Hypergraph h = load_hypergraph(a.input);
  SolverOptions so;
  so.alpha = a.alpha;
  so.tolerance = a.tol;
  so.shift = a.shift;
  so.max_iterations = a.max_iter;
  SpectralResult r = spectral_radius(h, so);
  if (a.as_json) {
    nlohmann::json j{{"format", 1},       {"alpha", a.alpha},
                     {"rho", r.rho},      {"cw_low", r.cw_low},
                     {"cw_high", r.cw_high}, {"cw_gap", r.cw_gap},
                     {"iterations", r.iterations}, {"residual", r.residual}};
    out << dump_json(j);
  } else {
    out << "rho = " << fmt10(r.rho) << "\n";
    out << "interval = " << interval_str(r.cw_low, r.cw_high) << "\n";
    out << "iterations = " << r.iterations << "\n";
    out << "residual = " << fmt10(r.residual) << "\n";
  }
  return 0;
}

int do_family(const FamilyArgs& a, std::ostream& out) {
  FamilySpec spec;
  spec.k = a.k;
  spec.d = a.d;
  spec.m = a.m;
  spec.a = a.a;
  spec.b = a.b;
  spec.s = a.s;
  spec.t = a.t;
  if (a.kind == "path")
    spec.kind = FamilySpec::Kind::LoosePath;
  else if (a.kind == "star")
    spec.kind = FamilySpec::Kind::Star;
  else if (a.kind == "dstar")
    spec.kind = FamilySpec::Kind::DoubleStar;
  else if (a.kind == "ttree")
    spec.kind = FamilySpec::Kind::TTree;
  else if (a.kind == "h1")
    spec.kind = FamilySpec::Kind::H1;
  else if (a.kind == "h2")
    spec.kind = FamilySpec::Kind::H2;
  else
    fail(Errc::InvalidParameter, "unknown family kind: " + a.kind);
  Hypergraph h = construct(spec);
  if (a.out_file.empty())
    out << dump_json(hypergraph_to_json(h));
  else
    save_hypergraph(h, a.out_file);
  return 0;
}

int do_enumerate(const EnumArgs& a, std::ostream& out) {
  auto classes = enumerate_supertrees(a.k, a.m, a.budget);
  ClassFilter f;
  if (a.diameter > 0) f.diameter = a.diameter;
  if (a.caterpillar == "yes")
    f.caterpillar = ClassFilter::Tri::Yes;
  else if (a.caterpillar == "no")
    f.caterpillar = ClassFilter::Tri::No;
  else if (a.caterpillar != "any")
    fail(Errc::InvalidParameter, "--caterpillar must be yes, no or any");
  if (a.n2 >= 0) f.non_pendant_count = a.n2;
  auto selected = filter_classes(classes, f);

  nlohmann::json index;
  index["format"] = 1;
  index["k"] = a.k;
  index["m"] = a.m;
  index["total_classes"] = classes.size();
  index["selected_classes"] = selected.size();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const Hypergraph& h = selected[i];
    char name[32];
    std::snprintf(name, sizeof name, "class_%04zu.json", i);
    rows.push_back(nlohmann::json{{"file", name},
                                  {"key", canonical_key(h).bytes},
                                  {"diameter", diameter_and_diametral_path(h).first},
                                  {"caterpillar", is_caterpillar(h)},
                                  {"non_pendant", count_non_pendant(h)}});
    if (!a.out_dir.empty()) {
      std::filesystem::create_directories(a.out_dir);
      save_hypergraph(h, std::filesystem::path(a.out_dir) / name);
    }
  }
  index["classes"] = rows;
  if (a.out_dir.empty()) {
    out << dump_json(index);
  } else {
    std::ofstream f_out(std::filesystem::path(a.out_dir) / "index.json");
    f_out << dump_json(index);
    out << "wrote " << selected.size() << " classes to " << a.out_dir << "\n";
  }
  return 0;
}

int do_verify(VerifyArgs& a, std::ostream& out) {
  a.opts.alphas = parse_alphas(a.alphas_csv);
  auto reports = run_suites(a.suite, a.opts);
  bool violated = false;
  for (const auto& rep : reports) {
    out << rep.summary() << "\n";
    violated = violated || rep.has_violations();
  }
  if (!a.json_file.empty()) {
    nlohmann::json j;
    j["format"] = 1;
    j["reports"] = nlohmann::json::array();
    for (const auto& rep : reports) j["reports"].push_back(rep.to_json());
    std::ofstream f_out(a.json_file);
    if (!f_out) fail(Errc::InvalidParameter, "cannot write " + a.json_file);
    f_out << dump_json(j);
  }
  return violated ? 1 : 0;
}

int do_rank(const RankArgs& a, std::ostream& out) {
  auto classes = enumerate_supertrees(a.k, a.m, a.budget);
  SolverOptions so;
  so.alpha = a.alpha;
  std::vector<std::pair<SpectralResult, int>> ranked;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    ranked.emplace_back(spectral_radius(classes[static_cast<std::size_t>(i)], so), i);
  std::vector<CanonicalKey> keys;
  for (const auto& h : classes) keys.push_back(canonical_key(h));
  std::sort(ranked.begin(), ranked.end(), [&](const auto& x, const auto& y) {
    if (x.first.rho != y.first.rho) return x.first.rho > y.first.rho;
    return keys[static_cast<std::size_t>(x.second)] < keys[static_cast<std::size_t>(y.second)];
  });
  auto names = family_names(a.k, a.m);
  out << "rank  rho            interval                          cat  N2  diam  name\n";
  int shown = 0;
  for (const auto& [res, idx] : ranked) {
    if (shown >= a.top) break;
    const Hypergraph& h = classes[static_cast<std::size_t>(idx)];
    auto it = names.find(keys[static_cast<std::size_t>(idx)]);
    char line[160];
    std::snprintf(line, sizeof line, "%-5d %-14s %-33s %-4s %-3d %-5d %s\n", shown + 1,
                  fmt10(res.rho).c_str(), interval_str(res.cw_low, res.cw_high).c_str(),
                  is_caterpillar(h) ? "yes" : "no", count_non_pendant(h),
                  diameter_and_diametral_path(h).first,
                  it == names.end() ? "-" : it->second.c_str());
    out << line;
    ++shown;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-spectral radius toolkit for k-uniform hypergraphs"};
  app.require_subcommand(1);

  RhoArgs rho_args;
  auto* rho_cmd = app.add_subcommand("rho", "alpha-spectral radius of a hypergraph JSON file");
  rho_cmd->add_option("--input", rho_args.input, "hypergraph JSON file")->required();
  rho_cmd->add_option("--alpha", rho_args.alpha, "alpha in [0,1)");
  rho_cmd->add_option("--tol", rho_args.tol, "Collatz-Wielandt gap tolerance");
  rho_cmd->add_option("--shift", rho_args.shift, "iteration shift");
  rho_cmd->add_option("--max-iter", rho_args.max_iter, "iteration cap");
  rho_cmd->add_flag("--json", rho_args.as_json, "emit JSON instead of text");

  FamilyArgs fam_args;
  auto* fam_cmd = app.add_subcommand("family", "construct a named hypergraph family");
  fam_cmd->add_option("--kind", fam_args.kind, "path|star|dstar|ttree|h1|h2")->required();
  fam_cmd->add_option("--k", fam_args.k, "uniformity")->required();
  fam_cmd->add_option("--d", fam_args.d, "path length / diameter");
  fam_cmd->add_option("--m", fam_args.m, "edge count");
  fam_cmd->add_option("--a", fam_args.a, "first parameter");
  fam_cmd->add_option("--b", fam_args.b, "second parameter");
  fam_cmd->add_option("--s", fam_args.s, "pendant edges at u");
  fam_cmd->add_option("--t", fam_args.t, "pendant edges at v");
  fam_cmd->add_option("--out", fam_args.out_file, "output file (default stdout)");

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "supertree classes up to isomorphism");
  enum_cmd->add_option("--k", enum_args.k, "uniformity")->required();
  enum_cmd->add_option("--m", enum_args.m, "edge count")->required();
  enum_cmd->add_option("--diameter", enum_args.diameter, "keep only diameter d");
  enum_cmd->add_option("--caterpillar", enum_args.caterpillar, "yes|no|any");
  enum_cmd->add_option("--n2", enum_args.n2, "keep only N2 = n2");
  enum_cmd->add_option("--budget", enum_args.budget, "class count cap");
  enum_cmd->add_option("--out", enum_args.out_dir, "write one JSON per class plus index.json");

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "run theorem suites and conjecture scans");
  ver_cmd->add_option("--suite", ver_args.suite,
                      "moving|switch|grafting|op1|extremal|nc|lemma1|all");
  ver_cmd->add_option("--k", ver_args.opts.k, "uniformity");
  ver_cmd->add_option("--m", ver_args.opts.m, "edge count");
  ver_cmd->add_option("--d", ver_args.opts.d, "diameter (nc suite)");
  ver_cmd->add_option("--alphas", ver_args.alphas_csv, "comma-separated alphas");
  ver_cmd->add_option("--tol", ver_args.opts.tolerance, "solver tolerance");
  ver_cmd->add_option("--margin", ver_args.opts.margin, "certified comparison margin");
  ver_cmd->add_option("--seed", ver_args.opts.seed, "instance sampling seed");
  ver_cmd->add_option("--cap", ver_args.opts.per_class_cap, "instances per class cap");
  ver_cmd->add_option("--budget", ver_args.opts.budget, "enumeration budget");
  ver_cmd->add_option("--json", ver_args.json_file, "write the full report JSON here");

  RankArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "top classes by alpha-spectral radius");
  rank_cmd->add_option("--k", rank_args.k, "uniformity")->required();
  rank_cmd->add_option("--m", rank_args.m, "edge count")->required();
  rank_cmd->add_option("--alpha", rank_args.alpha, "alpha in [0,1)");
  rank_cmd->add_option("--top", rank_args.top, "rows to print");
  rank_cmd->add_option("--budget", rank_args.budget, "class count cap");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (rho_cmd->parsed()) return do_rho(rho_args, out);
    if (fam_cmd->parsed()) return do_family(fam_args, out);
    if (enum_cmd->parsed()) return do_enumerate(enum_args, out);
    if (ver_cmd->parsed()) return do_verify(ver_args, out);
    if (rank_cmd->parsed()) return do_rank(rank_args, out);
  } catch (const IterationError& e) {
    err << e.what() << " (best interval " << interval_str(e.low(), e.high()) << ")\n";
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace aspectra
