#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <hyperlag/hyperlag.hpp>

namespace hyperlag::cli {

namespace {

inline constexpr const char* kLambdaSchema = "hyperlag.lambda/1";

/// Malformed input: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned resolve_jobs(int jobs) {
  if (jobs < 0) throw UsageError("--jobs must be non-negative");
  if (jobs == 0) return std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(jobs);
}

/// A graph token is a file path when such a file exists, otherwise a
/// construction name (K5_3, F5, "Fano", ...).
Hypergraph load_graph(const std::string& token) {
  if (std::filesystem::exists(token)) return read_hypergraph(token);
  try {
    return build_construction(parse_construction_name(token));
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + token + "' is neither a readable file nor a construction (" + e.what() + ")");
  }
}

/// Comma-separated family tokens: gallery names, Fr<r> for the whole F^r, or
/// .hg/.json paths.
ForbiddenFamily load_family(const std::string& spec) {
  std::vector<Hypergraph> members;
  std::string name;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw UsageError("empty family token in '" + spec + "'");
    if (std::filesystem::exists(token)) {
      members.push_back(read_hypergraph(token));
    } else {
      try {
        const auto fam = family_by_name(token);
        members.insert(members.end(), fam.members().begin(), fam.members().end());
      } catch (const std::invalid_argument& e) {
        throw UsageError("'" + token + "' is neither a readable file nor a construction (" + e.what() + ")");
      }
    }
    name += (name.empty() ? "" : ",") + token;
  }
  if (members.empty()) throw UsageError("empty forbidden family");
  return ForbiddenFamily(std::move(members), name);
}

std::string edge_text(VertexSet e) {
  std::string s;
  for (Vertex v : e.to_vector()) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "{" + s + "}";
}

std::string weights_text(std::span<const double> w) {
  std::string s;
  for (double v : w) s += (s.empty() ? "" : " ") + nlohmann::json(v).dump();
  return s;
}

nlohmann::json certificate_json(const Hypergraph& g, const LagrangianCertificate& c) {
  nlohmann::json exact_w = nlohmann::json::array();
  for (const auto& w : c.exact_weights) exact_w.push_back(to_string(w));
  return {{"schema", kLambdaSchema},
          {"r", g.uniformity()},
          {"n", g.vertex_count()},
          {"edges", g.size()},
          {"value", c.value},
          {"exact", c.exact ? nlohmann::json(to_string(*c.exact)) : nlohmann::json(nullptr)},
          {"weights", std::vector<double>(c.weights.values().begin(), c.weights.values().end())},
          {"exact_weights", c.exact ? exact_w : nlohmann::json(nullptr)},
          {"support", c.support},
          {"kkt_residual", c.kkt_residual},
          {"method", to_string(c.method)},
          {"starts_used", c.starts_used},
          {"seed", c.seed}};
}

struct SolverFlags {
  double tol = 1e-12;
  int starts = -1;
  std::uint64_t seed = 0;
  int support_enum_max = 10;
  int jobs = 1;

  void add(CLI::App* app) {
    app->add_option("--tol", tol, "ascent stopping tolerance")->check(CLI::PositiveNumber);
    app->add_option("--starts", starts, "random multistarts (default 50n)");
    app->add_option("--seed", seed, "seed for all randomness");
    app->add_option("--support-enum-max", support_enum_max, "enumerate supports for n up to this")->check(CLI::NonNegativeNumber);
    app->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  }

  SolverOptions options() const {
    SolverOptions o;
    o.tol = tol;
    o.starts = starts;
    o.seed = seed;
    o.support_enum_max = support_enum_max;
    return o;
  }
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph Lagrangians: solver, constructions, extremal search and verification ledger", "hyperlag"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("hyperlag ") + "1.0.0 (schemas: " + kLambdaSchema + ", " + kSearchSchema + ", " + kLedgerSchema + ")");

  // lambda
  std::string lambda_file, lambda_out;
  bool lambda_json = false;
  SolverFlags lambda_flags;
  auto* lambda_cmd = app.add_subcommand("lambda", "maximize the Lagrangian of a hypergraph");
  lambda_cmd->add_option("FILE", lambda_file, "hypergraph file or construction name")->required();
  lambda_flags.add(lambda_cmd);
  lambda_cmd->add_flag("--json", lambda_json, "print the certificate as JSON");
  lambda_cmd->add_option("--out", lambda_out, "write the JSON certificate to this file");

  // contains
  std::string pattern_token, host_token;
  auto* contains_cmd = app.add_subcommand("contains", "search for a copy of PATTERN in HOST");
  contains_cmd->add_option("PATTERN", pattern_token)->required();
  contains_cmd->add_option("HOST", host_token)->required();

  // free
  std::string family_token, free_host;
  auto* free_cmd = app.add_subcommand("free", "test whether HOST avoids every member of FAMILY");
  free_cmd->add_option("FAMILY", family_token, "comma-separated names or files")->required();
  free_cmd->add_option("HOST", free_host)->required();

  // dense
  std::string dense_file;
  SolverFlags dense_flags;
  auto* dense_cmd = app.add_subcommand("dense", "decide whether every proper subgraph has smaller Lagrangian");
  dense_cmd->add_option("FILE", dense_file)->required();
  dense_flags.add(dense_cmd);

  // construct
  std::string construct_name, construct_out, construct_format = "hg";
  std::vector<int> construct_params;
  bool construct_list = false;
  auto* construct_cmd = app.add_subcommand("construct", "build a named construction");
  construct_cmd->add_option("NAME", construct_name);
  construct_cmd->add_option("PARAMS", construct_params, "integer parameters");
  construct_cmd->add_option("--out", construct_out, "output file (default: standard output)");
  construct_cmd->add_option("--format", construct_format, "hg or json")->check(CLI::IsMember({"hg", "json"}));
  construct_cmd->add_flag("--list", construct_list, "list the gallery");

  // search
  int search_n = 0, search_r = 3, search_jobs = 1, search_starts = 12;
  std::string search_forbid, search_bound, search_out, search_csv;
  std::uint64_t search_seed = 0;
  bool search_turan = false, search_force = false, search_timing = false;
  auto* search_cmd = app.add_subcommand("search", "maximum Lagrangian over all family-free r-graphs on n vertices");
  search_cmd->add_option("--n", search_n)->required()->check(CLI::Range(0, kMaxVertices));
  search_cmd->add_option("--r", search_r)->check(CLI::Range(1, kMaxVertices));
  search_cmd->add_option("--forbid", search_forbid, "forbidden family, comma separated")->required();
  search_cmd->add_option("--bound", search_bound, "check the maximum against this rational p/q");
  search_cmd->add_flag("--turan", search_turan, "also report the Turán number");
  search_cmd->add_option("--jobs", search_jobs, "worker threads (0 = all cores)");
  search_cmd->add_option("--seed", search_seed);
  search_cmd->add_option("--starts", search_starts, "multistarts per graph")->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--force", search_force, "allow edge spaces beyond the default guard");
  search_cmd->add_flag("--timing", search_timing, "include wall time in the JSON report");
  search_cmd->add_option("--out", search_out, "JSON report file");
  search_cmd->add_option("--csv", search_csv, "CSV summary file");

  // verify
  std::string verify_suite = "paper", verify_level = "quick", verify_json;
  int verify_jobs = 1;
  std::uint64_t verify_seed = 0;
  bool verify_tamper = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification ledger");
  verify_cmd->add_option("--suite", verify_suite)->check(CLI::IsMember({"paper"}));
  verify_cmd->add_option("--level", verify_level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--json", verify_json, "write the ledger to this file");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0 = all cores)");
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->add_flag("--tamper", verify_tamper, "negative control: corrupt one golden value");

  // turan
  int turan_n = 0, turan_r = 3, turan_jobs = 1;
  std::string turan_forbid;
  bool turan_force = false;
  auto* turan_cmd = app.add_subcommand("turan", "maximum edge count of a family-free r-graph on n vertices");
  turan_cmd->add_option("--n", turan_n)->required()->check(CLI::Range(0, kMaxVertices));
  turan_cmd->add_option("--r", turan_r)->check(CLI::Range(1, kMaxVertices));
  turan_cmd->add_option("--forbid", turan_forbid)->required();
  turan_cmd->add_option("--jobs", turan_jobs);
  turan_cmd->add_flag("--force", turan_force);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*lambda_cmd) {
      const Hypergraph g = load_graph(lambda_file);
      const Executor exec(resolve_jobs(lambda_flags.jobs));
      auto opt = lambda_flags.options();
      opt.executor = &exec;
      const auto cert = lagrangian(g, opt);
      const auto j = certificate_json(g, cert);
      if (!lambda_out.empty()) write_text_file(lambda_out, j.dump(2) + "\n");
      if (lambda_json) {
        out << j.dump(2) << "\n";
      } else {
        out << "lambda: " << nlohmann::json(cert.value).dump() << "\n";
        out << "exact: " << (cert.exact ? to_string(*cert.exact) : std::string("none")) << "\n";
        out << "weights: " << weights_text(cert.weights.values()) << "\n";
        out << "kkt_residual: " << nlohmann::json(cert.kkt_residual).dump() << "\n";
        out << "method: " << to_string(cert.method) << "\n";
      }
      return kOk;
    }

    if (*contains_cmd) {
      const Hypergraph pattern = load_graph(pattern_token), host = load_graph(host_token);
      const auto emb = contains(host, pattern);
      out << "contains: " << (emb ? "true" : "false") << "\n";
      if (emb) {
        out << "embedding:";
        for (std::size_t i = 0; i < emb->map.size(); ++i) out << " " << i + 1 << "->" << emb->map[i];
        out << "\n";
      }
      return kOk;
    }

    if (*free_cmd) {
      const auto family = load_family(family_token);
      const Hypergraph host = load_graph(free_host);
      for (const auto& m : family.members()) {
        if (m.uniformity() != host.uniformity()) continue;
        if (auto emb = contains(host, m)) {
          out << "free: false\n";
          out << "member: " << to_json(m).dump() << "\n";
          out << "embedding:";
          for (std::size_t i = 0; i < emb->map.size(); ++i) out << " " << i + 1 << "->" << emb->map[i];
          out << "\n";
          return kOk;
        }
      }
      out << "free: true\n";
      return kOk;
    }

    if (*dense_cmd) {
      const Hypergraph g = load_graph(dense_file);
      const Executor exec(resolve_jobs(dense_flags.jobs));
      DensityOptions opt{.solver = dense_flags.options()};
      opt.solver.executor = &exec;
      const auto v = is_dense(g, opt);
      out << "dense: " << (v.dense ? "true" : "false") << "\n";
      out << "lambda: " << nlohmann::json(v.lambda).dump() << "\n";
      out << "reason: " << v.reason << "\n";
      if (v.witness) {
        out << "witness: " << to_json(*v.witness).dump() << "\n";
        out << "witness_lambda: " << nlohmann::json(v.witness_lambda).dump() << "\n";
        out << "exact_confirmed: " << (v.exact_confirmed ? "true" : "false") << "\n";
      }
      return kOk;
    }

    if (*construct_cmd) {
      if (construct_list) {
        for (const auto& e : gallery()) out << e.name << (e.params.empty() ? "" : " " + e.params) << "  [" << e.ranges << "]  " << e.description << "\n";
        return kOk;
      }
      if (construct_name.empty()) throw UsageError("construct needs NAME (or --list)");
      const Hypergraph g = build_construction(parse_construction_name(construct_name, construct_params));
      std::string name = construct_name;
      for (int p : construct_params) name += " " + std::to_string(p);
      const std::string text = construct_format == "json" ? to_json(g).dump() + "\n" : to_hg(g, name);
      if (construct_out.empty()) out << text;
      else {
        write_text_file(construct_out, text);
        out << "wrote " << name << " (r=" << g.uniformity() << ", n=" << g.vertex_count() << ", edges=" << g.size() << ") to " << construct_out << "\n";
      }
      return kOk;
    }

    if (*search_cmd) {
      const auto family = load_family(search_forbid);
      if (family.uniformity() != search_r) throw UsageError("family uniformity differs from --r");
      const Executor exec(resolve_jobs(search_jobs));
      SearchOptions opt;
      opt.solver.seed = search_seed;
      opt.solver.starts = search_starts;
      opt.enumeration.force = search_force;
      opt.enumeration.executor = &exec;
      opt.turan = search_turan;
      if (!search_bound.empty()) {
        try {
          opt.bound = parse_rational(search_bound);
        } catch (const std::exception& e) {
          throw UsageError("--bound: " + std::string(e.what()));
        }
      }
      const auto rep = max_lagrangian(search_n, search_r, family, opt);
      if (!search_out.empty()) write_text_file(search_out, to_json(rep, search_timing).dump(2) + "\n");
      if (!search_csv.empty()) write_text_file(search_csv, csv_header() + "\n" + csv_row(rep) + "\n");
      out << "family: " << rep.family << "  n=" << rep.n << " r=" << rep.r << "\n";
      out << "free classes: " << rep.graphs_enumerated << "  maximal: " << rep.maximal_free_count << "\n";
      out << "max lambda: " << nlohmann::json(rep.max_lambda).dump() << (rep.max_exact ? " (" + to_string(*rep.max_exact) + ")" : "") << "\n";
      out << "r! lambda: " << nlohmann::json(rep.r_factorial_lambda()).dump() << "\n";
      out << "achievers: " << rep.achievers.size() << "  non-achievers: " << rep.non_achievers << "\n";
      for (const auto& a : rep.achievers) {
        out << "  ";
        for (VertexSet e : a.graph.edges()) out << edge_text(e);
        out << "\n";
      }
      if (rep.turan_number) out << "turan number: " << *rep.turan_number << "\n";
      if (rep.bound) {
        out << "bound " << to_string(rep.bound->bound) << ": " << (rep.bound->pass ? "pass" : "VIOLATED") << "\n";
        if (!rep.bound->pass) return kCheckFailed;
      }
      return kOk;
    }

    if (*verify_cmd) {
      const Executor exec(resolve_jobs(verify_jobs));
      SuiteOptions opt{.level = parse_level(verify_level), .seed = verify_seed, .tamper = verify_tamper, .executor = &exec};
      const auto entries = run_suite(opt);
      for (const auto& e : entries) {
        out << (e.status == Status::pass ? "PASS " : e.status == Status::fail ? "FAIL " : "SKIP ") << e.id;
        if (!e.detail.empty()) out << "  -- " << e.detail;
        out << "\n";
        if (e.status == Status::fail) out << "     witness: " << e.witness.dump() << "\n";
      }
      const auto j = to_json(entries, opt);
      out << "summary: " << j["summary"].dump() << "\n";
      if (!verify_json.empty()) write_text_file(verify_json, j.dump(2) + "\n");
      return all_pass(entries) ? kOk : kCheckFailed;
    }

    if (*turan_cmd) {
      const auto family = load_family(turan_forbid);
      if (family.uniformity() != turan_r) throw UsageError("family uniformity differs from --r");
      const Executor exec(resolve_jobs(turan_jobs));
      const int ex = turan_number(turan_n, turan_r, family, {.force = turan_force, .executor = &exec});
      out << "ex(" << turan_n << ", " << family.name() << ") = " << ex << "\n";
      return kOk;
    }

    out << app.help();
    return kOk;
  } catch (const std::exception& e) {
    // Malformed files, unknown constructions, size guard, domain violations.
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hyperlag::cli
