// Command-line front end: deterministic enumeration of the graph families,
// their subcube polynomials, the closed-form generating functions and the
// identity verifier. All output goes to stdout (or --out), diagnostics to
// stderr. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "runcube/census.hpp"
#include "runcube/errors.hpp"
#include "runcube/genfunc.hpp"
#include "runcube/graphs.hpp"
#include "runcube/repro.hpp"
#include "runcube/verify.hpp"

namespace {

using namespace runcube;

int default_threads() {
  if (const char* env = std::getenv("RUNCUBE_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

struct PolyRequest {
  std::string family = "r";
  int n = 0;
  std::string kind = "dist-cube";
  std::string method = "auto";
  std::string format = "text";
  int threads = 1;
  int max_oracle_n = 12;
  int max_build_n = 30;
  std::string out;
};

CensusMethod parse_method(const std::string& name) {
  if (name == "auto") return CensusMethod::Auto;
  if (name == "oracle") return CensusMethod::Oracle;
  if (name == "topvertex") return CensusMethod::TopVertex;
  throw CLI::ValidationError("--method", "unknown method " + name);
}

MPoly poly_from_gf(Family family, const std::string& kind, int n) {
  const MPoly q = MPoly::variable(Var::Q);
  const MPoly d = MPoly::variable(Var::D);
  auto take = [&](GfId id) { return catalog_expand(id, n)[static_cast<std::size_t>(n)]; };
  if (family == Family::FibonacciRun) {
    if (kind == "dist-cube") return take(GfId::DistCubeFibRun);
    if (kind == "cube") return take(GfId::DistCubeFibRun).substitute({{Var::Q, MPoly{1}}});
    if (kind == "dcw") return take(GfId::DcwFibRun);
    if (kind == "updeg") return take(GfId::UpDegreeFibRun);
    if (kind == "weight") {
      return take(GfId::DistCubeFibRun)
          .substitute({{Var::X, MPoly{0}}})
          .substitute({{Var::Q, d}});
    }
  }
  if (family == Family::LucasRun) {
    if (kind == "dist-cube") return take(GfId::DistCubeLucasRun);
    if (kind == "cube") return take(GfId::DistCubeLucasRun).substitute({{Var::Q, MPoly{1}}});
    if (kind == "weight") {
      return take(GfId::DistCubeLucasRun)
          .substitute({{Var::X, MPoly{0}}})
          .substitute({{Var::Q, d}});
    }
  }
  throw UnsupportedFamily(std::string("no closed form catalogued for family '") +
                          family_name(family) + "' with kind '" + kind + "'");
}

std::string render_poly(const MPoly& poly, const std::string& format) {
  if (format == "json") return poly.to_json_string() + "\n";
  if (format == "csv") return poly.to_csv();
  return poly.to_text() + "\n";
}

int run_poly(const PolyRequest& req) {
  const Family family = family_from_name(req.family);
  MPoly poly;
  if (req.method == "gf") {
    poly = poly_from_gf(family, req.kind, req.n);
  } else {
    const CensusMethod method = parse_method(req.method);
    BuildLimits build_limits;
    build_limits.max_generated_n = req.max_build_n;
    const FamilyGraph g = FamilyGraph::build(family, req.n, build_limits);
    CensusLimits census_limits;
    census_limits.max_oracle_n = req.max_oracle_n;
    if (req.kind == "dist-cube" || req.kind == "cube") {
      const MPoly dist = distance_cube_polynomial(g, method, req.threads, census_limits);
      poly = req.kind == "cube" ? dist.substitute({{Var::Q, MPoly{1}}}) : dist;
    } else if (req.kind == "dcw") {
      poly = dcw_polynomial(g);
    } else if (req.kind == "weight") {
      poly = weight_polynomial(g);
    } else if (req.kind == "updeg") {
      poly = updegree_polynomial(g);
    }
  }
  emit(render_poly(poly, req.format), req.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumeration and verification toolkit for Fibonacci/Lucas cube and run graphs"};
  app.require_subcommand(1);

  const int env_threads = default_threads();

  // vertices
  std::string v_family = "r", v_format = "text", v_out;
  int v_n = 0, v_max_build = 30, v_max_cube = 24;
  auto* vertices_cmd = app.add_subcommand("vertices", "list the vertex set of a family graph");
  vertices_cmd->add_option("--family", v_family, "q|gamma|lambda|r|rl")->required();
  vertices_cmd->add_option("--n", v_n, "dimension")->required()->check(CLI::NonNegativeNumber);
  vertices_cmd->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
  vertices_cmd->add_option("--max-build-n", v_max_build, "generation cap for the run families");
  vertices_cmd->add_option("--max-hypercube-n", v_max_cube, "generation cap for raw hypercubes");
  vertices_cmd->add_option("--out", v_out, "write output to a file instead of stdout");

  // poly
  PolyRequest preq;
  preq.threads = env_threads;
  auto* poly_cmd = app.add_subcommand("poly", "enumerator polynomial of a family graph");
  poly_cmd->add_option("--family", preq.family, "q|gamma|lambda|r|rl")->required();
  poly_cmd->add_option("--n", preq.n, "dimension")->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--kind", preq.kind, "dist-cube|cube|dcw|weight|updeg")
      ->required()
      ->check(CLI::IsMember({"dist-cube", "cube", "dcw", "weight", "updeg"}));
  poly_cmd->add_option("--method", preq.method, "oracle|topvertex|gf|auto (census kinds only)")
      ->check(CLI::IsMember({"oracle", "topvertex", "gf", "auto"}));
  poly_cmd->add_option("--format", preq.format)->check(CLI::IsMember({"text", "json", "csv"}));
  poly_cmd->add_option("--threads", preq.threads, "worker threads (speed only)");
  poly_cmd->add_option("--max-oracle-n", preq.max_oracle_n, "oracle census cap");
  poly_cmd->add_option("--max-build-n", preq.max_build_n, "generation cap");
  poly_cmd->add_option("--out", preq.out);

  // gf
  std::string g_id = "d-r", g_format = "text", g_out;
  int g_order = 6;
  auto* gf_cmd = app.add_subcommand("gf", "expand a catalogued generating function");
  gf_cmd->add_option("--id", g_id, "dcw-r|d-r|d-rl|updeg-r")
      ->required()
      ->check(CLI::IsMember(gf_names()));
  gf_cmd->add_option("--order", g_order, "truncation order")->required()->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--format", g_format)->check(CLI::IsMember({"text", "json"}));
  gf_cmd->add_option("--out", g_out);

  // verify
  std::string verify_id, verify_method = "auto", verify_format = "text", verify_out;
  int verify_n_max = 12, verify_threads = env_threads;
  auto* verify_cmd = app.add_subcommand("verify", "machine-check one identity");
  verify_cmd->add_option("--id", verify_id, "identity id (see --list)")
      ->check(CLI::IsMember(identity_names()));
  verify_cmd->add_option("--n-max", verify_n_max, "largest dimension / length to check")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--method", verify_method, "census method for polynomial identities")
      ->check(CLI::IsMember({"auto", "oracle", "topvertex"}));
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--threads", verify_threads);
  verify_cmd->add_option("--out", verify_out);
  bool verify_list = false;
  verify_cmd->add_flag("--list", verify_list, "list the identity ids and exit");

  // repro
  int repro_threads = env_threads;
  std::string repro_out;
  auto* repro_cmd =
      app.add_subcommand("repro", "run the full acceptance suite and print a pass/fail table");
  repro_cmd->add_option("--threads", repro_threads);
  repro_cmd->add_option("--out", repro_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (vertices_cmd->parsed()) {
      BuildLimits limits;
      limits.max_generated_n = v_max_build;
      limits.max_hypercube_n = v_max_cube;
      const FamilyGraph g = FamilyGraph::build(family_from_name(v_family), v_n, limits);
      std::string text;
      if (v_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const BitWord& w : g.vertices()) arr.push_back(w.str());
        text = arr.dump() + "\n";
      } else {
        for (const BitWord& w : g.vertices()) text += w.str() + "\n";
      }
      emit(text, v_out);
      return 0;
    }

    if (poly_cmd->parsed()) return run_poly(preq);

    if (gf_cmd->parsed()) {
      const GfId id = gf_from_name(g_id);
      const Series series = catalog_expand(id, g_order);
      std::string text;
      if (g_format == "json") {
        nlohmann::json j;
        j["id"] = g_id;
        j["order"] = g_order;
        j["coefficients"] = nlohmann::json::array();
        for (const MPoly& c : series) {
          j["coefficients"].push_back(nlohmann::json::parse(c.to_json_string()));
        }
        text = j.dump() + "\n";
      } else {
        for (std::size_t k = 0; k < series.size(); ++k) {
          text += "t^" + std::to_string(k) + ": " + series[k].to_text() + "\n";
        }
      }
      emit(text, g_out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (verify_list) {
        std::string text;
        for (const std::string& name : identity_names()) text += name + "\n";
        emit(text, verify_out);
        return 0;
      }
      if (verify_id.empty()) {
        std::cerr << "verify: --id is required (or use --list)\n";
        return 2;
      }
      VerifyOptions options;
      options.census_method = parse_method(verify_method);
      options.threads = verify_threads;
      const VerifyReport report = verify(identity_from_name(verify_id), verify_n_max, options);
      emit(verify_format == "json" ? report.to_json_string() + "\n" : report.to_text(), verify_out);
      return report.pass ? 0 : 1;
    }

    if (repro_cmd->parsed()) {
      const auto results = run_acceptance_suite(repro_threads);
      emit(format_results(results), repro_out);
      return all_passed(results) ? 0 : 1;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const UnknownId& e) {
    std::cerr << "unknown id: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
