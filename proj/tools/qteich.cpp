// qteich: fat graphs, shear coordinates, quantum logarithm, and the three
// pentagon verifications, from the command line.
#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qteich/graph_io.hpp"
#include "qteich/holonomy.hpp"
#include "qteich/qdilog.hpp"
#include "qteich/suites.hpp"

using namespace qteich;

namespace {

// exit codes: 0 all-pass, 1 any-fail, 2 usage or input errors
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::complex<double> parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

GraphPath parse_path(const FatGraph& g, const std::string& text) {
  GraphPath p;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (tok == "+")
      p.push_back(PathStep::turn_positive());
    else if (tok == "-")
      p.push_back(PathStep::turn_negative());
    else {
      g.edge_index(tok);  // validates the label
      p.push_back(PathStep::long_edge(tok));
    }
  }
  return p;
}

int emit_report(const VerificationReport& rep, const std::string& json_path) {
  for (const auto& c : rep.checks) {
    std::printf("[%s] %s: %s", c.status.c_str(), c.id.c_str(), c.identity.c_str());
    if (c.status != "skip") std::printf(" (residual %.3e, tol %.1e)", c.residual, c.tolerance);
    if (!c.detail.empty()) std::printf(" -- %s", c.detail.c_str());
    std::printf("\n");
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write '%s'\n", json_path.c_str());
      return kExitUsage;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  std::printf("%s\n", rep.all_pass() ? "ALL PASS" : "FAILED");
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Teichmueller toolkit: fat graphs, shear coordinates, quantum "
               "dilogarithms, pentagon verifications"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string json_path;
  app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();
  app.add_option("--tol", tol, "target tolerance for evaluations")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report to this path");

  // --- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name;
  SuiteOptions sopts;
  verify->add_option("suite", suite_name,
                     "classical-pentagon | wp-invariance | phi-properties | weyl-pentagon | "
                     "torus-pentagon | rep-pentagon | flip-morphism | all")
      ->required();
  verify->add_option("--hbar", sopts.hbar, "extra hbar sample for phi-properties");
  verify->add_option("--m", sopts.m, "numerator for rep-pentagon");
  verify->add_option("--n", sopts.n, "denominator for rep-pentagon");
  verify->add_option("--u", sopts.u, "first central character sample");
  verify->add_option("--v", sopts.v, "second central character sample");
  verify->add_option("--sweep", sopts.sweep, "samples per (m, n)")->capture_default_str();
  verify->add_option("--graph", sopts.graph_file, "graph file for flip-morphism");
  verify->add_option("--edge", sopts.edge, "edge label for flip-morphism");

  // --- qdilog ----------------------------------------------------------------
  auto* qd = app.add_subcommand("qdilog", "quantum logarithm evaluations");
  auto* qd_eval = qd->add_subcommand("eval", "evaluate phi at a point");
  double qd_hbar = 1.0;
  std::string qd_z = "0";
  qd_eval->add_option("--hbar", qd_hbar, "hbar > 0")->required();
  qd_eval->add_option("--z", qd_z, "argument RE or RE,IM")->required();
  auto* qd_check = qd->add_subcommand("check-properties", "run the P.1-P.6 property table");
  double qd_check_hbar = 0.37;
  qd_check->add_option("--hbar", qd_check_hbar, "extra hbar sample")->capture_default_str();

  // --- eval -------------------------------------------------------------------
  auto* ev = app.add_subcommand("eval", "evaluate one quantity");
  std::string ev_kind;
  ev->add_option("kind", ev_kind, "phi | F | length | holonomy | bracket")->required();
  double ev_hbar = 1.0;
  std::string ev_z = "0";
  std::string ev_graph, ev_coords, ev_path;
  int ev_face = 0;
  ev->add_option("--hbar", ev_hbar, "hbar for phi/F");
  ev->add_option("--z", ev_z, "argument RE or RE,IM for phi/F");
  ev->add_option("--graph", ev_graph, "graph file");
  ev->add_option("--coords", ev_coords, "coordinate file");
  ev->add_option("--face", ev_face, "face index for length");
  ev->add_option("--path", ev_path, "path: edge labels and +/- turns, e.g. 'e1 + e2 -'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      sopts.seed = seed;
      return emit_report(run_suite(suite_name, sopts), json_path);
    }
    if (*qd) {
      if (*qd_eval) {
        auto ctx = QDilogContext::make(qd_hbar, tol);
        Eval e = phi_hbar(ctx, parse_complex(qd_z));
        std::printf("phi = %.17g %+.17gi  (error estimate %.3e)\n", e.value.real(),
                    e.value.imag(), e.error_estimate);
        return kExitPass;
      }
      SuiteOptions popts;
      popts.seed = seed;
      popts.hbar = qd_check_hbar;
      return emit_report(suite_phi_properties(popts), json_path);
    }
    if (*ev) {
      if (ev_kind == "phi" || ev_kind == "F") {
        auto ctx = QDilogContext::make(ev_hbar, tol);
        Eval e = ev_kind == "phi" ? phi_hbar(ctx, parse_complex(ev_z))
                                  : F_hbar(ctx, parse_complex(ev_z));
        std::printf("%s = %.17g %+.17gi  (error estimate %.3e)\n", ev_kind.c_str(),
                    e.value.real(), e.value.imag(), e.error_estimate);
        return kExitPass;
      }
      if (ev_graph.empty()) {
        std::fprintf(stderr, "error: --graph is required for '%s'\n", ev_kind.c_str());
        return kExitUsage;
      }
      FatGraph g = load_graph(ev_graph);
      if (ev_kind == "bracket") {
        PoissonMatrix p = wp_bracket(g);
        for (const auto& a : p.labels) {
          for (const auto& b : p.labels) std::printf("%3d", p.bracket(a, b));
          std::printf("   # row %s\n", a.c_str());
        }
        return kExitPass;
      }
      if (ev_coords.empty()) {
        std::fprintf(stderr, "error: --coords is required for '%s'\n", ev_kind.c_str());
        return kExitUsage;
      }
      EdgeCoordinates c = load_coords(ev_coords);
      check_coordinates(g, c);
      if (ev_kind == "length") {
        auto faces = g.faces();
        if (ev_face < 0 || ev_face >= static_cast<int>(faces.size())) {
          std::fprintf(stderr, "error: face index out of range (graph has %zu faces)\n",
                       faces.size());
          return kExitUsage;
        }
        std::printf("face %d: length = %.17g (signed sum %.17g)\n", ev_face,
                    face_length(g, c, faces[ev_face]), face_sum(g, c, faces[ev_face]));
        return kExitPass;
      }
      if (ev_kind == "holonomy") {
        GraphPath p = parse_path(g, ev_path);
        Matrix2 m = holonomy(g, c, p);
        std::printf("holonomy = %s, |trace|/sqrt(det) = %.17g\n", m.str().c_str(),
                    std::abs(m.trace()) / std::sqrt(std::abs(m.det())));
        return kExitPass;
      }
      std::fprintf(stderr, "error: unknown eval kind '%s'\n", ev_kind.c_str());
      return kExitUsage;
    }
  } catch (const parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
