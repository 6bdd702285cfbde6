// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the same pinned tolerances as the verification suites.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qteich/suites.hpp"

using namespace qteich;

namespace {

int failures = 0;

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CheckResult* find(const VerificationReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return &c;
  return nullptr;
}

void line(int criterion, const std::string& what, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s criterion-%d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
}

// All checks with the given id prefix pass and the worst residual is shown.
void criterion_from(const VerificationReport& rep, int criterion, const std::string& what,
                    const std::vector<std::string>& prefixes, double runtime = -1,
                    double budget = -1) {
  bool pass = true;
  double worst = 0, tol = 0;
  int matched = 0;
  for (const auto& c : rep.checks) {
    bool hit = false;
    for (const auto& p : prefixes)
      if (c.id.rfind(p, 0) == 0) hit = true;
    if (!hit) continue;
    ++matched;
    if (c.status == "fail") pass = false;
    if (c.status != "skip") {
      worst = std::max(worst, c.residual);
      tol = std::max(tol, c.tolerance);
    }
  }
  if (matched == 0) pass = false;
  char buf[160];
  if (runtime >= 0) {
    if (budget > 0 && runtime > budget) pass = false;
    std::snprintf(buf, sizeof buf, "residual=%.3e, tol=%.1e, runtime=%.2fs", worst, tol, runtime);
  } else {
    std::snprintf(buf, sizeof buf, "residual=%.3e, tol=%.1e", worst, tol);
  }
  line(criterion, what, pass, buf);
}

}  // namespace

int main() {
  SuiteOptions opts;
  opts.seed = 20260810;

  auto t0 = std::chrono::steady_clock::now();
  auto classical = suite_classical_pentagon(opts);
  double t_classical = elapsed_s(t0);

  criterion_from(classical, 1, "classical pentagon: five-flip word returns all coordinates",
                 {"cp.r5."}, t_classical, 1.0);
  criterion_from(classical, 2, "R2 and R4 coordinate invariance", {"cp.r2.", "cp.r4."});

  auto wp = suite_wp_invariance(opts);
  criterion_from(wp, 3, "Casimirs: face sums preserved, bracket integer structure",
                 {"wp.face-sums", "wp.entries", "wp.antisymmetry", "wp.casimir"});
  criterion_from(wp, 4, "holonomy traces match face lengths; PSL identities",
                 {"wp.holonomy-face", "wp.psl-identities"});

  t0 = std::chrono::steady_clock::now();
  auto phi = suite_phi_properties(opts);
  double t_phi = elapsed_s(t0);
  criterion_from(phi, 5, "quantum logarithm property suite P.1-P.6",
                 {"phi.p1", "phi.p2", "phi.p3", "phi.p4", "phi.p5", "phi.p6"}, t_phi, 30.0);

  t0 = std::chrono::steady_clock::now();
  auto torus = suite_torus_pentagon(opts);
  double t_torus = elapsed_s(t0);
  criterion_from(torus, 6, "quantum torus: U_4 = V^-1, U_5 = U, q-commutation (exact)",
                 {"torus.divisions", "torus.period", "torus.commutation"}, t_torus, 1.0);

  auto weyl = suite_weyl_pentagon(opts);
  criterion_from(weyl, 7, "Weyl pentagon chain and commutator identities", {"weyl."});

  t0 = std::chrono::steady_clock::now();
  auto rep = suite_rep_pentagon(opts);
  double t_rep = elapsed_s(t0);
  criterion_from(rep, 8, "matrix pentagon on the (m,n) grid with negative control",
                 {"rep.pentagon.", "rep.negative-control.", "rep.printed-variants"}, t_rep, 10.0);
  criterion_from(rep, 9, "conjugation relations and central characters",
                 {"rep.conjugation.", "rep.central."});

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
