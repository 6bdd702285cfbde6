// The pentagon relation at its three levels: classical coordinates, exact
// quantum-torus algebra, and finite-dimensional matrices.
#include <cstdio>

#include "qteich/coords.hpp"
#include "qteich/fixtures.hpp"
#include "qteich/nclaurent.hpp"
#include "qteich/qrep.hpp"
#include "qteich/rng.hpp"
#include "qteich/weyl.hpp"

using namespace qteich;

int main() {
  // Classical: five flips return the coordinates.
  FatGraph g = make_k4();
  Rng rng(1);
  EdgeCoordinates c;
  for (const auto& lbl : g.edge_labels()) c[lbl] = rng.uniform(-2, 2);
  auto end = evolve_word(g, c, r5_word("d", "e"));
  double worst = 0;
  for (const auto& [lbl, z] : c) worst = std::max(worst, std::abs(end.coords.at(lbl) - z));
  std::printf("classical five-flip residual: %.3e\n", worst);

  // Symbolic: the seven-generator chain closes given X five-periodicity.
  auto chain = pentagon_chain();
  std::printf("weyl chain closes: %s (raw A-residue: %s)\n",
              chain.closes_with_assumption ? "yes" : "no", chain.residues_raw.at("A").c_str());

  // Exact: the quantum-torus sequence.
  auto seq = pentagon_sequence();
  std::printf("torus sequence: U_4 = %s, U_5 = %s\n", seq.terms[5].str().c_str(),
              seq.terms[6].str().c_str());

  // Matrices: five-fold product of dilogarithm kernels.
  auto ctx = CyclicRepContext::make(3, 5);
  auto res = pentagon_product(ctx, 0.7, 2.3);
  std::printf("matrix pentagon deviation at (m,n)=(3,5): %.3e\n", res.deviation);
  return 0;
}
