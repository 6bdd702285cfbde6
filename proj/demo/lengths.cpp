// Assigns shear coordinates to the one-holed torus spine and prints hole
// lengths two ways: face sums and holonomy traces.
#include <cmath>
#include <cstdio>

#include "qteich/fixtures.hpp"
#include "qteich/holonomy.hpp"

using namespace qteich;

int main() {
  FatGraph g = make_torus1();
  EdgeCoordinates c{{"e1", 0.80}, {"e2", -0.35}, {"e3", 1.10}};

  std::printf("graph: %s, genus %d, holes %d\n", g.describe().c_str(), g.genus(), g.holes());
  auto faces = g.faces();
  for (size_t i = 0; i < faces.size(); ++i) {
    double l = face_length(g, c, faces[i]);
    Matrix2 M = holonomy(g, c, face_path(g, faces[i]), faces[i][0]);
    double via_trace = 2 * std::acosh(std::abs(M.trace()) / (2 * std::sqrt(M.det())));
    std::printf("face %zu: length %.12f  (from holonomy trace: %.12f)\n", i, l, via_trace);
  }

  EdgeCoordinates after = classical_flip(g, c, "e2");
  std::printf("after flipping e2: z = (%.6f, %.6f, %.6f)\n", after["e1"], after["e2"],
              after["e3"]);
  EdgeCoordinates back = classical_flip(g.flip("e2"), after, "e2");
  std::printf("after flipping back: z = (%.6f, %.6f, %.6f)\n", back["e1"], back["e2"],
              back["e3"]);
  return 0;
}
