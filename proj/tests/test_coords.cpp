#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qteich/coords.hpp"
#include "qteich/fixtures.hpp"
#include "qteich/rng.hpp"

using namespace qteich;

namespace {

EdgeCoordinates zero_coords(const FatGraph& g) {
  EdgeCoordinates c;
  for (const auto& lbl : g.edge_labels()) c[lbl] = 0.0;
  return c;
}

double worst_coord_diff(const EdgeCoordinates& a, const EdgeCoordinates& b) {
  double w = 0;
  for (const auto& [lbl, z] : a) w = std::max(w, std::abs(z - b.at(lbl)));
  return w;
}

// Brute-force Weil-Petersson oracle straight from the defining sum over
// oriented edges, using only the public half-edge accessors.
std::map<std::pair<std::string, std::string>, int> wp_oracle(const FatGraph& g) {
  std::map<std::pair<std::string, std::string>, int> out;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    std::string a = g.edge_label(g.edge_of(h));
    std::string ar = g.edge_label(g.edge_of(g.next_at_vertex(g.opposite(h))));
    out[{a, ar}] += 1;
    out[{ar, a}] -= 1;
  }
  return out;
}

}  // namespace

TEST_CASE("classical_phi values and identities") {
  CHECK(classical_phi(0.0) == Catch::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(std::abs(classical_phi(3.7) - classical_phi(-3.7) - 3.7) < 1e-12);
  CHECK(classical_phi(700.0) == Catch::Approx(700.0).epsilon(1e-12));
  CHECK(std::isfinite(classical_phi(700.0)));
  for (double z = -30; z <= 30; z += 0.37)
    CHECK(std::abs(classical_phi(z) - classical_phi(-z) - z) < 1e-12);
}

TEST_CASE("classical_flip at zero coordinates produces the log 2 pattern") {
  FatGraph g = make_k4();
  const int e = g.edge_index("a");
  auto slots = g.flip_slots(e);
  EdgeCoordinates out = classical_flip(g, zero_coords(g), "a");
  const double l2 = std::log(2.0);
  CHECK(out.at("a") == 0.0);
  CHECK(out.at(g.edge_label(g.edge_of(slots.s1))) == Catch::Approx(-l2));
  CHECK(out.at(g.edge_label(g.edge_of(slots.s2))) == Catch::Approx(l2));
  CHECK(out.at(g.edge_label(g.edge_of(slots.s3))) == Catch::Approx(-l2));
  CHECK(out.at(g.edge_label(g.edge_of(slots.s4))) == Catch::Approx(l2));
}

TEST_CASE("flip words act as the identity on coordinates") {
  Rng rng(3);
  for (const FatGraph& g : {make_k4(), make_genus2()}) {
    // find an R5-eligible pair
    std::string ea, eb;
    for (const auto& a : g.edge_labels()) {
      for (const auto& b : g.edge_labels()) {
        if (a == b || common_vertex_count(g, a, b) != 1) continue;
        try {
          apply_word(g, r5_word(a, b));
          ea = a;
          eb = b;
        } catch (const graph_error&) {
        }
        if (!ea.empty()) break;
      }
      if (!ea.empty()) break;
    }
    REQUIRE_FALSE(ea.empty());
    for (int t = 0; t < 25; ++t) {
      EdgeCoordinates c;
      for (const auto& lbl : g.edge_labels()) c[lbl] = rng.uniform(-3, 3);
      CHECK(worst_coord_diff(c, evolve_word(g, c, r5_word(ea, eb)).coords) < 1e-10);
      CHECK(worst_coord_diff(c, evolve_word(g, c, r2_word(ea)).coords) < 1e-12);
    }
  }
}

TEST_CASE("R4 flips commute on coordinates") {
  FatGraph g = make_k4();
  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    EdgeCoordinates c;
    for (const auto& lbl : g.edge_labels()) c[lbl] = rng.uniform(-3, 3);
    auto ab = evolve_word(g, c, {Move::flip("a"), Move::flip("e")});
    auto ba = evolve_word(g, c, {Move::flip("e"), Move::flip("a")});
    CHECK(worst_coord_diff(ab.coords, ba.coords) < 1e-12);
  }
  CHECK(worst_coord_diff(evolve_word(g, zero_coords(g), {}).coords, zero_coords(g)) == 0.0);
}

TEST_CASE("face sums count edge visits with multiplicity") {
  FatGraph k4 = make_k4();
  auto faces = k4.faces();
  // Every K4 face visits three distinct edges.
  EdgeCoordinates c = zero_coords(k4);
  const auto& face = faces.front();
  std::vector<std::string> lbls;
  for (int h : face) lbls.push_back(k4.edge_label(k4.edge_of(h)));
  REQUIRE(lbls.size() == 3);
  c[lbls[0]] = 1.0;
  c[lbls[1]] = 2.0;
  c[lbls[2]] = -0.5;
  CHECK(face_length(k4, c, face) == Catch::Approx(2.5));

  // The one-holed torus face visits every edge twice.
  FatGraph t = make_torus1();
  EdgeCoordinates tc{{"e1", 1.0}, {"e2", 2.0}, {"e3", -0.5}};
  CHECK(face_length(t, tc, t.faces()[0]) == Catch::Approx(5.0));

  CHECK(face_length(t, zero_coords(t), t.faces()[0]) == 0.0);
}

TEST_CASE("face sums are preserved by flips through the face matching") {
  Rng rng(5);
  for (const FatGraph& g : {make_pants(), make_k4(), make_genus2()}) {
    for (const auto& lbl : g.edge_labels()) {
      if (g.is_loop_edge(g.edge_index(lbl))) continue;
      EdgeCoordinates c;
      for (const auto& l2 : g.edge_labels()) c[l2] = rng.uniform(-2, 2);
      FatGraph gf = g.flip(lbl);
      EdgeCoordinates cf = classical_flip(g, c, lbl);
      auto match = face_bijection_through_flip(g, gf, lbl);
      auto fb = g.faces();
      auto fa = gf.faces();
      for (size_t i = 0; i < fb.size(); ++i)
        CHECK(std::abs(face_sum(g, c, fb[i]) - face_sum(gf, cf, fa[match[i]])) < 1e-10);
    }
  }
}

TEST_CASE("wp_bracket matches the brute-force oracle on the fixtures") {
  for (const FatGraph& g : {make_pants(), make_torus1(), make_k4(), make_genus2()}) {
    PoissonMatrix p = wp_bracket(g);
    auto oracle = wp_oracle(g);
    for (const auto& a : g.edge_labels())
      for (const auto& b : g.edge_labels()) {
        auto it = oracle.find({a, b});
        int want = it == oracle.end() ? 0 : it->second;
        CHECK(p.bracket(a, b) == want);
      }
  }
}

TEST_CASE("wp_bracket structural facts") {
  // Pants: everything Poisson-commutes (all Casimirs).
  PoissonMatrix pants = wp_bracket(make_pants());
  for (int v : pants.entries) CHECK(v == 0);

  // One-holed torus: |{z_i, z_j}| = 2 off the diagonal.
  PoissonMatrix torus = wp_bracket(make_torus1());
  CHECK(torus.bracket("e1", "e2") == 2);
  CHECK(torus.bracket("e2", "e3") == 2);
  CHECK(torus.bracket("e3", "e1") == 2);
  for (const auto& a : {"e1", "e2", "e3"}) CHECK(torus.bracket(a, a) == 0);

  // Antisymmetry, small entries, Casimir annihilation.
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    FatGraph g = random_three_valent(rng, 3 * (2 + static_cast<int>(rng.below(8))));
    PoissonMatrix p = wp_bracket(g);
    const int n = static_cast<int>(p.labels.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(p.at(a, b) == -p.at(b, a));
        CHECK(std::abs(p.at(a, b)) <= 2);
      }
    for (const auto& face : g.faces()) {
      auto inc = face_incidence(g, face);
      for (int a = 0; a < n; ++a) CHECK(casimir_pairing(p, a, inc) == 0);
    }
  }
}
