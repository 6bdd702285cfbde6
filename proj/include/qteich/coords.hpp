#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qteich/fatgraph.hpp"

namespace qteich {

// Shear coordinates: one real number per edge label.
using EdgeCoordinates = std::map<std::string, double>;

inline void check_coordinates(const FatGraph& g, const EdgeCoordinates& c) {
  if (static_cast<int>(c.size()) != g.edge_count())
    throw std::invalid_argument("coordinate domain does not match the edge set");
  for (const auto& lbl : g.edge_labels()) {
    auto it = c.find(lbl);
    if (it == c.end()) throw std::invalid_argument("missing coordinate for edge '" + lbl + "'");
    if (!std::isfinite(it->second))
      throw std::invalid_argument("non-finite coordinate on edge '" + lbl + "'");
  }
}

// phi(z) = log(e^z + 1), evaluated without overflow for large |z|.
inline double classical_phi(double z) {
  if (z > 0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

// Coordinate transition map of a flip. Reading the neighbor slots
// counterclockwise after the flipped edge at each endpoint, the first slot
// gets -phi(-Z), the second +phi(Z); contributions accumulate when one edge
// occupies several slots; the flipped edge negates.
inline EdgeCoordinates classical_flip(const FatGraph& g, const EdgeCoordinates& c,
                                      const std::string& label) {
  check_coordinates(g, c);
  const int e = g.edge_index(label);
  auto slots = g.flip_slots(e);
  EdgeCoordinates out = c;
  const double z = c.at(label);
  out[g.edge_label(g.edge_of(slots.s1))] -= classical_phi(-z);
  out[g.edge_label(g.edge_of(slots.s2))] += classical_phi(z);
  out[g.edge_label(g.edge_of(slots.s3))] -= classical_phi(-z);
  out[g.edge_label(g.edge_of(slots.s4))] += classical_phi(z);
  out[label] = -z;
  return out;
}

struct Evolved {
  FatGraph graph;
  EdgeCoordinates coords;
};

inline Evolved evolve_word(const FatGraph& g, const EdgeCoordinates& c, const MoveWord& w) {
  Evolved cur{g, c};
  for (size_t i = 0; i < w.size(); ++i) {
    try {
      if (w[i].kind == Move::Kind::Flip) {
        cur.coords = classical_flip(cur.graph, cur.coords, w[i].edge);
        cur.graph = cur.graph.flip(w[i].edge);
      } else {
        cur.graph = cur.graph.relabeled(w[i].perm);
        EdgeCoordinates moved;
        for (const auto& [lbl, z] : cur.coords) {
          auto it = w[i].perm.find(lbl);
          moved[it == w[i].perm.end() ? lbl : it->second] = z;
        }
        cur.coords = std::move(moved);
      }
    } catch (const std::exception& err) {
      throw graph_error("move " + std::to_string(i) + " failed: " + err.what());
    }
  }
  return cur;
}

// Signed sum of z over a face's edge visits (an edge visited twice counts
// twice). Its sign carries the mutual orientation of the hole; the length is
// the absolute value.
inline double face_sum(const FatGraph& g, const EdgeCoordinates& c, const std::vector<int>& face) {
  double s = 0;
  for (int h : face) s += c.at(g.edge_label(g.edge_of(h)));
  return s;
}

inline double face_length(const FatGraph& g, const EdgeCoordinates& c,
                          const std::vector<int>& face) {
  return std::abs(face_sum(g, c, face));
}

// --- Weil-Petersson bracket -------------------------------------------------

// Antisymmetric integer matrix of bracket values {z_a, z_b}, indexed by edge
// labels in graph order.
struct PoissonMatrix {
  std::vector<std::string> labels;
  std::vector<int> entries;  // row-major, size labels^2

  int index(const std::string& lbl) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lbl) return static_cast<int>(i);
    throw std::invalid_argument("unknown label '" + lbl + "' in Poisson matrix");
  }
  int at(int a, int b) const { return entries[a * labels.size() + b]; }
  int bracket(const std::string& a, const std::string& b) const { return at(index(a), index(b)); }
};

// B = sum over oriented edges of d/dz_a ^ d/dz_{a^r}, where a^r is the edge
// counterclockwise-next after the arriving half-edge at the head of a. Each
// oriented edge adds +1 to (a, a^r) and -1 to (a^r, a).
inline PoissonMatrix wp_bracket(const FatGraph& g) {
  if (!g.is_three_valent()) throw graph_error("wp_bracket requires a three-valent graph");
  PoissonMatrix p;
  p.labels = g.edge_labels();
  const int n = static_cast<int>(p.labels.size());
  p.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const int a = g.edge_of(h);
    const int ar = g.edge_of(g.next_at_vertex(g.opposite(h)));
    p.entries[a * n + ar] += 1;
    p.entries[ar * n + a] -= 1;
  }
  return p;
}

// Integer visit counts of each edge around a face.
inline std::vector<int> face_incidence(const FatGraph& g, const std::vector<int>& face) {
  std::vector<int> v(g.edge_count(), 0);
  for (int h : face) v[g.edge_of(h)] += 1;
  return v;
}

// Bracket of z_a with the face sum; zero for every a and face (the face sums
// are the Casimirs).
inline int casimir_pairing(const PoissonMatrix& p, int a, const std::vector<int>& incidence) {
  int s = 0;
  for (size_t b = 0; b < incidence.size(); ++b) s += p.at(a, static_cast<int>(b)) * incidence[b];
  return s;
}

}  // namespace qteich
