#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qteich {

class graph_error : public std::runtime_error {
 public:
  explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// Combinatorial fat graph (ribbon graph) in half-edge form.
//
// Half-edges are integers 0..H-1. `opp` is the fixed-point-free involution
// pairing the two halves of each edge; `nxt` is the permutation whose cycles
// are the vertices, listing half-edges counterclockwise. A directed half-edge
// h is read as "leave vertex_of(h) along edge_of(h)"; face walks are orbits
// of h -> nxt[opp[h]].
//
// Values are immutable after construction: every operation returns a new
// graph.
class FatGraph {
 public:
  struct Vertex {
    std::string name;
    int anchor = -1;  // first half-edge of the stored cycle (file round-trip)
  };

  FatGraph() = default;

  // General constructor (any valence >= 1). Three-valence is enforced by
  // from_spec and by the operations that need it (flip, wp bracket).
  static FatGraph make(std::vector<int> opp, std::vector<int> nxt,
                       std::vector<int> edge_of, std::vector<std::string> edge_labels,
                       std::vector<std::string> half_names, std::vector<Vertex> vertices) {
    FatGraph g;
    g.opp_ = std::move(opp);
    g.nxt_ = std::move(nxt);
    g.edge_of_ = std::move(edge_of);
    g.edge_labels_ = std::move(edge_labels);
    g.half_names_ = std::move(half_names);
    g.vertices_ = std::move(vertices);
    g.check_permutations();
    g.rebuild_vertex_map();
    return g;
  }

  // Builds a three-valent graph from vertex cycles (counterclockwise lists of
  // half-edge names), a perfect matching of half-edge names into edges, and
  // one label per edge (aligned with `pairing`).
  static FatGraph from_spec(const std::vector<std::pair<std::string, std::vector<std::string>>>& vertex_cycles,
                            const std::vector<std::pair<std::string, std::string>>& pairing,
                            const std::vector<std::string>& labels) {
    if (labels.size() != pairing.size())
      throw graph_error("from_spec: need exactly one label per edge pair");

    std::map<std::string, int> id_of;
    std::vector<std::string> half_names;
    std::vector<Vertex> vertices;
    auto intern = [&](const std::string& name) {
      auto [it, inserted] = id_of.emplace(name, static_cast<int>(half_names.size()));
      if (inserted) half_names.push_back(name);
      return it->second;
    };

    // Vertex cycles.
    std::vector<std::vector<int>> cycles;
    std::set<std::string> seen_in_cycle;
    for (const auto& [vname, cyc] : vertex_cycles) {
      if (cyc.size() != 3)
        throw graph_error("vertex of valence != 3: '" + vname + "' has " +
                          std::to_string(cyc.size()) + " half-edges");
      std::vector<int> ids;
      for (const auto& h : cyc) {
        if (!seen_in_cycle.insert(h).second)
          throw graph_error("half-edge '" + h + "' listed at more than one vertex slot");
        ids.push_back(intern(h));
      }
      vertices.push_back({vname, ids[0]});
      cycles.push_back(std::move(ids));
    }

    const int H = static_cast<int>(half_names.size());
    std::vector<int> opp(H, -1), nxt(H, -1), edge_of(H, -1);
    for (const auto& cyc : cycles)
      for (size_t i = 0; i < cyc.size(); ++i) nxt[cyc[i]] = cyc[(i + 1) % cyc.size()];

    std::set<std::string> label_set;
    std::vector<std::string> edge_labels;
    for (size_t e = 0; e < pairing.size(); ++e) {
      const auto& [ha, hb] = pairing[e];
      if (!id_of.count(ha)) throw graph_error("pairing references unknown half-edge '" + ha + "'");
      if (!id_of.count(hb)) throw graph_error("pairing references unknown half-edge '" + hb + "'");
      int a = id_of[ha], b = id_of[hb];
      if (a == b) throw graph_error("half-edge '" + ha + "' paired with itself");
      if (opp[a] != -1 || opp[b] != -1)
        throw graph_error("half-edge paired twice in edge '" + labels[e] + "'");
      if (!label_set.insert(labels[e]).second)
        throw graph_error("duplicate label '" + labels[e] + "'");
      opp[a] = b;
      opp[b] = a;
      edge_of[a] = edge_of[b] = static_cast<int>(e);
      edge_labels.push_back(labels[e]);
    }
    for (int h = 0; h < H; ++h)
      if (opp[h] == -1) throw graph_error("dangling half-edge '" + half_names[h] + "'");

    return make(std::move(opp), std::move(nxt), std::move(edge_of), std::move(edge_labels),
                std::move(half_names), std::move(vertices));
  }

  int half_edge_count() const { return static_cast<int>(opp_.size()); }
  int edge_count() const { return static_cast<int>(edge_labels_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  int opposite(int h) const { return opp_[h]; }
  int next_at_vertex(int h) const { return nxt_[h]; }
  int prev_at_vertex(int h) const {
    int x = h;
    while (nxt_[x] != h) x = nxt_[x];
    return x;
  }
  int edge_of(int h) const { return edge_of_[h]; }
  int vertex_of(int h) const { return vertex_of_[h]; }

  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  const std::string& edge_label(int e) const { return edge_labels_[e]; }
  const std::string& half_name(int h) const { return half_names_[h]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  int edge_index(const std::string& label) const {
    for (int e = 0; e < edge_count(); ++e)
      if (edge_labels_[e] == label) return e;
    throw graph_error("unknown edge label '" + label + "'");
  }

  // The two half-edges of edge e, in stored order.
  std::pair<int, int> edge_halves(int e) const {
    int first = -1;
    for (int h = 0; h < half_edge_count(); ++h)
      if (edge_of_[h] == e) {
        first = h;
        break;
      }
    return {first, opp_[first]};
  }

  std::vector<int> vertex_cycle(int v) const {
    std::vector<int> cyc;
    int h0 = vertices_[v].anchor;
    int h = h0;
    do {
      cyc.push_back(h);
      h = nxt_[h];
    } while (h != h0);
    return cyc;
  }

  int valence(int v) const { return static_cast<int>(vertex_cycle(v).size()); }

  bool is_three_valent() const {
    for (int v = 0; v < vertex_count(); ++v)
      if (valence(v) != 3) return false;
    return true;
  }

  bool is_loop_edge(int e) const {
    auto [a, b] = edge_halves(e);
    return vertex_of_[a] == vertex_of_[b];
  }

  // Faces: orbits of h -> nxt[opp[h]], each a cyclic list of directed
  // half-edges. Orbits partition the directed half-edges.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(half_edge_count(), 0);
    for (int h0 = 0; h0 < half_edge_count(); ++h0) {
      if (seen[h0]) continue;
      std::vector<int> cyc;
      int h = h0;
      do {
        seen[h] = 1;
        cyc.push_back(h);
        h = nxt_[opp_[h]];
      } while (h != h0);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  int face_count() const { return static_cast<int>(faces().size()); }

  // Euler characteristic of the graph (= of the glued bordered surface).
  int euler_characteristic() const { return vertex_count() - edge_count(); }

  bool is_connected() const {
    if (half_edge_count() == 0) return true;
    std::vector<char> seen(half_edge_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int h = stack.back();
      stack.pop_back();
      for (int k : {opp_[h], nxt_[h]})
        if (!seen[k]) {
          seen[k] = 1;
          stack.push_back(k);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  // Number of boundary holes of the glued surface.
  int holes() const { return face_count(); }

  // Genus of the glued surface; requires a connected graph.
  int genus() const {
    if (!is_connected()) throw graph_error("genus: graph is not connected");
    int chi = euler_characteristic();  // 2 - 2g - holes
    int g2 = 2 - holes() - chi;
    if (g2 < 0 || g2 % 2 != 0) throw graph_error("genus: inconsistent surface data");
    return g2 / 2;
  }

  // Neighbor slots of a flippable edge, read counterclockwise after the edge
  // at each endpoint. With (tail, head) = edge_halves(e):
  //   tail cycle (z, s1, s2), head cycle (z', s3, s4).
  // The flip sends  edge(s1) -> -phi(-Z),  edge(s2) -> +phi(Z),
  //                 edge(s3) -> -phi(-Z),  edge(s4) -> +phi(Z),  Z -> -Z.
  struct FlipSlots {
    int tail_half = -1, head_half = -1;
    int s1 = -1, s2 = -1, s3 = -1, s4 = -1;  // half-edges in the four slots
  };

  FlipSlots flip_slots(int e) const {
    auto [h, k] = edge_halves(e);
    if (vertex_of_[h] == vertex_of_[k])
      throw graph_error("flip undefined for self-loop edge '" + edge_labels_[e] + "'");
    if (valence(vertex_of_[h]) != 3 || valence(vertex_of_[k]) != 3)
      throw graph_error("flip requires three-valent endpoints at edge '" + edge_labels_[e] + "'");
    FlipSlots s;
    s.tail_half = h;
    s.head_half = k;
    s.s1 = nxt_[h];
    s.s2 = nxt_[s.s1];
    s.s3 = nxt_[k];
    s.s4 = nxt_[s.s3];
    return s;
  }

  // Flip: shrink edge e and re-expand the four-valent vertex the other way.
  // All edges keep their labels and half-edge ids; only the vertex rotations
  // at the two endpoints change.
  FatGraph flip(const std::string& label) const { return flip_edge(edge_index(label)); }

  FatGraph flip_edge(int e) const {
    FlipSlots s = flip_slots(e);
    FatGraph g = *this;
    // Before: tail (h, s1, s2), head (k, s3, s4).
    // After:  tail (h, s2, s3), head (k, s4, s1).
    const int h = s.tail_half, k = s.head_half;
    g.nxt_[h] = s.s2;
    g.nxt_[s.s2] = s.s3;
    g.nxt_[s.s3] = h;
    g.nxt_[k] = s.s4;
    g.nxt_[s.s4] = s.s1;
    g.nxt_[s.s1] = k;
    g.vertices_[vertex_of_[h]].anchor = h;
    g.vertices_[vertex_of_[k]].anchor = k;
    g.rebuild_vertex_map();
    return g;
  }

  // Dual graph: vertices are the faces of this graph; half-edge ids, edge
  // pairing and labels are shared. nxt' = nxt o opp, so dual(dual(g)) == g.
  FatGraph dual() const {
    FatGraph g = *this;
    std::vector<int> nxt2(half_edge_count());
    for (int h = 0; h < half_edge_count(); ++h) nxt2[h] = nxt_[opp_[h]];
    g.nxt_ = std::move(nxt2);
    g.vertices_.clear();
    auto fs = faces();
    for (size_t i = 0; i < fs.size(); ++i)
      g.vertices_.push_back({"f" + std::to_string(i), fs[i][0]});
    g.rebuild_vertex_map();
    return g;
  }

  // Relabels edges: new label = perm(old label). perm must be a bijection of
  // the label set (labels absent from perm stay put).
  FatGraph relabeled(const std::map<std::string, std::string>& perm) const {
    FatGraph g = *this;
    std::set<std::string> targets;
    for (auto& lbl : g.edge_labels_) {
      auto it = perm.find(lbl);
      if (it != perm.end()) lbl = it->second;
    }
    for (const auto& lbl : g.edge_labels_)
      if (!targets.insert(lbl).second)
        throw graph_error("relabeling is not a bijection: duplicate label '" + lbl + "'");
    return g;
  }

  bool operator==(const FatGraph& other) const {
    return same_structure(other) && vertices_size_names(*this) == vertices_size_names(other);
  }

  // Equality of the combinatorial data, ignoring vertex names and anchors
  // (e.g. the double dual reproduces the structure but renames vertices).
  bool same_structure(const FatGraph& other) const {
    return opp_ == other.opp_ && nxt_ == other.nxt_ && edge_of_ == other.edge_of_ &&
           edge_labels_ == other.edge_labels_ && half_names_ == other.half_names_;
  }

  // Marked isomorphism: a half-edge bijection preserving opp, nxt, and edge
  // labels. Returns the witness map (this -> other) when one exists.
  std::optional<std::vector<int>> marked_isomorphism(const FatGraph& other) const {
    if (half_edge_count() != other.half_edge_count() || edge_count() != other.edge_count())
      return std::nullopt;
    std::map<std::string, int> other_edge;
    for (int e = 0; e < other.edge_count(); ++e) other_edge[other.edge_labels_[e]] = e;

    std::vector<int> image(half_edge_count(), -1);
    std::vector<char> target_used(half_edge_count(), 0);

    // Propagate a tentative assignment h -> t through opp and nxt.
    auto try_assign = [&](int h0, int t0, std::vector<int>& img, std::vector<char>& used) {
      std::vector<int> stack{h0};
      if (img[h0] != -1) return img[h0] == t0;
      if (used[t0]) return false;
      img[h0] = t0;
      used[t0] = 1;
      auto push = [&](int h, int t) {
        if (img[h] != -1) return img[h] == t;
        if (used[t]) return false;
        img[h] = t;
        used[t] = 1;
        stack.push_back(h);
        return true;
      };
      while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        int t = img[h];
        if (edge_labels_[edge_of_[h]] != other.edge_labels_[other.edge_of_[t]]) return false;
        if (!push(opp_[h], other.opp_[t])) return false;
        if (!push(nxt_[h], other.nxt_[t])) return false;
      }
      return true;
    };

    for (int h = 0; h < half_edge_count(); ++h) {
      if (image[h] != -1) continue;
      auto it = other_edge.find(edge_labels_[edge_of_[h]]);
      if (it == other_edge.end()) return std::nullopt;
      auto [t1, t2] = other.edge_halves(it->second);
      bool ok = false;
      for (int target : {t1, t2}) {
        auto img = image;
        auto used = target_used;
        if (try_assign(h, target, img, used)) {
          image = std::move(img);
          target_used = std::move(used);
          ok = true;
          break;
        }
      }
      if (!ok) return std::nullopt;
    }
    return image;
  }

  bool is_isomorphic_marked(const FatGraph& other) const {
    return marked_isomorphism(other).has_value();
  }

  std::string describe() const {
    std::ostringstream out;
    out << "V=" << vertex_count() << " E=" << edge_count() << " F=" << face_count();
    return out.str();
  }

 private:
  static std::vector<std::string> vertices_size_names(const FatGraph& g) {
    std::vector<std::string> names;
    for (const auto& v : g.vertices_) names.push_back(v.name);
    return names;
  }

  void check_permutations() const {
    const int H = half_edge_count();
    for (int h = 0; h < H; ++h) {
      if (opp_[h] < 0 || opp_[h] >= H || opp_[h] == h || opp_[opp_[h]] != h)
        throw graph_error("opposite is not a fixed-point-free involution");
      if (nxt_[h] < 0 || nxt_[h] >= H) throw graph_error("next_at_vertex out of range");
      if (edge_of_[h] != edge_of_[opp_[h]]) throw graph_error("edge pairing inconsistent");
    }
    std::vector<int> indeg(H, 0);
    for (int h = 0; h < H; ++h) indeg[nxt_[h]]++;
    for (int h = 0; h < H; ++h)
      if (indeg[h] != 1) throw graph_error("next_at_vertex is not a permutation");
  }

  void rebuild_vertex_map() {
    vertex_of_.assign(half_edge_count(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
      int h0 = vertices_[v].anchor;
      int h = h0;
      do {
        if (vertex_of_[h] != -1) throw graph_error("vertex cycles overlap");
        vertex_of_[h] = v;
        h = nxt_[h];
      } while (h != h0);
    }
    for (int h = 0; h < half_edge_count(); ++h)
      if (vertex_of_[h] == -1)
        throw graph_error("half-edge '" + half_names_[h] + "' belongs to no vertex");
  }

  std::vector<int> opp_, nxt_, edge_of_, vertex_of_;
  std::vector<std::string> edge_labels_, half_names_;
  std::vector<Vertex> vertices_;
};

// --- Moves and words -------------------------------------------------------

struct Move {
  enum class Kind { Flip, Symmetry };
  Kind kind = Kind::Flip;
  std::string edge;                         // Flip
  std::map<std::string, std::string> perm;  // Symmetry

  static Move flip(std::string edge) { return {Kind::Flip, std::move(edge), {}}; }
  static Move symmetry(std::map<std::string, std::string> perm) {
    return {Kind::Symmetry, {}, std::move(perm)};
  }
};

using MoveWord = std::vector<Move>;

inline FatGraph apply_move(const FatGraph& g, const Move& m) {
  return m.kind == Move::Kind::Flip ? g.flip(m.edge) : g.relabeled(m.perm);
}

inline FatGraph apply_word(const FatGraph& g, const MoveWord& w) {
  FatGraph cur = g;
  for (size_t i = 0; i < w.size(); ++i) {
    try {
      cur = apply_move(cur, w[i]);
    } catch (const graph_error& err) {
      throw graph_error("move " + std::to_string(i) + " inapplicable: " + err.what());
    }
  }
  return cur;
}

// The relation words on edge labels. Flipped edges keep their labels, which
// makes R2 and R4 close on the nose; the five-flip word returns to the start
// graph with the two labels exchanged, so the canonical R5 word ends with
// that transposition.
inline MoveWord r2_word(const std::string& a) { return {Move::flip(a), Move::flip(a)}; }

inline MoveWord r4_word(const std::string& a, const std::string& b) {
  return {Move::flip(a), Move::flip(b), Move::flip(a), Move::flip(b)};
}

inline MoveWord r5_word(const std::string& a, const std::string& b) {
  return {Move::flip(a), Move::flip(b), Move::flip(a), Move::flip(b), Move::flip(a),
          Move::symmetry({{a, b}, {b, a}})};
}

// How many endpoints two distinct non-loop edges share.
inline int common_vertex_count(const FatGraph& g, const std::string& a, const std::string& b) {
  auto [a1, a2] = g.edge_halves(g.edge_index(a));
  auto [b1, b2] = g.edge_halves(g.edge_index(b));
  std::set<int> va{g.vertex_of(a1), g.vertex_of(a2)};
  int n = 0;
  for (int v : {g.vertex_of(b1), g.vertex_of(b2)})
    if (va.count(v)) ++n;
  return n;
}

struct RelationReport {
  bool ok = false;
  bool precondition_failed = false;
  std::string message;
};

enum class Relation { R2, R4, R5 };

inline RelationReport verify_groupoid_relation(const FatGraph& g, Relation rel,
                                               const std::string& a, const std::string& b = "") {
  RelationReport r;
  auto fail_pre = [&](const std::string& msg) {
    r.precondition_failed = true;
    r.message = msg;
    return r;
  };
  try {
    switch (rel) {
      case Relation::R2: {
        if (g.is_loop_edge(g.edge_index(a))) return fail_pre("R2: edge '" + a + "' is a self-loop");
        FatGraph end = apply_word(g, r2_word(a));
        r.ok = end.is_isomorphic_marked(g);
        r.message = r.ok ? "R2 closes" : "R2 endpoint differs from start";
        return r;
      }
      case Relation::R4: {
        if (common_vertex_count(g, a, b) != 0)
          return fail_pre("R4 requires edges with no common vertex");
        FatGraph ab = apply_word(g, {Move::flip(a), Move::flip(b)});
        FatGraph ba = apply_word(g, {Move::flip(b), Move::flip(a)});
        r.ok = ab.is_isomorphic_marked(ba);
        r.message = r.ok ? "R4 commutes" : "R4 orders disagree";
        return r;
      }
      case Relation::R5: {
        if (g.is_loop_edge(g.edge_index(a)) || g.is_loop_edge(g.edge_index(b)))
          return fail_pre("R5: self-loop edge");
        if (common_vertex_count(g, a, b) != 1)
          return fail_pre("R5 requires edges with exactly one common vertex");
        FatGraph end = apply_word(g, r5_word(a, b));
        r.ok = end.is_isomorphic_marked(g);
        r.message = r.ok ? "R5 closes (after the closing label transposition)"
                         : "R5 endpoint differs from start";
        return r;
      }
    }
  } catch (const graph_error& err) {
    r.message = err.what();
    r.precondition_failed = true;
    return r;
  }
  return r;
}

// Face correspondence through a flip. Every face of `before` contains a
// directed half-edge not on the flipped edge, and such half-edges stay on the
// boundary of the same hole; the map is keyed on them.
inline std::vector<int> face_bijection_through_flip(const FatGraph& before, const FatGraph& after,
                                                    const std::string& flipped_label) {
  const int e = before.edge_index(flipped_label);
  auto fb = before.faces();
  auto fa = after.faces();
  std::vector<int> face_of_half(after.half_edge_count(), -1);
  for (size_t i = 0; i < fa.size(); ++i)
    for (int h : fa[i]) face_of_half[h] = static_cast<int>(i);
  std::vector<int> image(fb.size(), -1);
  for (size_t i = 0; i < fb.size(); ++i) {
    for (int h : fb[i]) {
      if (before.edge_of(h) == e) continue;
      int img = face_of_half[h];
      if (image[i] == -1) image[i] = img;
      else if (image[i] != img)
        throw graph_error("face correspondence through flip is inconsistent");
    }
    if (image[i] == -1) throw graph_error("face consists of the flipped edge only");
  }
  return image;
}

}  // namespace qteich
