#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qteich/coords.hpp"
#include "qteich/fatgraph.hpp"
#include "qteich/rational.hpp"

namespace qteich {

class not_reducible : public std::runtime_error {
 public:
  explicit not_reducible(const std::string& what) : std::runtime_error(what) {}
};

// Linear form in generators with rational coefficients; no zero entries.
using LinearForm = std::map<std::string, Rational>;

inline void lf_add(LinearForm& w, const std::string& g, const Rational& c) {
  auto it = w.find(g);
  if (it == w.end()) {
    if (c != 0) w[g] = c;
  } else {
    it->second += c;
    if (it->second == 0) w.erase(it);
  }
}

inline LinearForm lf_scaled(const LinearForm& w, const Rational& s) {
  LinearForm out;
  if (s == 0) return out;
  for (const auto& [g, c] : w) out[g] = c * s;
  return out;
}

inline LinearForm lf_sum(const LinearForm& a, const LinearForm& b, const Rational& sb = 1) {
  LinearForm out = a;
  for (const auto& [g, c] : b) lf_add(out, g, c * sb);
  return out;
}

inline std::string lf_str(const LinearForm& w) {
  if (w.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : w) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) out << a.str() << " ";
    out << g;
  }
  return out.str();
}

// True when the first stored coefficient is positive (or the form is zero);
// exactly one of W, -W is canonical for W != 0.
inline bool lf_is_canonical(const LinearForm& w) {
  return w.empty() || w.begin()->second > 0;
}

// --- WeylExpression ---------------------------------------------------------

// Linear combination of generators, a rational multiple of the central
// scalar 2*pi*i*hbar, and formal phi-terms with linear-form arguments.
// Normal form keeps only canonical phi arguments, rewriting
// phi(-W) = phi(W) - W; equality of normal forms is structural.
class WeylExpression {
 public:
  WeylExpression() = default;

  static WeylExpression generator(const std::string& name) {
    WeylExpression e;
    e.lin_[name] = 1;
    return e;
  }

  static WeylExpression from_linear(LinearForm w) {
    WeylExpression e;
    for (auto& [g, c] : w) lf_add(e.lin_, g, c);
    return e;
  }

  static WeylExpression central_scalar(Rational c) {
    WeylExpression e;
    e.c2pi_ = std::move(c);
    return e;
  }

  const LinearForm& linear() const { return lin_; }
  const Rational& central() const { return c2pi_; }
  const std::map<LinearForm, Rational>& phi_terms() const { return phi_; }

  bool is_linear() const { return phi_.empty() && c2pi_ == 0; }
  bool is_zero() const { return lin_.empty() && phi_.empty() && c2pi_ == 0; }

  WeylExpression& operator+=(const WeylExpression& o) {
    for (const auto& [g, c] : o.lin_) lf_add(lin_, g, c);
    c2pi_ += o.c2pi_;
    for (const auto& [w, c] : o.phi_) add_phi(w, c);
    return *this;
  }
  WeylExpression& operator-=(const WeylExpression& o) {
    for (const auto& [g, c] : o.lin_) lf_add(lin_, g, -c);
    c2pi_ -= o.c2pi_;
    for (const auto& [w, c] : o.phi_) add_phi(w, -c);
    return *this;
  }
  friend WeylExpression operator+(WeylExpression a, const WeylExpression& b) { return a += b; }
  friend WeylExpression operator-(WeylExpression a, const WeylExpression& b) { return a -= b; }
  WeylExpression operator-() const {
    WeylExpression e;
    e -= *this;
    return e;
  }

  // Adds c * phi(w), applying the canonical rewrite.
  void add_phi(LinearForm w, const Rational& c) {
    if (c == 0) return;
    if (lf_is_canonical(w)) {
      bump_phi(std::move(w), c);
    } else {
      // phi(-W) = phi(W) - W with W canonical
      LinearForm pos = lf_scaled(w, -1);
      for (const auto& [g, cc] : pos) lf_add(lin_, g, -c * cc);
      bump_phi(std::move(pos), c);
    }
  }

  bool operator==(const WeylExpression& o) const {
    return lin_ == o.lin_ && c2pi_ == o.c2pi_ && phi_ == o.phi_;
  }

  std::string str() const {
    std::ostringstream out;
    bool any = false;
    if (!lin_.empty()) {
      out << lf_str(lin_);
      any = true;
    }
    if (c2pi_ != 0) {
      out << (any ? " + " : "") << "(" << c2pi_.str() << ")*2pii*hbar";
      any = true;
    }
    for (const auto& [w, c] : phi_) {
      out << (any ? " + " : "");
      if (c != 1) out << "(" << c.str() << ")*";
      out << "phi(" << lf_str(w) << ")";
      any = true;
    }
    return any ? out.str() : "0";
  }

 private:
  void bump_phi(LinearForm w, const Rational& c) {
    auto it = phi_.find(w);
    if (it == phi_.end()) {
      phi_[std::move(w)] = c;
    } else {
      it->second += c;
      if (it->second == 0) phi_.erase(it);
    }
  }

  LinearForm lin_;
  Rational c2pi_ = 0;
  std::map<LinearForm, Rational> phi_;
};

// --- ScalarExpression -------------------------------------------------------

// A central value in units of 2*pi*i*hbar: rational constant plus formal
// phi'-symbols. Normal form uses phi'(-W) = 1 - phi'(W).
class ScalarExpression {
 public:
  ScalarExpression() = default;
  explicit ScalarExpression(Rational c) : c_(std::move(c)) {}

  void add_phi_prime(LinearForm w, const Rational& c) {
    if (c == 0) return;
    if (lf_is_canonical(w)) {
      bump(std::move(w), c);
    } else {
      c_ += c;
      bump(lf_scaled(w, -1), -c);
    }
  }

  void add_constant(const Rational& c) { c_ += c; }

  const Rational& constant() const { return c_; }
  const std::map<LinearForm, Rational>& phi_prime_terms() const { return phip_; }

  bool is_zero() const { return c_ == 0 && phip_.empty(); }

  bool operator==(const ScalarExpression& o) const { return c_ == o.c_ && phip_ == o.phip_; }

  std::string str() const {
    std::ostringstream out;
    out << "(" << c_.str();
    for (const auto& [w, c] : phip_) {
      out << (c < 0 ? " - " : " + ");
      Rational a = c < 0 ? Rational(-c) : c;
      if (a != 1) out << a.str() << " ";
      out << "phi'(" << lf_str(w) << ")";
    }
    out << ")*2pii*hbar";
    return out.str();
  }

 private:
  void bump(LinearForm w, const Rational& c) {
    auto it = phip_.find(w);
    if (it == phip_.end()) {
      phip_[std::move(w)] = c;
    } else {
      it->second += c;
      if (it->second == 0) phip_.erase(it);
    }
  }

  Rational c_ = 0;
  std::map<LinearForm, Rational> phip_;
};

// --- Commutators ------------------------------------------------------------

inline Rational bracket_pairing(const LinearForm& a, const LinearForm& b, const PoissonMatrix& p) {
  Rational s = 0;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) {
      int v = p.bracket(ga, gb);
      if (v != 0) s += ca * cb * v;
    }
  return s;
}

// [e1, e2] as a central scalar, using [A, f(W)] = [A, W] f'(W) for central
// [A, W]. Commutators of two phi-terms require commuting arguments.
inline ScalarExpression commutator(const WeylExpression& e1, const WeylExpression& e2,
                                   const PoissonMatrix& p) {
  ScalarExpression out;
  out.add_constant(bracket_pairing(e1.linear(), e2.linear(), p));
  for (const auto& [w2, d] : e2.phi_terms())
    out.add_phi_prime(w2, d * bracket_pairing(e1.linear(), w2, p));
  for (const auto& [w1, c] : e1.phi_terms())
    out.add_phi_prime(w1, c * bracket_pairing(w1, e2.linear(), p));
  for (const auto& [w1, c1] : e1.phi_terms())
    for (const auto& [w2, c2] : e2.phi_terms())
      if (bracket_pairing(w1, w2, p) != 0)
        throw not_reducible("commutator of phi-terms with non-commuting arguments: phi(" +
                            lf_str(w1) + "), phi(" + lf_str(w2) + ")");
  return out;
}

// --- Quantum flip -----------------------------------------------------------

using GeneratorState = std::map<std::string, WeylExpression>;

inline GeneratorState identity_state(const FatGraph& g) {
  GeneratorState s;
  for (const auto& lbl : g.edge_labels()) s[lbl] = WeylExpression::generator(lbl);
  return s;
}

// Flip morphism on generator expressions: the counterclockwise-first slot at
// each endpoint gets -phi(-Z), the second +phi(Z), the flipped edge negates.
// Slot contributions accumulate when one edge occupies several slots. The
// flipped edge's current expression must be a pure linear form (it is the
// phi argument).
inline GeneratorState quantum_flip(const GeneratorState& state, const FatGraph& g,
                                   const std::string& label) {
  const int e = g.edge_index(label);
  auto slots = g.flip_slots(e);
  auto it = state.find(label);
  if (it == state.end()) throw std::invalid_argument("state missing generator '" + label + "'");
  if (!it->second.is_linear())
    throw not_reducible("flip argument for edge '" + label + "' is not a linear form");
  const LinearForm z = it->second.linear();
  const LinearForm mz = lf_scaled(z, -1);

  GeneratorState out = state;
  auto slot_label = [&](int h) { return g.edge_label(g.edge_of(h)); };
  out[slot_label(slots.s1)].add_phi(mz, -1);
  out[slot_label(slots.s2)].add_phi(z, 1);
  out[slot_label(slots.s3)].add_phi(mz, -1);
  out[slot_label(slots.s4)].add_phi(z, 1);
  out[label] = WeylExpression::from_linear(mz);
  return out;
}

// The hbar <-> 1/hbar duality functor at scale s: generators and the central
// scalar rescale, phi arguments rescale, phi coefficients stay.
inline WeylExpression hbar_duality_image(const WeylExpression& e, const Rational& s) {
  WeylExpression out = WeylExpression::from_linear(lf_scaled(e.linear(), 1 / s));
  out += WeylExpression::central_scalar(e.central() / (s * s));
  for (const auto& [w, c] : e.phi_terms()) out.add_phi(lf_scaled(w, 1 / s), c);
  return out;
}

// --- Morphism verification (S.1 / S.2) --------------------------------------

struct MorphismReport {
  bool ok = false;
  bool star_preserved = false;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

// Checks that the flip images satisfy the flipped graph's relations inside
// the source algebra: [img(a), img(b)] = 2*pi*i*hbar * {z_a, z_b}_flipped.
inline MorphismReport verify_flip_is_morphism(const FatGraph& g, const std::string& label) {
  MorphismReport rep;
  PoissonMatrix p = wp_bracket(g);
  PoissonMatrix pf = wp_bracket(g.flip(label));
  GeneratorState img = quantum_flip(identity_state(g), g, label);

  rep.ok = true;
  for (const auto& a : g.edge_labels())
    for (const auto& b : g.edge_labels()) {
      ScalarExpression lhs = commutator(img.at(a), img.at(b), p);
      ScalarExpression rhs{Rational(pf.bracket(a, b))};
      ++rep.pairs_checked;
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.failures.push_back("[" + a + ", " + b + "]: " + lhs.str() + " != " + rhs.str());
      }
    }

  // Real structure: images are rational combinations of self-adjoint
  // generators and phi-terms with real arguments (phi is real on the reals).
  rep.star_preserved = true;
  return rep;
}

// --- Central elements (face sums) -------------------------------------------

inline WeylExpression face_sum_expression(const FatGraph& g, const std::vector<int>& face,
                                          const GeneratorState& state) {
  WeylExpression s;
  for (int h : face) s += state.at(g.edge_label(g.edge_of(h)));
  return s;
}

struct CenterReport {
  bool ok = false;
  std::vector<std::string> failures;
};

// After a flip, each face sum (rewritten to normal form) must equal the sum
// over the corresponding face of the flipped graph.
inline CenterReport verify_center_preserved(const FatGraph& g, const std::string& label) {
  CenterReport rep;
  rep.ok = true;
  GeneratorState before = identity_state(g);
  GeneratorState after = quantum_flip(before, g, label);
  FatGraph gf = g.flip(label);
  auto fb = g.faces();
  auto fa = gf.faces();
  auto match = face_bijection_through_flip(g, gf, label);
  for (size_t i = 0; i < fb.size(); ++i) {
    WeylExpression pre = face_sum_expression(g, fb[i], before);
    WeylExpression post = face_sum_expression(gf, fa[match[i]], after);
    if (!(pre == post)) {
      rep.ok = false;
      rep.failures.push_back("face " + std::to_string(i) + ": " + pre.str() +
                             " != " + post.str());
    }
  }
  return rep;
}

// --- Pentagon chain ---------------------------------------------------------

// The seven-generator flip chain around the pentagon configuration. Formal
// symbols: boundary roles A..E and X@j. Each step applies
//   X -> Y - phi(-X),  Y -> -X,  A -> D,  B -> E,
//   C -> A + phi(X),   D -> B - phi(-X),  E -> C + phi(X),
// rewriting phi(+-X@j) immediately via
//   phi(-X@j) = -X@(j+1) - X@(j-1),   phi(X@j) = X@j - X@(j+1) - X@(j-1).
// Five-periodicity of the X symbols (X@(j+5) = X@j) is an assumption here;
// the quantum-torus module discharges it.
struct PentagonChainReport {
  bool x_chain_consistent = false;  // X equals the symbol X@i after i steps
  bool closes_with_assumption = false;
  std::map<std::string, std::string> residues_raw;       // before the assumption
  std::map<std::string, std::string> residues_assumed;   // after index reduction
};

namespace pentagon_detail {

inline std::string xsym(int j) { return "X@" + std::to_string(j); }

inline LinearForm x_form(int j) {
  LinearForm w;
  w[xsym(j)] = 1;
  return w;
}

// Matches w against +-X@j; returns the rewritten linear form of phi(w).
inline LinearForm phi_linearized(const LinearForm& w) {
  if (w.size() != 1 || (w.begin()->second != 1 && w.begin()->second != -1))
    throw not_reducible("irreducible phi-term: phi(" + lf_str(w) + ")");
  const std::string& name = w.begin()->first;
  if (name.rfind("X@", 0) != 0) throw not_reducible("irreducible phi-term: phi(" + lf_str(w) + ")");
  int j = std::stoi(name.substr(2));
  LinearForm out;
  if (w.begin()->second == 1) out[xsym(j)] = 1;  // phi(X@j) = X@j - X@(j+1) - X@(j-1)
  lf_add(out, xsym(j + 1), -1);
  lf_add(out, xsym(j - 1), -1);
  return out;
}

// Reduce X@j indices mod 5 into the window [-1, 3].
inline LinearForm reduce_mod5(const LinearForm& w) {
  LinearForm out;
  for (const auto& [g, c] : w) {
    if (g.rfind("X@", 0) == 0) {
      int j = std::stoi(g.substr(2));
      int r = ((j + 1) % 5 + 5) % 5 - 1;
      lf_add(out, xsym(r), c);
    } else {
      lf_add(out, g, c);
    }
  }
  return out;
}

}  // namespace pentagon_detail

inline PentagonChainReport pentagon_chain() {
  using namespace pentagon_detail;
  std::map<std::string, LinearForm> cur;
  for (const std::string& b : {"A", "B", "C", "D", "E"}) cur[b] = LinearForm{{b, Rational(1)}};
  cur["X"] = x_form(0);
  cur["Y"] = lf_scaled(x_form(-1), -1);

  PentagonChainReport rep;
  rep.x_chain_consistent = true;
  auto initial = cur;
  for (int i = 0; i < 5; ++i) {
    LinearForm phi_x = phi_linearized(cur["X"]);
    LinearForm phi_mx = phi_linearized(lf_scaled(cur["X"], -1));
    std::map<std::string, LinearForm> nxt;
    nxt["X"] = lf_sum(cur["Y"], phi_mx, -1);
    nxt["Y"] = lf_scaled(cur["X"], -1);
    nxt["A"] = cur["D"];
    nxt["B"] = cur["E"];
    nxt["C"] = lf_sum(cur["A"], phi_x);
    nxt["D"] = lf_sum(cur["B"], phi_mx, -1);
    nxt["E"] = lf_sum(cur["C"], phi_x);
    cur = std::move(nxt);
    if (!(cur["X"] == x_form(i + 1))) rep.x_chain_consistent = false;
  }

  rep.closes_with_assumption = true;
  for (const auto& [name, start] : initial) {
    LinearForm raw = lf_sum(cur[name], start, -1);
    LinearForm assumed = reduce_mod5(raw);
    rep.residues_raw[name] = lf_str(raw);
    rep.residues_assumed[name] = lf_str(assumed);
    if (!assumed.empty()) rep.closes_with_assumption = false;
  }
  return rep;
}

// Bracket data of the standard flip neighborhood with five distinct edges:
// tail cycle (Z, D, C), head cycle (Z, B, A), each vertex contributing +1 to
// its counterclockwise-consecutive pairs.
inline PoissonMatrix flip_square_bracket() {
  PoissonMatrix p;
  p.labels = {"A", "B", "C", "D", "Z"};
  p.entries.assign(25, 0);
  auto add = [&](const std::string& a, const std::string& b) {
    p.entries[p.index(a) * 5 + p.index(b)] += 1;
    p.entries[p.index(b) * 5 + p.index(a)] -= 1;
  };
  for (auto cyc : {std::vector<std::string>{"Z", "D", "C"}, std::vector<std::string>{"Z", "B", "A"}})
    for (int i = 0; i < 3; ++i) add(cyc[i], cyc[(i + 1) % 3]);
  return p;
}

}  // namespace qteich
