#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qteich {

using MatrixC = Eigen::MatrixXcd;

class singular_parameter : public std::domain_error {
 public:
  explicit singular_parameter(const std::string& what) : std::domain_error(what) {}
};

// Cyclic representation data at rational hbar = m/n: dimension n, unit
// q = exp(i pi m / n), indices in Z/nZ. The identities below are stated for
// m, n odd and coprime; other contexts are constructible but flagged.
struct CyclicRepContext {
  long m = 1;
  long n = 3;
  std::complex<double> q;

  static CyclicRepContext make(long m, long n) {
    if (m <= 0 || n <= 0) throw std::domain_error("m and n must be positive");
    CyclicRepContext ctx;
    ctx.m = m;
    ctx.n = n;
    ctx.q = std::polar(1.0, M_PI * static_cast<double>(m) / static_cast<double>(n));
    return ctx;
  }

  bool within_hypothesis() const { return m % 2 == 1 && n % 2 == 1 && std::gcd(m, n) == 1; }

  double hbar() const { return static_cast<double>(m) / static_cast<double>(n); }

  // q^k with the angle reduced mod 2n before evaluation.
  std::complex<double> q_power(long k) const {
    long r = ((m * k) % (2 * n) + 2 * n) % (2 * n);
    return std::polar(1.0, M_PI * static_cast<double>(r) / static_cast<double>(n));
  }
};

// Clock and shift pair: U e_i = u^{1/n} e_{i+1}, V = diag(v^{1/n} q^{2i}).
// Then q U V = q^-1 V U, U^n = u, V^n = v.
inline std::pair<MatrixC, MatrixC> clock_shift_pair(const CyclicRepContext& ctx, double u,
                                                    double v) {
  if (!(u > 0) || !(v > 0)) throw std::domain_error("clock_shift_pair needs positive u, v");
  const long n = ctx.n;
  const double ur = std::pow(u, 1.0 / static_cast<double>(n));
  const double vr = std::pow(v, 1.0 / static_cast<double>(n));
  MatrixC U = MatrixC::Zero(n, n), V = MatrixC::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    U((i + 1) % n, i) = ur;
    V(i, i) = vr * ctx.q_power(2 * i);
  }
  return {U, V};
}

// Convention switches for the discrete dilogarithm matrix and scalar q.
// `weights_on_row` applies F to the row index instead of the column;
// `conjugate_phase` flips the sign of the q^{2ij} phase; `negate_q` replaces
// q by -q in every odd power (even powers are unaffected). -q satisfies the
// same commutation relation but has (-q)^n = +1 for odd m, n, which is what
// makes ((1+qU)V)^n = (1+u)v rather than (1-u)v. The pinned default is fixed
// by the pentagon and conjugation identities (see the qrep tests).
struct LConvention {
  bool weights_on_row = false;
  bool conjugate_phase = false;
  bool negate_q = false;

  std::string str() const {
    return std::string("F(") + (weights_on_row ? "row" : "col") + "), q^{" +
           (conjugate_phase ? "-" : "+") + "2ij}, " + (negate_q ? "-q" : "+q");
  }
};

// q^k with the convention's sign applied to odd powers.
inline std::complex<double> q_odd_power(const CyclicRepContext& ctx, long k, LConvention conv) {
  std::complex<double> val = ctx.q_power(k);
  if (conv.negate_q && (k % 2 != 0)) val = -val;
  return val;
}

// F(j, u) = (1+u)^{j/n} prod_{k=0}^{j-1} (1 + q^{2k-1} u^{1/n})^{-1}.
inline std::complex<double> F_factor(const CyclicRepContext& ctx, long j, double u,
                                     LConvention conv = {}) {
  if (!(u > 0)) throw std::domain_error("F_factor needs positive u");
  const double ur = std::pow(u, 1.0 / static_cast<double>(ctx.n));
  std::complex<double> f = std::pow(1.0 + u, static_cast<double>(j) / static_cast<double>(ctx.n));
  for (long k = 0; k < j; ++k) {
    std::complex<double> factor = 1.0 + q_odd_power(ctx, 2 * k - 1, conv) * ur;
    if (std::abs(factor) < 1e-12)
      throw singular_parameter("vanishing factor 1 + q^{2k-1} u^{1/n} at k=" + std::to_string(k));
    f /= factor;
  }
  return f;
}

inline MatrixC L_matrix(const CyclicRepContext& ctx, double u, LConvention conv = {}) {
  const long n = ctx.n;
  std::vector<std::complex<double>> F(n);
  for (long j = 0; j < n; ++j) F[j] = F_factor(ctx, j, u, conv);
  MatrixC L(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      long phase = 2 * r * c * (conv.conjugate_phase ? -1 : 1);
      L(r, c) = F[conv.weights_on_row ? r : c] * ctx.q_power(phase);
    }
  return L;
}

// Working cyclic dilogarithm kernel M(w)[i][j] = q^{2ij} G(j, w) with
//   G(j, w) = (1+w)^{-j/n} prod_{k=1}^{j} (1 - q^{1-2k} w^{1/n}).
// The factors never vanish for w > 0 (q^{1-2k} is never real positive for
// odd m, n), the column weights close up cyclically because
// prod_{k=1}^{n}(1 - q^{1-2k} w^{1/n}) = 1 + w, and M implements the flip on
// cyclic representations: conjugation by M((1+u)v) maps the (u, v) clock and
// shift pair to the image of the quantum-torus automorphism, up to scalars.
inline MatrixC cyclic_dilog_matrix(const CyclicRepContext& ctx, double w) {
  if (!(w > 0)) throw std::domain_error("cyclic_dilog_matrix needs a positive parameter");
  const long n = ctx.n;
  const double a = std::pow(w, 1.0 / static_cast<double>(n));
  const double decay = std::pow(1.0 + w, -1.0 / static_cast<double>(n));
  std::vector<std::complex<double>> G(n);
  G[0] = 1.0;
  for (long j = 1; j < n; ++j)
    G[j] = G[j - 1] * decay * (1.0 - ctx.q_power(1 - 2 * j) * a);
  MatrixC M(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) M(r, c) = G[c] * ctx.q_power(2 * r * c);
  return M;
}

// Flip intertwiner for the cyclic representation with central characters
// (u, v): the kernel evaluated at the image character (1+u)v.
inline MatrixC flip_intertwiner(const CyclicRepContext& ctx, double u, double v) {
  return cyclic_dilog_matrix(ctx, (1 + u) * v);
}

// Largest-modulus entry of M.
inline std::complex<double> dominant_entry(const MatrixC& M) {
  std::complex<double> best = M(0, 0);
  for (long r = 0; r < M.rows(); ++r)
    for (long c = 0; c < M.cols(); ++c)
      if (std::abs(M(r, c)) > std::abs(best)) best = M(r, c);
  return best;
}

// Distance of M from a scalar matrix: normalize by the dominant entry and
// measure the max-norm deviation from the identity.
inline double scalar_deviation(const MatrixC& M) {
  std::complex<double> lambda = dominant_entry(M);
  if (std::abs(lambda) == 0) return 1.0;
  double dev = 0;
  for (long r = 0; r < M.rows(); ++r)
    for (long c = 0; c < M.cols(); ++c) {
      std::complex<double> want = (r == c) ? std::complex<double>(1, 0) : 0.0;
      dev = std::max(dev, std::abs(M(r, c) / lambda - want));
    }
  return dev;
}

// Residual of "A is a scalar multiple of B".
inline double proportionality_residual(const MatrixC& A, const MatrixC& B) {
  return scalar_deviation(A * B.inverse());
}

// The induced map on central characters: (u, v) -> ((1+u) v, 1/u); the
// five-fold iterate is the identity.
inline std::pair<double, double> orbit_step(double u, double v) { return {(1 + u) * v, 1 / u}; }

// Arguments of the five-term product, in left-to-right multiplication order
// starting from L(v^-1); the rightmost factor is L(u).
inline std::vector<double> pentagon_arguments(double u, double v) {
  return {1 / v, (1 + v) / (u * v), (1 + v + u * v) / u, v * (1 + u), u};
}

struct PentagonProductResult {
  double deviation = 1;
  std::complex<double> scalar;
};

// Five-term product with the working kernel, in the printed argument order
// L(v^-1) L(u^-1 v^-1 + u^-1) L(v + v u^-1 + u^-1) L(v + uv) L(u). The
// arguments are the u-characters along the orbit of (u,v) -> ((1+u)v, 1/u),
// read cyclically, so the product is a scalar matrix.
inline PentagonProductResult pentagon_product(const CyclicRepContext& ctx, double u, double v) {
  MatrixC M = MatrixC::Identity(ctx.n, ctx.n);
  for (double a : pentagon_arguments(u, v)) M = M * cyclic_dilog_matrix(ctx, a);
  return {scalar_deviation(M), dominant_entry(M)};
}

// Same product with a permuted factor order (negative control: the identity
// genuinely depends on the order, so this should be far from scalar). Near
// the fixed point u = 1/v = (1+sqrt 5)/2 of the orbit map all five arguments
// coincide and every permutation degenerates to the scalar product, so the
// control must sample away from it.
inline PentagonProductResult pentagon_product_permuted(const CyclicRepContext& ctx, double u,
                                                       double v, int swap_a = 0, int swap_b = 1) {
  auto args = pentagon_arguments(u, v);
  std::swap(args[static_cast<size_t>(swap_a)], args[static_cast<size_t>(swap_b)]);
  MatrixC M = MatrixC::Identity(ctx.n, ctx.n);
  for (double a : args) M = M * cyclic_dilog_matrix(ctx, a);
  return {scalar_deviation(M), dominant_entry(M)};
}

// Minimum permuted-product deviation over fixed control points away from the
// golden fixed point.
inline double pentagon_negative_control(const CyclicRepContext& ctx) {
  double dev = 1e9;
  for (auto [u, v] : {std::pair<double, double>{1.0, 1.0}, {0.7, 2.3}, {3.3, 0.4}})
    dev = std::min(dev, pentagon_product_permuted(ctx, u, v, 0, 2).deviation);
  return dev;
}

// Five-term product built from the one-parameter matrix exactly as printed
// (used by the variant search; no printed reading satisfies the identity).
inline PentagonProductResult pentagon_product_printed(const CyclicRepContext& ctx, double u,
                                                      double v, LConvention conv = {},
                                                      bool reversed = false) {
  auto args = pentagon_arguments(u, v);
  if (reversed) std::reverse(args.begin(), args.end());
  MatrixC M = MatrixC::Identity(ctx.n, ctx.n);
  for (double a : args) M = M * L_matrix(ctx, a, conv);
  return {scalar_deviation(M), dominant_entry(M)};
}

// --- Conjugation relations ---------------------------------------------------

struct ConjugationReport {
  double resid_u = 1;        // L U{u} L^-1  vs  (1 + q U{(1+u)v}) V{1/u}
  double resid_v = 1;        // L V{v} L^-1  vs  U{(1+u)v}^-1
  double central_u = 1;      // |U^n - u|
  double central_v = 1;      // |V^n - v|
  double central_uv = 1;     // |((1+qU)V)^n - (1+u)v|
  bool ok(double tol) const {
    return resid_u <= tol && resid_v <= tol && central_u <= tol && central_v <= tol &&
           central_uv <= tol;
  }
};

inline double scalar_matrix_residual(const MatrixC& M, std::complex<double> lambda) {
  double dev = 0;
  for (long r = 0; r < M.rows(); ++r)
    for (long c = 0; c < M.cols(); ++c) {
      std::complex<double> want = (r == c) ? lambda : std::complex<double>(0, 0);
      dev = std::max(dev, std::abs(M(r, c) - want));
    }
  return dev;
}

// Verifies the conjugation action of the flip intertwiner:
//   L U{u} L^-1 ~ (1 + q' U{(1+u)v}) V{1/u},   L V{v} L^-1 ~ U{(1+u)v}^-1,
// with L = flip_intertwiner(u, v) and q' = -q the odd root with q'^n = +1
// (with q itself, ((1+qU)V)^n is (1-u)v instead of (1+u)v), plus the central
// characters U^n = u, V^n = v, ((1+q'U)V)^n = (1+u)v.
inline ConjugationReport conjugation_check(const CyclicRepContext& ctx, double u, double v) {
  auto [Uu, Vv] = clock_shift_pair(ctx, u, v);
  const long n = ctx.n;
  const std::complex<double> q1 = -ctx.q;
  MatrixC L = flip_intertwiner(ctx, u, v);
  MatrixC Linv = L.inverse();

  ConjugationReport rep;
  MatrixC I = MatrixC::Identity(n, n);

  auto [Unew, Vinv_u] = clock_shift_pair(ctx, (1 + u) * v, 1 / u);
  MatrixC rhs_u = (I + q1 * Unew) * Vinv_u;
  rep.resid_u = proportionality_residual(L * Uu * Linv, rhs_u);

  MatrixC rhs_v = Unew.inverse();
  rep.resid_v = proportionality_residual(L * Vv * Linv, rhs_v);

  MatrixC Un = I, Vn = I, Tn = I;
  MatrixC T = (I + q1 * Uu) * Vv;
  for (long k = 0; k < n; ++k) {
    Un = Un * Uu;
    Vn = Vn * Vv;
    Tn = Tn * T;
  }
  rep.central_u = scalar_matrix_residual(Un, u);
  rep.central_v = scalar_matrix_residual(Vn, v);
  rep.central_uv = scalar_matrix_residual(Tn, (1 + u) * v);
  return rep;
}

// Exhaustive search over the documented conventions; returns descriptions of
// every configuration meeting the tolerance.
struct VariantResult {
  LConvention conv;
  bool reversed = false;
  double deviation = 1;
};

inline std::vector<VariantResult> pentagon_variant_search(const CyclicRepContext& ctx, double u,
                                                          double v, double tol = 1e-8) {
  std::vector<VariantResult> hits;
  for (bool row : {false, true})
    for (bool conj : {false, true})
      for (bool neg : {false, true})
        for (bool rev : {false, true}) {
          LConvention conv{row, conj, neg};
          try {
            auto res = pentagon_product_printed(ctx, u, v, conv, rev);
            if (res.deviation <= tol) hits.push_back({conv, rev, res.deviation});
          } catch (const singular_parameter&) {
            // one of the five arguments is singular for this (u, v); skip
          }
        }
  return hits;
}

}  // namespace qteich
