#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "qteich/nclaurent.hpp"
#include "qteich/qrep.hpp"
#include "qteich/rng.hpp"

using namespace qteich;
using C = std::complex<double>;

namespace {

// Evaluation of a noncommutative Laurent polynomial in the clock/shift
// matrices at q = exp(i pi m / n).
MatrixC evaluate(const NCLaurent& x, const CyclicRepContext& ctx, const MatrixC& U,
                 const MatrixC& V) {
  const long n = ctx.n;
  MatrixC out = MatrixC::Zero(n, n);
  MatrixC Uinv = U.inverse(), Vinv = V.inverse();
  for (const auto& [key, coeff] : x.terms()) {
    C scalar = 0;
    for (const auto& [qe, rat] : coeff.terms())
      scalar += static_cast<double>(rat.convert_to<double>()) * ctx.q_power(qe);
    MatrixC term = MatrixC::Identity(n, n);
    for (long k = 0; k < std::abs(key.first); ++k) term = term * (key.first > 0 ? U : Uinv);
    for (long k = 0; k < std::abs(key.second); ++k) term = term * (key.second > 0 ? V : Vinv);
    out += scalar * term;
  }
  return out;
}

}  // namespace

TEST_CASE("clock and shift matrices") {
  auto ctx = CyclicRepContext::make(1, 3);
  auto [U, V] = clock_shift_pair(ctx, 1.0, 1.0);
  // U is the cyclic shift; U^3 = I.
  CHECK(std::abs(U(1, 0) - 1.0) < 1e-14);
  CHECK(std::abs(U(2, 1) - 1.0) < 1e-14);
  CHECK(std::abs(U(0, 2) - 1.0) < 1e-14);
  CHECK(scalar_matrix_residual(U * U * U, 1.0) < 1e-12);

  auto [U2, V2] = clock_shift_pair(ctx, 2.0, 0.5);
  MatrixC lhs = ctx.q * U2 * V2, rhs = std::conj(ctx.q) * V2 * U2;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);

  MatrixC U2n = U2 * U2 * U2;
  CHECK(scalar_matrix_residual(U2n, 2.0) < 1e-12);
  MatrixC V2n = V2 * V2 * V2;
  CHECK(scalar_matrix_residual(V2n, 0.5) < 1e-12);

  CHECK_THROWS_AS(clock_shift_pair(ctx, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(clock_shift_pair(ctx, 1.0, 0.0), std::domain_error);
}

TEST_CASE("printed one-parameter matrix: finiteness, invertibility, singularities") {
  auto ctx3 = CyclicRepContext::make(1, 3);
  CHECK(std::abs(F_factor(ctx3, 0, 0.8) - 1.0) < 1e-15);  // empty product
  MatrixC L = L_matrix(ctx3, 1.0);
  CHECK(L.allFinite());
  CHECK(std::abs(L.determinant()) > 1e-9);

  // At n = 5 and u = 1 a product factor vanishes: 1 + q^5 u^{1/5} = 0.
  auto ctx5 = CyclicRepContext::make(1, 5);
  CHECK_THROWS_AS(L_matrix(ctx5, 1.0), singular_parameter);
  CHECK_NOTHROW(L_matrix(ctx5, 1.0001));
}

TEST_CASE("working kernel is nonsingular for positive parameters") {
  auto ctx5 = CyclicRepContext::make(1, 5);
  for (double w : {1e-3, 0.3, 1.0, 7.7, 1e3}) {
    MatrixC M = cyclic_dilog_matrix(ctx5, w);
    CHECK(M.allFinite());
    CHECK(std::abs(M.determinant()) > 1e-12);
  }
  CHECK_THROWS_AS(cyclic_dilog_matrix(ctx5, 0.0), std::domain_error);
}

TEST_CASE("matrix pentagon identity holds for the working kernel") {
  auto ctx = CyclicRepContext::make(1, 3);
  CHECK(pentagon_product(ctx, 1.0, 1.0).deviation < 1e-8);

  Rng rng(2);
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 3}, {1, 5}, {3, 5}, {1, 7}}) {
    auto c = CyclicRepContext::make(m, n);
    for (int t = 0; t < 5; ++t) {
      double u = rng.uniform(0.1, 10), v = rng.uniform(0.1, 10);
      CHECK(pentagon_product(c, u, v).deviation < 1e-8);
    }
  }
}

TEST_CASE("permuted pentagon factors are far from scalar away from the fixed point") {
  auto ctx = CyclicRepContext::make(1, 5);
  CHECK(pentagon_negative_control(ctx) > 0.1);
  CHECK(pentagon_product_permuted(ctx, 1.0, 1.0, 0, 2).deviation > 0.1);
  CHECK(pentagon_product_permuted(ctx, 0.7, 2.3, 0, 2).deviation > 0.1);

  // At the golden fixed point of (u, v) -> ((1+u)v, 1/u) all five arguments
  // coincide, so every permuted product collapses to the scalar one.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (double a : pentagon_arguments(phi, 1 / phi)) CHECK(std::abs(a - phi) < 1e-12);
  CHECK(pentagon_product_permuted(ctx, phi, 1 / phi, 0, 2).deviation < 1e-8);
}

TEST_CASE("no reading of the printed one-parameter matrix satisfies the pentagon") {
  auto ctx = CyclicRepContext::make(1, 5);
  auto hits = pentagon_variant_search(ctx, 0.7, 2.3, 1e-8);
  CHECK(hits.empty());
}

TEST_CASE("conjugation of the clock/shift pair by the flip intertwiner") {
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 3}, {1, 5}}) {
    auto ctx = CyclicRepContext::make(m, n);
    for (auto [u, v] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.7, 2.3}}) {
      auto rep = conjugation_check(ctx, u, v);
      CHECK(rep.resid_u < 1e-8);
      CHECK(rep.resid_v < 1e-8);
      CHECK(rep.central_u < 1e-10);
      CHECK(rep.central_v < 1e-10);
      CHECK(rep.central_uv < 1e-10);
    }
  }
}

TEST_CASE("central character of (1+qU)V depends on the odd root") {
  // With q' = -q (so q'^n = +1): ((1+q'U)V)^n = (1+u)v. With q itself
  // (q^n = -1 for odd m, n) the product telescopes to (1-u)v instead.
  auto ctx = CyclicRepContext::make(1, 5);
  double u = 0.7, v = 2.3;
  auto [U, V] = clock_shift_pair(ctx, u, v);
  MatrixC I = MatrixC::Identity(ctx.n, ctx.n);
  MatrixC Tgood = (I - ctx.q * U) * V;  // -q is the odd root with (-q)^n = 1
  MatrixC Tbad = (I + ctx.q * U) * V;
  MatrixC Pg = I, Pb = I;
  for (long k = 0; k < ctx.n; ++k) {
    Pg = Pg * Tgood;
    Pb = Pb * Tbad;
  }
  CHECK(scalar_matrix_residual(Pg, (1 + u) * v) < 1e-10);
  CHECK(scalar_matrix_residual(Pb, (1 - u) * v) < 1e-10);
}

TEST_CASE("orbit of central characters has period five") {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    double u = rng.uniform(0.1, 10), v = rng.uniform(0.1, 10);
    double uu = u, vv = v;
    for (int i = 0; i < 5; ++i) {
      auto s = orbit_step(uu, vv);
      uu = s.first;
      vv = s.second;
    }
    CHECK(std::abs(uu - u) < 1e-12);
    CHECK(std::abs(vv - v) < 1e-12);
  }
}

TEST_CASE("neither kernel is proportional to a unitary matrix (empirical finding)") {
  auto ctx = CyclicRepContext::make(1, 5);
  MatrixC M = cyclic_dilog_matrix(ctx, 0.7);
  CHECK(scalar_deviation(M * M.adjoint()) > 0.1);
  MatrixC L = L_matrix(ctx, 0.7);
  CHECK(scalar_deviation(L * L.adjoint()) > 0.1);
}

TEST_CASE("even or non-coprime parameters are flagged outside the hypothesis") {
  CHECK_FALSE(CyclicRepContext::make(2, 4).within_hypothesis());
  CHECK_FALSE(CyclicRepContext::make(3, 9).within_hypothesis());
  CHECK(CyclicRepContext::make(3, 5).within_hypothesis());
  CHECK_THROWS_AS(CyclicRepContext::make(0, 3), std::domain_error);
}

TEST_CASE("evaluation into clock/shift matrices is a homomorphism") {
  auto ctx = CyclicRepContext::make(1, 5);
  auto [U, V] = clock_shift_pair(ctx, 2.0, 0.5);
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    NCLaurent a, b;
    for (int k = 0; k < 3; ++k) {
      a += NCLaurent::monomial(
          LaurentQ::monomial(Rational(static_cast<long>(rng.below(7)) - 3, 1), rng.below(3)),
          static_cast<long>(rng.below(5)) - 2, static_cast<long>(rng.below(5)) - 2);
      b += NCLaurent::monomial(
          LaurentQ::monomial(Rational(static_cast<long>(rng.below(7)) - 3, 1), rng.below(3)),
          static_cast<long>(rng.below(5)) - 2, static_cast<long>(rng.below(5)) - 2);
    }
    MatrixC lhs = evaluate(a * b, ctx, U, V);
    MatrixC rhs = evaluate(a, ctx, U, V) * evaluate(b, ctx, U, V);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("pentagon sequence evaluates coherently in the representation") {
  // The exact symbolic terms, pushed through the evaluation homomorphism,
  // still satisfy U_{i+1} U_{i-1} = 1 + q U_i as matrices.
  auto ctx = CyclicRepContext::make(1, 5);
  auto [U, V] = clock_shift_pair(ctx, 2.0, 0.5);
  auto seq = pentagon_sequence();
  REQUIRE(seq.ok());
  MatrixC I = MatrixC::Identity(ctx.n, ctx.n);
  for (size_t i = 2; i < seq.terms.size(); ++i) {
    MatrixC lhs = evaluate(seq.terms[i], ctx, U, V) * evaluate(seq.terms[i - 2], ctx, U, V);
    MatrixC rhs = I + ctx.q * evaluate(seq.terms[i - 1], ctx, U, V);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}
