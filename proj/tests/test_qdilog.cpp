#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "qteich/qdilog.hpp"

using namespace qteich;
using C = std::complex<double>;

namespace {

// Independent oracle: fixed-step trapezoid evaluation of the defining
// integral on a different contour height, written without the library's
// quadrature machinery.
C phi_oracle(double hbar, C z, double height_factor = 1.35) {
  const double c = height_factor * std::min(1.0, 1.0 / hbar) / 2.0;
  const double rate = M_PI * (1 + hbar) - std::abs(z.imag());
  const double T = 60.0 / rate + std::abs(c * z.real()) / rate;
  const double h = 0.002;
  const long N = static_cast<long>(T / h) + 1;
  C sum = 0;
  for (long k = -N; k <= N; ++k) {
    C p(k * h, c);
    sum += std::exp(-C(0, 1) * p * z) / (std::sinh(M_PI * p) * std::sinh(M_PI * hbar * p));
  }
  return -(M_PI * hbar / 2) * sum * h;
}

}  // namespace

TEST_CASE("context construction validates its parameters") {
  CHECK_THROWS_AS(QDilogContext::make(-1.0), std::domain_error);
  QDilogContext ctx = QDilogContext::make(2.5);
  CHECK(ctx.contour_offset > 0);
  CHECK(ctx.contour_offset < std::min(1.0, 1.0 / 2.5));
  QDilogContext broken = ctx;
  broken.contour_offset = 0.9;  // above 1/hbar = 0.4
  CHECK_THROWS_AS(broken.validate(), std::domain_error);
}

TEST_CASE("phi matches the independent oracle") {
  for (double hbar : {0.37, 1.0, 2.2}) {
    auto ctx = QDilogContext::make(hbar);
    for (double z : {-1.4, 0.0, 2.3}) {
      Eval e = phi_hbar(ctx, z);
      CHECK(std::abs(e.value - phi_oracle(hbar, z)) < 1e-8);
      CHECK(e.error_estimate < 1e-9);
    }
  }
}

TEST_CASE("phi classical limit at small hbar") {
  auto ctx = QDilogContext::make(0.01);
  CHECK(std::abs(phi_hbar(ctx, 1.3).value - std::log(std::exp(1.3) + 1.0)) < 0.02);
  double sup = 0;
  for (double z = -5; z <= 5; z += 0.5)
    sup = std::max(sup, std::abs(phi_hbar(ctx, z).value - std::log1p(std::exp(z))));
  CHECK(sup < 0.02);
}

TEST_CASE("phi shift identity and realness") {
  for (double hbar : {0.1, 0.37, 1.0, 2.5}) {
    auto ctx = QDilogContext::make(hbar);
    for (double z = -5; z <= 5; z += 1.0) {
      C a = phi_hbar(ctx, z).value, b = phi_hbar(ctx, -z).value;
      CHECK(std::abs(a - b - z) < 1e-9);
      CHECK(std::abs(a.imag()) < 1e-10);
    }
  }
  auto ctx = QDilogContext::make(0.7);
  CHECK(std::abs(phi_hbar(ctx, 2.1).value - phi_hbar(ctx, -2.1).value - 2.1) < 1e-9);
}

TEST_CASE("phi hbar duality") {
  auto ctx = QDilogContext::make(0.37);
  auto dual = QDilogContext::make(1 / 0.37);
  C a = phi_hbar(ctx, 0.0).value;
  C b = phi_hbar(dual, 0.0).value;
  CHECK(std::abs(a / 0.37 - b) < 1e-8);
  CHECK(std::abs(a - phi_oracle(0.37, 0.0)) < 1e-8);

  for (double hbar : {0.1, 2.5}) {
    auto c1 = QDilogContext::make(hbar);
    auto c2 = QDilogContext::make(1 / hbar);
    for (double z : {-2.0, 0.7}) {
      CHECK(std::abs(phi_hbar(c1, z).value / hbar - phi_hbar(c2, z / hbar).value) < 1e-8);
    }
  }
}

TEST_CASE("phi strip shifts (P.5 and P.6)") {
  const C I(0, 1);
  for (double hbar : {0.3, 0.9}) {
    auto ctx = QDilogContext::make(hbar);
    for (double z : {-1.1, 0.6}) {
      C lhs = phi_hbar(ctx, C(z, M_PI * hbar)).value - phi_hbar(ctx, C(z, -M_PI * hbar)).value;
      C rhs = 2.0 * M_PI * I * hbar / (std::exp(-z) + 1.0);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
  for (double hbar : {1.1, 2.5}) {
    auto ctx = QDilogContext::make(hbar);
    for (double z : {-1.1, 0.6}) {
      C lhs = phi_hbar(ctx, C(z, M_PI)).value - phi_hbar(ctx, C(z, -M_PI)).value;
      C rhs = 2.0 * M_PI * I / (std::exp(-z / hbar) + 1.0);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("phi rejects arguments outside the strip") {
  auto ctx = QDilogContext::make(0.5);
  CHECK_THROWS_AS(phi_hbar(ctx, C(0.0, M_PI * 1.5 * 0.999)), std::domain_error);
  CHECK_NOTHROW(phi_hbar(ctx, C(0.0, M_PI * 1.5 * 0.9)));
}

TEST_CASE("phi derivative") {
  auto ctx = QDilogContext::make(0.5);
  // reflection: phi'(z) + phi'(-z) = 1
  for (double z : {-1.7, 0.0, 0.9})
    CHECK(std::abs(phi_hbar_prime(ctx, z).value + phi_hbar_prime(ctx, -z).value - 1.0) < 1e-9);

  // central difference oracle at (hbar, z) = (0.5, 0.9)
  const double d = 1e-5;
  C fd = (phi_hbar(ctx, 0.9 + d).value - phi_hbar(ctx, 0.9 - d).value) / (2 * d);
  CHECK(std::abs(phi_hbar_prime(ctx, 0.9).value - fd) < 1e-7);

  // classical limit of the derivative
  auto small = QDilogContext::make(0.01);
  for (double z : {-2.0, 0.0, 1.5})
    CHECK(std::abs(phi_hbar_prime(small, z).value - 1.0 / (std::exp(-z) + 1.0)) < 0.02);
}

TEST_CASE("F has unit modulus on the real axis") {
  auto ctx = QDilogContext::make(1.0);
  for (double z = -3; z <= 3; z += 0.75) {
    Eval e = F_hbar(ctx, z);
    CHECK(std::abs(std::abs(e.value) - 1.0) < 1e-9);
  }
}

TEST_CASE("F satisfies the dilogarithm shift equation") {
  auto ctx = QDilogContext::make(0.6);
  for (double z : {-1.5, 0.3, 1.1}) {
    C lhs = F_hbar(ctx, C(z, M_PI * 0.6)).value;
    C rhs = (1.0 + std::exp(z)) * F_hbar(ctx, C(z, -M_PI * 0.6)).value;
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("log F derivative reproduces phi") {
  const C I(0, 1);
  auto ctx = QDilogContext::make(0.6);
  const double h = 0.05;
  for (double z : {-0.8, 1.1}) {
    auto dlog = [&](double step) {
      return (log_F_hbar(ctx, z + step).value - log_F_hbar(ctx, z - step).value) / (2 * step);
    };
    C d = (4.0 * dlog(h / 2) - dlog(h)) / 3.0;  // Richardson
    CHECK(std::abs(2.0 * M_PI * I * 0.6 * d - phi_hbar(ctx, z).value) < 1e-7);
  }
}

TEST_CASE("analyticity check inside the strip (partial P.7)") {
  const C I(0, 1);
  auto ctx = QDilogContext::make(0.8);
  const double d = 1e-4;
  for (double y : {0.3 * M_PI * 1.8 * 0.9, 0.8 * M_PI * 1.8 * 0.9}) {
    C z(0.4, y);
    C fx = (phi_hbar(ctx, z + d).value - phi_hbar(ctx, z - d).value) / (2 * d);
    C fy = (phi_hbar(ctx, z + I * d).value - phi_hbar(ctx, z - I * d).value) / (2 * d);
    CHECK(std::abs(fy - I * fx) < 1e-6);
  }
}
