#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qteich {

class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

using Complex = std::complex<double>;

// Quadrature context for the contour integrals
//
//   phi(z) = -(pi*hbar/2) Int e^{-ipz} / (sinh(pi p) sinh(pi hbar p)) dp
//   F(z)   = exp( -(1/4)  Int e^{-ipz} / (p sinh(pi p) sinh(pi hbar p)) dp )
//
// taken along Im p = contour_offset. The straight line is equivalent to the
// axis contour indented above the origin: the integrand is analytic between
// them and decays like e^{-(pi(1+hbar)-|Im z|)|Re p|}. The offset sits halfway
// to the nearest pole lattice point above the axis, which also gives the
// trapezoid rule its exponential convergence rate.
struct QDilogContext {
  double hbar = 1.0;
  double contour_offset = 0.5;  // 0 < c < min(1, 1/hbar)
  double truncation = 10.0;     // |Re p| <= T for real z (rescaled per call)
  double step = 0.1;            // initial trapezoid step
  double target_tol = 1e-10;

  static QDilogContext make(double hbar, double tol = 1e-10) {
    if (!(hbar > 0)) throw std::domain_error("hbar must be positive");
    if (!(tol > 0)) throw std::domain_error("target tolerance must be positive");
    QDilogContext ctx;
    ctx.hbar = hbar;
    ctx.contour_offset = std::min(1.0, 1.0 / hbar) / 2;
    ctx.target_tol = tol;
    const double rate = M_PI * (1 + hbar);
    ctx.truncation = (std::log(1 / tol) + 16) / rate;
    ctx.step = 2 * M_PI * ctx.contour_offset / (std::log(1 / tol) + 12);
    return ctx;
  }

  void validate() const {
    if (!(hbar > 0)) throw std::domain_error("hbar must be positive");
    if (!(contour_offset > 0) || !(contour_offset < std::min(1.0, 1.0 / hbar)))
      throw std::domain_error("contour offset must lie in (0, min(1, 1/hbar))");
    if (!(target_tol > 0) || !(truncation > 0) || !(step > 0))
      throw std::domain_error("invalid quadrature parameters");
  }
};

struct Eval {
  Complex value{0, 0};
  double error_estimate = 0;  // |I_h - I_{h/2}| of the final refinement
};

namespace detail {

// log(1/sinh(x)), stable for large |Re x|. The 2*pi*i branch ambiguity is
// harmless: the result is only exponentiated.
inline Complex log_inv_sinh(Complex x) {
  if (x.real() > 0.5) {
    Complex e = std::exp(-2.0 * x);
    return std::log(2.0) - x - std::log(1.0 - e);
  }
  if (x.real() < -0.5) {
    Complex e = std::exp(2.0 * x);
    return std::log(2.0) + x - std::log(1.0 - e) + Complex(0, M_PI);
  }
  return std::log(1.0 / std::sinh(x));
}

enum class Integrand { Phi, PhiPrime, LogF };

inline Complex integrand_value(Integrand kind, double hbar, Complex z, Complex p) {
  Complex lg = -Complex(0, 1) * p * z + log_inv_sinh(M_PI * p) + log_inv_sinh(M_PI * hbar * p);
  Complex f = std::exp(lg);
  switch (kind) {
    case Integrand::Phi:
      return f;
    case Integrand::PhiPrime:
      return -Complex(0, 1) * p * f;
    case Integrand::LogF:
      return f / p;
  }
  return f;
}

// Adaptive trapezoid sum along Im p = c, refined until the h -> h/2
// difference meets the tolerance.
inline Eval contour_integral(Integrand kind, const QDilogContext& ctx, Complex z) {
  ctx.validate();
  const double strip = M_PI * (1 + ctx.hbar);
  const double rate = strip - std::abs(z.imag());
  if (rate < 0.05 * strip)
    throw std::domain_error("z outside the analyticity strip |Im z| < pi(1+hbar)");
  const double c = ctx.contour_offset;
  const double T =
      std::max(ctx.truncation, (std::log(1 / ctx.target_tol) + std::abs(c * z.real()) + 16) / rate);

  auto sum = [&](double h) {
    const long n = static_cast<long>(std::ceil(T / h));
    Complex s = integrand_value(kind, ctx.hbar, z, Complex(0, c));
    for (long k = 1; k <= n; ++k) {
      s += integrand_value(kind, ctx.hbar, z, Complex(k * h, c));
      s += integrand_value(kind, ctx.hbar, z, Complex(-k * h, c));
    }
    return s * h;
  };

  double h = ctx.step;
  Complex coarse = sum(h);
  for (int iter = 0; iter < 8; ++iter) {
    Complex fine = sum(h / 2);
    double diff = std::abs(fine - coarse);
    if (diff <= ctx.target_tol) return {fine, diff};
    coarse = fine;
    h /= 2;
  }
  throw accuracy_error("quadrature did not reach the target tolerance");
}

}  // namespace detail

// The quantum logarithm phi(z); real for real z, analytic in the strip.
inline Eval phi_hbar(const QDilogContext& ctx, Complex z) {
  Eval e = detail::contour_integral(detail::Integrand::Phi, ctx, z);
  const double pref = M_PI * ctx.hbar / 2;
  return {-pref * e.value, pref * e.error_estimate};
}

// d/dz phi(z) via the differentiated integrand (extra factor -ip).
inline Eval phi_hbar_prime(const QDilogContext& ctx, Complex z) {
  Eval e = detail::contour_integral(detail::Integrand::PhiPrime, ctx, z);
  const double pref = M_PI * ctx.hbar / 2;
  return {-pref * e.value, pref * e.error_estimate};
}

// The exponent of F(z), i.e. log F(z) with the principal determination that
// vanishes as Re z -> -infinity.
inline Eval log_F_hbar(const QDilogContext& ctx, Complex z) {
  Eval e = detail::contour_integral(detail::Integrand::LogF, ctx, z);
  return {-0.25 * e.value, 0.25 * e.error_estimate};
}

// F(z) itself. |F(x)| = 1 for real x: the exponent integrand is odd under
// p -> -conj(p), so the exponent is purely imaginary on the real axis.
inline Eval F_hbar(const QDilogContext& ctx, Complex z) {
  Eval e = log_F_hbar(ctx, z);
  Complex f = std::exp(e.value);
  return {f, std::abs(f) * e.error_estimate};
}

// 2 pi i hbar * d/dz log F(z) = phi(z): the two defining integrands differ by
// the factor (-ip)/p = -i against the prefactor ratio (-1/4)/(-pi hbar/2).
inline constexpr Complex log_F_derivative_factor(double hbar) {
  return Complex(0, 2 * M_PI * hbar);  // multiply d/dz log F by this to get phi
}

}  // namespace qteich
