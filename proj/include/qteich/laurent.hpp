#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qteich/rational.hpp"

namespace qteich {

// Laurent polynomial in one variable `q` with rational coefficients.
// Terms are kept normalized: no zero coefficients are stored.
class LaurentQ {
 public:
  LaurentQ() = default;

  static LaurentQ zero() { return LaurentQ(); }
  static LaurentQ one() { return monomial(Rational(1), 0); }

  static LaurentQ monomial(Rational coeff, long exponent) {
    LaurentQ p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
  }

  // q^exponent
  static LaurentQ q_power(long exponent) { return monomial(Rational(1), exponent); }

  bool is_zero() const { return terms_.empty(); }

  bool is_monomial() const { return terms_.size() == 1; }

  // Lowest/highest exponents; only valid on nonzero polynomials.
  long min_exponent() const { return terms_.begin()->first; }
  long max_exponent() const { return terms_.rbegin()->first; }

  const std::map<long, Rational>& terms() const { return terms_; }

  Rational coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentQ& operator+=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentQ& operator-=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }

  LaurentQ operator-() const {
    LaurentQ p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
  }

  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }

  // Multiply by q^shift.
  LaurentQ shifted(long shift) const {
    LaurentQ p;
    for (const auto& [e, c] : terms_) p.terms_[e + shift] = c;
    return p;
  }

  bool operator==(const LaurentQ& other) const = default;

  // Exact division in Q[q, q^-1]; nullopt when no exact quotient exists.
  // Leading-term division is complete here because the ring is a domain, and
  // any exact quotient has its exponents bounded below by
  // min_exponent(c) - min_exponent(b), which bounds the loop.
  std::optional<LaurentQ> divide_exact(const LaurentQ& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentQ();
    LaurentQ quotient;
    LaurentQ rem = *this;
    const long db = divisor.max_exponent();
    const long floor = min_exponent() - divisor.min_exponent();
    const Rational& cb = divisor.terms_.rbegin()->second;
    while (!rem.is_zero()) {
      const long dr = rem.max_exponent();
      if (dr - db < floor) return std::nullopt;
      const Rational cr = rem.terms_.rbegin()->second;
      LaurentQ t = monomial(cr / cb, dr - db);
      quotient += t;
      rem -= t * divisor;
      if (!rem.is_zero() && rem.max_exponent() >= dr) return std::nullopt;
    }
    return quotient;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
      const bool unit = (a == 1);
      if (e == 0) {
        out << a.str();
      } else {
        if (!unit) out << a.str() << " ";
        out << "q";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  void add_term(long e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long, Rational> terms_;
};

}  // namespace qteich
