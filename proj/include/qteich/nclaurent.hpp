#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qteich/laurent.hpp"

namespace qteich {

class divide_error : public std::runtime_error {
 public:
  divide_error(const std::string& what, std::string remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// Noncommutative Laurent polynomial in U, V over Laurent polynomials in q,
// with the relation q U V = q^-1 V U, i.e. V U = q^2 U V. Monomials are kept
// normal-ordered as U^a V^b, so
//   (U^a V^b)(U^c V^d) = q^{2bc} U^{a+c} V^{b+d}.
class NCLaurent {
 public:
  using Key = std::pair<long, long>;  // (U exponent, V exponent)

  NCLaurent() = default;

  static NCLaurent zero() { return {}; }
  static NCLaurent one() { return monomial(1, 0, 0); }
  static NCLaurent U(long power = 1) { return monomial(1, power, 0); }
  static NCLaurent V(long power = 1) { return monomial(1, 0, power); }
  static NCLaurent q(long power = 1) { return monomial(LaurentQ::q_power(power), 0, 0); }

  static NCLaurent monomial(LaurentQ coeff, long uexp, long vexp) {
    NCLaurent x;
    if (!coeff.is_zero()) x.terms_[{uexp, vexp}] = std::move(coeff);
    return x;
  }
  static NCLaurent monomial(Rational coeff, long uexp, long vexp) {
    return monomial(LaurentQ::monomial(std::move(coeff), 0), uexp, vexp);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, LaurentQ>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_monomial(); }

  NCLaurent& operator+=(const NCLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  NCLaurent& operator-=(const NCLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend NCLaurent operator+(NCLaurent a, const NCLaurent& b) { return a += b; }
  friend NCLaurent operator-(NCLaurent a, const NCLaurent& b) { return a -= b; }
  NCLaurent operator-() const {
    NCLaurent x;
    for (const auto& [k, c] : terms_) x.terms_[k] = -c;
    return x;
  }

  friend NCLaurent operator*(const NCLaurent& a, const NCLaurent& b) {
    NCLaurent x;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        // U^a1 V^b1 * U^a2 V^b2 = q^{2 b1 a2} U^{a1+a2} V^{b1+b2}
        long shift = 2 * ka.second * kb.first;
        x.add_term({ka.first + kb.first, ka.second + kb.second}, (ca * cb).shifted(shift));
      }
    return x;
  }

  bool operator==(const NCLaurent& o) const = default;

  // Inverse of a single normal-ordered monomial c q^k U^a V^b.
  NCLaurent monomial_inverse() const {
    if (terms_.size() != 1) throw divide_error("inverse of a non-monomial", str());
    const auto& [key, coeff] = *terms_.begin();
    if (!coeff.is_monomial()) throw divide_error("inverse needs a unit coefficient", str());
    const auto& [qexp, rat] = *coeff.terms().begin();
    // (U^a V^b)^-1 = q^{-2ab} U^-a V^-b
    LaurentQ inv = LaurentQ::monomial(Rational(1) / rat, -qexp).shifted(-2 * key.first * key.second);
    return monomial(inv, -key.first, -key.second);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      const bool needs_parens = c.terms().size() > 1;
      const bool unit = (c == LaurentQ::one());
      const bool has_uv = (k.first != 0 || k.second != 0);
      if (!unit || !has_uv) out << (needs_parens ? "(" + c.str() + ")" : c.str());
      if (!unit && has_uv) out << " ";
      if (k.first != 0) {
        out << "U";
        if (k.first != 1) out << "^" << k.first;
      }
      if (k.second != 0) {
        if (k.first != 0) out << " ";
        out << "V";
        if (k.second != 1) out << "^" << k.second;
      }
    }
    return out.str();
  }

 private:
  void add_term(const Key& k, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, LaurentQ> terms_;
};

namespace nc_detail {

// U-slices of fixed V-degree: maps U exponent -> coefficient.
using USlice = std::map<long, LaurentQ>;

inline std::map<long, USlice> v_slices(const NCLaurent& x) {
  std::map<long, USlice> out;
  for (const auto& [k, c] : x.terms()) out[k.second][k.first] = c;
  return out;
}

// b(q^{2i} U): each U^m coefficient picks up q^{2im}.
inline USlice twist(const USlice& b, long i) {
  USlice out;
  for (const auto& [m, c] : b) out[m] = c.shifted(2 * i * m);
  return out;
}

// Exact division of commutative Laurent polynomials in U over Q[q, q^-1].
// The quotient's U-degrees are bounded below by min(c) - min(b).
inline std::optional<USlice> divide_u(USlice c, const USlice& b) {
  if (b.empty()) return std::nullopt;
  USlice quotient;
  const long db = b.rbegin()->first;
  const long floor = c.empty() ? 0 : c.begin()->first - b.begin()->first;
  const LaurentQ& cb = b.rbegin()->second;
  while (!c.empty()) {
    const long dc = c.rbegin()->first;
    if (dc - db < floor) return std::nullopt;
    auto q = c.rbegin()->second.divide_exact(cb);
    if (!q) return std::nullopt;
    quotient[dc - db] = *q;
    for (const auto& [m, coeff] : b) {
      long e = dc - db + m;
      auto it = c.find(e);
      LaurentQ upd = (it == c.end() ? LaurentQ() : it->second) - *q * coeff;
      if (upd.is_zero()) {
        if (it != c.end()) c.erase(it);
      } else {
        c[e] = upd;
      }
    }
    if (!c.empty() && c.rbegin()->first >= dc) return std::nullopt;
  }
  return quotient;
}

}  // namespace nc_detail

// Exact right division: returns p with p * b = c. Peels V-degrees from the
// top (V is invertible), dividing each slice in the U variable; the final
// multiply-back remainder must vanish.
inline NCLaurent exact_divide_right(const NCLaurent& c, const NCLaurent& b) {
  using namespace nc_detail;
  if (b.is_zero()) throw divide_error("division by zero", c.str());
  if (c.is_zero()) return NCLaurent::zero();
  auto bs = v_slices(b);
  auto cs = v_slices(c);
  const long jtop = bs.rbegin()->first;
  const USlice& btop = bs.rbegin()->second;
  // V-degrees of any exact quotient lie in [minV(c) - minV(b), maxV(c) - maxV(b)].
  const long vfloor = cs.begin()->first - bs.begin()->first;

  NCLaurent p;
  NCLaurent r = c;
  while (!r.is_zero()) {
    auto rs = v_slices(r);
    const long n = rs.rbegin()->first;
    const long i = n - jtop;
    if (i < vfloor) throw divide_error("no exact right quotient", r.str());
    auto piu = divide_u(rs.rbegin()->second, twist(btop, i));
    if (!piu) throw divide_error("no exact right quotient", r.str());
    NCLaurent term;
    for (const auto& [m, coeff] : *piu) term += NCLaurent::monomial(coeff, m, i);
    p += term;
    r -= term * b;
    if (!r.is_zero() && v_slices(r).rbegin()->first >= n)
      throw divide_error("no exact right quotient", r.str());
  }
  return p;
}

// --- Pentagon sequence -------------------------------------------------------

// U_{-1} = V^-1, U_0 = U, U_{i+1} = (1 + q U_i) U_{i-1}^-1, realized through
// exact division. Every quotient must be a genuine Laurent polynomial, the
// sequence must close with U_4 = V^-1 and U_5 = U, and consecutive terms must
// q-commute like the defining pair: q U_i U_{i+1} = q^-1 U_{i+1} U_i.
struct PentagonSequenceReport {
  std::vector<NCLaurent> terms;  // U_{-1} .. U_5
  bool divisions_exact = false;
  bool period_five = false;
  bool commutation = false;
  std::string detail;

  bool ok() const { return divisions_exact && period_five && commutation; }
};

inline PentagonSequenceReport pentagon_sequence() {
  PentagonSequenceReport rep;
  std::ostringstream detail;
  rep.terms.push_back(NCLaurent::V(-1));
  rep.terms.push_back(NCLaurent::U());
  rep.divisions_exact = true;
  for (int i = 0; i < 5; ++i) {
    const NCLaurent& prev = rep.terms[rep.terms.size() - 2];
    const NCLaurent& cur = rep.terms.back();
    NCLaurent numerator = NCLaurent::one() + NCLaurent::q(1) * cur;
    try {
      rep.terms.push_back(exact_divide_right(numerator, prev));
    } catch (const divide_error& err) {
      rep.divisions_exact = false;
      detail << "U_" << (i + 1) << ": " << err.what() << " (remainder " << err.remainder()
             << "); ";
      rep.detail = detail.str();
      return rep;
    }
  }

  rep.period_five = (rep.terms[5] == rep.terms[0]) && (rep.terms[6] == rep.terms[1]);
  if (!rep.period_five)
    detail << "period: U_4 = " << rep.terms[5].str() << ", U_5 = " << rep.terms[6].str() << "; ";

  rep.commutation = true;
  for (size_t i = 0; i + 1 < rep.terms.size(); ++i) {
    NCLaurent lhs = NCLaurent::q(1) * rep.terms[i] * rep.terms[i + 1];
    NCLaurent rhs = NCLaurent::q(-1) * rep.terms[i + 1] * rep.terms[i];
    if (!(lhs == rhs)) {
      rep.commutation = false;
      detail << "pair (U_" << (static_cast<long>(i) - 1) << ", U_" << i
             << ") does not q-commute; ";
    }
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace qteich
