#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotflow/errors.hpp"

namespace knotflow {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in two variables (a, z) with exact integer
// coefficients. Terms are kept in a map keyed by the exponent pair, with
// no stored zero coefficients, so equality is plain map equality and all
// arithmetic is exact.
class LaurentPoly2 {
public:
  using Exponents = std::pair<int, int>;  // (e_alpha, e_z)
  using TermMap = std::map<Exponents, BigInt>;

  LaurentPoly2() = default;

  static LaurentPoly2 zero() { return LaurentPoly2(); }
  static LaurentPoly2 one() { return mono(1, 0, 0); }

  static LaurentPoly2 mono(BigInt coeff, int e_alpha, int e_z) {
    LaurentPoly2 p;
    if (coeff != 0) p.terms_[{e_alpha, e_z}] = std::move(coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return *this == one(); }

  BigInt coeff(int e_alpha, int e_z) const {
    auto it = terms_.find({e_alpha, e_z});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly2 operator-(const LaurentPoly2& p) {
    LaurentPoly2 r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly2 operator-(const LaurentPoly2& p, const LaurentPoly2& q) {
    return p + (-q);
  }

  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 r;
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_)
        r.add_term({ep.first + eq.first, ep.second + eq.second}, cp * cq);
    return r;
  }

  friend bool operator==(const LaurentPoly2& p, const LaurentPoly2& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const LaurentPoly2& p, const LaurentPoly2& q) { return !(p == q); }

  // Substitution identities used by the mirror/reversal checks:
  // a -> a^-1 negates alpha exponents, z -> -z flips the sign of odd-z terms.
  LaurentPoly2 subst_alpha_inverse() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.first, e.second}] = c;
    return r;
  }

  LaurentPoly2 subst_z_negated() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = (e.second % 2 != 0) ? BigInt(-c) : c;
    return r;
  }

  std::complex<double> eval_complex(std::complex<double> alpha0,
                                    std::complex<double> z0) const;

  std::string to_text() const;

private:
  TermMap terms_;
};

// Laurent polynomial in one variable s with integer coefficients. Jones
// values live here with s = t^(1/2), so half-integer powers of t are
// integer powers of s.
class LaurentPoly1H {
public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly1H() = default;

  static LaurentPoly1H zero() { return LaurentPoly1H(); }
  static LaurentPoly1H one() { return mono(1, 0); }

  static LaurentPoly1H mono(BigInt coeff, int e) {
    LaurentPoly1H p;
    if (coeff != 0) p.terms_[e] = std::move(coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return *this == one(); }

  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  friend LaurentPoly1H operator+(const LaurentPoly1H& p, const LaurentPoly1H& q) {
    LaurentPoly1H r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly1H operator-(const LaurentPoly1H& p) {
    LaurentPoly1H r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly1H operator-(const LaurentPoly1H& p, const LaurentPoly1H& q) {
    return p + (-q);
  }

  friend LaurentPoly1H operator*(const LaurentPoly1H& p, const LaurentPoly1H& q) {
    LaurentPoly1H r;
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, cp * cq);
    return r;
  }

  friend bool operator==(const LaurentPoly1H& p, const LaurentPoly1H& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const LaurentPoly1H& p, const LaurentPoly1H& q) { return !(p == q); }

  LaurentPoly1H pow(unsigned n) const {
    LaurentPoly1H r = one();
    LaurentPoly1H base = *this;
    while (n > 0) {
      if (n & 1u) r = r * base;
      base = base * base;
      n >>= 1u;
    }
    return r;
  }

  // Exact division. Throws if the divisor does not divide evenly; callers
  // in this library only divide when exactness is guaranteed.
  static LaurentPoly1H div_exact(const LaurentPoly1H& num, const LaurentPoly1H& den);

  std::string to_text(const std::string& var = "s") const;

private:
  TermMap terms_;
};

inline std::complex<double> complex_int_pow(std::complex<double> base, int e) {
  if (e == 0) return {1.0, 0.0};
  bool inv = e < 0;
  unsigned n = inv ? static_cast<unsigned>(-(long long)e) : static_cast<unsigned>(e);
  std::complex<double> r{1.0, 0.0};
  std::complex<double> b = base;
  while (n > 0) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return inv ? 1.0 / r : r;
}

inline std::complex<double> LaurentPoly2::eval_complex(std::complex<double> alpha0,
                                                       std::complex<double> z0) const {
  bool neg_alpha = false, neg_z = false;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e.first < 0) neg_alpha = true;
    if (e.second < 0) neg_z = true;
  }
  const std::complex<double> zero{0.0, 0.0};
  if (neg_alpha && alpha0 == zero)
    throw PoleAtZero("alpha = 0 with negative alpha exponent");
  if (neg_z && z0 == zero) throw PoleAtZero("z = 0 with negative z exponent");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    const double cd = static_cast<double>(c);
    acc += cd * complex_int_pow(alpha0, e.first) * complex_int_pow(z0, e.second);
  }
  return acc;
}

inline LaurentPoly1H LaurentPoly1H::div_exact(const LaurentPoly1H& num,
                                              const LaurentPoly1H& den) {
  if (den.is_zero()) throw Error("division by zero polynomial");
  if (num.is_zero()) return zero();
  // Shift both to ordinary polynomials (minimal exponent zero); ordinary
  // long division terminates, and exactness means an empty remainder.
  const int num_shift = num.min_exponent();
  const int den_shift = den.min_exponent();
  TermMap rem;
  for (const auto& [e, c] : num.terms_) rem[e - num_shift] = c;
  TermMap divisor;
  for (const auto& [e, c] : den.terms_) divisor[e - den_shift] = c;
  const int den_top = divisor.rbegin()->first;
  const BigInt den_lead = divisor.rbegin()->second;

  LaurentPoly1H quotient;
  while (!rem.empty() && rem.rbegin()->first >= den_top) {
    const int rem_top = rem.rbegin()->first;
    const BigInt rem_lead = rem.rbegin()->second;
    if (rem_lead % den_lead != 0) throw Error("inexact polynomial division");
    const BigInt q = rem_lead / den_lead;
    const int shift = rem_top - den_top;
    quotient.add_term(shift + num_shift - den_shift, q);
    for (const auto& [e, c] : divisor) {
      const int te = e + shift;
      auto it = rem.find(te);
      BigInt nv = (it == rem.end() ? BigInt(0) : it->second) - q * c;
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[te] = nv;
      }
    }
  }
  if (!rem.empty()) throw Error("inexact polynomial division");
  return quotient;
}

namespace detail {

inline void append_power(std::ostringstream& out, const std::string& var, int e) {
  out << var;
  if (e != 1) out << "^" << e;
}

// One term in display form: "3*a^2*z^-1", with coefficient 1 elided.
inline void append_term(std::ostringstream& out, const BigInt& coeff,
                        const std::vector<std::pair<std::string, int>>& powers,
                        bool leading) {
  BigInt c = coeff;
  const bool negative = c < 0;
  if (negative) c = -c;
  if (leading) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  bool printed = false;
  if (c != 1) {
    out << c.str();
    printed = true;
  }
  bool any_var = false;
  for (const auto& [var, e] : powers) {
    if (e == 0) continue;
    if (printed || any_var) out << "*";
    append_power(out, var, e);
    any_var = true;
    printed = true;
  }
  if (!printed) out << "1";
}

}  // namespace detail

// Text form orders terms by alpha exponent descending, then z ascending,
// matching the report format ("-a^4 + 2*a^2 + a^2*z^2").
inline std::string LaurentPoly2::to_text() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.first.first != rhs.first.first) return lhs.first.first > rhs.first.first;
    return lhs.first.second < rhs.first.second;
  });
  std::ostringstream out;
  bool leading = true;
  for (const auto& [e, c] : ordered) {
    detail::append_term(out, c, {{"a", e.first}, {"z", e.second}}, leading);
    leading = false;
  }
  return out.str();
}

inline std::string LaurentPoly1H::to_text(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first > rhs.first; });
  std::ostringstream out;
  bool leading = true;
  for (const auto& [e, c] : ordered) {
    detail::append_term(out, c, {{var, e}}, leading);
    leading = false;
  }
  return out.str();
}

// Substitutes a -> s^alpha_power and z -> z_image(s). The z image need not
// be invertible: negative z powers are cleared through a common power of
// z_image and one exact division at the end.
inline LaurentPoly1H specialize(const LaurentPoly2& p, int alpha_power,
                                const LaurentPoly1H& z_image) {
  if (p.is_zero()) return LaurentPoly1H::zero();
  int min_ez = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    min_ez = std::min(min_ez, e.second);
  }
  const unsigned denom_pow = static_cast<unsigned>(-min_ez);
  LaurentPoly1H num = LaurentPoly1H::zero();
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly1H term = LaurentPoly1H::mono(c, e.first * alpha_power);
    term = term * z_image.pow(static_cast<unsigned>(e.second - min_ez));
    num = num + term;
  }
  if (denom_pow == 0) return num;
  return LaurentPoly1H::div_exact(num, z_image.pow(denom_pow));
}

}  // namespace knotflow
