#pragma once

// Exact univariate Laurent polynomials in the formal parameter q.
//
// Every Hecke algebra in this library has Z[q, q^-1] as coefficient ring, so
// LaurentPoly (integer coefficients) is the workhorse.  RationalLaurent is used
// only where the dimension formulas need a factor 1/2 in symbolic mode.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "iwahori/errors.hpp"

namespace iwahori {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

// Writes num/den into out when the quotient exists in the coefficient ring.
inline bool divide_coefficient(const BigInt& num, const BigInt& den, BigInt& out) {
  if (num % den != 0) return false;
  out = num / den;
  return true;
}

inline bool divide_coefficient(const BigRational& num, const BigRational& den,
                               BigRational& out) {
  out = num / den;
  return true;
}

inline BigRational power(const BigRational& base, unsigned exponent) {
  BigRational result{1};
  BigRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace detail

/// Sparse Laurent polynomial sum_e c_e q^e.  Terms are kept in ascending
/// exponent order and no stored coefficient is zero, so structural equality
/// is polynomial equality.
template <typename Coeff>
class BasicLaurent {
 public:
  using coefficient_type = Coeff;
  using Terms = std::map<int, Coeff>;

  BasicLaurent() = default;

  // Constant polynomial.  Implicit so that `p * 2` and `p == 0` read naturally.
  BasicLaurent(long long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(0, Coeff(constant));
  }

  static BasicLaurent constant(const Coeff& c) { return monomial(0, c); }

  static BasicLaurent monomial(int exponent, const Coeff& c = Coeff(1)) {
    BasicLaurent p;
    p.add_term(exponent, c);
    return p;
  }

  /// q^exponent
  static BasicLaurent q(int exponent = 1) { return monomial(exponent); }

  static BasicLaurent from_terms(std::initializer_list<std::pair<int, Coeff>> terms) {
    BasicLaurent p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  template <typename Range>
  static BasicLaurent from_range(const Range& terms) {
    BasicLaurent p;
    for (const auto& [e, c] : terms) p.add_term(static_cast<int>(e), Coeff(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  int min_exponent() const { return require_nonzero().terms_.begin()->first; }
  int max_exponent() const { return require_nonzero().terms_.rbegin()->first; }
  const Coeff& leading_coefficient() const { return require_nonzero().terms_.rbegin()->second; }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Multiply by q^k.
  BasicLaurent shifted(int k) const {
    BasicLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
  }

  BasicLaurent operator-() const {
    BasicLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }

  BasicLaurent& operator+=(const BasicLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  BasicLaurent& operator-=(const BasicLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  BasicLaurent& operator*=(const BasicLaurent& other) {
    *this = *this * other;
    return *this;
  }

  BasicLaurent scaled(const Coeff& s) const {
    if (s == 0) return {};
    BasicLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * s);
    return out;
  }

  friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
  friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }

  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    BasicLaurent out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
    return a.terms_ == b.terms_;
  }

  /// Adds c*q^e, keeping the canonical form.
  void add_term(int e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  const BasicLaurent& require_nonzero() const {
    if (terms_.empty()) throw InvalidArgument("zero Laurent polynomial has no terms");
    return *this;
  }

  Terms terms_;
};

using LaurentPoly = BasicLaurent<BigInt>;
using RationalLaurent = BasicLaurent<BigRational>;

/// Exact value at q = x.  Rejects x = 0.
template <typename Coeff>
BigRational evaluate(const BasicLaurent<Coeff>& p, const BigRational& x) {
  if (x == 0) throw InvalidArgument("Laurent polynomial evaluated at q = 0");
  BigRational sum{0};
  const BigRational inverse = 1 / x;
  for (const auto& [e, c] : p.terms()) {
    const BigRational factor =
        e >= 0 ? detail::power(x, static_cast<unsigned>(e))
               : detail::power(inverse, static_cast<unsigned>(-e));
    sum += BigRational(c) * factor;
  }
  return sum;
}

/// a / b in the Laurent ring over the coefficient type, or nullopt when b does
/// not divide a (including b = 0).
template <typename Coeff>
std::optional<BasicLaurent<Coeff>> divide_exact(const BasicLaurent<Coeff>& a,
                                                const BasicLaurent<Coeff>& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return BasicLaurent<Coeff>{};
  // q is a unit: strip the lowest powers and divide as ordinary polynomials.
  const int shift = a.min_exponent() - b.min_exponent();
  BasicLaurent<Coeff> remainder = a.shifted(-a.min_exponent());
  const BasicLaurent<Coeff> divisor = b.shifted(-b.min_exponent());
  const int divisor_degree = divisor.max_exponent();
  const Coeff& divisor_lead = divisor.leading_coefficient();

  BasicLaurent<Coeff> quotient;
  while (!remainder.is_zero() && remainder.max_exponent() >= divisor_degree) {
    Coeff factor;
    if (!detail::divide_coefficient(remainder.leading_coefficient(), divisor_lead, factor)) {
      return std::nullopt;
    }
    const int degree = remainder.max_exponent() - divisor_degree;
    quotient.add_term(degree, factor);
    remainder -= divisor.shifted(degree).scaled(factor);
  }
  if (!remainder.is_zero()) return std::nullopt;
  return quotient.shifted(shift);
}

RationalLaurent to_rational(const LaurentPoly& p);

/// The same polynomial over the integers, or nullopt if a coefficient is not
/// integral.
std::optional<LaurentPoly> to_integral(const RationalLaurent& p);

/// Ascending-order rendering, e.g. "-q^-1 + 1 + 2q^3".
std::string to_string(const LaurentPoly& p);
std::string to_string(const RationalLaurent& p);
std::string to_string(const BigRational& r);

}  // namespace iwahori
