#pragma once

// Exact univariate polynomials over the integers and truncated power series
// in a second variable y whose coefficients are such polynomials.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotshadow/error.hpp"

namespace knotshadow {

using Coefficient = boost::multiprecision::cpp_int;

/// Dense polynomial in x, coefficient i multiplies x^i. The zero polynomial
/// stores no coefficients; otherwise the highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients listed from x^0 upwards.
  Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  explicit Polynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coefficient c) { return Polynomial(std::vector<Coefficient>{std::move(c)}); }

  static Polynomial monomial(Coefficient c, std::size_t power) {
    std::vector<Coefficient> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1, 1); }
  static Polynomial one() { return constant(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Number of stored coefficients (degree + 1).
  std::size_t size() const noexcept { return coeffs_.size(); }

  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }

  Coefficient coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Coefficient(0);
  }

  /// Smallest power with a nonzero coefficient; -1 for zero.
  long lowest_power() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<long>(i);
    return -1;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coefficient> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Coefficient& s, Polynomial p) {
    if (s == 0) return {};
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

  /// Descending powers, e.g. "x^3 + 4x^2 + 3x", "x^2 - 1", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Coefficient& c = coeffs_[i];
      if (c == 0) continue;
      Coefficient mag = c < 0 ? Coefficient(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coefficient> coeffs_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial poly_pow(const Polynomial& a, std::size_t n) {
  Polynomial result = Polynomial::one();
  Polynomial base = a;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

/// Quotient q with a = q * d. Throws NotDivisible when the remainder is nonzero
/// or a leading-coefficient division is inexact.
inline Polynomial poly_div_exact(const Polynomial& a, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < d.degree()) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + d.to_string());
  std::vector<Coefficient> rem = a.coeffs();
  const std::size_t dn = d.size();
  const Coefficient& lead = d.coeffs().back();
  std::vector<Coefficient> q(rem.size() - dn + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Coefficient& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + d.to_string());
    Coefficient f = top / lead;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= f * d.coeffs()[j];
    q[i] = std::move(f);
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + d.to_string());
  return Polynomial(std::move(q));
}

/// a / x; requires a zero constant term.
inline Polynomial poly_shift_down(const Polynomial& a) {
  if (a.coeff(0) != 0) throw Error(ErrorKind::ConstantTermNonzero, a.to_string());
  if (a.is_zero()) return {};
  return Polynomial(std::vector<Coefficient>(a.coeffs().begin() + 1, a.coeffs().end()));
}

inline Coefficient poly_eval_int(const Polynomial& a, const Coefficient& v) {
  Coefficient acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * v + a.coeffs()[i];
  return acc;
}

/// Power series in y truncated after y^order; term j is a Polynomial in x.
/// Always holds exactly order + 1 terms.
class Series {
 public:
  explicit Series(std::size_t order = 0) : terms_(order + 1) {}

  /// Terms past `order` are dropped, missing ones are zero.
  Series(std::vector<Polynomial> terms, std::size_t order) : terms_(std::move(terms)) {
    terms_.resize(order + 1);
  }

  /// The series p0 + p1 y + ... viewed as exact up to `order`.
  static Series in_y(std::initializer_list<Polynomial> terms, std::size_t order) {
    return Series(std::vector<Polynomial>(terms), order);
  }

  std::size_t order() const noexcept { return terms_.size() - 1; }
  const std::vector<Polynomial>& terms() const noexcept { return terms_; }
  const Polynomial& operator[](std::size_t j) const { return terms_.at(j); }

  friend bool operator==(const Series&, const Series&) = default;

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j < r.terms_.size(); ++j) r.terms_[j] = a.terms_[j] + b.terms_[j];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j < r.terms_.size(); ++j) r.terms_[j] = a.terms_[j] - b.terms_[j];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.terms_.size(); ++i)
      for (std::size_t j = 0; i + j < r.terms_.size(); ++j) r.terms_[i + j] += a.terms_[i] * b.terms_[j];
    return r;
  }

  friend Series operator*(const Polynomial& p, Series s) {
    for (auto& t : s.terms_) t = p * t;
    return s;
  }

  /// Multiplies by y, keeping the order.
  Series times_y() const {
    Series r(order());
    for (std::size_t j = 1; j < terms_.size(); ++j) r.terms_[j] = terms_[j - 1];
    return r;
  }

 private:
  std::vector<Polynomial> terms_;
};

/// Solves denom * s = numer term by term up to y^order. Each step divides by
/// the y^0 coefficient of denom, which must divide exactly.
inline Series series_rational_expand(const Series& numer, const Series& denom, std::size_t order) {
  order = std::min({order, numer.order(), denom.order()});
  const Polynomial& lead = denom[0];
  if (lead.is_zero()) throw Error(ErrorKind::NonUnitLeading, "denominator has zero y^0 coefficient");
  std::vector<Polynomial> out(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    Polynomial acc = numer[j];
    for (std::size_t i = 1; i <= j; ++i) acc -= denom[i] * out[j - i];
    try {
      out[j] = poly_div_exact(acc, lead);
    } catch (const Error&) {
      throw Error(ErrorKind::NonUnitLeading,
                  "y^" + std::to_string(j) + " term " + acc.to_string() + " not divisible by " + lead.to_string());
    }
  }
  return Series(std::move(out), order);
}

}  // namespace knotshadow
