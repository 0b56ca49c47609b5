#pragma once

// Closed forms, recurrences, composition laws, the component decomposition
// and generating functions -- all computed without diagrams.

#include <cstddef>
#include <string>

#include "knotshadow/algebra.hpp"
#include "knotshadow/error.hpp"
#include "knotshadow/families.hpp"

namespace knotshadow {

/// Split of K's states by how the closure band meets them:
/// K = x*alpha + x^2*beta and closure(K) = x^2*alpha + x*beta.
struct Components {
  Polynomial alpha;
  Polynomial beta;
  friend bool operator==(const Components&, const Components&) = default;
};

inline Components swapped(const Components& c) { return {c.beta, c.alpha}; }

inline Polynomial csum_poly(const Polynomial& p, const Polynomial& q) { return poly_shift_down(p * q); }

inline Polynomial generated_poly(const Polynomial& k, std::size_t n) {
  return Polynomial::x() * poly_pow(poly_shift_down(k), n);
}

inline Components components_solve(const Polynomial& k, const Polynomial& k_closed) {
  const Polynomial x = Polynomial::x();
  const Polynomial d{0, -1, 0, 1};  // x^3 - x
  Components c{poly_div_exact(x * k_closed - k, d), poly_div_exact(x * k - k_closed, d)};
  for (const Polynomial* p : {&c.alpha, &c.beta})
    for (const auto& v : p->coeffs())
      if (v < 0)
        throw Error(ErrorKind::NegativeComponent, "alpha=" + c.alpha.to_string() + ", beta=" + c.beta.to_string());
  return c;
}

inline Polynomial closure_of_generated(const Components& c, std::size_t n) {
  const Polynomial x2m1{-1, 0, 1};
  return poly_pow(c.alpha + Polynomial::x() * c.beta, n) + x2m1 * poly_pow(c.alpha, n);
}

inline Polynomial closure_of_csum(const Components& c, const Polynomial& kprime, const Polynomial& kprime_closed) {
  return c.alpha * kprime_closed + c.beta * kprime;
}

namespace detail {

inline Polynomial x_plus_1_pow(std::size_t e) { return poly_pow(Polynomial{1, 1}, e); }

/// The open family whose chains are closed up by a closure family.
inline Family open_partner(Family f) {
  switch (f) {
    case Family::Foil: return Family::TwistLoop;
    case Family::Foil2: return Family::TwistLoop2;
    case Family::Foil3: return Family::TwistLoop3;
    case Family::ChainLink: return Family::Link;
    case Family::TwistBracelet: return Family::TwistLink;
    case Family::Ringbolt: return Family::Hitch;
    case Family::Sinnet: return Family::Overhand;
    case Family::AltA: return Family::TwistLoop2;
    case Family::AltB:
    case Family::AltC: return Family::TwistLoop3;
    case Family::AltD:
    case Family::AltE: return Family::TwistLink;
    default: throw Error(ErrorKind::UnsupportedSpec, std::string(family_name(f)) + " is not a closure family");
  }
}

}  // namespace detail

/// K_1(x)/x for the open families: each chain multiplies by this factor.
inline Polynomial generator_factor(Family f) {
  switch (f) {
    case Family::Unknot: return Polynomial::one();
    case Family::TwistLoop: return {1, 1};
    case Family::TwistLoop2: return {1, 2, 1};
    case Family::TwistLoop3: return {1, 3, 3, 1};
    case Family::Link: return {2, 2};
    case Family::TwistLink: return {2, 4, 2};
    case Family::Hitch:
    case Family::Overhand: return {3, 4, 1};
    default: throw Error(ErrorKind::UnsupportedSpec, std::string(family_name(f)) + " is not an open family");
  }
}

/// (alpha, beta) of the 1-generator of a family.
inline Components generator_components(Family f) {
  switch (f) {
    case Family::Unknot: return {{1}, {}};
    case Family::TwistLoop:
    case Family::Foil: return {{1}, {1}};
    case Family::TwistLoop2:
    case Family::Foil2: return {{1}, {2, 1}};
    case Family::TwistLoop3:
    case Family::Foil3: return {{1}, {3, 3, 1}};
    case Family::Link:
    case Family::ChainLink: return {{2, 1}, {1}};
    case Family::TwistLink:
    case Family::TwistBracelet: return {{2, 1}, {3, 2}};
    case Family::Hitch:
    case Family::Ringbolt: return {{3, 2}, {2, 1}};
    case Family::Overhand:
    case Family::Sinnet: return {{3, 3, 1}, {1}};
    case Family::AltA: return {{1, 1}, {1, 1}};
    case Family::AltB: return {{1, 1}, {2, 3, 1}};
    case Family::AltC: return {{1, 2, 1}, {1, 2, 1}};
    case Family::AltD: return {{2, 3, 1}, {1, 1}};
    case Family::AltE: return {{2, 2}, {2, 2}};
    case Family::TwistKnot: break;
  }
  throw Error(ErrorKind::UnsupportedSpec, std::string(family_name(f)) + " has no single generator");
}

inline Polynomial family_poly_closed(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const Polynomial x = Polynomial::x();
  const Polynomial x2m1{-1, 0, 1};
  // Closure families: A^n + (x^2 - 1) B^n.
  auto closed = [&](const Polynomial& a, const Polynomial& b) { return poly_pow(a, n) + x2m1 * poly_pow(b, n); };
  switch (spec.family) {
    case Family::Unknot: return x;
    case Family::TwistLoop: return x * detail::x_plus_1_pow(n);
    case Family::TwistLoop2: return x * detail::x_plus_1_pow(2 * n);
    case Family::TwistLoop3: return x * detail::x_plus_1_pow(3 * n);
    case Family::Link: return x * poly_pow({2, 2}, n);
    case Family::TwistLink: return x * poly_pow({2, 4, 2}, n);
    case Family::Hitch:
    case Family::Overhand: return x * poly_pow({3, 4, 1}, n);
    case Family::Foil: return detail::x_plus_1_pow(n) + x2m1;
    case Family::Foil2: return detail::x_plus_1_pow(2 * n) + x2m1;
    case Family::Foil3: return detail::x_plus_1_pow(3 * n) + x2m1;
    case Family::ChainLink: return closed({2, 2}, {2, 1});
    case Family::TwistBracelet: return closed({2, 4, 2}, {2, 1});
    case Family::Ringbolt: return closed({3, 4, 1}, {3, 2});
    case Family::Sinnet: return closed({3, 4, 1}, {3, 3, 1});
    case Family::TwistKnot: return Coefficient(2) * detail::x_plus_1_pow(n + 1) + Polynomial{-2, -1, 2, 1};
    case Family::AltA: return closed(detail::x_plus_1_pow(2), {1, 1});
    case Family::AltB: return closed(detail::x_plus_1_pow(3), {1, 1});
    case Family::AltC: return closed(detail::x_plus_1_pow(3), detail::x_plus_1_pow(2));
    case Family::AltD: return closed({2, 4, 2}, {2, 3, 1});
    case Family::AltE: return closed({2, 4, 2}, {2, 2});
  }
  throw Error(ErrorKind::UnsupportedSpec, "unknown family tag");
}

/// Iterates the family's polynomial recurrence from its base case.
inline Polynomial family_poly_recurrence(const FamilySpec& spec) {
  const Family f = spec.family;
  if (f == Family::Unknot) return Polynomial::x();
  if (!info(f).closed) {
    const Polynomial factor = generator_factor(f);
    Polynomial p = Polynomial::x();
    for (std::size_t i = 0; i < spec.n; ++i) p = factor * p;
    return p;
  }
  if (f == Family::TwistKnot) {
    const Polynomial foil = family_poly_recurrence({Family::Foil, spec.n});
    const Polynomial twist = family_poly_recurrence({Family::TwistLoop, spec.n});
    return Polynomial{2, 1} * foil + twist;
  }
  // X_n = alpha X_{n-1} + beta K_{n-1}, K the partner open family.
  const Components c = generator_components(f);
  const Family open = detail::open_partner(f);
  const Polynomial factor = generator_factor(open);
  Polynomial closed = Polynomial::monomial(1, 2);
  Polynomial chain = Polynomial::x();
  for (std::size_t i = 0; i < spec.n; ++i) {
    closed = c.alpha * closed + c.beta * chain;
    chain = factor * chain;
  }
  return closed;
}

inline Coefficient coefficient(const FamilySpec& spec, std::size_t k) { return family_poly_closed(spec).coeff(k); }

/// Expansion of the family's generating function sum_n P_n(x) y^n.
inline Series family_gf(Family f, std::size_t order) {
  const Polynomial x = Polynomial::x();
  const Polynomial one = Polynomial::one();
  switch (f) {
    case Family::Unknot: return series_rational_expand(Series::in_y({x}, order), Series::in_y({one, -one}, order), order);
    case Family::TwistKnot: {
      const Series a =
          series_rational_expand(Series::in_y({Polynomial{2, 2}}, order), Series::in_y({one, -Polynomial{1, 1}}, order), order);
      const Series b =
          series_rational_expand(Series::in_y({Polynomial{-2, -1, 2, 1}}, order), Series::in_y({one, -one}, order), order);
      return a + b;
    }
    default: break;
  }
  if (!info(f).closed) {
    // x^2 / (x - y K_1(x))
    const Polynomial k1 = x * generator_factor(f);
    return series_rational_expand(Series::in_y({x * x}, order), Series::in_y({x, -k1}, order), order);
  }
  // (x^2 + y beta K(x;y)) / (1 - y alpha), with K(x;y) = x / (1 - y(alpha + x beta)).
  const Components c = generator_components(f);
  const Series chains =
      series_rational_expand(Series::in_y({x}, order), Series::in_y({one, -(c.alpha + x * c.beta)}, order), order);
  const Series numer = Series::in_y({x * x}, order) + (c.beta * chains).times_y();
  return series_rational_expand(numer, Series::in_y({one, -c.alpha}, order), order);
}

}  // namespace knotshadow
