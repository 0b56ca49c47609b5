#pragma once

// Random generators shared by the property tests. Seeds are fixed so every
// run sees the same cases.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "knotshadow/knotshadow.hpp"

namespace testsupport {

using namespace knotshadow;

inline constexpr int kCases = 10000;

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t max_size = 6, long long range = 50) {
  std::vector<Coefficient> c(pick(rng, 0, max_size));
  std::uniform_int_distribution<long long> d(-range, range);
  for (auto& v : c) v = d(rng);
  return Polynomial(std::move(c));
}

/// Any position of a shadow (port or loop slot).
inline Position random_position(std::mt19937_64& rng, const Shadow& k) {
  const std::size_t ports = k.peers().size();
  const std::size_t slots = 2 * k.free_loops();
  const std::size_t r = pick(rng, 0, ports + slots - 1);
  if (r < ports) return Position::port(r);
  return Position::loop((r - ports) / 2, static_cast<int>((r - ports) % 2));
}

inline ArcRef random_arc(std::mt19937_64& rng, const Shadow& k) { return k.arc_of(random_position(rng, k)); }

inline Shadow random_generator(std::mt19937_64& rng) {
  switch (pick(rng, 0, 5)) {
    case 0: return Shadow::unknot();
    case 1: return generators::twist();
    case 2: return generators::hopf();
    case 3: return generators::twist_link();
    case 4: return generators::hitch();
    default: return generators::overhand();
  }
}

/// Random nonempty shadow with at most `budget` crossings, built from the
/// generators by connected sums at random arcs, disjoint unions and closures.
inline Shadow random_shadow(std::mt19937_64& rng, std::size_t budget, int depth = 3) {
  if (depth == 0 || budget < 3 || pick(rng, 0, 3) == 0) {
    Shadow g = random_generator(rng);
    while (g.crossing_count() > budget) g = random_generator(rng);
    return g;
  }
  const std::size_t split = pick(rng, 0, budget);
  Shadow a = random_shadow(rng, split, depth - 1);
  Shadow b = random_shadow(rng, budget - a.crossing_count(), depth - 1);
  switch (pick(rng, 0, 3)) {
    case 0: return disjoint_union(a, b);
    case 1: {
      Shadow s = connected_sum(a, random_arc(rng, a), b, random_arc(rng, b));
      if (!s.entry()) return s;
      try {
        return self_closure(s);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidCut) throw;
        return s;  // the cuts ended up on different faces
      }
    }
    default: return connected_sum(a, random_arc(rng, a), b, random_arc(rng, b));
  }
}

inline ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || pick(rng, 0, 2) == 0) {
    switch (pick(rng, 0, 6)) {
      case 0: return make_atom(AtomKind::U);
      case 1: return make_atom(AtomKind::T, pick(rng, 0, 3));
      case 2: return make_atom(AtomKind::L, pick(rng, 0, 2));
      case 3: return make_atom(AtomKind::W, pick(rng, 0, 1));
      case 4: return make_atom(AtomKind::H, pick(rng, 0, 1));
      case 5: return make_atom(AtomKind::O, pick(rng, 0, 1));
      default: return make_atom(AtomKind::TK, pick(rng, 0, 2));
    }
  }
  switch (pick(rng, 0, 5)) {
    case 0: return make_binary(BinaryOp::CSum, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 1: return make_binary(BinaryOp::Disjoint, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return make_power(random_expr(rng, depth - 1), pick(rng, 0, 3), BinaryOp::CSum);
    case 3: return make_power(random_expr(rng, depth - 1), pick(rng, 0, 2), BinaryOp::Disjoint);
    default: return make_closure(random_expr(rng, depth - 1));
  }
}

}  // namespace testsupport
