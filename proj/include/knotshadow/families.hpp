#pragma once

// Canonical diagrams, with cut points, for every knot family.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotshadow/diagram.hpp"
#include "knotshadow/error.hpp"

namespace knotshadow {

enum class Family {
  Unknot,
  TwistLoop,
  TwistLoop2,
  TwistLoop3,
  Link,
  TwistLink,
  Hitch,
  Overhand,
  Foil,
  Foil2,
  Foil3,
  ChainLink,
  TwistBracelet,
  Ringbolt,
  Sinnet,
  TwistKnot,
  AltA,
  AltB,
  AltC,
  AltD,
  AltE,
};

struct FamilySpec {
  Family family = Family::Unknot;
  std::size_t n = 0;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyInfo {
  Family family;
  std::string_view name;    // CLI name
  std::string_view symbol;  // coefficient-triangle name
  bool closed;              // built by closing a chain
};

/// Fixed catalog order used for every listing.
inline constexpr std::array<FamilyInfo, 21> kCatalog{{
    {Family::Unknot, "unknot", "u", false},
    {Family::TwistLoop, "twist-loop", "t", false},
    {Family::TwistLoop2, "twist-loop-2", "t2", false},
    {Family::TwistLoop3, "twist-loop-3", "t3", false},
    {Family::Link, "link", "l", false},
    {Family::TwistLink, "twist-link", "w", false},
    {Family::Hitch, "hitch", "h", false},
    {Family::Overhand, "overhand", "o", false},
    {Family::Foil, "foil", "f", true},
    {Family::Foil2, "foil-2", "f2", true},
    {Family::Foil3, "foil-3", "f3", true},
    {Family::ChainLink, "chain-link", "c", true},
    {Family::TwistBracelet, "twist-bracelet", "b", true},
    {Family::Ringbolt, "ringbolt", "r", true},
    {Family::Sinnet, "sinnet", "s", true},
    {Family::TwistKnot, "twist-knot", "tau", true},
    {Family::AltA, "alt-a", "sa", true},
    {Family::AltB, "alt-b", "sb", true},
    {Family::AltC, "alt-c", "sc", true},
    {Family::AltD, "alt-d", "sd", true},
    {Family::AltE, "alt-e", "se", true},
}};

inline const FamilyInfo& info(Family f) {
  for (const auto& i : kCatalog)
    if (i.family == f) return i;
  throw Error(ErrorKind::UnsupportedSpec, "unknown family tag");
}

inline std::string_view family_name(Family f) { return info(f).name; }

inline Family family_from_name(std::string_view name) {
  for (const auto& i : kCatalog)
    if (i.name == name) return i.family;
  throw Error(ErrorKind::UnknownFamily, std::string(name));
}

inline std::optional<Family> family_from_symbol(std::string_view symbol) {
  for (const auto& i : kCatalog)
    if (i.symbol == symbol) return i.family;
  return std::nullopt;
}

inline std::size_t crossing_count(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::Unknot: return 0;
    case Family::TwistLoop:
    case Family::Foil: return n;
    case Family::TwistLoop2:
    case Family::Link:
    case Family::Foil2:
    case Family::ChainLink:
    case Family::AltA: return 2 * n;
    case Family::TwistKnot: return n + 2;
    default: return 3 * n;
  }
}

namespace generators {

// Ports are numbered 4*crossing + local, local ports counterclockwise from
// the north-east. Each generator is a 2-tangle closed by two caps; the caps
// carry the entry and exit cut points.

/// One crossing, caps on its west and east sides.
inline Shadow twist() {
  return Shadow::from_edges(1, {{1, 2}, {0, 3}}, 0, {Position::port(1), Position::port(0)});
}

/// Hopf link: a vertical two-crossing twist.
inline Shadow hopf() {
  return Shadow::from_edges(2, {{2, 5}, {3, 4}, {1, 6}, {0, 7}}, 0, {Position::port(1), Position::port(0)});
}

/// Overhand knot: a vertical three-crossing twist.
inline Shadow overhand() {
  return Shadow::from_edges(3, {{2, 5}, {3, 4}, {6, 9}, {7, 8}, {1, 10}, {0, 11}}, 0,
                            {Position::port(1), Position::port(0)});
}

/// Twist link: the Hopf tangle followed by one horizontal twist.
inline Shadow twist_link() {
  return Shadow::from_edges(3, {{2, 5}, {3, 4}, {0, 9}, {7, 10}, {1, 6}, {8, 11}}, 0,
                            {Position::port(1), Position::port(8)});
}

/// Hitch: the twist-link tangle turned a quarter, caps moved accordingly.
inline Shadow hitch() {
  return Shadow::from_edges(3, {{2, 5}, {3, 4}, {0, 9}, {7, 10}, {1, 8}, {6, 11}}, 0,
                            {Position::port(1), Position::port(6)});
}

}  // namespace generators

/// n-fold chain of a generator; n = 0 gives the unknot.
inline Shadow chain(const Shadow& generator, std::size_t n) {
  if (n == 0) return Shadow::unknot();
  Shadow acc = generator;
  for (std::size_t i = 1; i < n; ++i) acc = connected_sum(acc, generator);
  return acc;
}

namespace detail {

/// Hangs `star` off the entry edge of `carrier`; the carrier keeps its cuts.
inline Shadow attach(const Shadow& carrier, const Shadow& star) {
  Shadow s = connected_sum_at(carrier, *carrier.entry(), star, *star.entry());
  return s.with_cut_points(carrier.cut_points());
}

}  // namespace detail

/// The 1-generator whose chains (or closed chains) form the family.
inline Shadow generator(Family f) {
  using namespace generators;
  switch (f) {
    case Family::Unknot: return Shadow::unknot();
    case Family::TwistLoop:
    case Family::Foil: return twist();
    case Family::TwistLoop2:
    case Family::Foil2: return chain(twist(), 2);
    case Family::TwistLoop3:
    case Family::Foil3: return chain(twist(), 3);
    case Family::Link:
    case Family::ChainLink: return hopf();
    case Family::TwistLink:
    case Family::TwistBracelet: return twist_link();
    case Family::Hitch:
    case Family::Ringbolt: return hitch();
    case Family::Overhand:
    case Family::Sinnet: return overhand();
    case Family::AltA: return detail::attach(twist(), twist());
    case Family::AltB: return detail::attach(chain(twist(), 2), twist());
    case Family::AltC: return detail::attach(twist(), chain(twist(), 2));
    case Family::AltD: return detail::attach(hopf(), twist());
    case Family::AltE: return detail::attach(twist(), hopf());
    case Family::TwistKnot: break;
  }
  throw Error(ErrorKind::UnsupportedSpec, std::string(family_name(f)) + " has no single generator");
}

inline Shadow build(const FamilySpec& spec) {
  const Family f = spec.family;
  if (f == Family::Unknot) return Shadow::unknot();
  if (f == Family::TwistKnot) {
    const Shadow twists = chain(generators::twist(), spec.n);
    return self_closure(connected_sum(generators::hopf(), twists));
  }
  const Shadow open = chain(generator(f), spec.n);
  return info(f).closed ? self_closure(open) : open;
}

}  // namespace knotshadow
