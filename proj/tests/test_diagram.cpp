#include <algorithm>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "knotshadow/knotshadow.hpp"
#include "support.hpp"

using namespace knotshadow;

namespace {

const Polynomial x = Polynomial::x();

std::vector<std::size_t> all_state_counts(const Shadow& k) {
  std::vector<std::size_t> out;
  const std::size_t m = k.crossing_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    out.push_back(resolve_state(k, StateAssignment::from_mask(mask, m)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("resolve_state", "[diagram]") {
  CHECK(resolve_state(Shadow::unknot(), StateAssignment{}) == 1);
  CHECK(all_state_counts(generators::twist()) == std::vector<std::size_t>{1, 2});
  CHECK(all_state_counts(generators::hitch()) == std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 2, 3});
  try {
    resolve_state(generators::twist(), StateAssignment::from_mask(0, 2));
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("split types pair the ports as frozen", "[diagram]") {
  // One crossing with ports 0-1 and 2-3 joined: type 0 closes two circles.
  const Shadow k = Shadow::from_edges(1, {{0, 1}, {2, 3}}, 0);
  CHECK(resolve_state(k, StateAssignment::from_mask(0, 1)) == 2);
  CHECK(resolve_state(k, StateAssignment::from_mask(1, 1)) == 1);
}

TEST_CASE("state_sum", "[diagram]") {
  CHECK(state_sum(Shadow::unknot()) == x);
  CHECK(state_sum(generators::hopf()) == Polynomial{0, 2, 2});
  CHECK(state_sum(generators::overhand()) == Polynomial{0, 3, 4, 1});
  CHECK(state_sum(Shadow::empty()) == Polynomial::one());
}

TEST_CASE("state_sum enforces the crossing guard", "[diagram]") {
  const Shadow big = chain(generators::twist(), 12);
  try {
    state_sum(big, {10, 1});
    FAIL("expected TooManyCrossings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyCrossings);
  }
  CHECK(state_sum(big, {12, 1}) == x * poly_pow(Polynomial{1, 1}, 12));
}

TEST_CASE("parallel state_sum matches the single-threaded result", "[diagram]") {
  const Shadow k = build({Family::Ringbolt, 5});
  const Polynomial single = state_sum(k);
  for (unsigned t : {2U, 3U, 8U}) CHECK(state_sum(k, {kDefaultCrossingGuard, t}) == single);
  CHECK(state_sum(generators::twist(), {kDefaultCrossingGuard, 16}) == Polynomial{0, 1, 1});
}

TEST_CASE("disjoint_union", "[diagram]") {
  CHECK(state_sum(disjoint_union(Shadow::unknot(), Shadow::unknot())) == Polynomial{0, 0, 1});
  CHECK(state_sum(disjoint_union(generators::twist(), Shadow::unknot())) == Polynomial{0, 0, 1, 1});
  CHECK(state_sum(disjoint_union(generators::twist(), generators::hopf())) == Polynomial{0, 0, 2, 4, 2});
}

TEST_CASE("connected_sum", "[diagram]") {
  const Shadow t1 = generators::twist(), l1 = generators::hopf();
  const Shadow u = Shadow::unknot();
  CHECK(state_sum(connected_sum(t1, ArcRef{0, 0}, u, ArcRef{0, 0})) == state_sum(t1));
  CHECK(state_sum(connected_sum(l1, ArcRef{1, 1}, t1, ArcRef{0, 0})) == Polynomial{0, 2, 4, 2});
  CHECK(state_sum(connected_sum(t1, t1)) == Polynomial{0, 1, 2, 1});
  CHECK(connected_sum(t1, t1).crossing_count() == 2);
  try {
    connected_sum(t1, ArcRef{5, 0}, u, ArcRef{0, 0});
    FAIL("expected InvalidArc");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArc);
  }
  CHECK_THROWS_AS(connected_sum(Shadow::empty(), ArcRef{0, 0}, u, ArcRef{0, 0}), Error);
  CHECK_THROWS_AS(connected_sum(t1, ArcRef{0, 2}, u, ArcRef{0, 0}), Error);
}

TEST_CASE("connected_sum keeps the outer cut points", "[diagram]") {
  const Shadow t1 = generators::twist();
  const Shadow s = connected_sum(t1, t1);
  REQUIRE(s.entry());
  CHECK(*s.entry() == *t1.entry());
  CHECK(*s.exit() == Position::port(t1.exit()->index + 4));
  // Absorbing an unknot keeps the other operand's cuts.
  const Shadow a = connected_sum(t1, Shadow::unknot());
  CHECK(a.cut_points() == t1.cut_points());
  const Shadow b = connected_sum(Shadow::unknot(), t1);
  CHECK(b.cut_points() == t1.cut_points());
  const Shadow uu = connected_sum(Shadow::unknot(), Shadow::unknot());
  CHECK(uu.free_loops() == 1);
  CHECK(uu.entry() != uu.exit());
}

TEST_CASE("self_closure", "[diagram]") {
  const Shadow u = Shadow::unknot();
  CHECK(state_sum(self_closure(u, Position::loop(0, 0), Position::loop(0, 1))) == Polynomial{0, 0, 1});
  const Shadow t1 = generators::twist();
  CHECK(state_sum(self_closure(t1, *t1.entry(), *t1.exit())) == Polynomial{0, 1, 1});
  // Both cuts on one bridge arc split off a free loop.
  for (std::size_t n : {1U, 2U, 3U}) {
    const Shadow k = chain(generators::hopf(), n);
    const Position p = *k.entry();
    const Shadow c = self_closure(k, p, Position::port(k.peer(p.index)));
    CHECK(state_sum(c) == x * state_sum(k));
  }
  try {
    self_closure(t1, Position::port(1), Position::port(1));
    FAIL("expected InvalidCut");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCut);
  }
  CHECK_THROWS_AS(self_closure(t1, Position::port(1), Position::port(9)), Error);
}

TEST_CASE("closing twice gives the original polynomial back", "[diagram]") {
  for (const auto& fi : kCatalog) {
    if (!fi.closed) continue;
    for (std::size_t n = 0; n <= 3; ++n) {
      const FamilySpec spec{fi.family, n};
      const Shadow c = build(spec);
      const Shadow open = self_closure(c);
      if (fi.family == Family::TwistKnot)
        CHECK(state_sum(open) == state_sum(connected_sum(generators::hopf(), chain(generators::twist(), n))));
      else
        CHECK(state_sum(open) == state_sum(chain(generator(fi.family), n)));
    }
  }
}

TEST_CASE("validate", "[diagram]") {
  const ValidationReport u = validate(Shadow::unknot());
  CHECK(u.valid);
  CHECK(u.graph_components == 1);

  const ValidationReport l3 = validate(build({Family::Link, 3}));
  CHECK(l3.valid);
  CHECK(l3.graph_components == 1);
  CHECK(l3.crossings == 6);
  CHECK(l3.curve_components == 4);
  CHECK(l3.planar);

  const Shadow broken({1, 0, kUnmatched, 3}, 0);
  const ValidationReport b = validate(broken);
  CHECK_FALSE(b.valid);
  CHECK_FALSE(b.problems.empty());

  const Shadow bad_cut = generators::twist().with_cut_points({Position::port(1), Position::port(12)});
  CHECK_FALSE(validate(bad_cut).valid);

  CHECK(validate(disjoint_union(generators::twist(), Shadow::unknot())).graph_components == 2);
  CHECK_THROWS_AS(state_sum(broken), Error);
}

TEST_CASE("family diagrams are planar", "[diagram]") {
  for (const auto& fi : kCatalog)
    for (std::size_t n = 0; n <= 4; ++n) {
      const ValidationReport r = validate(build({fi.family, n}));
      INFO(fi.name << " n=" << n);
      CHECK(r.valid);
      CHECK(r.planar);
    }
}

TEST_CASE("serialization round-trips", "[diagram]") {
  const Shadow t1 = generators::twist();
  const std::string text = serialize(t1);
  CHECK(text == "loops: 0\ncuts: 1:0,0:0\n0.3 0.2 0.1 0.0\n");
  CHECK(deserialize(text) == t1);
  CHECK(deserialize(serialize(Shadow::unknot())) == Shadow::unknot());
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Shadow k = testsupport::random_shadow(rng, 12);
    REQUIRE(deserialize(serialize(k)) == k);
  }
  CHECK_THROWS_AS(deserialize("loops: 0\ncuts:\n0.1 0.0 0.3\n"), Error);
  CHECK_THROWS_AS(deserialize("loops: x\ncuts:\n"), Error);
  CHECK_THROWS_AS(deserialize("loops: 0\ncuts: 9:0\n0.3 0.2 0.1 0.0\n"), Error);
  CHECK_THROWS_AS(deserialize("loops: 0\ncuts:\n0.1 0.0 0.2 0.3\n"), Error);
}

TEST_CASE("arc references map to positions and back", "[diagram]") {
  const Shadow k = disjoint_union(build({Family::Hitch, 2}), Shadow::unknot());
  for (std::size_t e = 0; e < k.edge_count() + k.free_loops(); ++e)
    for (int s = 0; s < 2; ++s) CHECK(k.arc_of(k.position_of({e, s})) == ArcRef{e, s});
}

TEST_CASE("state-sum properties on random shadows", "[diagram][property]") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const Shadow k = testsupport::random_shadow(rng, 10);
    const Polynomial p = state_sum(k);
    const std::size_t m = k.crossing_count();
    const ValidationReport r = validate(k);
    REQUIRE(r.valid);
    REQUIRE(poly_eval_int(p, 1) == Coefficient(1) << m);
    REQUIRE(p.coeff(0) == 0);
    for (const auto& c : p.coeffs()) REQUIRE(c >= 0);
    REQUIRE(p.lowest_power() >= static_cast<long>(r.graph_components));
    REQUIRE(p.degree() <= static_cast<long>(m + r.graph_components));
  }
}

TEST_CASE("flip locality", "[diagram][property]") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < testsupport::kCases) {
    const Shadow k = testsupport::random_shadow(rng, 10);
    const std::size_t m = k.crossing_count();
    if (m == 0) continue;
    StateAssignment s = StateAssignment::from_mask(rng(), m);
    const std::size_t i = testsupport::pick(rng, 0, m - 1);
    const long before = static_cast<long>(resolve_state(k, s));
    s.flip(i);
    const long after = static_cast<long>(resolve_state(k, s));
    REQUIRE(std::abs(after - before) == 1);
    ++done;
  }
}

TEST_CASE("disjoint-union product law", "[diagram][property]") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const Shadow a = testsupport::random_shadow(rng, 6), b = testsupport::random_shadow(rng, 6);
    REQUIRE(state_sum(disjoint_union(a, b)) == state_sum(a) * state_sum(b));
  }
}

TEST_CASE("connected-sum shift law at random arcs", "[diagram][property]") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const Shadow a = testsupport::random_shadow(rng, 6), b = testsupport::random_shadow(rng, 6);
    const Shadow s = connected_sum(a, testsupport::random_arc(rng, a), b, testsupport::random_arc(rng, b));
    REQUIRE(s.crossing_count() == a.crossing_count() + b.crossing_count());
    REQUIRE(state_sum(s) == poly_shift_down(state_sum(a) * state_sum(b)));
  }
}
