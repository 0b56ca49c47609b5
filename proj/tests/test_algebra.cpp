#include <random>

#include "catch_amalgamated.hpp"
#include "knotshadow/algebra.hpp"
#include "support.hpp"

using namespace knotshadow;

namespace {
const Polynomial x = Polynomial::x();
const Polynomial T1{0, 1, 1};
const Polynomial L1{0, 2, 2};
}  // namespace

TEST_CASE("polynomials are stored in canonical form", "[algebra]") {
  CHECK(Polynomial{1, 2, 0, 0}.size() == 2);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0, 0, 3}.lowest_power() == 2);
  CHECK(Polynomial{1, 2} - Polynomial{1, 2} == Polynomial{});
}

TEST_CASE("poly_add", "[algebra]") {
  CHECK(poly_add(T1, Polynomial{}) == T1);
  CHECK(poly_add(Polynomial{1, 1}, T1) == Polynomial{1, 2, 1});
  CHECK(poly_add(T1, T1) == L1);
}

TEST_CASE("poly_mul", "[algebra]") {
  CHECK(poly_mul(T1, Polynomial::one()) == T1);
  CHECK(poly_mul(L1, T1) == Polynomial{0, 0, 2, 4, 2});
  CHECK(poly_mul(x, x) == Polynomial{0, 0, 1});
}

TEST_CASE("poly_pow", "[algebra]") {
  CHECK(poly_pow(Polynomial{1, 1}, 0) == Polynomial::one());
  CHECK(poly_pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
  CHECK(poly_pow(Polynomial{3, 4, 1}, 2) == Polynomial{9, 24, 22, 8, 1});
}

TEST_CASE("poly_div_exact", "[algebra]") {
  const Polynomial d{0, -1, 0, 1};
  CHECK(poly_div_exact(d, d) == Polynomial::one());
  CHECK(poly_div_exact(x * T1 - T1, d) == Polynomial::one());
  try {
    poly_div_exact(T1, Polynomial{2, 1});
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  CHECK_THROWS_AS(poly_div_exact(T1, Polynomial{}), Error);
  CHECK_THROWS_AS(poly_div_exact(Polynomial{1}, Polynomial{0, 2}), Error);
  CHECK_THROWS_AS(poly_div_exact(Polynomial{0, 1}, Polynomial{0, 2}), Error);
}

TEST_CASE("poly_shift_down", "[algebra]") {
  CHECK(poly_shift_down(T1) == Polynomial{1, 1});
  CHECK(poly_shift_down(Polynomial{0, 2, 4, 2}) == Polynomial{2, 4, 2});
  try {
    poly_shift_down(Polynomial{1, 1});
    FAIL("expected ConstantTermNonzero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstantTermNonzero);
  }
}

TEST_CASE("poly_eval_int", "[algebra]") {
  CHECK(poly_eval_int(T1, 1) == 2);
  CHECK(poly_eval_int(Polynomial{0, 3, 4, 1}, 1) == 8);
  CHECK(poly_eval_int(Polynomial{7, 3, 4, 1}, 0) == 7);
  CHECK(poly_eval_int(Polynomial{-1, 0, 1}, 3) == 8);
}

TEST_CASE("polynomials print in descending powers", "[algebra]") {
  CHECK(Polynomial{0, 3, 4, 1}.to_string() == "x^3 + 4x^2 + 3x");
  CHECK(Polynomial{-1, 0, 1}.to_string() == "x^2 - 1");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{5}.to_string() == "5");
  CHECK(Polynomial{0, -1}.to_string() == "-x");
  CHECK(Polynomial{2, -3, 0, -1}.to_string() == "-x^3 - 3x + 2");
}

TEST_CASE("coefficients do not overflow", "[algebra]") {
  // C(60,30), and 8^40 = 2^120 states of a 120-crossing hitch chain.
  const Polynomial p = poly_pow(Polynomial{1, 1}, 60);
  CHECK(p.coeff(30).str() == "118264581564861424");
  const Polynomial q = poly_pow(Polynomial{3, 4, 1}, 40);
  CHECK(poly_eval_int(q, 1) == boost::multiprecision::pow(Coefficient(8), 40));
}

TEST_CASE("ring laws on random polynomials", "[algebra][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const Polynomial a = testsupport::random_poly(rng), b = testsupport::random_poly(rng),
                     c = testsupport::random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division undoes multiplication", "[algebra][property]") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const Polynomial a = testsupport::random_poly(rng);
    Polynomial d = testsupport::random_poly(rng);
    if (d.is_zero()) d = Polynomial{1, 1};
    REQUIRE(poly_div_exact(a * d, d) == a);
  }
}

TEST_CASE("series_rational_expand", "[algebra]") {
  const Polynomial one = Polynomial::one();
  const Series s = series_rational_expand(Series::in_y({x}, 2), Series::in_y({one, -Polynomial{1, 1}}, 2), 2);
  CHECK(s[0] == x);
  CHECK(s[1] == x * Polynomial{1, 1});
  CHECK(s[2] == x * poly_pow(Polynomial{1, 1}, 2));

  const Series g = series_rational_expand(Series::in_y({one}, 3), Series::in_y({one, -one}, 3), 3);
  CHECK(g.terms() == std::vector<Polynomial>(4, one));

  const Series l = series_rational_expand(Series::in_y({x}, 2), Series::in_y({one, -Polynomial{2, 2}}, 2), 2);
  CHECK(l[2] == Polynomial{0, 4, 8, 4});

  // Leading coefficient x: every step divides by x exactly.
  const Series t = series_rational_expand(Series::in_y({x * x}, 3), Series::in_y({x, -T1}, 3), 3);
  CHECK(t[3] == x * poly_pow(Polynomial{1, 1}, 3));

  try {
    series_rational_expand(Series::in_y({one}, 2), Series::in_y({x}, 2), 2);
    FAIL("expected NonUnitLeading");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitLeading);
  }
}

TEST_CASE("series arithmetic truncates to the smaller order", "[algebra]") {
  const Series a = Series::in_y({x, x}, 3);
  const Series b = Series::in_y({Polynomial::one(), Polynomial::one()}, 1);
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK((a * b)[1] == x + x);
  CHECK(a.times_y()[1] == x);
  CHECK(a.times_y().order() == 3);
}
