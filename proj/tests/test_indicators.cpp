#include "support.hpp"

#include "rmcode/indicators.hpp"

using namespace rmcode;
using testing::polys;

TEST_CASE("indicators of the affine plane") {
  auto x = testing::affine_plane_f3();
  auto f = x.field();
  auto gb = vanishing_ideal(x, TermOrder::grevlex(3));
  auto is = standard_indicators(x, gb);
  for (int v : is.degrees) CHECK(v == 4);
  for (Elem v : is.values) CHECK(v == 1);
  REQUIRE(is.essential.size() == 1);
  CHECK(is.essential[0] == Monomial({2, 2, 0}));
  auto printed = polys(f, 3,
                       {"t1^2*t2^2-t1^2*t3^2-t2^2*t3^2+t3^4", "t1^2*t2^2+t1^2*t2*t3-t2^2*t3^2-t2*t3^3",
                        "t1^2*t2^2-t1^2*t2*t3-t2^2*t3^2+t2*t3^3", "t1^2*t2^2+t1^2*t2*t3+t1*t2^2*t3+t1*t2*t3^2",
                        "t1^2*t2^2+t1*t2^2*t3-t1^2*t3^2-t1*t3^3", "t1^2*t2^2-t1^2*t2*t3+t1*t2^2*t3-t1*t2*t3^2",
                        "t1^2*t2^2-t1*t2^2*t3-t1^2*t3^2+t1*t3^3", "t1^2*t2^2+t1^2*t2*t3-t1*t2^2*t3-t1*t2*t3^2",
                        "t1^2*t2^2-t1^2*t2*t3-t1*t2^2*t3+t1*t2*t3^2"});
  // The printed list has the separators of (1,0,1) and (1,1,1) in swapped positions.
  std::swap(printed[3], printed[4]);
  for (std::size_t i = 0; i < 9; ++i) CHECK(testing::proportional(is.fs[i], printed[i]));

  auto vn = v_numbers(is);
  CHECK(vn.v == 4);

  // Point 1: no separator in degree 3, one in degree 4.
  CHECK_FALSE(separable_in_degree(x, gb, 0, 3));
  CHECK(separable_in_degree(x, gb, 0, 4));
  CHECK(colon_witness(x, gb, is, 0) == is.fs[0]);
}

TEST_CASE("indicators of five points in P^3") {
  auto x = testing::five_points_nonci();
  auto f = x.field();
  auto gb = vanishing_ideal(x, TermOrder::grevlex(4));
  auto is = standard_indicators(x, gb);
  CHECK(is.fs[4] == parse_poly(f, 4, "t3^2-t3*t4"));
  CHECK(is.degrees[4] == 2);
  auto printed = polys(f, 4, {"t3^2-t1*t4-t3*t4", "t3^2-t2*t4-t3*t4", "t3^2+t3*t4",
                              "t3^2-t1*t4-t2*t4+t3*t4+t4^2", "t3^2-t3*t4"});
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(is.fs[i] == printed[i]);
    CHECK(is.values[i] == f->from_int(i == 3 ? 1 : -1));
  }
}

TEST_CASE("v-numbers and regularity indices") {
  auto hx = testing::hiram_points();
  auto hgb = vanishing_ideal(hx, TermOrder::parse("glex perm=3,2,1", 3));
  auto his = standard_indicators(hx, hgb);
  auto hv = v_numbers(his);
  CHECK(hv.v == 3);
  CHECK(hv.v_r == std::vector<int>{3, 4, 4, 4, 4, 4, 4, 4, 4, 4});
  CHECK(hv.local[6] == 3);
  CHECK(separable_in_degree(hx, hgb, 6, 3));
  CHECK_FALSE(separable_in_degree(hx, hgb, 6, 2));

  auto sx = testing::seven_points();
  auto sgb = vanishing_ideal(sx, TermOrder::grevlex(3));
  auto sv = v_numbers(standard_indicators(sx, sgb));
  CHECK(sv.v_r == std::vector<int>{2, 2, 2, 3, 3, 3, 3});
  CHECK(sv.v == 2);

  auto f3 = Field::create(3);
  auto two = testing::points(f3, {{1, 0}, {0, 1}});
  auto tgb = vanishing_ideal(two, TermOrder::grevlex(2));
  auto tis = standard_indicators(two, tgb);
  CHECK(tis.fs[0] == parse_poly(f3, 2, "t1"));
  CHECK(v_numbers(tis).v == 1);
}

TEST_CASE("indicator invariants on random sets") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto field = Field::create(trial % 2 ? 3 : 5);
    const int s = 2 + trial % 3;
    auto x = testing::random_points(rng, field, s, 3 + trial % 6);
    auto order = trial % 2 ? TermOrder::grevlex(s) : TermOrder::glex(s);
    auto gb = vanishing_ideal(x, order);
    auto hd = hilbert_data(gb, static_cast<long long>(x.size()));
    auto is = standard_indicators(x, gb);
    CHECK(*std::max_element(is.degrees.begin(), is.degrees.end()) == hd.r0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK_NOTHROW(colon_witness(x, gb, is, i));
      CHECK(is.fs[i].leading_coeff(order) == 1);
      // Uniqueness: solving with the monomials in a different order gives a
      // proportional separator.
      auto delta = standard_monomials(gb, is.degrees[i]);
      std::reverse(delta.begin(), delta.end());
      Matrix a = evaluation_matrix(x, delta).transposed();
      std::vector<Elem> e(x.size(), 0);
      e[i] = 1;
      auto c = solve(*field, a, e);
      REQUIRE(c.has_value());
      Poly g(field, s);
      for (std::size_t u = 0; u < delta.size(); ++u) g.add_term(delta[u], (*c)[u]);
      CHECK(testing::proportional(g, is.fs[i]));
    }
    // f_i times a power of a coordinate nonzero at P_i, evaluated in degree r0:
    // these m vectors span K^m.
    Matrix padded(0, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      int k = s - 1;
      while (x[i][k] == 0) --k;
      Poly lifted = is.fs[i].times(Monomial::variable(s, k, hd.r0 - is.degrees[i]));
      padded.append_row(evaluate(lifted, x));
    }
    CHECK(rank(*field, padded) == x.size());
  }
}
