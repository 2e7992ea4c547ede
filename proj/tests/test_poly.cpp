#include <random>

#include "doctest.h"
#include "rmcode/error.hpp"
#include "rmcode/poly.hpp"

using namespace rmcode;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937& rng, int s, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> var(0, s - 1);
  std::vector<int> e(s, 0);
  const int d = deg(rng);
  for (int i = 0; i < d; ++i) ++e[var(rng)];
  return Monomial(std::move(e));
}

std::vector<TermOrder> sample_orders() {
  return {TermOrder::grevlex(4), TermOrder::glex(4), TermOrder(OrderKind::GRevLex, {2, 0, 3, 1}),
          TermOrder(OrderKind::GLex, {3, 2, 1, 0})};
}

}  // namespace

TEST_CASE("monomial order examples") {
  auto grl = TermOrder::grevlex(4);
  CHECK(grl.compare(mono({1, 0, 0, 1}), mono({0, 1, 1, 0})) == std::strong_ordering::less);
  auto g3 = TermOrder::grevlex(3);
  CHECK(g3.less(mono({2, 0, 0}), mono({1, 1, 1})));
  auto glex_rev = TermOrder::parse("glex perm=3,2,1", 3);
  CHECK(glex_rev.compare(mono({0, 1, 1}), mono({1, 0, 1})) == std::strong_ordering::greater);
  CHECK(glex_rev.describe() == "glex perm=3,2,1");
  CHECK_THROWS_AS(g3.compare(mono({1, 0}), mono({1, 0, 0})), Error);
  CHECK_THROWS_AS(TermOrder::parse("lex", 3), Error);
  CHECK_THROWS_AS(TermOrder::parse("glex perm=1,1,2", 3), Error);
}

TEST_CASE("grevlex matches the textbook order on degree 2 in 3 variables") {
  // t1^2 > t1t2 > t2^2 > t1t3 > t2t3 > t3^2
  auto g = TermOrder::grevlex(3);
  std::vector<Monomial> expected = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                    mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) CHECK(g.less(expected[i + 1], expected[i]));
}

TEST_CASE("order axioms on random monomials") {
  std::mt19937 rng(20231);
  for (const auto& order : sample_orders()) {
    CAPTURE(order.describe());
    const int s = order.nvars();
    const Monomial one = Monomial::one(s);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      Monomial u = random_monomial(rng, s, 8), v = random_monomial(rng, s, 8), w = random_monomial(rng, s, 8);
      auto uv = order.compare(u, v), vu = order.compare(v, u);
      if ((uv == 0) != (u == v)) ok = false;                 // totality / antisymmetry
      if ((uv < 0) != (vu > 0)) ok = false;
      if (order.less(u, v) && order.less(v, w) && !order.less(u, w)) ok = false;  // transitivity
      if (order.less(u, one)) ok = false;
      if (order.less(u, v) && !order.less(u * w, v * w)) ok = false;  // multiplicative
    }
    CHECK(ok);
  }
}

TEST_CASE("monomials of degree") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(4, 3).size() == 20);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("polynomial evaluation and printing") {
  auto f3 = Field::create(3);
  auto g = TermOrder::grevlex(4);
  Poly f = parse_poly(f3, 4, "t3^2-t3*t4");
  std::vector<Elem> p = {2, 2, 2, 1};
  CHECK(f.eval(p) == 2);
  CHECK(f.to_string(g) == "t3^2-t3*t4");
  CHECK(Poly::constant(f3, 4, 1).eval(p) == 1);
  std::vector<Elem> short_point = {1, 1};
  CHECK_THROWS_AS(f.eval(short_point), Error);

  // homogeneity: f(lambda P) = lambda^deg f(P)
  std::vector<Elem> lp = {1, 1, 1, 2};
  CHECK(f.eval(lp) == f3->mul(f3->pow(2, 2), f.eval(p)));

  Poly h = parse_poly(f3, 4, "t1*t3+t1*t4-t3*t4-t4^2");
  CHECK(h.to_string(g) == "t1*t3+t1*t4-t3*t4-t4^2");
  CHECK(parse_poly(f3, 4, h.to_string(g)) == h);
  CHECK_THROWS_AS(parse_poly(f3, 4, "t1*+t2"), Error);
  CHECK_THROWS_AS(parse_poly(f3, 4, "t9"), Error);
}

TEST_CASE("extension field coefficients") {
  auto f4 = Field::create(2, 2);
  auto g = TermOrder::grevlex(3);
  Poly f = parse_poly(f4, 3, "a*t1+(1+a)*t2+a^2*t3");
  CHECK(f.coeff(Monomial::variable(3, 1)) == f.coeff(Monomial::variable(3, 2)));
  CHECK(parse_poly(f4, 3, f.to_string(g)) == f);
}

TEST_CASE("homogenize and dehomogenize") {
  auto f5 = Field::create(5);
  Poly f = parse_poly(f5, 2, "t1^2+t2");
  Poly h = homogenize(f);
  std::vector<std::string> names = {"t1", "t2", "u"};
  CHECK(h == parse_poly(f5, 3, "t1^2+t2*u", names));
  CHECK(h.is_homogeneous());
  CHECK(dehomogenize(h) == f);
  Poly c = Poly::constant(f5, 2, 5 % 5 == 0 ? 4 : 0);
  CHECK(homogenize(c).degree() == 0);
  Poly hom = parse_poly(f5, 2, "t1*t2");
  CHECK(dehomogenize(homogenize(hom)) == hom);
}

TEST_CASE("arithmetic and proportionality") {
  auto f3 = Field::create(3);
  Poly x = Poly::variable(f3, 2, 0), y = Poly::variable(f3, 2, 1);
  Poly sq = (x + y) * (x + y);
  CHECK(sq == parse_poly(f3, 2, "t1^2+2*t1*t2+t2^2"));
  CHECK((sq - sq).is_zero());
  auto r = proportionality(sq, sq.scaled(2));
  REQUIRE(r.has_value());
  CHECK(*r == 2);
  CHECK_FALSE(proportionality(sq, x * x).has_value());
  auto other = Poly::variable(Field::create(5), 2, 0);
  try {
    (void)(x + other);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}
