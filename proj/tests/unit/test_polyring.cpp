#include "quadmaps/polyring.hpp"
#include "quadmaps/quadric.hpp"

#include <doctest.h>

#include <random>

using namespace quadmaps;

namespace {

struct XY {
  std::shared_ptr<const Ring> ring;
  XY() {
    // y < x in significance; graded lex as in the worked Groebner example.
    ring = make_ring(VariableTable::generic({"x", "y"}), MonomialOrder({1, 0}, TieBreak::lex));
  }
  Polynomial operator()(const char* s) const { return Polynomial::parse(ring, s); }
};

Monomial random_monomial(std::mt19937& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Monomial m(n);
  for (VarId v = 0; v < n; ++v) m.set(v, static_cast<std::uint32_t>(e(rng)));
  return m;
}

Polynomial random_poly(std::mt19937& rng, const std::shared_ptr<const Ring>& ring, int terms, int max_exp) {
  std::uniform_int_distribution<int> c(-9, 9), den(1, 4);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({make_rational(c(rng), den(rng)), random_monomial(rng, ring->vars->size(), max_exp)});
  return Polynomial::from_terms(ring, std::move(ts));
}

void check_order_axioms(const MonomialOrder& ord, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  Monomial one(n);
  for (int k = 0; k < 300; ++k) {
    auto a = random_monomial(rng, n, 2), b = random_monomial(rng, n, 2), c = random_monomial(rng, n, 2);
    auto ab = ord.compare(a, b), ba = ord.compare(b, a);
    REQUIRE((ab < 0) == (ba > 0));
    REQUIRE((ab == 0) == (a == b));
    if (ab < 0 && ord.compare(b, c) < 0) REQUIRE(ord.compare(a, c) < 0);
    if (ab < 0) REQUIRE(ord.compare(a * c, b * c) < 0);
    REQUIRE(ord.compare(one, a) <= 0);
  }
}

}  // namespace

TEST_CASE("leading terms of the worked example") {
  XY p;
  auto f1 = p("x^3 - 2*x*y");
  auto f2 = p("x^2*y - 2*y^2 + x");
  CHECK(f1.leading_coefficient() == 1);
  CHECK(monomial_to_string(f1.leading_monomial(), *p.ring) == "x^3");
  CHECK(monomial_to_string(f2.leading_monomial(), *p.ring) == "x^2*y");
  auto seven = Polynomial::constant(p.ring, 7);
  CHECK(leading_term(seven).first == 7);
  CHECK(leading_term(seven).second.is_one());
  // x^3 > x^2 y with x more significant
  CHECK(p.ring->order.compare(p("x^3").leading_monomial(), p("x^2*y").leading_monomial()) > 0);
  CHECK(p.ring->order.compare(p("x^2").leading_monomial(), p("y^3").leading_monomial()) < 0);
}

TEST_CASE("monomial lcm and divisibility") {
  XY p;
  auto x3 = p("x^3").leading_monomial(), x2y = p("x^2*y").leading_monomial();
  CHECK(mono_lcm(x3, x2y) == p("x^3*y").leading_monomial());
  CHECK(mono_lcm(x3, x3) == x3);
  auto x2 = p("x^2").leading_monomial();
  CHECK(mono_divides(x2, x2y));
  CHECK(mono_quotient(x2y, x2) == p("y").leading_monomial());
  CHECK_FALSE(mono_divides(x2y, x3));
  CHECK_THROWS(mono_quotient(x3, x2y));
  CHECK(mono_coprime(x3, p("y^2").leading_monomial()));
}

TEST_CASE("arithmetic") {
  XY p;
  auto f1 = p("x^3 - 2*x*y");
  auto f2 = p("x^2*y - 2*y^2 + x");
  CHECK((f1 + f1.scale(-1)).is_zero());
  CHECK(p("x") * f2 - p("y") * f1 == p("x^2"));
  auto t = make_ring(VariableTable::generic({"t"}), MonomialOrder::natural(1, TieBreak::lex));
  CHECK(Polynomial::parse(t, "1 + t") * Polynomial::parse(t, "1 - t") == Polynomial::parse(t, "1 - t^2"));
}

TEST_CASE("revlex: the least significant differing variable decides") {
  auto ring = make_ring(VariableTable::generic({"a", "b", "c"}), MonomialOrder::natural(3, TieBreak::revlex));
  auto m = [&](const char* s) { return Polynomial::parse(ring, s).leading_monomial(); };
  // a is least significant; more a means smaller.
  CHECK(ring->order.compare(m("a*c"), m("b^2")) < 0);
  CHECK(ring->order.compare(m("b*c"), m("a*c")) > 0);
  auto lex = MonomialOrder::natural(3, TieBreak::lex);
  // lex looks at c first: a*c^1 vs b^2 (no c) -> a*c is larger
  CHECK(lex.compare(m("a*c"), m("b^2")) > 0);
  CHECK_THROWS(ring->order.compare(Monomial(2), Monomial(3)));
}

TEST_CASE("order axioms for every order in use") {
  check_order_axioms(MonomialOrder::natural(5, TieBreak::lex), 5, 1);
  check_order_axioms(MonomialOrder::natural(5, TieBreak::revlex), 5, 2);
  for (int n = 3; n <= 6; ++n) {
    QuasimapSpec s{n, 1, 1, Coords::hyperbolic};
    check_order_axioms(snake_order(s), quadric_family(s)->table()->size(), 10 + n);
    auto c = quadric_family(n, Coords::orthonormal, {-1, 1}, OrderKind::centered);
    check_order_axioms(c->ring()->order, c->table()->size(), 20 + n);
    auto pl = quadric_family(n, Coords::orthonormal, {-1, 1}, OrderKind::plain);
    check_order_axioms(pl->ring()->order, pl->table()->size(), 30 + n);
  }
}

TEST_CASE("ring axioms on random triples") {
  auto ring = make_ring(VariableTable::generic({"a", "b", "c"}), MonomialOrder::natural(3, TieBreak::revlex));
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, ring, 4, 2), g = random_poly(rng, ring, 3, 2), h = random_poly(rng, ring, 3, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
  }
  auto x = Polynomial::parse(ring, "a^2 + b*c"), y = Polynomial::parse(ring, "a - 3*c");
  CHECK(x.is_homogeneous());
  CHECK((x * y).degree() == 3);
  CHECK((x * y).is_homogeneous());
}

TEST_CASE("print then parse is the identity") {
  auto vars = VariableTable::generic({"f1[0]", "g1[0]", "h[-1]"});
  auto ring = make_ring(vars, MonomialOrder::natural(3, TieBreak::revlex));
  std::mt19937 rng(8);
  for (int k = 0; k < 200; ++k) {
    auto f = random_poly(rng, ring, 5, 3);
    CHECK(Polynomial::parse(ring, f.to_string()) == f);
  }
  CHECK(Polynomial::parse(ring, "0").is_zero());
  CHECK(Polynomial::parse(ring, "-1/2*f1[0]^2*h[-1] + 3").to_string() == "-1/2*h[-1]*f1[0]^2 + 3");
  CHECK_THROWS(Polynomial::parse(ring, "q^2"));
}

TEST_CASE("exponent overflow is an error") {
  auto ring = make_ring(VariableTable::generic({"x"}), MonomialOrder::natural(1, TieBreak::lex));
  auto big = Monomial::variable(1, 0, 0xFFFFFFF0u);
  CHECK_THROWS(big * big);
}
