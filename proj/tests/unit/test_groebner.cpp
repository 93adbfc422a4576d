#include "quadmaps/groebner.hpp"
#include "quadmaps/quadric.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace quadmaps;

namespace {

std::shared_ptr<const Ring> xy_ring() {
  return make_ring(VariableTable::generic({"x", "y"}), MonomialOrder({1, 0}, TieBreak::lex));
}

Polynomial P(const std::shared_ptr<const Ring>& r, const char* s) { return Polynomial::parse(r, s); }

// f = Σ q_i g_i + r, and no term of r is divisible by a leading monomial.
void check_division(const Polynomial& f, const GeneratorSet& g) {
  auto red = reduce_with_cofactors(f, g);
  REQUIRE(red.cofactors.size() == g.size());
  auto sum = red.remainder;
  for (std::size_t i = 0; i < g.size(); ++i) sum = sum + red.cofactors[i] * g[i];
  CHECK(sum == f);
  for (const auto& t : red.remainder.terms())
    for (const auto& lm : g.leading_monomials()) CHECK_FALSE(mono_divides(lm, t.mono));
  CHECK(red.remainder == reduce(f, g));
}

}  // namespace

TEST_CASE("S-polynomials") {
  auto r = xy_ring();
  auto f1 = P(r, "x^3 - 2*x*y"), f2 = P(r, "x^2*y - 2*y^2 + x");
  CHECK(s_polynomial(f1, f2) == P(r, "x^2"));
  CHECK(s_polynomial(f2, f1) == P(r, "-x^2"));
  CHECK(s_polynomial(f1, f1).is_zero());
  CHECK(s_polynomial(P(r, "x^2"), P(r, "y^2")).is_zero());
  // lcm(x^2, xy) = x^2 y: x(xy + 1) - y(x^2 + y) = x - y^2
  CHECK(s_polynomial(P(r, "x^2 + y"), P(r, "x*y + 1")) == P(r, "x - y^2"));
}

TEST_CASE("reduction") {
  auto r = xy_ring();
  GeneratorSet g(r, {P(r, "x*y - 1"), P(r, "y^2 - 1")});
  CHECK(reduce(P(r, "x^2*y + x*y^2 + y^2"), g) == P(r, "2*x + 1"));  // y^2 - 1 is preferred for x*y^2
  CHECK(reduce(P(r, "0"), g).is_zero());
  CHECK(reduce(P(r, "x*y - 1"), g).is_zero());
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5), e(0, 3);
  for (int k = 0; k < 50; ++k) {
    std::vector<Term> ts;
    for (int i = 0; i < 4; ++i) {
      Monomial m(2);
      m.set(0, e(rng));
      m.set(1, e(rng));
      ts.push_back({Rational(c(rng)), m});
    }
    check_division(Polynomial::from_terms(r, ts), g);
  }
}

TEST_CASE("a single polynomial is a Groebner basis") {
  auto r = xy_ring();
  GeneratorSet g(r, {P(r, "x^2 - 3*x*y + y")});
  CHECK(is_groebner(g).is_groebner);
  auto res = buchberger(g);
  CHECK(res.status == BuchbergerStatus::complete);
  CHECK(res.new_elements == 0);
}

TEST_CASE("the worked example is not a basis; completion gives the textbook answer") {
  auto r = xy_ring();
  GeneratorSet g(r, {P(r, "x^3 - 2*x*y"), P(r, "x^2*y - 2*y^2 + x")});
  auto cert = is_groebner(g);
  CHECK_FALSE(cert.is_groebner);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->monic() == P(r, "x^2"));

  auto res = buchberger(g);
  REQUIRE(res.status == BuchbergerStatus::complete);
  const auto& b = res.basis.polys;
  CHECK(is_groebner(b).is_groebner);
  std::vector<Polynomial> expect{P(r, "y^2 - 1/2*x"), P(r, "x*y"), P(r, "x^2")};
  REQUIRE(b.size() == expect.size());
  for (const auto& p : expect) CHECK(std::find(b.polys().begin(), b.polys().end(), p) != b.polys().end());
  // every input lies in the ideal
  for (const auto& f : g.polys()) CHECK(reduce(f, b).is_zero());
  // and so does every product with an input
  CHECK(reduce(P(r, "x*y + 7") * g[0], b).is_zero());
}

TEST_CASE("completion is idempotent and independent of input order") {
  QuasimapSpec s{2, 0, 1, Coords::hyperbolic};
  auto rel = relations(s);
  auto ring = rel.front().ring();
  auto first = buchberger(GeneratorSet(ring, rel));
  REQUIRE(first.status == BuchbergerStatus::complete);
  CHECK(first.new_elements > 0);
  CHECK(first.basis.polys.size() > rel.size());
  auto again = buchberger(first.basis.polys);
  CHECK(again.new_elements == 0);
  CHECK(again.basis.polys.polys() == first.basis.polys.polys());

  std::mt19937 rng(11);
  for (int k = 0; k < 5; ++k) {
    auto shuffled = rel;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& p : shuffled) p = p.scale(Rational(k + 2));
    auto other = buchberger(GeneratorSet(ring, shuffled));
    CHECK(other.basis.polys.polys() == first.basis.polys.polys());
  }
}

TEST_CASE("snake relations are already a basis for n = 6") {
  QuasimapSpec s{6, 1, 1, Coords::hyperbolic};
  auto rel = relations(s);
  GeneratorSet g(rel.front().ring(), rel);
  CHECK(is_groebner(g).is_groebner);
  CHECK(buchberger(g).new_elements == 0);
}

TEST_CASE("pair budget") {
  QuasimapSpec s{2, 0, 2, Coords::hyperbolic};
  auto rel = relations(s);
  BuchbergerOptions opts;
  opts.max_pairs = 1;
  auto res = buchberger(GeneratorSet(rel.front().ring(), rel), opts);
  CHECK(res.status == BuchbergerStatus::budget_exceeded);
}
