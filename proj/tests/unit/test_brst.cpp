#include "quadmaps/brst.hpp"

#include <doctest.h>

using namespace quadmaps;

namespace {

// Recomputes H at c from dense exact ranks and checks the table against it.
std::size_t cohomology_at(const BrstComplex& cx, const CohomologyTable& t, const BrstCell& c) {
  std::size_t out = c.ghost > 0 ? exact_rank(cx.differential(c)) : 0;
  BrstCell up{c.degree, c.ghost + 1, c.weight};
  std::size_t in = cx.dim(up) ? exact_rank(cx.differential(up)) : 0;
  REQUIRE(out + in <= cx.dim(c));
  std::size_t h = cx.dim(c) - out - in;
  CHECK(t.dims.at(c) == h);
  CHECK(t.ranks.at(c) == out);
  return h;
}

}  // namespace

TEST_CASE("d of a ghost is its relation") {
  QuasimapSpec s{3, 0, 1, Coords::hyperbolic};
  auto cx = BrstComplex::build(s, 4);
  REQUIRE(cx.ghost_count() == 3);
  const auto& ring = cx.family().ring();
  for (std::size_t p = 0; p < cx.ghost_count(); ++p) {
    SuperMonomial c{Monomial(ring->nvars()), 1u << p};
    std::vector<Term> terms;
    for (const auto& [coef, x] : cx.apply(c)) {
      CHECK(x.odd == 0);
      terms.push_back({coef, x.even});
    }
    int l = cx.ghost_loop(p);
    CHECK(Polynomial::from_terms(ring, terms) == cx.family().relations().at(static_cast<std::size_t>(l)));
  }
  CHECK(cx.to_string(SuperMonomial{Monomial(ring->nvars()), 1u}) == "c[0]");
  CHECK(cx.apply(SuperMonomial{Monomial(ring->nvars()), 0}).empty());
}

TEST_CASE("d squares to zero") {
  for (auto coords : {Coords::orthonormal, Coords::hyperbolic}) {
    CHECK_FALSE(check_d_squared(BrstComplex::build({3, 1, 1, coords}, 6)).has_value());
    CHECK_FALSE(check_d_squared(BrstComplex::build({4, 0, 2, coords}, 6)).has_value());
  }
}

TEST_CASE("one loop: ghost-zero cohomology is the algebra, the rest vanishes") {
  auto cx = BrstComplex::build({3, 0, 0, Coords::hyperbolic}, 7);
  auto tab = cohomology(cx);
  CHECK(tab.uncertified() == 0);
  for (int k = 0; k <= 7; ++k) CHECK(cohomology_at(cx, tab, {k, 0, 0}) == static_cast<std::size_t>(2 * k + 1));
  std::size_t positive = 0;
  for (const auto& c : cx.cells())
    if (c.ghost > 0) {
      ++positive;
      CHECK(cohomology_at(cx, tab, c) == 0);
    }
  CHECK(positive > 0);
  // a cutoff below the ghost degree leaves only ghost number zero
  for (const auto& c : BrstComplex::build({3, 0, 0, Coords::hyperbolic}, 1).cells()) CHECK(c.ghost == 0);
}

TEST_CASE("theorem check") {
  auto r = verify_main_theorem({4, 1, 1, Coords::hyperbolic}, 5);
  CHECK(r.pass);
  CHECK(r.d_squared_zero);
  CHECK(r.euler_matches);
  CHECK_FALSE(r.first_offending.has_value());
  CHECK(r.algebra.agrees_with(closed_form({4, 1, 1, Coords::hyperbolic}, 5)));

  auto two = verify_main_theorem({2, 0, 2, Coords::hyperbolic}, 6);
  CHECK(two.d_squared_zero);
  if (!two.pass) CHECK_FALSE(two.reason.empty());
}
