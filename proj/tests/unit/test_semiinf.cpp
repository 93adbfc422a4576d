#include "quadmaps/semiinf.hpp"

#include <doctest.h>

using namespace quadmaps;

TEST_CASE("quotient algebra model") {
  auto fam = quadric_family(3, Coords::orthonormal, {1, 1}, OrderKind::centered);
  QuotientAlgebra a(fam, 3);
  // one loop: dims 1, 3, 5, 7 in weights 0, 1, 2, 3
  for (int k = 0; k <= 3; ++k) CHECK(a.basis(k, k).size() == static_cast<std::size_t>(2 * k + 1));
  CHECK(a.basis(2, 0).empty());
  QuotientAlgebra field(nullptr, 2);
  CHECK(field.nvars() == 0);
  CHECK(field.basis(0, 0).size() == 1);
  CHECK(field.basis(1, 0).empty());
}

TEST_CASE("no positive loops means d = 0") {
  QuasimapSpec s{3, 1, 0, Coords::orthonormal};
  SemiInfWindow w{-2, 2, 0, 2};
  auto cx = TwoTermComplex::build(s, w);
  for (int t = w.t_lo; t <= w.t_hi; ++t)
    for (long q = w.q_lo; q <= w.q_hi; ++q) CHECK(cx.differential({t, q}).is_zero());
}

TEST_CASE("d has bidegree (2, 1)") {
  for (auto coords : {Coords::orthonormal, Coords::hyperbolic}) {
    QuasimapSpec s{3, 1, 1, coords};
    SemiInfWindow w{-2, 2, 0, 2};
    auto cx = TwoTermComplex::build(s, w);
    for (int t = w.t_lo; t <= w.t_hi; ++t)
      for (long q = w.q_lo; q <= w.q_hi; ++q) {
        CHECK(cx.bidegree_violations({t, q}) == 0);
        auto m = cx.differential({t, q});
        CHECK(m.cols() == cx.dim({t, q}));
        CHECK(m.rows() == cx.dim({t + 2, q + 1}));
      }
  }
}

TEST_CASE("the lowest block") {
  QuasimapSpec s{3, 0, 1, Coords::orthonormal};
  auto cx = TwoTermComplex::build(s, SemiInfWindow{-1, 1, 0, 1});
  // dual vacuum is closed
  CHECK(cx.dim({0, 0}) == 1);
  CHECK(cx.differential({0, 0}).is_zero());
  // λ_i[0]^* ⊗ 1  ->  1^* ⊗ λ_i[1]
  CHECK(cx.dim({-1, 0}) == 3);
  CHECK(cx.dim({1, 1}) == 3);
  CHECK(exact_rank(cx.differential({-1, 0})) == 3);
  auto h = cell_cohomology(cx, {-1, 0});
  CHECK(h.kernel == 0);
}

TEST_CASE("Euler characteristic") {
  for (auto s : {QuasimapSpec{3, 0, 1, Coords::orthonormal}, QuasimapSpec{3, 1, 1, Coords::hyperbolic},
                 QuasimapSpec{4, 1, 0, Coords::orthonormal}}) {
    auto cx = TwoTermComplex::build(s, SemiInfWindow{-2, 2, 0, 2});
    auto e = check_euler(cx);
    CHECK(e.dims_match);
    CHECK(e.cohomology_match);
    CHECK_FALSE(e.first_mismatch.has_value());
    CHECK(e.cells > 0);
  }
}

TEST_CASE("l -> 1 - l pairing") {
  auto r = pairing_symmetry({3, 0, 1, Coords::orthonormal}, SemiInfWindow{-2, 2, 0, 2});
  CHECK(r.applicable);
  CHECK(r.symmetric);
  CHECK(r.kernel_cokernel);
  CHECK(r.blocks_checked > 0);
  auto trivial = pairing_symmetry({3, 1, 0, Coords::orthonormal}, SemiInfWindow{-1, 1, 0, 1});
  CHECK(trivial.symmetric);
  CHECK(trivial.blocks_checked == 0);
  CHECK_FALSE(pairing_symmetry({3, 0, 1, Coords::hyperbolic}, SemiInfWindow{-1, 1, 0, 1}).applicable);
}

TEST_CASE("factor products normalize") {
  FactorProduct p;
  p.multiply(-2, 1, 1);  // 1 - q^-2 t = -q^-2 t (1 - q^2 t^-1)
  CHECK(p.sign == -1);
  CHECK(p.qa == -2);
  CHECK(p.tb == 1);
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors.begin()->first == std::pair<long, int>{2, -1});
  CHECK(p.factors.begin()->second == 1);
  p.multiply(2, -1, -1);
  CHECK(p.factors.empty());

  auto z = z_product(3, 5);
  CHECK(z.substitute_inverse_t().substitute_inverse_t() == z);
  CHECK(z.substitute_qt().substitute_inverse_t() == z.substitute_q_over_t());
  CHECK(z_product(3, 5) == z_product(3, 5));
}

TEST_CASE("functional equations of Z") {
  for (int n = 3; n <= 5; ++n) {
    auto r = z_functional_equations(n);
    CHECK(r.identities.size() == 3);
    for (const auto& id : r.identities) CHECK_MESSAGE(id.holds(), id.name);
    CHECK(r.composition_ok);
    CHECK(r.constant_term_ok);
    CHECK(r.all_hold());
  }
}
