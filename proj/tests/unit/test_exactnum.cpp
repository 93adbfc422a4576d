#include "quadmaps/exactnum.hpp"

#include <doctest.h>

#include <random>

using namespace quadmaps;

namespace {

// Plain Gaussian elimination over Q; independent of the Bareiss code.
std::size_t naive_rank(ExactMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

SparseMatrix to_sparse(const ExactMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.add(i, j, m(i, j));
  s.finalize();
  return s;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-12") == -12);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK_THROWS(parse_rational("1/x"));
}

TEST_CASE("rank of small fixed matrices") {
  CHECK(ExactMatrix::identity(2).rank() == 2);
  CHECK(ExactMatrix(3, 4).rank() == 0);
  ExactMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(m.rank() == 1);
  CHECK(m.nullity() == 2);
}

TEST_CASE("transpose") {
  ExactMatrix a(1, 1);
  a(0, 0) = 5;
  CHECK(transpose(a)(0, 0) == 5);
  ExactMatrix b(2, 3);
  b(0, 2) = make_rational(1, 3);
  b(1, 0) = -2;
  auto t = b.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t(2, 0) == make_rational(1, 3));
  CHECK(t(0, 1) == -2);
  std::mt19937 rng(7);
  auto r = random_matrix(rng, 4, 4, -9, 9);
  r(1, 2) = make_rational(5, 7);
  CHECK(r.transpose().transpose() == r);
}

TEST_CASE("Bareiss agrees with plain elimination on 1000 random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int k = 0; k < 1000; ++k) {
    auto m = random_matrix(rng, dim(rng), dim(rng), -3, 3);
    std::size_t r = naive_rank(m);
    REQUIRE(m.rank() == r);
    CHECK(m.transpose().rank() == r);
    CHECK(m.rank() + m.nullity() == m.cols());
  }
}

TEST_CASE("rank is invariant under permutation and scaling") {
  std::mt19937 rng(99);
  for (int k = 0; k < 100; ++k) {
    auto m = random_matrix(rng, 5, 4, -2, 2);
    auto p = m;
    for (std::size_t j = 0; j < p.cols(); ++j) std::swap(p(0, j), p(4, j));
    for (std::size_t i = 0; i < p.rows(); ++i) {
      std::swap(p(i, 1), p(i, 3));
      p(i, 2) *= make_rational(-7, 3);
    }
    CHECK(p.rank() == m.rank());
  }
}

TEST_CASE("products of thin factors have the expected rank") {
  // A (6×k) · B (k×6) with generic integer entries has rank k.
  std::mt19937 rng(4);
  for (std::size_t k = 0; k <= 6; ++k) {
    auto a = random_matrix(rng, 6, k, -50, 50);
    auto b = random_matrix(rng, k, 6, -50, 50);
    auto m = k == 0 ? ExactMatrix(6, 6) : a * b;
    CHECK(m.rank() == naive_rank(m));
    CHECK(m.rank() <= k);
  }
}

TEST_CASE("sparse matrices") {
  SparseMatrix s(3, 3);
  s.add(0, 1, 2);
  s.add(0, 1, -2);
  s.add(2, 0, make_rational(1, 2));
  s.add(2, 0, make_rational(1, 2));
  s.finalize();
  CHECK(s.nonzeros() == 1);
  CHECK(s.at(2, 0) == 1);
  CHECK(s.at(0, 1) == 0);
  CHECK_THROWS_AS(s.add(3, 0, 1), std::out_of_range);

  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    auto a = random_matrix(rng, 5, 4, -2, 2);
    auto b = random_matrix(rng, 4, 3, -2, 2);
    CHECK((to_sparse(a) * to_sparse(b)).to_dense() == a * b);
    CHECK(to_sparse(a).transpose().to_dense() == a.transpose());
  }
}

TEST_CASE("modular rank matches the exact rank") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int k = 0; k < 300; ++k) {
    auto m = random_matrix(rng, dim(rng), dim(rng), -1, 1);
    auto s = to_sparse(m);
    auto rp = rank_mod_p(s);
    REQUIRE(rp.has_value());
    CHECK(*rp == naive_rank(m));
    CHECK(exact_rank(s) == naive_rank(m));
  }
}
