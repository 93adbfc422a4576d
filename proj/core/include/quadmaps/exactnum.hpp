#pragma once
// Exact scalars and matrices.  Rational and BigInt are GMP classes; mpq_class
// keeps values canonical (lowest terms, positive denominator) after every
// arithmetic operation, so we only canonicalize on raw construction.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadmaps {

using BigInt = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms.  Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

// "p" or "p/q" (q > 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

class SparseMatrix;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const ExactMatrix& other) const;

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;

  // Fraction-free (Bareiss) echelon elimination on an integer-scaled copy.
  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix transpose(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Triplet-built sparse matrix, stored column-major.  Duplicate entries are
// summed; explicit zeros are dropped.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  void add(std::size_t row, std::size_t col, const Rational& value);
  // Sorts columns, merges duplicates.  Called implicitly by readers.
  void finalize();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const std::vector<Entry>& column(std::size_t j) const;
  Rational at(std::size_t i, std::size_t j) const;

  ExactMatrix to_dense() const;
  SparseMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const SparseMatrix& other) const;

  // Exact product; used for d∘d checks on blocks too large to densify.
  SparseMatrix operator*(const SparseMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  mutable std::vector<std::vector<Entry>> cols_data_;
  mutable bool dirty_ = false;
};

// Rank over Z/p with p = 2^61 - 1.  Never exceeds the rational rank.
// Returns nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_p(const SparseMatrix& m);

// Rank over the rationals.  A modular rank equal to min(rows, cols) is
// already exact; otherwise falls back to dense Bareiss.
std::size_t exact_rank(const SparseMatrix& m);

}  // namespace quadmaps
