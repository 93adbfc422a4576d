#pragma once
// S-polynomials, normal forms, Buchberger completion and reduced bases.

#include "quadmaps/polyring.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quadmaps {

// Ordered, monic, nonzero generators over one ring.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  // Normalizes every element to leading coefficient 1 and drops zeros.
  GeneratorSet(std::shared_ptr<const Ring> ring, std::vector<Polynomial> polys);

  const std::shared_ptr<const Ring>& ring() const { return ring_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  std::vector<Monomial> leading_monomials() const;

  void push_back(Polynomial p);  // p must be nonzero; it is made monic

 private:
  std::shared_ptr<const Ring> ring_;
  std::vector<Polynomial> polys_;
};

struct GroebnerBasis {
  GeneratorSet polys;
  bool reduced = false;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full normal form.  Among basis elements whose leading monomial divides the
// current term, the one with the greatest list index is used.
Polynomial reduce(const Polynomial& f, const GeneratorSet& basis);

struct Reduction {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = Σ cofactors[i]·basis[i] + remainder
};
Reduction reduce_with_cofactors(const Polynomial& f, const GeneratorSet& basis);

struct BuchbergerOptions {
  std::size_t max_pairs = default_pair_limit();
  // Pairs whose lcm exceeds this degree are never formed; for homogeneous
  // input the output is then a Gröbner basis up to that degree.
  std::optional<std::uint32_t> max_degree;
  bool coprime_skip = true;

  // 200000 unless QUADMAPS_PAIR_LIMIT overrides it.
  static std::size_t default_pair_limit();
};

enum class BuchbergerStatus { complete, budget_exceeded };

// Thrown by callers that need a complete basis when the pair budget runs out.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("Buchberger pair budget exceeded (raise QUADMAPS_PAIR_LIMIT)") {}
};

struct BuchbergerResult {
  BuchbergerStatus status = BuchbergerStatus::complete;
  GroebnerBasis basis;             // reduced when complete
  std::size_t new_elements = 0;    // polynomials appended during completion
  std::size_t pairs_reduced = 0;   // S-polynomials actually computed
  std::size_t pairs_skipped = 0;   // coprime leading monomials
  bool degree_truncated = false;   // some pair was dropped by max_degree
};

BuchbergerResult buchberger(const GeneratorSet& seed, const BuchbergerOptions& opts = {});

// Replaces every element by its reduced form and sorts by leading monomial
// (ascending), giving the unique reduced basis of a Gröbner basis.
GeneratorSet interreduce(const GeneratorSet& g);

struct GroebnerCertificate {
  bool is_groebner = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  // First failing pair and its nonzero normal form.
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<Polynomial> witness;
};

GroebnerCertificate is_groebner(const GeneratorSet& basis, bool coprime_skip = true,
                                std::optional<std::uint32_t> max_degree = std::nullopt);

}  // namespace quadmaps
