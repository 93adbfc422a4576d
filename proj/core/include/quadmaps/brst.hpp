#pragma once
// Koszul (mini-BRST) complex C = poly ⊗ Λ(c) with d = Σ r[k] ∂/∂c[k], and its
// bigraded cohomology by certified exact rank.

#include "quadmaps/exactnum.hpp"
#include "quadmaps/hilbert.hpp"
#include "quadmaps/polyring.hpp"
#include "quadmaps/quadric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace quadmaps {

// Even monomial times an increasing product of ghosts.  Ghosts are named by
// their position in the ghost list (increasing loop index).
struct SuperMonomial {
  Monomial even;
  std::uint32_t odd = 0;  // bit p set <=> ghost p present

  int ghost_number() const { return __builtin_popcount(odd); }
  bool operator==(const SuperMonomial&) const = default;
};

// (internal degree, ghost number, q-weight)
struct BrstCell {
  int degree;
  int ghost;
  long weight;
  auto operator<=>(const BrstCell&) const = default;
};

class BrstComplex {
 public:
  // Ghost c[k] has internal degree 2 and weight k.  D < 2 leaves every
  // positive-ghost cell empty.
  static BrstComplex build(const QuasimapSpec& spec, int D);

  const QuasimapSpec& spec() const { return spec_; }
  int cutoff() const { return D_; }
  const QuadricFamily& family() const { return *fam_; }
  std::size_t ghost_count() const { return ghost_loops_.size(); }
  int ghost_loop(std::size_t p) const { return ghost_loops_[p]; }

  std::vector<BrstCell> cells() const;  // nonempty cells, sorted
  const std::vector<SuperMonomial>& basis(const BrstCell& c) const;
  std::size_t dim(const BrstCell& c) const { return basis(c).size(); }
  // d: cell -> (degree, ghost − 1, weight).  Zero-row matrix at ghost 0.
  SparseMatrix differential(const BrstCell& c) const;

  // d of one basis element as (coefficient, element) pairs.
  std::vector<std::pair<Rational, SuperMonomial>> apply(const SuperMonomial& x) const;
  std::string to_string(const SuperMonomial& x) const;

 private:
  QuasimapSpec spec_;
  int D_ = 0;
  std::shared_ptr<const QuadricFamily> fam_;
  std::vector<int> ghost_loops_;
  std::map<BrstCell, std::vector<SuperMonomial>> bases_;
  mutable std::map<BrstCell, std::unordered_map<std::uint64_t, std::uint32_t>> index_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> mono_id_;
  std::size_t index_of(const BrstCell& c, const SuperMonomial& x) const;
};

enum class RankMethod { modular_certified, dense_exact, uncertified };

struct CohomologyTable {
  std::map<BrstCell, std::size_t> dims;    // cohomology dimensions
  std::map<BrstCell, std::size_t> ranks;   // rank of d leaving the cell
  std::map<BrstCell, RankMethod> method;   // how that rank was established
  int cutoff = 0;
  std::size_t uncertified() const;
};

// Dense exact rank is used for blocks with at most this many cells when the
// modular certificate does not close.
inline constexpr std::size_t kDenseRankLimit = 400000;

CohomologyTable cohomology(const BrstComplex& complex);

// d∘d = 0 on every cell; returns the first failing cell.
std::optional<BrstCell> check_d_squared(const BrstComplex& complex);

struct TheoremReport {
  QuasimapSpec spec;
  int cutoff = 0;
  bool pass = false;
  bool d_squared_zero = false;
  bool euler_matches = false;   // alternating dims vs the product formula (n >= 3)
  std::optional<BrstCell> first_offending;
  std::string reason;
  CohomologyTable table;
  BigradedSeries algebra;       // AQ from Gröbner basis + staircase
};

// Gröbner-basis series of AQ for any spec up to degree D (snake relations for
// hyperbolic n >= 3, Buchberger completion otherwise).
BigradedSeries algebra_series(const QuasimapSpec& spec, int D);

TheoremReport verify_main_theorem(const QuasimapSpec& spec, int D);

}  // namespace quadmaps
