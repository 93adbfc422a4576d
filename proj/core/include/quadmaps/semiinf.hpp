#pragma once
// Reduced two-term semi-infinite complex X = (AQ_{-N1}^0)^* ⊗ AQ_1^{N2} with
// d = Σ_s Σ x[s]^T ⊗ x[1-s], its Euler product, the l -> 1-l pairing, window
// stability, and the functional equations of the limiting product Z(q,t).

#include "quadmaps/exactnum.hpp"
#include "quadmaps/groebner.hpp"
#include "quadmaps/hilbert.hpp"
#include "quadmaps/quadric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quadmaps {

// Standard-monomial model of a quadric algebra over one loop window, with
// cached multiplication-by-variable maps.
class QuotientAlgebra {
 public:
  using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

  // A null family gives the ground field (only the constant 1).
  QuotientAlgebra(std::shared_ptr<const QuadricFamily> fam, int max_degree);

  const QuadricFamily& family() const { return *fam_; }
  int max_degree() const { return max_degree_; }
  // Standard monomials of (degree, weight), decreasing in the order.
  const std::vector<Monomial>& basis(int degree, long weight) const;
  // Normal form of x·basis(degree, weight)[i] in basis(degree+1, weight+loop(x)).
  const SparseVec& multiply(VarId x, int degree, long weight, std::uint32_t i) const;
  const GeneratorSet& groebner_basis() const { return gb_; }
  // Index of a standard monomial in its (degree, weight) basis.
  std::optional<std::uint32_t> index_of(const Monomial& m) const;
  std::size_t nvars() const { return fam_ ? fam_->table()->size() : 0; }

 private:
  std::shared_ptr<const QuadricFamily> fam_;
  int max_degree_;
  GeneratorSet gb_;
  std::vector<std::map<long, std::vector<Monomial>>> basis_;
  std::vector<std::map<long, std::unordered_map<Monomial, std::uint32_t, MonomialHash>>> index_;
  mutable std::map<std::tuple<VarId, int, long, std::uint32_t>, SparseVec> mult_;
};

// Cells (T, Q): T = deg(right) − deg(left), Q = w(right) − w(left).
struct SemiInfWindow {
  int t_lo = -3, t_hi = 3;
  long q_lo = 0, q_hi = 3;
  bool contains(int t, long q) const { return t >= t_lo && t <= t_hi && q >= q_lo && q <= q_hi; }
};

struct SemiInfCell {
  int t;
  long q;
  auto operator<=>(const SemiInfCell&) const = default;
};

class TwoTermComplex {
 public:
  struct Element {
    int left_degree;
    long left_weight;
    std::uint32_t left;  // index into left basis(left_degree, left_weight)
    int right_degree;
    long right_weight;
    std::uint32_t right;
    auto operator<=>(const Element&) const = default;
  };

  // Orthonormal coords use the centered order on both factors; hyperbolic
  // coords use the snake order.  Degree caps cover the cells of `w` and their
  // d-neighbours.
  static TwoTermComplex build(const QuasimapSpec& spec, const SemiInfWindow& w);
  // Explicit caps on the left and right algebra degrees.
  static TwoTermComplex build(const QuasimapSpec& spec, const SemiInfWindow& w, int left_cap, int right_cap);

  const QuasimapSpec& spec() const { return spec_; }
  const SemiInfWindow& window() const { return window_; }
  const QuotientAlgebra& left() const { return *left_; }
  const QuotientAlgebra& right() const { return *right_; }

  const std::vector<Element>& basis(SemiInfCell c) const;
  std::size_t dim(SemiInfCell c) const { return basis(c).size(); }
  // d: c -> (t+2, q+1).
  SparseMatrix differential(SemiInfCell c) const;
  // Number of images produced outside the (t+2, q+1) target; always 0.
  std::size_t bidegree_violations(SemiInfCell c) const;
  // s-range of the sum in d.
  std::pair<int, int> s_range() const { return {s_lo_, 0}; }
  std::optional<std::uint32_t> index_of(SemiInfCell c, const Element& e) const;
  std::string to_string(const Element& e) const;

 private:
  QuasimapSpec spec_;
  SemiInfWindow window_;
  std::shared_ptr<QuotientAlgebra> left_, right_;
  int s_lo_ = 0;
  std::vector<std::tuple<int, VarKind, int, VarKind, int>> terms_;  // (coef, left kind/comp, right kind/comp)
  mutable std::map<SemiInfCell, std::vector<Element>> bases_;
  mutable std::map<SemiInfCell, std::map<Element, std::uint32_t>> index_;
  // (x, k, w) -> for each L in left basis(k, w), the (L', coef) with L' in
  // basis(k-1, w-loop(x)) and coef = [L] x·L'.
  mutable std::map<std::tuple<VarId, int, long>, std::vector<QuotientAlgebra::SparseVec>> transposed_;
  const std::vector<QuotientAlgebra::SparseVec>& transposed(VarId x, int k, long w) const;
  std::vector<std::tuple<Rational, Element>> apply(const Element& e) const;
};

struct TwoTermCohomology {
  std::size_t kernel = 0;
  std::size_t cokernel = 0;
  bool operator==(const TwoTermCohomology&) const = default;
};

// ker of d leaving c, coker of d arriving at c.
TwoTermCohomology cell_cohomology(const TwoTermComplex& cx, SemiInfCell c);
// Same for every cell of the complex's window.
std::map<SemiInfCell, TwoTermCohomology> cohomology(const TwoTermComplex& cx);

enum class EulerNormalization {
  dual_vacuum,  // l = 0 factor on the dual side, expanded in 1/t (matches dims)
  literal,      // l = 0 factor kept with t, expanded in t
};

SeriesExpr euler_expr(const QuasimapSpec& spec, EulerNormalization norm);
BigradedSeries euler_series(const QuasimapSpec& spec, const SemiInfWindow& w,
                            EulerNormalization norm = EulerNormalization::dual_vacuum);

struct EulerCheck {
  bool dims_match = false;        // dim X_c − dim X_{c−(2,1)}
  bool cohomology_match = false;  // coker_c − ker_{c−(2,1)}
  std::optional<SemiInfCell> first_mismatch;
  std::size_t cells = 0;
};
EulerCheck check_euler(const TwoTermComplex& cx);

struct PairingReport {
  bool applicable = false;  // orthonormal coords, or N2 = 0 (trivially)
  bool symmetric = false;   // Mat(d') = Mat(d)^T on every paired block
  bool kernel_cokernel = false;
  std::size_t blocks_checked = 0;
  std::size_t entries_checked = 0;
  std::optional<SemiInfCell> first_mismatch;
  std::string note;
};
// Pairs X_{N1,N2} with X_{N2-1,N1+1} through l -> 1-l; cell (T,Q) pairs with
// (−T, Q−T).  For N2 = 0, d = 0 and the check is trivial.
PairingReport pairing_symmetry(const QuasimapSpec& spec, const SemiInfWindow& w);

struct StabilityReport {
  bool stable = false;  // all provably stable cells agree
  std::size_t provable_cells = 0;
  std::size_t agreeing_cells = 0;
  std::size_t total_cells = 0;
  std::vector<SemiInfCell> unstable;  // differing cells outside the provable range
  std::optional<SemiInfCell> first_failure;
};
// Recomputes at (N1+1, N2+1).  With m = min(N1, N2), cokernels are provably
// unaffected for Q ≤ m and kernels for Q + 1 ≤ m.
StabilityReport stability(const QuasimapSpec& spec, const SemiInfWindow& w);

// ---------------------------------------------------------------- Z(q, t)

// sign·q^qa·t^tb·∏(1 − q^a t^b)^e with every factor normalized to a > 0,
// or a = 0 and b > 0.
struct FactorProduct {
  int sign = 1;
  long qa = 0;
  int tb = 0;
  std::map<std::pair<long, int>, int> factors;
  bool operator==(const FactorProduct&) const = default;

  void multiply(long a, int b, int e);
  FactorProduct substitute_inverse_t() const;  // t -> 1/t
  FactorProduct substitute_qt() const;         // t -> q t
  FactorProduct substitute_q_over_t() const;   // t -> q/t
  FactorProduct times(int sign, long qa, int tb) const;
  // Series in q with Laurent-in-t coefficients, pure-t factors left out.
  BigradedSeries expand_q_part(int t_abs, long q_hi) const;
  std::map<int, int> pure_part() const;  // b -> e for a = 0
};

// Z truncated to factors with 1 ≤ l ≤ L.
FactorProduct z_product(int n, int L);

struct ZIdentityResult {
  std::string name;
  bool pure_match = false;
  bool window_match = false;
  bool stable = false;  // same verdict and expansions at L and L+1
  bool holds() const { return pure_match && window_match && stable; }
};

struct ZReport {
  int n = 0;
  int t_abs = 4;
  long q_hi = 4;
  int truncation = 0;
  std::vector<ZIdentityResult> identities;  // three identities
  bool composition_ok = false;  // identity 3 = identity 2 at 1/t, then identity 1
  bool constant_term_ok = false;
  bool all_hold() const;
};

ZReport z_functional_equations(int n, int t_abs = 4, long q_hi = 4);

}  // namespace quadmaps
