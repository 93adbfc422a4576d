#pragma once
// Bigraded Poincaré series: exact windows, product expansions, staircase and
// chain enumeration, dual dimensions and numerator symmetry.

#include "quadmaps/exactnum.hpp"
#include "quadmaps/polyring.hpp"
#include "quadmaps/quadric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadmaps {

// Rectangle of (t-degree, q-weight) cells, bounds inclusive.
struct SeriesWindow {
  int t_lo = 0, t_hi = 0;
  long q_lo = 0, q_hi = 0;
  bool contains(int t, long q) const { return t >= t_lo && t <= t_hi && q >= q_lo && q <= q_hi; }
  SeriesWindow intersect(const SeriesWindow& o) const;
  bool operator==(const SeriesWindow&) const = default;
};

class BigradedSeries {
 public:
  BigradedSeries() = default;
  explicit BigradedSeries(SeriesWindow w) : window_(w) {}

  const SeriesWindow& window() const { return window_; }
  BigInt coefficient(int t, long q) const;
  // Adds to a cell; cells outside the window are silently dropped.
  void add(int t, long q, const BigInt& c);
  const std::map<std::pair<int, long>, BigInt>& cells() const { return cells_; }

  // Sum over q-weights, indexed t_lo .. t_hi.
  std::vector<BigInt> at_q1() const;
  BigradedSeries restricted(const SeriesWindow& w) const;
  bool all_nonnegative() const;

  // Equality on the intersection of the two windows.
  bool agrees_with(const BigradedSeries& o) const;
  // First cell (t, q) on the common window where the two differ.
  std::optional<std::pair<int, long>> first_difference(const BigradedSeries& o) const;
  bool operator==(const BigradedSeries& o) const { return window_ == o.window_ && cells_ == o.cells_; }

  // "1 + 3*t + 5*t^2" style, q set to 1.
  std::string q1_string() const;

 private:
  SeriesWindow window_;
  std::map<std::pair<int, long>, BigInt> cells_;  // (t, q) -> nonzero coefficient
};

// Product coef·q^q0·t^t0·∏(1 − q^a t^b)^e.
struct SeriesExpr {
  struct Factor {
    long a;  // q exponent
    int b;   // t exponent
    int e;   // multiplicity; negative means denominator
  };
  BigInt coef = 1;
  long q0 = 0;
  int t0 = 0;
  std::vector<Factor> factors;

  SeriesExpr& times(long a, int b, int e);

  // Expands every factor as a power series in its monomial; requires
  // u·a + v·b > 0 for every factor.  All cells of `w` are exact.
  BigradedSeries expand(const SeriesWindow& w, long u, long v) const;
};

// Standard monomials: divisible by none of `leading`.
BigradedSeries staircase_series(const std::vector<Monomial>& leading, const VariableTable& table, int D);
// Standard monomials of exact degree `degree`, grouped by q-weight, each list
// sorted decreasing in `order`.
std::map<long, std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading,
                                                         const VariableTable& table, const MonomialOrder& order,
                                                         int degree);

// Chains in the sub-poset lo ≤ x ≤ hi (whole poset when both are nullopt).
BigradedSeries chain_series(const DiagramPoset& poset, const VariableTable& table, std::optional<VarId> lo,
                            std::optional<VarId> hi, int D);

// ∏_{l=-2N1}^{2N2}(1 − q^l t²) / ∏_{l=-N1}^{N2}(1 − q^l t)^n, t ≤ D.  n >= 3.
SeriesExpr closed_form_expr(const QuasimapSpec& spec);
BigradedSeries closed_form(const QuasimapSpec& spec, int D);

struct PbwResult {
  std::vector<BigInt> dims;        // dims[k-1] = L_k, k = 1..D
  std::optional<int> first_negative;
  bool consistent() const { return !first_negative.has_value(); }
};
// q = 1 coefficients a[0..D] with a[0] = 1.
PbwResult pbw_dual_dims(const std::vector<BigInt>& series, int D);

// Multiplies a q=1 window by (1 − t)^k and strips the verified zero tail.
// Throws std::runtime_error("window too small ...") unless at least two
// trailing zeros confirm the numerator degree.
std::vector<BigInt> extract_numerator(const std::vector<BigInt>& series, int k);

struct PalindromeResult {
  bool palindromic = false;
  int sign = 0;  // +1 symmetric, −1 antisymmetric, 0 neither
};
PalindromeResult palindrome_check(const std::vector<BigInt>& numerator);

}  // namespace quadmaps
