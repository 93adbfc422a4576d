#pragma once
// Quasimap-to-quadric rings: variables, relations, the snake order, the
// Hasse-diagram poset and the loop-index involution.

#include "quadmaps/polyring.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadmaps {

enum class Coords { orthonormal, hyperbolic };

std::string to_string(Coords c);
Coords parse_coords(std::string_view s);

struct QuasimapSpec {
  int n = 3;
  int N1 = 0;
  int N2 = 0;
  Coords coords = Coords::orthonormal;

  void validate() const;  // throws std::invalid_argument
  int m() const { return n / 2; }
  bool odd() const { return n % 2 == 1; }
  QuasimapSpec flipped() const { return {n, N2, N1, coords}; }

  // "n=<int> N1=<int> N2=<int> coords=<orthonormal|hyperbolic>"
  std::string to_string() const;
  static QuasimapSpec parse(std::string_view text);
  bool operator==(const QuasimapSpec&) const = default;
};

// Loop indices carried by the degree-1 variables.
struct LoopWindow {
  int lo = 0;
  int hi = 0;
  bool operator==(const LoopWindow&) const = default;
};

enum class OrderKind {
  snake,     // hyperbolic: the linear extension of the diagram, revlex
  plain,     // by (loop, component), revlex
  centered,  // by (|2l-1|, component, loop), revlex; invariant under l -> 1-l
};

// One term c·x_a·y_b of the quadratic form, x and y named by (kind, component).
struct FormTerm {
  int coef;
  VarKind kind_a;
  int comp_a;
  VarKind kind_b;
  int comp_b;
};

class QuadricFamily {
 public:
  QuadricFamily(int n, Coords coords, LoopWindow window, OrderKind order);

  int n() const { return n_; }
  Coords coords() const { return coords_; }
  LoopWindow window() const { return window_; }
  OrderKind order_kind() const { return order_; }

  const std::shared_ptr<const VariableTable>& table() const { return table_; }
  const std::shared_ptr<const Ring>& ring() const { return ring_; }

  // Variable lookup; throws std::out_of_range when absent.
  VarId var(VarKind kind, int component, int loop) const;
  bool has(VarKind kind, int component, int loop) const;

  // Q(x) = Σ coef·x_a·x_b, ordered terms.
  const std::vector<FormTerm>& form() const { return form_; }

  // r[l], l = 2·lo .. 2·hi, in that order.
  const std::vector<Polynomial>& relations() const { return relations_; }
  int relation_loop(std::size_t k) const { return 2 * window_.lo + static_cast<int>(k); }

  // Quadratic monomials the straightening law forbids (hyperbolic only):
  // g1[t]f1[t] or h[t]^2 per period and g_m[t]f^m[t+1] across periods.
  std::vector<Monomial> expected_leading_monomials() const;

 private:
  int n_;
  Coords coords_;
  LoopWindow window_;
  OrderKind order_;
  std::shared_ptr<const VariableTable> table_;
  std::shared_ptr<const Ring> ring_;
  std::vector<FormTerm> form_;
  std::vector<Polynomial> relations_;
  std::vector<std::vector<long>> index_;  // [kind*(n+1)+component][loop-lo] -> VarId or -1
};

// Families are cached so that equal arguments share one ring object.
std::shared_ptr<const QuadricFamily> quadric_family(int n, Coords coords, LoopWindow window, OrderKind order);
// Default family of a spec: snake order for hyperbolic, plain for orthonormal.
std::shared_ptr<const QuadricFamily> quadric_family(const QuasimapSpec& spec);

std::vector<Polynomial> relations(const QuasimapSpec& spec);
MonomialOrder snake_order(const QuasimapSpec& spec);  // throws for orthonormal

// Weak partial order on the degree-1 variables of a hyperbolic family, built
// from covering arrows.  Non-reflexive elements (h) are not ≤ themselves.
class DiagramPoset {
 public:
  static DiagramPoset build(const QuadricFamily& fam);  // n >= 3, hyperbolic

  std::size_t size() const { return reach_.size(); }
  const std::vector<std::pair<VarId, VarId>>& arrows() const { return arrows_; }
  bool reflexive(VarId v) const { return reflexive_.at(v); }
  // a ≤ b: a path of arrows from a to b, or a == b for reflexive a.
  bool leq(VarId a, VarId b) const;
  bool comparable(VarId a, VarId b) const { return leq(a, b) || leq(b, a); }
  // Elements x with lo ≤ x ≤ hi (endpoints always included when lo ≤ hi).
  std::vector<VarId> interval(VarId lo, VarId hi) const;
  // Topological order of all elements (a < b implies a first).
  std::vector<VarId> linear_extension() const;

  bool is_antisymmetric() const;
  // Every pair has a unique minimal upper bound and unique maximal lower bound.
  bool is_lattice() const;
  std::vector<VarId> minimal_upper_bounds(VarId a, VarId b) const;

 private:
  std::vector<std::pair<VarId, VarId>> arrows_;
  std::vector<char> reflexive_;
  std::vector<std::vector<char>> reach_;  // strict path relation
};

bool is_chain_monomial(const Monomial& m, const DiagramPoset& poset);

// Variable substitution between two families over the same n and coords.
struct Substitution {
  std::shared_ptr<const Ring> source;
  std::shared_ptr<const Ring> target;
  std::vector<VarId> image;

  Polynomial apply(const Polynomial& p) const;
  Substitution then(const Substitution& next) const;  // next ∘ this
  bool is_identity() const;
};

// l -> -l, from the family of spec to the family of spec.flipped().
Substitution shift_involution(const QuasimapSpec& spec);
// l -> offset - l between explicit families (absent images throw).
Substitution loop_reflection(const QuadricFamily& source, const QuadricFamily& target, int offset);

}  // namespace quadmaps
