#pragma once
// Sparse polynomials over Q with graded monomial orders.

#include "quadmaps/exactnum.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadmaps {

using VarId = std::uint32_t;

enum class VarKind { generic, f, g, h, lambda, ghost };

// Bigrading data for one generator.  quadric fills in the kinds and loop
// indices; plain rings (tests, the worked examples) use kind = generic.
struct VariableInfo {
  std::string name;
  VarKind kind = VarKind::generic;
  int component = 0;  // i in f^i, g_i, λ^i; 0 for h and ghosts
  int loop = 0;       // Fourier index l
  int degree = 1;     // internal degree
  bool odd = false;   // exterior (ghost) variable
  int weight() const { return loop; }
};

class VariableTable {
 public:
  VarId add(VariableInfo info);
  std::size_t size() const { return vars_.size(); }
  const VariableInfo& operator[](VarId v) const { return vars_.at(v); }
  std::optional<VarId> find(std::string_view name) const;
  const std::vector<VariableInfo>& all() const { return vars_; }

  static std::shared_ptr<const VariableTable> generic(const std::vector<std::string>& names);

 private:
  std::vector<VariableInfo> vars_;
};

// Dense exponent vector; zero entries mean "absent".
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  static Monomial variable(std::size_t nvars, VarId v, std::uint32_t e = 1);

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t operator[](VarId v) const { return exp_[v]; }
  void set(VarId v, std::uint32_t e);
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  long weight(const VariableTable& t) const;
  std::vector<VarId> support() const;
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> exp_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_quotient(const Monomial& b, const Monomial& a);  // b / a, throws unless a | b
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class TieBreak { lex, revlex };

// Graded order.  ranking lists variables from least to most significant.
//   lex:    the most significant differing variable decides; more is bigger.
//   revlex: the least significant differing variable decides; more is smaller.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<VarId> ranking, TieBreak tie);
  static MonomialOrder natural(std::size_t nvars, TieBreak tie);  // ranking 0 < 1 < ...

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::size_t nvars() const { return ranking_.size(); }
  const std::vector<VarId>& ranking() const { return ranking_; }
  TieBreak tie_break() const { return tie_; }
  // Position of v in the ranking (0 = least significant).
  std::size_t rank_of(VarId v) const { return pos_.at(v); }
  bool operator==(const MonomialOrder& o) const { return tie_ == o.tie_ && ranking_ == o.ranking_; }

 private:
  std::vector<VarId> ranking_;
  std::vector<std::size_t> pos_;
  TieBreak tie_ = TieBreak::revlex;
};

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

struct Ring {
  std::shared_ptr<const VariableTable> vars;
  MonomialOrder order;
  std::size_t nvars() const { return vars->size(); }
};

std::shared_ptr<const Ring> make_ring(std::shared_ptr<const VariableTable> vars, MonomialOrder order);

struct Term {
  Rational coef;
  Monomial mono;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<const Ring> ring) : ring_(std::move(ring)) {}
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(std::shared_ptr<const Ring> ring, std::vector<Term> terms);
  static Polynomial constant(std::shared_ptr<const Ring> ring, const Rational& c);
  static Polynomial variable(std::shared_ptr<const Ring> ring, VarId v);
  static Polynomial monomial(std::shared_ptr<const Ring> ring, const Rational& c, Monomial m);

  const std::shared_ptr<const Ring>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }
  std::uint32_t degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial monic() const;
  // Removes and returns the leading term.
  Term pop_leading();
  // this - c*m*g without materializing c*m*g.
  Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const;

  // Same terms re-sorted under another order over the same variables.
  Polynomial with_ring(std::shared_ptr<const Ring> ring) const;

  bool operator==(const Polynomial& g) const;

  std::string to_string() const;
  static Polynomial parse(std::shared_ptr<const Ring> ring, std::string_view text);

 private:
  void check_same_ring(const Polynomial& g) const;
  std::shared_ptr<const Ring> ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Rational& c, const Polynomial& f);
std::pair<Rational, Monomial> leading_term(const Polynomial& f);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace quadmaps
