#include "quadmaps/polyring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace quadmaps {

// ---------------------------------------------------------------- variables

VarId VariableTable::add(VariableInfo info) {
  if (find(info.name)) throw std::invalid_argument("duplicate variable name " + info.name);
  vars_.push_back(std::move(info));
  return static_cast<VarId>(vars_.size() - 1);
}

std::optional<VarId> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<VarId>(i);
  return std::nullopt;
}

std::shared_ptr<const VariableTable> VariableTable::generic(const std::vector<std::string>& names) {
  auto t = std::make_shared<VariableTable>();
  for (const auto& n : names) t->add({.name = n});
  return t;
}

// ---------------------------------------------------------------- monomials

namespace {

void check_size(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials over different variable tables");
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) throw std::overflow_error("exponent overflow");
  return a + b;
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, VarId v, std::uint32_t e) {
  Monomial m(nvars);
  m.set(v, e);
  return m;
}

void Monomial::set(VarId v, std::uint32_t e) {
  deg_ = deg_ - exp_.at(v) + e;
  exp_[v] = e;
}

long Monomial::weight(const VariableTable& t) const {
  long w = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i]) w += static_cast<long>(exp_[i]) * t[static_cast<VarId>(i)].weight();
  return w;
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> s;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i]) s.push_back(static_cast<VarId>(i));
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  check_size(*this, o);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = checked_add(exp_[i], o.exp_[i]);
  r.deg_ = checked_add(deg_, o.deg_);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_size(a, b);
  Monomial r(a.nvars());
  for (VarId i = 0; i < a.nvars(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  check_size(a, b);
  if (a.degree() > b.degree()) return false;
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw std::invalid_argument("monomial quotient: not divisible");
  Monomial r(b.nvars());
  for (VarId i = 0; i < b.nvars(); ++i) r.set(i, b[i] - a[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_size(a, b);
  for (VarId i = 0; i < a.nvars(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::vector<VarId> ranking, TieBreak tie)
    : ranking_(std::move(ranking)), pos_(ranking_.size()), tie_(tie) {
  std::vector<char> seen(ranking_.size(), 0);
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    VarId v = ranking_[k];
    if (v >= ranking_.size() || seen[v]) throw std::invalid_argument("ranking is not a permutation");
    seen[v] = 1;
    pos_[v] = k;
  }
}

MonomialOrder MonomialOrder::natural(std::size_t nvars, TieBreak tie) {
  std::vector<VarId> r(nvars);
  for (std::size_t i = 0; i < nvars; ++i) r[i] = static_cast<VarId>(i);
  return MonomialOrder(std::move(r), tie);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != ranking_.size() || b.nvars() != ranking_.size())
    throw std::invalid_argument("monomial order: mismatched variable tables");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (tie_ == TieBreak::revlex) {
    for (VarId v : ranking_)
      if (a[v] != b[v]) return b[v] <=> a[v];
  } else {
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] <=> b[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

std::shared_ptr<const Ring> make_ring(std::shared_ptr<const VariableTable> vars, MonomialOrder order) {
  if (order.nvars() != vars->size()) throw std::invalid_argument("order does not match variable table");
  return std::make_shared<const Ring>(Ring{std::move(vars), std::move(order)});
}

// ---------------------------------------------------------------- polynomials

Polynomial Polynomial::from_terms(std::shared_ptr<const Ring> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& ord = p.ring_->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ord.compare(x.mono, y.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
  return p;
}

Polynomial Polynomial::constant(std::shared_ptr<const Ring> ring, const Rational& c) {
  std::size_t n = ring->nvars();
  return monomial(std::move(ring), c, Monomial(n));
}

Polynomial Polynomial::variable(std::shared_ptr<const Ring> ring, VarId v) {
  std::size_t n = ring->nvars();
  return monomial(std::move(ring), 1, Monomial::variable(n, v));
}

Polynomial Polynomial::monomial(std::shared_ptr<const Ring> ring, const Rational& c, Monomial m) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({c, std::move(m)});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Term Polynomial::pop_leading() {
  if (terms_.empty()) throw std::domain_error("pop_leading on the zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

std::uint32_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_ || !g.ring_ || ring_->vars != g.ring_->vars || !(ring_->order == g.ring_->order))
    throw std::invalid_argument("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  return sub_mul(-1, Monomial(ring_ ? ring_->nvars() : 0), g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return sub_mul(1, Monomial(ring_ ? ring_->nvars() : 0), g);
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coef * c, t.mono});
  return p;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Orders are multiplicative, so sortedness survives.
  for (const auto& t : terms_) p.terms_.push_back({t.coef * c, t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return scale(inv);
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(g);
  Polynomial out(ring_);
  if (c == 0 || g.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  const auto& ord = ring_->order;
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have) {
      gm = g.terms_[j].mono * m;
      have = true;
    }
    std::strong_ordering cmp = std::strong_ordering::greater;
    if (i == terms_.size())
      cmp = std::strong_ordering::less;
    else if (j < g.terms_.size())
      cmp = ord.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({-c * g.terms_[j].coef, std::move(gm)});
      ++j;
      have = false;
    } else {
      Rational x = terms_[i].coef - c * g.terms_[j].coef;
      if (x != 0) out.terms_.push_back({std::move(x), terms_[i].mono});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  Polynomial acc(ring_);
  if (is_zero() || g.is_zero()) return acc;
  std::vector<Term> all;
  all.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) all.push_back({a.coef * b.coef, a.mono * b.mono});
  return from_terms(ring_, std::move(all));
}

Polynomial Polynomial::with_ring(std::shared_ptr<const Ring> ring) const {
  if (ring->vars != ring_->vars && ring->nvars() != ring_->nvars())
    throw std::invalid_argument("with_ring: variable count differs");
  return from_terms(std::move(ring), terms_);
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != g.terms_[i].coef || !(terms_[i].mono == g.terms_[i].mono)) return false;
  return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial scale(const Rational& c, const Polynomial& f) { return f.scale(c); }

std::pair<Rational, Monomial> leading_term(const Polynomial& f) {
  const Term& t = f.leading_term();
  return {t.coef, t.mono};
}

// ---------------------------------------------------------------- text format

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  const auto& rk = ring.order.ranking();
  for (auto it = rk.rbegin(); it != rk.rend(); ++it) {
    std::uint32_t e = m[*it];
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += (*ring.vars)[*it].name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Rational a = abs(t.coef);
    bool neg = t.coef < 0;
    if (k == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = monomial_to_string(t.mono, *ring_);
    if (mono.empty())
      s += quadmaps::to_string(a);
    else if (a == 1)
      s += mono;
    else
      s += quadmaps::to_string(a) + "*" + mono;
  }
  return s;
}

Polynomial Polynomial::parse(std::shared_ptr<const Ring> ring, std::string_view text) {
  std::vector<Term> terms;
  std::size_t n = ring->nvars();
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest == "0") return Polynomial(ring);
  bool neg = false;
  if (!rest.empty() && rest.front() == '-') {
    neg = true;
    rest.remove_prefix(1);
  }
  while (true) {
    std::size_t cut = std::string_view::npos;
    bool next_neg = false;
    std::size_t p = rest.find(" + ");
    std::size_t m = rest.find(" - ");
    if (p != std::string_view::npos || m != std::string_view::npos) {
      cut = std::min(p, m);
      next_neg = (cut == m);
    }
    std::string_view tok = rest.substr(0, cut);
    if (tok.empty()) throw std::invalid_argument("empty term in polynomial text");
    Rational coef = 1;
    Monomial mono(n);
    std::size_t start = 0;
    while (start <= tok.size()) {
      std::size_t star = tok.find('*', start);
      std::string_view f = tok.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
      if (f.empty()) throw std::invalid_argument("empty factor in polynomial text");
      if ((f[0] >= '0' && f[0] <= '9')) {
        coef *= parse_rational(f);
      } else {
        std::uint32_t e = 1;
        std::string_view name = f;
        auto caret = f.rfind('^');
        if (caret != std::string_view::npos) {
          name = f.substr(0, caret);
          e = static_cast<std::uint32_t>(std::stoul(std::string(f.substr(caret + 1))));
        }
        auto v = ring->vars->find(name);
        if (!v) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        mono.set(*v, mono[*v] + e);
      }
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    terms.push_back({neg ? Rational(-coef) : coef, std::move(mono)});
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + 3);
    neg = next_neg;
  }
  return from_terms(std::move(ring), std::move(terms));
}

}  // namespace quadmaps
