#include "quadmaps/quadric.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quadmaps {

std::string to_string(Coords c) { return c == Coords::orthonormal ? "orthonormal" : "hyperbolic"; }

Coords parse_coords(std::string_view s) {
  if (s == "orthonormal") return Coords::orthonormal;
  if (s == "hyperbolic") return Coords::hyperbolic;
  throw std::invalid_argument("unknown coordinate style '" + std::string(s) + "'");
}

void QuasimapSpec::validate() const {
  if (n < 2) throw std::invalid_argument("ambient dimension n must be at least 2");
  if (N1 < 0 || N2 < 0) throw std::invalid_argument("N1 and N2 must be nonnegative");
}

std::string QuasimapSpec::to_string() const {
  return "n=" + std::to_string(n) + " N1=" + std::to_string(N1) + " N2=" + std::to_string(N2) +
         " coords=" + quadmaps::to_string(coords);
}

QuasimapSpec QuasimapSpec::parse(std::string_view text) {
  QuasimapSpec s;
  bool seen[4] = {false, false, false, false};
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad spec token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    auto as_int = [&](int& out) {
      auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), out);
      if (ec != std::errc() || p != val.data() + val.size()) throw std::invalid_argument("bad integer in spec: " + val);
    };
    if (key == "n") as_int(s.n), seen[0] = true;
    else if (key == "N1") as_int(s.N1), seen[1] = true;
    else if (key == "N2") as_int(s.N2), seen[2] = true;
    else if (key == "coords") s.coords = parse_coords(val), seen[3] = true;
    else throw std::invalid_argument("unknown spec key '" + key + "'");
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) throw std::invalid_argument("incomplete spec");
  s.validate();
  return s;
}

// ---------------------------------------------------------------- family

namespace {

constexpr int kKinds = 6;

std::string var_name(VarKind k, int i, int l) {
  std::string base;
  switch (k) {
    case VarKind::f: base = "f" + std::to_string(i); break;
    case VarKind::g: base = "g" + std::to_string(i); break;
    case VarKind::h: base = "h"; break;
    case VarKind::lambda: base = "l" + std::to_string(i); break;
    default: base = "x" + std::to_string(i); break;
  }
  return base + "[" + std::to_string(l) + "]";
}

// Ascending significance within one period.
std::vector<std::pair<VarKind, int>> snake_period(int n) {
  int m = n / 2;
  std::vector<std::pair<VarKind, int>> p;
  if (n == 2) return {{VarKind::f, 1}, {VarKind::g, 1}};
  if (n % 2 == 0) {
    for (int i = m; i >= 2; --i) p.emplace_back(VarKind::f, i);
    p.emplace_back(VarKind::g, 1);
    p.emplace_back(VarKind::f, 1);
    for (int i = 2; i <= m; ++i) p.emplace_back(VarKind::g, i);
  } else {
    for (int i = m; i >= 1; --i) p.emplace_back(VarKind::f, i);
    p.emplace_back(VarKind::h, 0);
    for (int i = 1; i <= m; ++i) p.emplace_back(VarKind::g, i);
  }
  return p;
}

}  // namespace

QuadricFamily::QuadricFamily(int n, Coords coords, LoopWindow window, OrderKind order)
    : n_(n), coords_(coords), window_(window), order_(order) {
  if (n < 2) throw std::invalid_argument("ambient dimension n must be at least 2");
  if (window.hi < window.lo) throw std::invalid_argument("empty loop window");
  if (order == OrderKind::snake && coords != Coords::hyperbolic)
    throw std::invalid_argument("snake order needs hyperbolic coordinates");
  int span = window.hi - window.lo + 1;
  index_.assign(static_cast<std::size_t>(kKinds * (n + 1)), std::vector<long>(span, -1));

  auto table = std::make_shared<VariableTable>();
  auto add = [&](VarKind k, int i, int l) {
    VarId id = table->add({.name = var_name(k, i, l), .kind = k, .component = i, .loop = l, .degree = 1});
    index_[static_cast<int>(k) * (n + 1) + i][l - window.lo] = id;
  };
  if (coords == Coords::hyperbolic) {
    for (int l = window.lo; l <= window.hi; ++l)
      for (auto [k, i] : snake_period(n)) add(k, i, l);
    for (int i = 1; i <= n / 2; ++i) form_.push_back({1, VarKind::f, i, VarKind::g, i});
    if (n % 2) form_.push_back({1, VarKind::h, 0, VarKind::h, 0});
  } else {
    for (int l = window.lo; l <= window.hi; ++l)
      for (int i = 1; i <= n; ++i) add(VarKind::lambda, i, l);
    for (int i = 1; i <= n; ++i) form_.push_back({1, VarKind::lambda, i, VarKind::lambda, i});
  }
  table_ = table;

  std::vector<VarId> ranking(table_->size());
  for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i] = static_cast<VarId>(i);
  if (order == OrderKind::centered) {
    auto key = [&](VarId v) {
      const auto& x = (*table_)[v];
      return std::make_tuple(std::abs(2 * x.loop - 1), x.component, x.loop, static_cast<int>(x.kind));
    };
    std::stable_sort(ranking.begin(), ranking.end(), [&](VarId a, VarId b) { return key(a) < key(b); });
  }
  ring_ = make_ring(table_, MonomialOrder(std::move(ranking), TieBreak::revlex));

  std::size_t nv = table_->size();
  for (int l = 2 * window.lo; l <= 2 * window.hi; ++l) {
    std::vector<Term> terms;
    for (int s = window.lo; s <= window.hi; ++s) {
      int t = l - s;
      if (t < window.lo || t > window.hi) continue;
      for (const auto& ft : form_) {
        Monomial m(nv);
        VarId a = var(ft.kind_a, ft.comp_a, s), b = var(ft.kind_b, ft.comp_b, t);
        m.set(a, m[a] + 1);
        m.set(b, m[b] + 1);
        terms.push_back({ft.coef, std::move(m)});
      }
    }
    relations_.push_back(Polynomial::from_terms(ring_, std::move(terms)));
  }
}

bool QuadricFamily::has(VarKind kind, int component, int loop) const {
  if (loop < window_.lo || loop > window_.hi || component < 0 || component > n_) return false;
  return index_[static_cast<int>(kind) * (n_ + 1) + component][loop - window_.lo] >= 0;
}

VarId QuadricFamily::var(VarKind kind, int component, int loop) const {
  if (!has(kind, component, loop))
    throw std::out_of_range("no variable " + var_name(kind, component, loop) + " in this family");
  return static_cast<VarId>(index_[static_cast<int>(kind) * (n_ + 1) + component][loop - window_.lo]);
}

std::vector<Monomial> QuadricFamily::expected_leading_monomials() const {
  if (coords_ != Coords::hyperbolic) throw std::invalid_argument("expected leading monomials: hyperbolic only");
  std::vector<Monomial> out;
  std::size_t nv = table_->size();
  int m = n_ / 2;
  auto mono = [&](VarId a, VarId b) {
    Monomial x(nv);
    x.set(a, x[a] + 1);
    x.set(b, x[b] + 1);
    return x;
  };
  for (int t = window_.lo; t <= window_.hi; ++t) {
    if (n_ % 2)
      out.push_back(mono(var(VarKind::h, 0, t), var(VarKind::h, 0, t)));
    else
      out.push_back(mono(var(VarKind::g, 1, t), var(VarKind::f, 1, t)));
    if (t < window_.hi) out.push_back(mono(var(VarKind::g, m, t), var(VarKind::f, m, t + 1)));
  }
  return out;
}

std::shared_ptr<const QuadricFamily> quadric_family(int n, Coords coords, LoopWindow window, OrderKind order) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int, int>, std::shared_ptr<const QuadricFamily>> cache;
  auto key = std::make_tuple(n, static_cast<int>(coords), window.lo, window.hi, static_cast<int>(order));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto fam = std::make_shared<const QuadricFamily>(n, coords, window, order);
  cache.emplace(key, fam);
  return fam;
}

std::shared_ptr<const QuadricFamily> quadric_family(const QuasimapSpec& spec) {
  spec.validate();
  return quadric_family(spec.n, spec.coords, {-spec.N1, spec.N2},
                        spec.coords == Coords::hyperbolic ? OrderKind::snake : OrderKind::plain);
}

std::vector<Polynomial> relations(const QuasimapSpec& spec) { return quadric_family(spec)->relations(); }

MonomialOrder snake_order(const QuasimapSpec& spec) {
  if (spec.coords != Coords::hyperbolic) throw std::invalid_argument("snake order is defined for hyperbolic coordinates");
  return quadric_family(spec)->ring()->order;
}

// ---------------------------------------------------------------- poset

DiagramPoset DiagramPoset::build(const QuadricFamily& fam) {
  if (fam.coords() != Coords::hyperbolic || fam.n() < 3)
    throw std::invalid_argument("diagram poset needs hyperbolic coordinates and n >= 3");
  DiagramPoset p;
  std::size_t nv = fam.table()->size();
  p.reflexive_.assign(nv, 1);
  p.reach_.assign(nv, std::vector<char>(nv, 0));
  const int n = fam.n(), m = n / 2;
  using K = VarKind;
  auto arrow = [&](K ka, int ia, int la, K kb, int ib, int lb) {
    if (!fam.has(ka, ia, la) || !fam.has(kb, ib, lb)) return;
    p.arrows_.emplace_back(fam.var(ka, ia, la), fam.var(kb, ib, lb));
  };
  for (int t = fam.window().lo; t <= fam.window().hi; ++t) {
    if (n == 3) {
      arrow(K::f, 1, t, K::h, 0, t);
      arrow(K::h, 0, t, K::g, 1, t);
      arrow(K::h, 0, t, K::f, 1, t + 1);
      arrow(K::g, 1, t, K::h, 0, t + 1);
    } else if (n == 4) {
      arrow(K::f, 2, t, K::f, 1, t);
      arrow(K::f, 1, t, K::f, 2, t + 1);
      arrow(K::g, 1, t, K::g, 2, t);
      arrow(K::g, 2, t, K::g, 1, t + 1);
      arrow(K::f, 2, t, K::g, 1, t);
      arrow(K::f, 1, t, K::g, 2, t);
      arrow(K::g, 2, t, K::f, 1, t + 1);
      arrow(K::g, 1, t, K::f, 2, t + 1);
    } else if (n % 2 == 0) {
      for (int i = 2; i <= m - 1; ++i) arrow(K::f, i + 1, t, K::f, i, t);
      arrow(K::f, 2, t, K::f, 1, t);
      arrow(K::f, 2, t, K::g, 1, t);
      arrow(K::f, 1, t, K::g, 2, t);
      arrow(K::g, 1, t, K::g, 2, t);
      for (int i = 2; i <= m - 2; ++i) arrow(K::g, i, t, K::g, i + 1, t);
      arrow(K::g, m - 1, t, K::g, m, t);
      arrow(K::g, m - 1, t, K::f, m, t + 1);
      arrow(K::g, m, t, K::f, m - 1, t + 1);
    } else {
      for (int i = 1; i <= m - 1; ++i) arrow(K::f, i + 1, t, K::f, i, t);
      arrow(K::f, 1, t, K::h, 0, t);
      arrow(K::h, 0, t, K::g, 1, t);
      for (int i = 1; i <= m - 2; ++i) arrow(K::g, i, t, K::g, i + 1, t);
      arrow(K::g, m - 1, t, K::g, m, t);
      arrow(K::g, m - 1, t, K::f, m, t + 1);
      arrow(K::g, m, t, K::f, m - 1, t + 1);
    }
    if (n % 2) p.reflexive_[fam.var(K::h, 0, t)] = 0;
  }
  std::sort(p.arrows_.begin(), p.arrows_.end());
  p.arrows_.erase(std::unique(p.arrows_.begin(), p.arrows_.end()), p.arrows_.end());
  for (auto [a, b] : p.arrows_) p.reach_[a][b] = 1;
  for (std::size_t k = 0; k < nv; ++k)
    for (std::size_t i = 0; i < nv; ++i)
      if (p.reach_[i][k])
        for (std::size_t j = 0; j < nv; ++j)
          if (p.reach_[k][j]) p.reach_[i][j] = 1;
  return p;
}

bool DiagramPoset::leq(VarId a, VarId b) const {
  if (a == b) return reflexive_.at(a);
  return reach_.at(a).at(b);
}

std::vector<VarId> DiagramPoset::interval(VarId lo, VarId hi) const {
  std::vector<VarId> out;
  if (lo != hi && !reach_[lo][hi]) return out;
  for (VarId x = 0; x < size(); ++x) {
    bool above = x == lo || reach_[lo][x];
    bool below = x == hi || reach_[x][hi];
    if (above && below) out.push_back(x);
  }
  return out;
}

std::vector<VarId> DiagramPoset::linear_extension() const {
  std::vector<VarId> order(size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VarId>(i);
  // Number of strict predecessors is a valid topological key.
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (reach_[j][i]) ++below[i];
  std::stable_sort(order.begin(), order.end(), [&](VarId a, VarId b) { return below[a] < below[b]; });
  return order;
}

bool DiagramPoset::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && reach_[i][j] && reach_[j][i]) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (reach_[i][i]) return false;  // a cycle through i
  return true;
}

std::vector<VarId> DiagramPoset::minimal_upper_bounds(VarId a, VarId b) const {
  auto ge = [&](VarId x, VarId y) { return x == y || reach_[y][x]; };
  std::vector<VarId> ub;
  for (VarId x = 0; x < size(); ++x)
    if (ge(x, a) && ge(x, b)) ub.push_back(x);
  std::vector<VarId> out;
  for (VarId x : ub) {
    bool minimal = true;
    for (VarId y : ub)
      if (y != x && reach_[y][x]) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

bool DiagramPoset::is_lattice() const {
  auto le = [&](VarId x, VarId y) { return x == y || reach_[x][y]; };
  for (VarId a = 0; a < size(); ++a)
    for (VarId b = a + 1; b < size(); ++b) {
      if (le(a, b) || le(b, a)) continue;
      auto up = minimal_upper_bounds(a, b);
      if (up.size() > 1) return false;
      std::vector<VarId> lb;
      for (VarId x = 0; x < size(); ++x)
        if (le(x, a) && le(x, b)) lb.push_back(x);
      std::size_t maximal = 0;
      for (VarId x : lb) {
        bool mx = true;
        for (VarId y : lb)
          if (y != x && reach_[x][y]) mx = false;
        if (mx) ++maximal;
      }
      if (maximal > 1) return false;
    }
  return true;
}

bool is_chain_monomial(const Monomial& m, const DiagramPoset& poset) {
  auto s = m.support();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (m[s[i]] >= 2 && !poset.reflexive(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!poset.comparable(s[i], s[j])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- substitutions

Polynomial Substitution::apply(const Polynomial& p) const {
  std::vector<Term> terms;
  terms.reserve(p.size());
  std::size_t nv = target->nvars();
  for (const auto& t : p.terms()) {
    Monomial m(nv);
    for (VarId v : t.mono.support()) m.set(image.at(v), m[image[v]] + t.mono[v]);
    terms.push_back({t.coef, std::move(m)});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution s{source, next.target, {}};
  for (VarId v : image) s.image.push_back(next.image.at(v));
  return s;
}

bool Substitution::is_identity() const {
  if (source->vars != target->vars) return false;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

Substitution loop_reflection(const QuadricFamily& source, const QuadricFamily& target, int offset) {
  if (source.n() != target.n() || source.coords() != target.coords())
    throw std::invalid_argument("reflection between incompatible families");
  Substitution s{source.ring(), target.ring(), {}};
  for (const auto& v : source.table()->all()) s.image.push_back(target.var(v.kind, v.component, offset - v.loop));
  return s;
}

Substitution shift_involution(const QuasimapSpec& spec) {
  return loop_reflection(*quadric_family(spec), *quadric_family(spec.flipped()), 0);
}

}  // namespace quadmaps
