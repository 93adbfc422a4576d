#include "quadmaps/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace quadmaps {

SeriesWindow SeriesWindow::intersect(const SeriesWindow& o) const {
  return {std::max(t_lo, o.t_lo), std::min(t_hi, o.t_hi), std::max(q_lo, o.q_lo), std::min(q_hi, o.q_hi)};
}

BigInt BigradedSeries::coefficient(int t, long q) const {
  auto it = cells_.find({t, q});
  return it == cells_.end() ? BigInt(0) : it->second;
}

void BigradedSeries::add(int t, long q, const BigInt& c) {
  if (!window_.contains(t, q) || c == 0) return;
  auto [it, fresh] = cells_.try_emplace({t, q}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) cells_.erase(it);
  }
}

std::vector<BigInt> BigradedSeries::at_q1() const {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(0, window_.t_hi - window_.t_lo + 1)));
  for (const auto& [k, c] : cells_) out[static_cast<std::size_t>(k.first - window_.t_lo)] += c;
  return out;
}

BigradedSeries BigradedSeries::restricted(const SeriesWindow& w) const {
  BigradedSeries out(window_.intersect(w));
  for (const auto& [k, c] : cells_) out.add(k.first, k.second, c);
  return out;
}

bool BigradedSeries::all_nonnegative() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::optional<std::pair<int, long>> BigradedSeries::first_difference(const BigradedSeries& o) const {
  SeriesWindow w = window_.intersect(o.window_);
  BigradedSeries a = restricted(w), b = o.restricted(w);
  auto ia = a.cells_.begin(), ib = b.cells_.begin();
  while (ia != a.cells_.end() || ib != b.cells_.end()) {
    if (ib == b.cells_.end() || (ia != a.cells_.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.cells_.end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

bool BigradedSeries::agrees_with(const BigradedSeries& o) const { return !first_difference(o).has_value(); }

std::string BigradedSeries::q1_string() const {
  auto v = at_q1();
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int t = window_.t_lo + static_cast<int>(i);
    BigInt a = abs(v[i]);
    if (s.empty())
      s += v[i] < 0 ? "-" : "";
    else
      s += v[i] < 0 ? " - " : " + ";
    std::string mono = t == 0 ? "" : (t == 1 ? "t" : "t^" + std::to_string(t));
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- products

SeriesExpr& SeriesExpr::times(long a, int b, int e) {
  if (e != 0) factors.push_back({a, b, e});
  return *this;
}

namespace {

// C(x, j) for integer x (any sign), j >= 0.
BigInt gen_binomial(const BigInt& x, unsigned long j) {
  BigInt num = 1, den = 1;
  for (unsigned long i = 0; i < j; ++i) {
    num *= x - static_cast<long>(i);
    den *= static_cast<long>(i + 1);
  }
  return num / den;
}

}  // namespace

BigradedSeries SeriesExpr::expand(const SeriesWindow& w, long u, long v) const {
  BigradedSeries out(w);
  long G = std::numeric_limits<long>::min();
  for (long q : {w.q_lo, w.q_hi})
    for (int t : {w.t_lo, w.t_hi}) G = std::max(G, u * q + v * t);
  G -= u * q0 + v * t0;
  if (G < 0) return out;

  using Key = std::pair<long, int>;  // (q, t)
  std::map<Key, BigInt> acc{{{0, 0}, BigInt(1)}};
  for (const auto& f : factors) {
    long gx = u * f.a + v * f.b;
    if (gx <= 0) throw std::invalid_argument("series factor has nonpositive grade for this expansion");
    long jmax = G / gx;
    if (f.e > 0) jmax = std::min<long>(jmax, f.e);
    std::vector<BigInt> c(static_cast<std::size_t>(jmax + 1));
    for (long j = 0; j <= jmax; ++j) {
      if (f.e > 0)
        c[j] = (j % 2 ? -1 : 1) * gen_binomial(f.e, static_cast<unsigned long>(j));
      else
        c[j] = gen_binomial(-f.e + j - 1, static_cast<unsigned long>(j));
    }
    std::map<Key, BigInt> next;
    for (const auto& [k, val] : acc) {
      long g0 = u * k.first + v * k.second;
      for (long j = 0; j <= jmax && g0 + j * gx <= G; ++j) {
        if (c[j] == 0) continue;
        BigInt& slot = next[{k.first + j * f.a, k.second + static_cast<int>(j * f.b)}];
        slot += val * c[j];
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  for (const auto& [k, val] : acc) out.add(k.second + t0, k.first + q0, val * coef);
  return out;
}

// ---------------------------------------------------------------- staircase

namespace {

using SparseMono = std::vector<std::pair<VarId, std::uint32_t>>;

struct Staircase {
  std::vector<std::vector<SparseMono>> by_max;  // leading monomials keyed by largest variable

  Staircase(const std::vector<Monomial>& leading, std::size_t nv) : by_max(nv) {
    for (const auto& m : leading) {
      if (m.nvars() != nv) throw std::invalid_argument("leading monomial over a different table");
      SparseMono s;
      for (VarId v : m.support()) s.emplace_back(v, m[v]);
      if (s.empty()) {
        by_max.assign(nv, {});
        all_zero = true;
        return;
      }
      by_max[s.back().first].push_back(std::move(s));
    }
  }
  bool all_zero = false;  // the unit ideal

  bool blocked(VarId v, const std::vector<std::uint32_t>& e) const {
    for (const auto& s : by_max[v]) {
      bool div = true;
      for (auto [x, k] : s)
        if (e[x] < k) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  }

  // Visits every standard monomial of degree ≤ D (or == D when exact).
  template <class Visit>
  void walk(const VariableTable& table, int D, bool exact, Visit&& visit) const {
    std::size_t nv = by_max.size();
    std::vector<std::uint32_t> e(nv, 0);
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t v, int deg, long w) {
      if (deg == D || v == nv) {
        if (!exact || deg == D) visit(e, deg, w);
        return;
      }
      for (int k = 0; deg + k <= D; ++k) {
        e[v] = static_cast<std::uint32_t>(k);
        if (k > 0 && blocked(static_cast<VarId>(v), e)) break;
        rec(v + 1, deg + k, w + static_cast<long>(k) * table[static_cast<VarId>(v)].weight());
      }
      e[v] = 0;
    };
    if (!all_zero) rec(0, 0, 0);
  }
};

std::pair<long, long> weight_range(const VariableTable& table, int D) {
  long lo = 0, hi = 0;
  for (const auto& v : table.all()) {
    lo = std::min<long>(lo, v.weight());
    hi = std::max<long>(hi, v.weight());
  }
  return {lo * D, hi * D};
}

}  // namespace

BigradedSeries staircase_series(const std::vector<Monomial>& leading, const VariableTable& table, int D) {
  auto [qlo, qhi] = weight_range(table, D);
  BigradedSeries out({0, D, qlo, qhi});
  Staircase st(leading, table.size());
  std::map<std::pair<int, long>, long> counts;
  st.walk(table, D, false, [&](const std::vector<std::uint32_t>&, int deg, long w) { ++counts[{deg, w}]; });
  for (const auto& [k, c] : counts) out.add(k.first, k.second, c);
  return out;
}

std::map<long, std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading,
                                                         const VariableTable& table, const MonomialOrder& order,
                                                         int degree) {
  std::map<long, std::vector<Monomial>> out;
  Staircase st(leading, table.size());
  st.walk(table, degree, true, [&](const std::vector<std::uint32_t>& e, int, long w) {
    Monomial m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m.set(static_cast<VarId>(i), e[i]);
    out[w].push_back(std::move(m));
  });
  for (auto& [w, list] : out)
    std::sort(list.begin(), list.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------- chains

BigradedSeries chain_series(const DiagramPoset& poset, const VariableTable& table, std::optional<VarId> lo,
                            std::optional<VarId> hi, int D) {
  std::vector<VarId> elems;
  if (lo && hi) {
    elems = poset.interval(*lo, *hi);
  } else {
    for (VarId v = 0; v < poset.size(); ++v) elems.push_back(v);
  }
  std::vector<char> in(poset.size(), 0);
  for (VarId v : elems) in[v] = 1;
  std::vector<VarId> ext;
  for (VarId v : poset.linear_extension())
    if (in[v]) ext.push_back(v);

  long qlo = 0, qhi = 0;
  for (VarId v : ext) {
    qlo = std::min<long>(qlo, static_cast<long>(table[v].weight()) * D);
    qhi = std::max<long>(qhi, static_cast<long>(table[v].weight()) * D);
  }
  BigradedSeries out({0, D, qlo, qhi});
  std::map<std::pair<int, long>, long> counts;
  std::function<void(std::size_t, long, int, long)> rec = [&](std::size_t start, long last, int deg, long w) {
    ++counts[{deg, w}];
    for (std::size_t i = start; i < ext.size(); ++i) {
      VarId x = ext[i];
      if (last >= 0 && !poset.leq(static_cast<VarId>(last), x)) continue;
      int maxk = poset.reflexive(x) ? D - deg : std::min(1, D - deg);
      for (int k = 1; k <= maxk; ++k) rec(i + 1, x, deg + k, w + static_cast<long>(k) * table[x].weight());
    }
  };
  rec(0, -1, 0, 0);
  for (const auto& [k, c] : counts) out.add(k.first, k.second, c);
  return out;
}

// ---------------------------------------------------------------- closed form

SeriesExpr closed_form_expr(const QuasimapSpec& spec) {
  spec.validate();
  if (spec.n < 3) throw std::invalid_argument("no closed form for n = 2");
  SeriesExpr e;
  for (long l = -2L * spec.N1; l <= 2L * spec.N2; ++l) e.times(l, 2, 1);
  for (long l = -spec.N1; l <= spec.N2; ++l) e.times(l, 1, -spec.n);
  return e;
}

BigradedSeries closed_form(const QuasimapSpec& spec, int D) {
  return closed_form_expr(spec).expand({0, D, -static_cast<long>(spec.N1) * D, static_cast<long>(spec.N2) * D}, 0, 1);
}

// ---------------------------------------------------------------- PBW

PbwResult pbw_dual_dims(const std::vector<BigInt>& a, int D) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("series must start with 1");
  if (static_cast<int>(a.size()) <= D) throw std::invalid_argument("series window shorter than requested degree");
  std::size_t len = static_cast<std::size_t>(D + 1);
  // B = 1 / A(−t)
  std::vector<BigInt> am(len), b(len);
  for (std::size_t k = 0; k < len; ++k) am[k] = (k % 2 ? -1 : 1) * a[k];
  b[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    BigInt s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += am[j] * b[k - j];
    b[k] = -s;
  }
  PbwResult res;
  std::vector<BigInt> p(len);
  p[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    BigInt L = b[k] - p[k];
    res.dims.push_back(L);
    if (L < 0 && !res.first_negative) res.first_negative = static_cast<int>(k);
    if (L == 0) continue;
    // factor = Σ_j c_j t^{kj}
    std::vector<BigInt> fac(len);
    for (std::size_t j = 0; j * k < len; ++j) {
      if (k % 2)
        fac[j * k] = gen_binomial(L, j);
      else
        fac[j * k] = (j % 2 ? -1 : 1) * gen_binomial(-L, j);
    }
    std::vector<BigInt> np(len);
    for (std::size_t i = 0; i < len; ++i)
      if (p[i] != 0)
        for (std::size_t j = 0; i + j < len; j += k)
          if (fac[j] != 0) np[i + j] += p[i] * fac[j];
    p = std::move(np);
  }
  return res;
}

// ---------------------------------------------------------------- numerators

std::vector<BigInt> extract_numerator(const std::vector<BigInt>& series, int k) {
  std::vector<BigInt> c = series;
  for (int r = 0; r < k; ++r)
    for (std::size_t i = c.size(); i-- > 1;) c[i] -= c[i - 1];
  std::size_t last = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) last = i;
  if (c.size() < last + 3)
    throw std::runtime_error("window too small to determine the numerator");
  c.resize(last + 1);
  return c;
}

PalindromeResult palindrome_check(const std::vector<BigInt>& numerator) {
  std::vector<BigInt> v = numerator;
  while (!v.empty() && v.back() == 0) v.pop_back();
  PalindromeResult r;
  if (v.empty()) return r;
  bool sym = true, anti = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const BigInt& x = v[i];
    const BigInt& y = v[v.size() - 1 - i];
    if (x != y) sym = false;
    if (x != -y) anti = false;
  }
  r.palindromic = sym || anti;
  r.sign = sym ? 1 : (anti ? -1 : 0);
  return r;
}

}  // namespace quadmaps
