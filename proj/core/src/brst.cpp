#include "quadmaps/brst.hpp"

#include "quadmaps/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quadmaps {

namespace {

// Subsets ordered lexicographically as increasing position sequences.
bool subset_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    int x = __builtin_ctz(a), y = __builtin_ctz(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

BrstComplex BrstComplex::build(const QuasimapSpec& spec, int D) {
  spec.validate();
  BrstComplex cx;
  cx.spec_ = spec;
  cx.D_ = D;
  cx.fam_ = quadric_family(spec);
  for (int k = -2 * spec.N1; k <= 2 * spec.N2; ++k) cx.ghost_loops_.push_back(k);
  if (cx.ghost_loops_.size() > 31) throw std::invalid_argument("too many ghosts");
  if (D < 0) return cx;

  const auto& table = *cx.fam_->table();
  const auto& order = cx.fam_->ring()->order;
  // All even monomials by degree and weight, decreasing in the order.
  std::vector<std::map<long, std::vector<Monomial>>> even(static_cast<std::size_t>(D + 1));
  for (int e = 0; e <= D; ++e) {
    even[e] = standard_monomials({}, table, order, e);
    for (const auto& [w, list] : even[e])
      for (const auto& m : list) cx.mono_id_.emplace(m, static_cast<std::uint32_t>(cx.mono_id_.size()));
  }

  std::size_t G = cx.ghost_loops_.size();
  for (std::uint32_t mask = 0; mask < (1u << G); ++mask) {
    int j = __builtin_popcount(mask);
    int e = -1;
    long gw = 0;
    for (std::size_t p = 0; p < G; ++p)
      if (mask >> p & 1) gw += cx.ghost_loops_[p];
    for (int deg = 2 * j; deg <= D; ++deg) {
      e = deg - 2 * j;
      for (const auto& [w, list] : even[e])
        for (const auto& m : list) cx.bases_[{deg, j, w + gw}].push_back({m, mask});
    }
  }
  for (auto& [cell, list] : cx.bases_)
    std::stable_sort(list.begin(), list.end(), [&](const SuperMonomial& a, const SuperMonomial& b) {
      auto c = order.compare(a.even, b.even);
      if (c != 0) return c > 0;
      return subset_less(a.odd, b.odd);
    });
  return cx;
}

std::vector<BrstCell> BrstComplex::cells() const {
  std::vector<BrstCell> out;
  for (const auto& [c, list] : bases_) out.push_back(c);
  return out;
}

const std::vector<SuperMonomial>& BrstComplex::basis(const BrstCell& c) const {
  static const std::vector<SuperMonomial> empty;
  auto it = bases_.find(c);
  return it == bases_.end() ? empty : it->second;
}

std::size_t BrstComplex::index_of(const BrstCell& c, const SuperMonomial& x) const {
  auto& idx = index_[c];
  if (idx.empty()) {
    const auto& b = basis(c);
    idx.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      idx.emplace(static_cast<std::uint64_t>(mono_id_.at(b[i].even)) << 32 | b[i].odd, static_cast<std::uint32_t>(i));
  }
  return idx.at(static_cast<std::uint64_t>(mono_id_.at(x.even)) << 32 | x.odd);
}

std::vector<std::pair<Rational, SuperMonomial>> BrstComplex::apply(const SuperMonomial& x) const {
  std::vector<std::pair<Rational, SuperMonomial>> out;
  int pos = 0;
  for (std::size_t p = 0; p < ghost_loops_.size(); ++p) {
    if (!(x.odd >> p & 1)) continue;
    const Polynomial& r = fam_->relations()[p];
    Rational sign = pos % 2 ? -1 : 1;
    for (const auto& t : r.terms()) out.push_back({sign * t.coef, {t.mono * x.even, x.odd & ~(1u << p)}});
    ++pos;
  }
  return out;
}

SparseMatrix BrstComplex::differential(const BrstCell& c) const {
  const auto& src = basis(c);
  BrstCell tgt{c.degree, c.ghost - 1, c.weight};
  SparseMatrix m(c.ghost == 0 ? 0 : basis(tgt).size(), src.size());
  if (c.ghost == 0) return m;
  for (std::size_t col = 0; col < src.size(); ++col)
    for (const auto& [coef, y] : apply(src[col])) m.add(index_of(tgt, y), col, coef);
  m.finalize();
  return m;
}

std::string BrstComplex::to_string(const SuperMonomial& x) const {
  std::string s = monomial_to_string(x.even, *fam_->ring());
  for (std::size_t p = 0; p < ghost_loops_.size(); ++p)
    if (x.odd >> p & 1) s += (s.empty() ? "" : "*") + std::string("c[") + std::to_string(ghost_loops_[p]) + "]";
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- cohomology

std::size_t CohomologyTable::uncertified() const {
  return static_cast<std::size_t>(
      std::count_if(method.begin(), method.end(), [](const auto& kv) { return kv.second == RankMethod::uncertified; }));
}

CohomologyTable cohomology(const BrstComplex& cx) {
  CohomologyTable tab;
  tab.cutoff = cx.cutoff();
  std::map<std::pair<int, long>, int> top;  // max ghost per (degree, weight)
  for (const auto& c : cx.cells()) {
    auto& t = top[{c.degree, c.weight}];
    t = std::max(t, c.ghost);
  }
  for (const auto& [key, J] : top) {
    auto [deg, w] = key;
    std::vector<std::size_t> dim(J + 2, 0), rp(J + 2, 0);
    std::vector<RankMethod> how(J + 2, RankMethod::modular_certified);
    std::vector<SparseMatrix> mats(J + 2);
    for (int j = 0; j <= J; ++j) dim[j] = cx.dim({deg, j, w});
    for (int j = 1; j <= J; ++j) {
      mats[j] = cx.differential({deg, j, w});
      rp[j] = mats[j].nonzeros() == 0 ? 0 : *rank_mod_p(mats[j]);
    }
    // rp ≤ true rank, and r_j + r_{j+1} ≤ dim_j because d∘d = 0, so equality
    // in either neighbour pins r_j exactly.
    for (int j = 1; j <= J; ++j) {
      std::size_t bound = std::min(dim[j], dim[j - 1]);
      bool ok = rp[j] == bound || rp[j] + rp[j + 1] == dim[j] || rp[j - 1] + rp[j] == dim[j - 1];
      if (ok) continue;
      if (dim[j] * dim[j - 1] <= kDenseRankLimit) {
        rp[j] = exact_rank(mats[j]);
        how[j] = RankMethod::dense_exact;
      } else {
        how[j] = RankMethod::uncertified;
      }
    }
    for (int j = 0; j <= J; ++j) {
      BrstCell c{deg, j, w};
      tab.dims[c] = dim[j] - rp[j] - rp[j + 1];
      tab.ranks[c] = rp[j];
      if (j >= 1) tab.method[c] = how[j];
    }
  }
  return tab;
}

std::optional<BrstCell> check_d_squared(const BrstComplex& cx) {
  for (const auto& c : cx.cells()) {
    if (c.ghost < 2) continue;
    SparseMatrix a = cx.differential(c);
    SparseMatrix b = cx.differential({c.degree, c.ghost - 1, c.weight});
    if (!(b * a).is_zero()) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- theorem

BigradedSeries algebra_series(const QuasimapSpec& spec, int D) {
  auto fam = quadric_family(spec);
  GeneratorSet seed(fam->ring(), fam->relations());
  BuchbergerOptions opts;
  opts.max_degree = static_cast<std::uint32_t>(std::max(D, 2));
  auto res = buchberger(seed, opts);
  if (res.status != BuchbergerStatus::complete) throw BudgetExceeded();
  return staircase_series(res.basis.polys.leading_monomials(), *fam->table(), D);
}

TheoremReport verify_main_theorem(const QuasimapSpec& spec, int D) {
  TheoremReport rep;
  rep.spec = spec;
  rep.cutoff = D;
  BrstComplex cx = BrstComplex::build(spec, D);
  auto bad = check_d_squared(cx);
  rep.d_squared_zero = !bad.has_value();
  rep.table = cohomology(cx);
  rep.algebra = algebra_series(spec, D);

  std::optional<BigradedSeries> closed;
  if (spec.n >= 3) closed = closed_form(spec, D);
  rep.euler_matches = closed.has_value();

  std::map<std::pair<int, long>, BigInt> euler;
  for (const auto& c : cx.cells()) euler[{c.degree, c.weight}] += (c.ghost % 2 ? -1 : 1) * static_cast<long>(cx.dim(c));
  if (closed)
    for (const auto& [k, v] : euler)
      if (closed->coefficient(k.first, k.second) != v) rep.euler_matches = false;

  auto fail = [&](const BrstCell& c, std::string why) {
    if (!rep.first_offending) {
      rep.first_offending = c;
      rep.reason = std::move(why);
    }
  };
  if (bad) fail(*bad, "d∘d is nonzero");
  for (const auto& [c, m] : rep.table.method)
    if (m == RankMethod::uncertified) fail(c, "rank not certified");
  // Ghost 0 against AQ, every degree ≤ D and weight.
  for (int deg = 0; deg <= D; ++deg) {
    std::set<long> weights;
    for (const auto& [k, v] : rep.algebra.cells())
      if (k.first == deg) weights.insert(k.second);
    for (const auto& [c, d] : rep.table.dims)
      if (c.degree == deg && c.ghost == 0) weights.insert(c.weight);
    for (long w : weights) {
      BrstCell c{deg, 0, w};
      auto it = rep.table.dims.find(c);
      std::size_t h0 = it == rep.table.dims.end() ? 0 : it->second;
      if (BigInt(static_cast<unsigned long>(h0)) != rep.algebra.coefficient(deg, w)) fail(c, "ghost-0 dimension differs from AQ");
    }
  }
  // d preserves internal degree, so every degree up to D is complete.
  for (const auto& [c, d] : rep.table.dims)
    if (c.ghost >= 1 && d != 0) fail(c, "higher cohomology is nonzero");
  rep.pass = !rep.first_offending.has_value();
  return rep;
}

}  // namespace quadmaps
