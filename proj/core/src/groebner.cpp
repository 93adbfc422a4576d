#include "quadmaps/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

namespace quadmaps {

GeneratorSet::GeneratorSet(std::shared_ptr<const Ring> ring, std::vector<Polynomial> polys)
    : ring_(std::move(ring)) {
  for (auto& p : polys)
    if (!p.is_zero()) push_back(std::move(p));
}

void GeneratorSet::push_back(Polynomial p) {
  if (p.is_zero()) throw std::invalid_argument("generator set: zero polynomial");
  polys_.push_back(p.monic());
}

std::vector<Monomial> GeneratorSet::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.leading_monomial());
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  const Monomial& tf = f.leading_monomial();
  const Monomial& tg = g.leading_monomial();
  Monomial l = mono_lcm(tf, tg);
  Polynomial a = g.mul_term(1 / g.leading_coefficient(), mono_quotient(l, tg));
  return a.sub_mul(1 / f.leading_coefficient(), mono_quotient(l, tf), f);
}

namespace {

// Index of the greatest-index divisor of m, or -1.
long find_divisor(const Monomial& m, const std::vector<Monomial>& lms) {
  for (long i = static_cast<long>(lms.size()) - 1; i >= 0; --i)
    if (mono_divides(lms[i], m)) return i;
  return -1;
}

// Reduces f; irreducible terms are moved into the remainder as they surface,
// which gives the same result as restarting the scan from the top after
// every step because terms above the reduced one never change.
template <class OnStep>
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lms, OnStep&& on_step) {
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    long i = find_divisor(lt.mono, lms);
    if (i < 0) {
      rem.push_back(p.pop_leading());
      continue;
    }
    const Polynomial& g = basis[static_cast<std::size_t>(i)];
    Rational c = lt.coef / g.leading_coefficient();
    Monomial m = mono_quotient(lt.mono, g.leading_monomial());
    on_step(static_cast<std::size_t>(i), c, m);
    p = p.sub_mul(c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

}  // namespace

Polynomial reduce(const Polynomial& f, const GeneratorSet& basis) {
  auto lms = basis.leading_monomials();
  return normal_form(f, basis.polys(), lms, [](std::size_t, const Rational&, const Monomial&) {});
}

Reduction reduce_with_cofactors(const Polynomial& f, const GeneratorSet& basis) {
  auto lms = basis.leading_monomials();
  Reduction out;
  std::vector<std::vector<Term>> co(basis.size());
  out.remainder = normal_form(f, basis.polys(), lms, [&](std::size_t i, const Rational& c, const Monomial& m) {
    co[i].push_back({c, m});
  });
  for (auto& t : co) out.cofactors.push_back(Polynomial::from_terms(f.ring(), std::move(t)));
  return out;
}

std::size_t BuchbergerOptions::default_pair_limit() {
  if (const char* s = std::getenv("QUADMAPS_PAIR_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (...) {
    }
  }
  return 200000;
}

GeneratorSet interreduce(const GeneratorSet& g) {
  const auto& ord = g.ring()->order;
  // Keep one element per minimal leading monomial.
  std::vector<Polynomial> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial& mi = g[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = g[j].leading_monomial();
      if (mono_divides(mj, mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(g[i]);
  }
  std::sort(keep.begin(), keep.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  GeneratorSet base(g.ring(), keep);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (j != i) others.push_back(base[j]);
    GeneratorSet rest(g.ring(), others);
    const Polynomial& p = base[i];
    Polynomial tail = Polynomial::from_terms(p.ring(), {p.terms().begin() + 1, p.terms().end()});
    Polynomial head = Polynomial::monomial(p.ring(), 1, p.leading_monomial());
    out.push_back(head + reduce(tail, rest));
  }
  return GeneratorSet(g.ring(), std::move(out));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

BuchbergerResult buchberger(const GeneratorSet& seed, const BuchbergerOptions& opts) {
  if (seed.size() == 0) throw std::invalid_argument("buchberger: empty seed");
  const auto ring = seed.ring();
  const auto& ord = ring->order;
  BuchbergerResult res;

  std::vector<Polynomial> g = seed.polys();
  std::vector<Monomial> lms = seed.leading_monomials();

  // Normal strategy: smallest lcm first, ties by indices.
  auto later = [&](const Pair& a, const Pair& b) {
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);

  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (opts.coprime_skip && mono_coprime(lms[i], lms[j])) {
        ++res.pairs_skipped;
        continue;
      }
      Monomial l = mono_lcm(lms[i], lms[j]);
      if (opts.max_degree && l.degree() > *opts.max_degree) {
        res.degree_truncated = true;
        continue;
      }
      queue.push({i, j, std::move(l)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    if (res.pairs_reduced >= opts.max_pairs) {
      res.status = BuchbergerStatus::budget_exceeded;
      res.basis = {GeneratorSet(ring, g), false};
      return res;
    }
    Pair p = queue.top();
    queue.pop();
    ++res.pairs_reduced;
    Polynomial s = s_polynomial(g[p.i], g[p.j]);
    Polynomial r = normal_form(s, g, lms, [](std::size_t, const Rational&, const Monomial&) {});
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    lms.push_back(g.back().leading_monomial());
    ++res.new_elements;
    add_pairs(g.size() - 1);
  }
  res.basis = {interreduce(GeneratorSet(ring, g)), true};
  return res;
}

GroebnerCertificate is_groebner(const GeneratorSet& basis, bool coprime_skip,
                                std::optional<std::uint32_t> max_degree) {
  GroebnerCertificate cert;
  auto lms = basis.leading_monomials();
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime_skip && mono_coprime(lms[i], lms[j])) {
        ++cert.pairs_skipped;
        continue;
      }
      if (max_degree && mono_lcm(lms[i], lms[j]).degree() > *max_degree) continue;
      ++cert.pairs_checked;
      Polynomial r = reduce(s_polynomial(basis[i], basis[j]), basis);
      if (!r.is_zero()) {
        cert.is_groebner = false;
        cert.witness_pair = {i, j};
        cert.witness = std::move(r);
        return cert;
      }
    }
  return cert;
}

}  // namespace quadmaps
