#include "quadmaps/acceptance.hpp"

#include "quadmaps/brst.hpp"
#include "quadmaps/groebner.hpp"
#include "quadmaps/hilbert.hpp"
#include "quadmaps/quadric.hpp"
#include "quadmaps/semiinf.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>

namespace quadmaps {

namespace {

using Check = bool (*)(std::ostringstream&);

// num(t) / (1 − t)^k up to t^D, via the binomial series of (1 − t)^{-k}.
std::vector<BigInt> rational_series(const std::vector<long>& num, int k, int D) {
  std::vector<BigInt> inv(static_cast<std::size_t>(D) + 1);
  for (int j = 0; j <= D; ++j) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(j + k - 1), static_cast<unsigned long>(k - 1));
    inv[j] = c;
  }
  std::vector<BigInt> out(inv.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += num[i] * inv[j];
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

bool finite_quadric(std::ostringstream& log) {
  const int D = 10;
  for (int n = 3; n <= 8; ++n) {
    auto fam = quadric_family(n, Coords::orthonormal, {0, 0}, OrderKind::plain);
    GeneratorSet seed(fam->ring(), fam->relations());
    auto st = staircase_series(seed.leading_monomials(), *fam->table(), D).at_q1();
    auto expect = rational_series({1, 0, -1}, n, D);
    if (st != expect) {
      log << "n=" << n << " staircase " << join(st) << " expected " << join(expect);
      return false;
    }
  }
  log << "n=3..8 match (1-t^2)/(1-t)^n to t^" << D;
  return true;
}

bool groebner_property(std::ostringstream& log) {
  std::size_t specs = 0;
  for (int n = 3; n <= 8; ++n)
    for (int N1 = 0; N1 <= 2; ++N1)
      for (int N2 = 0; N2 <= 2; ++N2) {
        QuasimapSpec spec{n, N1, N2, Coords::hyperbolic};
        auto fam = quadric_family(spec);
        auto cert = is_groebner(GeneratorSet(fam->ring(), fam->relations()));
        if (!cert.is_groebner || cert.witness_pair) {
          log << spec.to_string() << " is not a Groebner basis in the snake order";
          return false;
        }
        ++specs;
      }
  for (int N2 : {1, 2}) {
    QuasimapSpec spec{2, 0, N2, Coords::hyperbolic};
    auto fam = quadric_family(spec);
    GeneratorSet seed(fam->ring(), fam->relations());
    if (is_groebner(seed).is_groebner) {
      log << spec.to_string() << " unexpectedly Groebner";
      return false;
    }
    auto res = buchberger(seed);
    if (res.status != BuchbergerStatus::complete) {
      log << spec.to_string() << " Buchberger budget exceeded";
      return false;
    }
    log << "n=2 N2=" << N2 << ": +" << res.new_elements << " elements; ";
  }
  log << specs << " hyperbolic specs certified";
  return true;
}

bool golden_series(std::ostringstream& log) {
  const int D = 12;
  const std::vector<std::vector<long>> nums = {
      {1, 1},
      {1, 2, 0, -2, 1},
      {1, 3, 1, -5, -5, 11, -3, -1},
      {1, 4, 3, -8, -14, 0, 56, -48, 3, 4, 1},
  };
  for (int N = 0; N <= 3; ++N) {
    QuasimapSpec spec{2, 0, N, Coords::hyperbolic};
    auto series = algebra_series(spec, D).at_q1();
    auto expect = rational_series(nums[N], N + 1, D);
    if (series != expect) {
      log << "N=" << N << " got " << join(series) << " expected " << join(expect);
      return false;
    }
  }
  log << "N=0..3 exact to t^" << D;
  return true;
}

bool triple_agreement(std::ostringstream& log) {
  const int D = 6;
  std::size_t cells = 0;
  for (int n = 3; n <= 6; ++n)
    for (int N1 = 0; N1 <= 1; ++N1)
      for (int N2 = 0; N2 <= 1; ++N2) {
        QuasimapSpec spec{n, N1, N2, Coords::hyperbolic};
        auto fam = quadric_family(spec);
        GeneratorSet seed(fam->ring(), fam->relations());
        auto st = staircase_series(seed.leading_monomials(), *fam->table(), D);
        auto ch = chain_series(DiagramPoset::build(*fam), *fam->table(), std::nullopt, std::nullopt, D);
        auto cf = closed_form(spec, D);
        for (const auto* other : {&ch, &cf}) {
          if (!(st.window() == other->window()) || st.first_difference(*other)) {
            auto d = st.first_difference(*other);
            log << spec.to_string() << " differs";
            if (d) log << " at t^" << d->first << " q^" << d->second;
            return false;
          }
        }
        cells += st.cells().size();
      }
  log << "16 specs, " << cells << " nonzero cells agree";
  return true;
}

bool pbw_dims(std::ostringstream& log) {
  const int D = 8;
  for (int n = 3; n <= 5; ++n)
    for (int N1 = 0; N1 <= 1; ++N1)
      for (int N2 = 0; N2 <= 1; ++N2) {
        QuasimapSpec spec{n, N1, N2, Coords::hyperbolic};
        auto res = pbw_dual_dims(closed_form(spec, D).at_q1(), D);
        std::vector<BigInt> expect(D, 0);
        expect[0] = n * (N1 + N2 + 1);
        expect[1] = 2 * (N1 + N2) + 1;
        if (res.dims != expect) {
          log << spec.to_string() << " dual dims " << join(res.dims);
          return false;
        }
      }
  QuasimapSpec two{2, 0, 3, Coords::hyperbolic};
  auto res = pbw_dual_dims(algebra_series(two, 12).at_q1(), 12);
  if (!res.first_negative || *res.first_negative >= 12) {
    log << "n=2 N2=3: no negative dual dim below degree 12";
    return false;
  }
  log << "L1, L2 as predicted, L3..L8 = 0; n=2 N2=3 negative at degree " << *res.first_negative;
  return true;
}

bool theorem_one(std::ostringstream& log) {
  const QuasimapSpec specs[] = {{3, 0, 0, Coords::hyperbolic}, {3, 0, 1, Coords::hyperbolic},
                                {4, 0, 1, Coords::hyperbolic}, {5, 0, 0, Coords::hyperbolic},
                                {5, 1, 1, Coords::hyperbolic}};
  bool ok = true;
  for (const auto& spec : specs) {
    auto rep = verify_main_theorem(spec, 6);
    if (!rep.pass || !rep.d_squared_zero) {
      log << spec.to_string() << ": " << rep.reason;
      if (rep.first_offending)
        log << " at (deg " << rep.first_offending->degree << ", ghost " << rep.first_offending->ghost << ", q^"
            << rep.first_offending->weight << ")";
      log << "; ";
      ok = false;
    }
  }
  if (ok) log << "5 specs at D=6: H^0 = AQ, higher ghosts vanish to degree 6, d^2 = 0";
  return ok;
}

bool semi_infinite(std::ostringstream& log) {
  QuasimapSpec spec{3, 1, 1, Coords::orthonormal};
  SemiInfWindow w;  // |t| ≤ 3, 0 ≤ q ≤ 3
  auto cx = TwoTermComplex::build(spec, w);
  std::size_t bad = 0;
  for (int t = w.t_lo; t <= w.t_hi; ++t)
    for (long q = w.q_lo; q <= w.q_hi; ++q) bad += cx.bidegree_violations({t, q});
  auto eu = check_euler(cx);
  auto pr = pairing_symmetry(spec, w);
  auto stab = stability(spec, w);
  log << "bidegree violations " << bad << "; Euler " << (eu.dims_match && eu.cohomology_match ? "ok" : "MISMATCH")
      << " on " << eu.cells << " cells; pairing " << (pr.symmetric && pr.kernel_cokernel ? "symmetric" : "BROKEN")
      << " (" << pr.blocks_checked << " blocks, " << pr.note << "); stability " << stab.agreeing_cells << "/"
      << stab.total_cells << " cells agree, provable " << (stab.stable ? "ok" : "FAILED");
  if (!stab.unstable.empty()) log << ", " << stab.unstable.size() << " unprovable cells differ";
  return bad == 0 && eu.dims_match && eu.cohomology_match && pr.applicable && pr.symmetric && pr.kernel_cokernel &&
         stab.stable;
}

bool z_equations(std::ostringstream& log) {
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    auto rep = z_functional_equations(n, 4, 4);
    if (!rep.all_hold()) {
      ok = false;
      for (const auto& r : rep.identities)
        if (!r.holds()) log << "n=" << n << " " << r.name << " fails; ";
      if (!rep.composition_ok) log << "n=" << n << " composition fails; ";
      if (!rep.constant_term_ok) log << "n=" << n << " constant term fails; ";
    }
  }
  if (ok) log << "n=3,4,5: three identities on |t| <= 4, q <= 4, stable at truncations 8 and 9";
  return ok;
}

bool groebner_kernel(std::ostringstream& log) {
  auto vars = VariableTable::generic({"x", "y"});
  // x more significant than y, graded lex.
  auto ring = make_ring(vars, MonomialOrder({1, 0}, TieBreak::lex));
  auto f1 = Polynomial::parse(ring, "x^3 - 2*x*y");
  auto f2 = Polynomial::parse(ring, "x^2*y - 2*y^2 + x");
  auto x2 = Polynomial::parse(ring, "x^2");
  if (s_polynomial(f1, f2) != x2) {
    log << "S(f1,f2) = " << s_polynomial(f1, f2).to_string();
    return false;
  }
  auto gb = buchberger(GeneratorSet(ring, {f1, f2}));
  if (gb.status != BuchbergerStatus::complete || !reduce(x2, gb.basis.polys).is_zero()) {
    log << "x^2 does not reduce to 0 modulo Gr(I)";
    return false;
  }
  // Coprime leading terms: S(f, g) reduces to 0 modulo {f, g}.
  auto v4 = VariableTable::generic({"a", "b", "c", "d"});
  auto r4 = make_ring(v4, MonomialOrder::natural(4, TieBreak::revlex));
  std::mt19937_64 rng(20240521);
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 2), nterms(1, 4);
  auto random_poly = [&] {
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      Monomial m(4);
      for (VarId v = 0; v < 4; ++v) m.set(v, static_cast<std::uint32_t>(expo(rng)));
      int c = coef(rng);
      terms.push_back({c == 0 ? 1 : c, m});
    }
    return Polynomial::from_terms(r4, std::move(terms));
  };
  int done = 0, tries = 0;
  while (done < 1000 && tries < 1000000) {
    ++tries;
    auto f = random_poly(), g = random_poly();
    if (f.is_zero() || g.is_zero() || !mono_coprime(f.leading_monomial(), g.leading_monomial())) continue;
    if (!reduce(s_polynomial(f, g), GeneratorSet(r4, {f, g})).is_zero()) {
      log << "coprime pair " << f.to_string() << " , " << g.to_string() << " leaves a remainder";
      return false;
    }
    ++done;
  }
  log << "S(f1,f2) = x^2, x^2 in Gr(I), " << done << " coprime pairs reduce to 0";
  return done == 1000;
}

struct Entry {
  const char* title;
  double budget;
  Check run;
};

const Entry kEntries[kCriteriaCount] = {
    {"finite quadric series", 5, finite_quadric},
    {"Groebner property", 60, groebner_property},
    {"n=2 golden series", 120, golden_series},
    {"staircase = chains = product", 60, triple_agreement},
    {"PBW dual dimensions", 10, pbw_dims},
    {"mini-BRST theorem", 600, theorem_one},
    {"semi-infinite complex", 300, semi_infinite},
    {"Z functional equations", 30, z_equations},
    {"Groebner kernel", 30, groebner_kernel},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteriaCount) throw std::out_of_range("criterion id");
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = e.title;
  r.budget = e.budget;
  std::ostringstream log;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = e.run(log);
  } catch (const std::exception& ex) {
    r.pass = false;
    log << "exception: " << ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = log.str();
  if (r.seconds > r.budget) {
    r.pass = false;
    r.detail += "; over the time budget";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char times[64];
  std::snprintf(times, sizeof times, " (%.2fs / %.0fs)", r.seconds, r.budget);
  return "CRITERION " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + ": " + r.detail +
         times;
}

}  // namespace quadmaps
