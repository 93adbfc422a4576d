#include "cli.hpp"

#include "quadmaps/acceptance.hpp"
#include "quadmaps/brst.hpp"
#include "quadmaps/groebner.hpp"
#include "quadmaps/hilbert.hpp"
#include "quadmaps/quadric.hpp"
#include "quadmaps/semiinf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace quadmaps::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int n = 3;
  int N1 = 0;
  int N2 = 0;
  std::string coords = "orthonormal";
  int degree = 6;
  std::string format = "text";
  std::string out;
  int t_abs = -1;  // per-command default when negative
  long q_max = -1;
  std::vector<int> only;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A report is built twice over: JSON for `structured`, lines for `text`.
struct Report {
  Json json;
  std::ostringstream text;
  int status = kOk;

  void verdict(const std::string& key, bool pass, const std::string& detail = "") {
    text << key << ": " << (pass ? "PASS" : "FAIL") << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    json["verdicts"][key] = pass ? "PASS" : "FAIL";
    if (!pass) status = kFail;
  }
};

std::string dec(long long v) { return std::to_string(v); }

QuasimapSpec spec_of(const Options& o) {
  QuasimapSpec s{o.n, o.N1, o.N2, parse_coords(o.coords)};
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return s;
}

std::string to_string_order(OrderKind k) {
  switch (k) {
    case OrderKind::snake: return "snake";
    case OrderKind::plain: return "plain";
    case OrderKind::centered: return "centered";
  }
  return "";
}

Json series_json(const BigradedSeries& s) {
  Json j;
  const auto& w = s.window();
  j["window"] = {{"t_lo", dec(w.t_lo)}, {"t_hi", dec(w.t_hi)}, {"q_lo", dec(w.q_lo)}, {"q_hi", dec(w.q_hi)}};
  j["cells"] = Json::array();
  for (const auto& [k, v] : s.cells())
    j["cells"].push_back({{"t_degree", dec(k.first)}, {"q_weight", dec(k.second)}, {"coefficient", v.get_str()}});
  j["q1"] = Json::array();
  for (const auto& v : s.at_q1()) j["q1"].push_back(v.get_str());
  return j;
}

void series_text(std::ostream& os, const BigradedSeries& s) {
  os << "q=1: " << s.q1_string() << "\n";
  int t = -1;
  for (const auto& [k, v] : s.cells()) {
    if (k.first != t) {
      os << (t == -1 ? "" : "\n") << "t^" << k.first << ":";
      t = k.first;
    }
    os << " " << v.get_str() << "*q^" << k.second;
  }
  if (t != -1) os << "\n";
}

void cmd_relations(const Options& o, Report& r) {
  auto spec = spec_of(o);
  auto fam = quadric_family(spec);
  r.json["relations"] = Json::array();
  for (std::size_t k = 0; k < fam->relations().size(); ++k) {
    int l = fam->relation_loop(k);
    std::string p = fam->relations()[k].to_string();
    r.text << "r[" << l << "] = " << p << "\n";
    r.json["relations"].push_back({{"loop", dec(l)}, {"polynomial", p}});
  }
}

void cmd_groebner(const Options& o, Report& r) {
  auto spec = spec_of(o);
  auto fam = quadric_family(spec);
  GeneratorSet seed(fam->ring(), fam->relations());
  auto cert = is_groebner(seed);
  auto res = buchberger(seed);
  r.json["order"] = to_string_order(fam->order_kind());
  r.json["certificate"] = {{"is_groebner", cert.is_groebner},
                           {"pairs_checked", dec(static_cast<long long>(cert.pairs_checked))},
                           {"pairs_skipped", dec(static_cast<long long>(cert.pairs_skipped))}};
  if (cert.witness_pair) {
    r.json["certificate"]["witness_pair"] = {dec(static_cast<long long>(cert.witness_pair->first)),
                                             dec(static_cast<long long>(cert.witness_pair->second))};
    r.json["certificate"]["witness"] = cert.witness->to_string();
  }
  r.json["pairs_reduced"] = dec(static_cast<long long>(res.pairs_reduced));
  r.json["pairs_skipped"] = dec(static_cast<long long>(res.pairs_skipped));
  r.json["basis"] = Json::array();
  for (const auto& p : res.basis.polys.polys()) r.json["basis"].push_back(p.to_string());
  r.text << "order: " << to_string_order(fam->order_kind()) << "\n";
  for (const auto& p : res.basis.polys.polys()) r.text << "  " << p.to_string() << "\n";
  if (res.status == BuchbergerStatus::budget_exceeded) {
    r.text << "GROEBNER: BUDGET EXCEEDED after " << res.pairs_reduced << " pairs\n";
    r.json["verdicts"]["GROEBNER"] = "BUDGET EXCEEDED";
    r.status = kFail;
    return;
  }
  r.json["new_elements"] = dec(static_cast<long long>(res.new_elements));
  if (cert.witness_pair)
    r.text << "S-pair (" << cert.witness_pair->first << ", " << cert.witness_pair->second
           << ") leaves " << cert.witness->to_string() << "\n";
  r.verdict("GROEBNER", cert.is_groebner, std::to_string(res.new_elements) + " new elements");
}

void cmd_series(const Options& o, Report& r) {
  auto spec = spec_of(o);
  auto s = algebra_series(spec, o.degree);
  r.json["series"] = series_json(s);
  series_text(r.text, s);
  if (spec.n >= 3) {
    bool agree = !s.first_difference(closed_form(spec, o.degree));
    r.verdict("CLOSED-FORM", agree, "product formula, degrees <= " + std::to_string(o.degree));
  }
}

void cmd_chains(const Options& o, Report& r) {
  auto spec = spec_of(o);
  if (spec.coords != Coords::hyperbolic || spec.n < 3) throw UsageError("chains needs --coords hyperbolic and n >= 3");
  auto fam = quadric_family(spec);
  GeneratorSet seed(fam->ring(), fam->relations());
  auto st = staircase_series(seed.leading_monomials(), *fam->table(), o.degree);
  auto ch = chain_series(DiagramPoset::build(*fam), *fam->table(), std::nullopt, std::nullopt, o.degree);
  r.json["series"] = series_json(ch);
  series_text(r.text, ch);
  r.verdict("CHAINS", !st.first_difference(ch) && !st.first_difference(closed_form(spec, o.degree)),
            "chains = staircase = product");
}

void cmd_pbw(const Options& o, Report& r) {
  auto spec = spec_of(o);
  auto q1 = algebra_series(spec, o.degree).at_q1();
  auto res = pbw_dual_dims(q1, o.degree);
  r.json["dual_dims"] = Json::array();
  for (std::size_t k = 0; k < res.dims.size(); ++k) {
    r.json["dual_dims"].push_back(res.dims[k].get_str());
    r.text << "L" << k + 1 << " = " << res.dims[k].get_str() << "\n";
  }
  r.verdict("PBW", res.consistent(),
            res.first_negative ? "negative dual dimension at degree " + std::to_string(*res.first_negative)
                               : "all dual dimensions nonnegative");
}

std::string method_name(RankMethod m) {
  switch (m) {
    case RankMethod::modular_certified: return "modular";
    case RankMethod::dense_exact: return "dense";
    case RankMethod::uncertified: return "uncertified";
  }
  return "";
}

void cmd_brst(const Options& o, Report& r) {
  auto spec = spec_of(o);
  auto rep = verify_main_theorem(spec, o.degree);
  r.json["cutoff"] = dec(rep.cutoff);
  r.json["cohomology"] = Json::array();
  r.text << "deg ghost q dim\n";
  for (const auto& [c, d] : rep.table.dims) {
    if (d == 0) continue;
    Json cell{{"degree", dec(c.degree)}, {"ghost", dec(c.ghost)}, {"q_weight", dec(c.weight)},
              {"dim", dec(static_cast<long long>(d))}};
    auto m = rep.table.method.find(c);
    if (m != rep.table.method.end()) cell["rank_method"] = method_name(m->second);
    r.json["cohomology"].push_back(cell);
    r.text << c.degree << " " << c.ghost << " " << c.weight << " " << d << "\n";
  }
  r.verdict("D-SQUARED", rep.d_squared_zero);
  if (spec.n >= 3) r.verdict("EULER", rep.euler_matches, "alternating dims vs product formula");
  std::string why;
  if (rep.first_offending)
    why = rep.reason + " at degree " + std::to_string(rep.first_offending->degree) + ", ghost " +
          std::to_string(rep.first_offending->ghost) + ", q^" + std::to_string(rep.first_offending->weight);
  r.verdict("THEOREM-1", rep.pass, why);
}

void cmd_semiinf(const Options& o, Report& r) {
  auto spec = spec_of(o);
  SemiInfWindow w;
  if (o.t_abs >= 0) w.t_lo = -o.t_abs, w.t_hi = o.t_abs;
  if (o.q_max >= 0) w.q_hi = o.q_max;
  auto cx = TwoTermComplex::build(spec, w);
  auto coh = cohomology(cx);
  r.json["cells"] = Json::array();
  r.text << "T Q dim ker coker\n";
  std::size_t bad = 0;
  for (const auto& [c, h] : coh) {
    std::size_t d = cx.dim(c);
    bad += cx.bidegree_violations(c);
    r.json["cells"].push_back({{"t_degree", dec(c.t)},
                               {"q_weight", dec(c.q)},
                               {"dim", dec(static_cast<long long>(d))},
                               {"kernel", dec(static_cast<long long>(h.kernel))},
                               {"cokernel", dec(static_cast<long long>(h.cokernel))}});
    if (d) r.text << c.t << " " << c.q << " " << d << " " << h.kernel << " " << h.cokernel << "\n";
  }
  r.verdict("BIDEGREE", bad == 0, "d shifts (T, Q) by (2, 1)");
  if (spec.n >= 3) {
    auto eu = check_euler(cx);
    r.verdict("EULER", eu.dims_match && eu.cohomology_match, std::to_string(eu.cells) + " cells");
  }
  auto pr = pairing_symmetry(spec, w);
  if (pr.applicable) {
    r.verdict("PAIRING", pr.symmetric && pr.kernel_cokernel, pr.note);
  } else {
    r.text << "PAIRING: N/A (" << pr.note << ")\n";
    r.json["verdicts"]["PAIRING"] = "N/A";
  }
  auto st = stability(spec, w);
  r.json["stability"] = {{"agreeing_cells", dec(static_cast<long long>(st.agreeing_cells))},
                         {"total_cells", dec(static_cast<long long>(st.total_cells))},
                         {"unprovable_differences", dec(static_cast<long long>(st.unstable.size()))}};
  r.verdict("STABILITY", st.stable,
            "provable cells agree with (N1+1, N2+1); " + std::to_string(st.agreeing_cells) + "/" + std::to_string(st.total_cells) + " cells agree overall");
}

void cmd_zcheck(const Options& o, Report& r) {
  if (o.n < 1) throw UsageError("n must be positive");
  int t_abs = o.t_abs >= 0 ? o.t_abs : 4;
  long q_hi = o.q_max >= 0 ? o.q_max : 4;
  auto rep = z_functional_equations(o.n, t_abs, q_hi);
  r.json["truncation"] = dec(rep.truncation);
  r.json["identities"] = Json::array();
  for (const auto& id : rep.identities) {
    r.json["identities"].push_back(
        {{"name", id.name}, {"pure", id.pure_match}, {"window", id.window_match}, {"stable", id.stable}});
    r.text << (id.holds() ? "holds  " : "FAILS  ") << id.name << "\n";
  }
  r.verdict("ZCHECK", rep.all_hold(), "|t| <= " + std::to_string(t_abs) + ", q <= " + std::to_string(q_hi));
}

void cmd_selftest(const Options& o, Report& r) {
  std::vector<int> ids = o.only;
  if (ids.empty())
    for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
  int passed = 0;
  r.json["criteria"] = Json::array();
  for (int id : ids) {
    if (id < 1 || id > kCriteriaCount) throw UsageError("no criterion " + std::to_string(id));
    auto c = run_criterion(id);
    passed += c.pass;
    r.text << format_result(c) << "\n";
    r.json["criteria"].push_back({{"id", dec(c.id)}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  r.verdict("SELFTEST", passed == static_cast<int>(ids.size()),
            std::to_string(passed) + "/" + std::to_string(ids.size()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasimap quadric algebras: Groebner bases, series, BRST and semi-infinite checks", "quadmaps"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<void(const Options&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h, bool spec_flags = true) {
    auto* sub = app.add_subcommand(name, help);
    if (spec_flags) {
      sub->add_option("--n", o.n, "ambient dimension")->check(CLI::PositiveNumber);
      sub->add_option("--N1", o.N1, "negative loop bound")->check(CLI::NonNegativeNumber);
      sub->add_option("--N2", o.N2, "positive loop bound")->check(CLI::NonNegativeNumber);
      sub->add_option("--coords", o.coords, "quadric coordinates")->check(CLI::IsMember({"orthonormal", "hyperbolic"}));
      sub->add_option("--degree", o.degree, "degree cutoff D")->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", o.out, "write the report to this file");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  add("relations", "print the relations r[l]", cmd_relations);
  add("groebner", "check the Groebner property and run Buchberger", cmd_groebner);
  add("series", "bigraded Poincare series from the Groebner staircase", cmd_series);
  add("chains", "chain enumeration in the Hasse diagram", cmd_chains);
  add("pbw", "dual Lie algebra dimensions from the series", cmd_pbw);
  add("brst", "mini-BRST cohomology and the degreewise theorem check", cmd_brst);
  auto* semi = add("semiinf", "two-term semi-infinite complex", cmd_semiinf);
  semi->add_option("--t-abs", o.t_abs, "window |T| bound (default 3)")->check(CLI::NonNegativeNumber);
  semi->add_option("--q-max", o.q_max, "window Q bound (default 3)")->check(CLI::NonNegativeNumber);
  auto* z = app.add_subcommand("zcheck", "functional equations of the limiting product Z(q, t)");
  z->add_option("--n", o.n, "ambient dimension")->check(CLI::PositiveNumber);
  z->add_option("--t-abs", o.t_abs, "window |t| bound (default 4)")->check(CLI::NonNegativeNumber);
  z->add_option("--q-max", o.q_max, "window q bound (default 4)")->check(CLI::NonNegativeNumber);
  z->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  z->add_option("--out", o.out, "write the report to this file");
  commands.emplace_back(z, cmd_zcheck);
  auto* self = add("selftest", "run the acceptance criteria", cmd_selftest, false);
  self->add_option("--only", o.only, "criterion numbers to run");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Report r;
    r.json["schema"] = kSchemaId;
    r.json["command"] = sub->get_name();
    if (sub->get_name() == "zcheck") {
      r.json["n"] = dec(o.n);
    } else if (sub->get_name() != "selftest") {
      r.json["spec"] = Json{{"n", dec(o.n)}, {"N1", dec(o.N1)}, {"N2", dec(o.N2)}, {"coords", o.coords}};
      r.json["degree"] = dec(o.degree);
    }
    try {
      handler(o, r);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const BudgetExceeded& e) {
      err << "BUDGET EXCEEDED: " << e.what() << "\n";
      return kFail;
    } catch (const std::invalid_argument& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kFail;
    }
    std::string body = o.format == "structured" ? r.json.dump(2) + "\n" : r.text.str();
    if (o.out.empty()) {
      out << body;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        err << "cannot write " << o.out << "\n";
        return kUsage;
      }
      f << body;
    }
    return r.status;
  }
  return kUsage;
}

}  // namespace quadmaps::cli
