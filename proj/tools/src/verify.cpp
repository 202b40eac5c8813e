#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "bethe/gl2.hpp"
#include "bethe/random.hpp"
#include "bethe/strings.hpp"
#include "bethe_cli/cli.hpp"

namespace bethe::cli {

namespace {

struct Cases {
  Json list = Json::array();
  bool ok = true;

  void add(Json c, bool pass) {
    c["pass"] = pass;
    ok = ok && pass;
    list.push_back(std::move(c));
  }
};

using TaskFn = std::function<Json(const VerifyParams&, Cases&)>;

EqualityMode mode_for(const VerifyParams& p) {
  if (p.randomized) return RandomizedMode{p.seed, 5};
  return ExactMode{};
}

std::vector<VarLabel> canonical_vars(const MultiIndex& n) {
  std::vector<VarLabel> vars;
  for (const auto& g : Segment::canonical(n).groups()) vars.insert(vars.end(), g.begin(), g.end());
  return vars;
}

// (N, bound) pairs: the override when given, the defaults otherwise.
std::vector<std::pair<int, MultiIndex>> cases_or(const VerifyParams& p, std::vector<std::pair<int, MultiIndex>> defaults) {
  if (!p.N && !p.bound) return defaults;
  int N = p.N.value_or(p.bound ? p.bound->rank() + 1 : defaults.front().first);
  MultiIndex b = p.bound.value_or(MultiIndex(std::vector<int>(static_cast<std::size_t>(N - 1), 1)));
  if (b.rank() != N - 1) throw GuardExceeded("--bound must have N-1 entries");
  return {{N, b}};
}

int scalar_bound(const VerifyParams& p, int fallback, int cap) {
  int b = p.bound ? (*p.bound)[0] : fallback;
  if (b > cap) throw GuardExceeded("bound " + std::to_string(b) + " exceeds the guard " + std::to_string(cap));
  return b;
}

void guard_total(const MultiIndex& b, int cap) {
  for (int a = 0; a < b.rank(); ++a)
    if (b[a] > kMaxGroupSize) throw GuardExceeded("bound entry exceeds the symmetrization guard");
  if (b.total() > cap) throw GuardExceeded("bound " + b.to_string() + " exceeds the guard");
}

Json task_projector(const VerifyParams& p, Cases& cases) {
  Rng rng(p.seed);
  for (const auto& [N, bound] : cases_or(p, {{2, MultiIndex({4})}, {3, MultiIndex({2, 2})}})) {
    guard_total(bound, 6);
    for (const auto& n : indices_below(bound)) {
      if (n.is_zero()) continue;
      Segment seg = Segment::canonical(n);
      AlgElem once = qsym(AlgElem(random_scalar(canonical_vars(n), rng, true)), seg);
      cases.add({{"N", N}, {"index", n.entries()}}, alg_eq(qsym(once, seg), once, mode_for(p)));
    }
  }
  return {};
}

AlgElem ex_qsym_function(const MultiIndex& n) {
  RatFunc r(1);
  const Poly q = Poly::variable(VarLabel::q());
  for (int a = 1; a <= n.rank(); ++a)
    for (int i = 1; i <= n[a - 1]; ++i)
      for (int j = i + 1; j <= n[a - 1]; ++j) {
        Poly ti = Poly::variable(VarLabel::t(a, i));
        Poly tj = Poly::variable(VarLabel::t(a, j));
        // (1 - t_i/t_j) / (q - q^-1 t_i/t_j)
        r *= RatFunc::fraction(q * (tj - ti), q * q * tj - ti);
      }
  return AlgElem(r);
}

Json task_exqsym(const VerifyParams& p, Cases& cases) {
  for (const auto& [N, bound] : cases_or(p, {{3, MultiIndex({2, 2})}})) {
    guard_total(bound, 8);
    cases.add({{"N", N}, {"index", bound.entries()}},
              is_qsymmetric(ex_qsym_function(bound), Segment::canonical(bound), mode_for(p)));
  }
  return {};
}

Json task_assoc(const VerifyParams& p, Cases& cases) {
  Rng rng(p.seed);
  for (const auto& [N, bound] : cases_or(p, {{3, MultiIndex({2, 2})}})) {
    guard_total(bound, 5);
    auto a = random_scalar_series(N, bound, rng);
    auto b = random_scalar_series(N, bound, rng);
    auto c = random_scalar_series(N, bound, rng);
    auto lhs = star(star(a, b, bound), c, bound);
    auto rhs = star(a, star(b, c, bound), bound);
    for (const auto& n : indices_below(bound))
      cases.add({{"N", N}, {"index", n.entries()}}, alg_eq(lhs.coeff(n), rhs.coeff(n), mode_for(p)));
  }
  return {};
}

Json task_inverse(const VerifyParams& p, Cases& cases) {
  Rng rng(p.seed);
  for (const auto& [N, bound] : cases_or(p, {{2, MultiIndex({3})}, {3, MultiIndex({2, 1})}})) {
    guard_total(bound, 4);
    auto a = random_scalar_series(N, bound, rng);
    auto b = invert(a, bound);
    GenSeries one(N, bound);
    cases.add({{"N", N}, {"bound", bound.entries()}, {"side", "left"}}, series_eq(star(b, a, bound), one, mode_for(p)));
    cases.add({{"N", N}, {"bound", bound.entries()}, {"side", "right"}}, series_eq(star(a, b, bound), one, mode_for(p)));
  }
  return {};
}

Json task_rec3(const VerifyParams& p, Cases& cases) {
  int n_max = scalar_bound(p, 4, 5);
  auto e = opaque_e_series(2, MultiIndex({n_max}));
  auto d = invert(e, MultiIndex({n_max}));
  for (int n = 1; n <= n_max; ++n)
    cases.add({{"n", n}}, alg_eq(single_type_inverse(e, n), d.coeff(MultiIndex({n})), mode_for(p)));
  return {};
}

Json task_admissibility(const VerifyParams& p, Cases& cases) {
  for (const auto& [N, bound] : cases_or(p, {{3, MultiIndex({3, 3})}})) {
    guard_total(bound, 6);
    auto d = invert(opaque_e_series(N, bound), bound);
    for (const auto& n : indices_below(bound)) {
      if (n.is_admissible()) continue;
      cases.add({{"N", N}, {"index", n.entries()}}, d.coeff(n).is_zero());
    }
  }
  return {};
}

Json task_tableaux_closed_form(const VerifyParams& p, Cases& cases) {
  for (const auto& [N, bound] :
       cases_or(p, {{2, MultiIndex({4})}, {3, MultiIndex({2, 2})}, {4, MultiIndex({2, 1, 1})}})) {
    guard_total(bound, 5);
    auto closed = closed_form_inverse(N, bound);
    auto recursive = invert(opaque_e_series(N, bound), bound);
    for (const auto& n : indices_below(bound))
      cases.add({{"N", N}, {"index", n.entries()}}, alg_eq(closed.coeff(n), recursive.coeff(n), mode_for(p)));
  }
  return {};
}

Json task_zfactor(const VerifyParams& p, Cases& cases) {
  for (const auto& [N, bound] :
       cases_or(p, {{2, MultiIndex({4})}, {3, MultiIndex({2, 2})}, {4, MultiIndex({2, 1, 1})}})) {
    for (const auto& n : indices_below(bound)) {
      if (n.is_zero() || !n.is_admissible()) continue;
      for (const auto& t : enum_connected_tableaux(N, n)) {
        if (t.height() < 2) continue;
        MultiIndex m(tableaux_stats(t, N).d.front());
        Tableaux upper{std::vector<std::vector<int>>(t.rows.begin() + 1, t.rows.end())};
        RatFunc lhs = z_weight(n, m) * z_chi(upper, Segment(m, n));
        cases.add({{"N", N}, {"rows", t.rows}}, rat_eq(lhs, z_chi(t, Segment::canonical(n)), mode_for(p)));
      }
    }
  }
  return {};
}

RatFunc zz(int a, int l, int lp) { return z_factor(VarLabel::t(a, l), VarLabel::t(a + 1, lp)); }

Json task_fig3(const VerifyParams& p, Cases& cases) {
  const Tableaux fig3{{{3, 2, 1}, {3}, {1, 1}}};
  const MultiIndex n({6, 3, 2});
  RatFunc part0(1), part1(1), part2(1);
  for (int l = 5; l <= 6; ++l) part0 *= zz(1, l, 3);
  for (int l = 4; l <= 6; ++l)
    for (int lp = 1; lp <= 2; ++lp) part0 *= zz(1, l, lp);
  part0 *= zz(2, 3, 1);
  for (int l = 4; l <= 6; ++l)
    for (int lp = 1; lp <= 2; ++lp) part1 *= zz(1, l, lp);
  part1 *= zz(2, 3, 1);
  for (int l = 5; l <= 6; ++l) part2 *= zz(1, l, 3);
  RatFunc z = z_chi(fig3, Segment::canonical(n));
  cases.add({{"check", "z_chi = part0"}}, rat_eq(z, part0, mode_for(p)));
  cases.add({{"check", "part1 * part2 = part0"}}, rat_eq(part1 * part2, part0, mode_for(p)));
  MultiIndex m({3, 2, 1});
  cases.add({{"check", "z_weight(bottom row) = part1"}}, rat_eq(z_weight(n, m), part1, mode_for(p)));
  cases.add({{"check", "z_chi(upper rows) = part2"}},
            rat_eq(z_chi(Tableaux{{{3}, {1, 1}}}, Segment(m, n)), part2, mode_for(p)));

  std::string groups;
  auto rows = assign_vars(fig3, Segment::canonical(n));
  for (std::size_t i = rows.size(); i-- > 0;) groups += render_row_vars(rows[i]) + (i ? " " : "");
  const std::string seq2 = "(.;.;t[1,6],t[1,5]) (t[3,2];t[2,3];t[1,4]) (t[3,1];t[2,2],t[2,1];t[1,3],t[1,2],t[1,1])";
  cases.add({{"check", "assign_vars = seq2"}, {"groups", groups}}, groups == seq2);

  const Tableaux fig2{{{2, 2, 2, 1, 1, 1}, {1, 1, 1}, {3, 3, 2, 2, 1}, {3, 1}}};
  MultiIndex w = tableaux_stats(fig2, 4).weight;
  cases.add({{"check", "four-row tableau weight"}, {"weight", w.entries()}}, w == MultiIndex({16, 8, 3}));
  Diagram fig1{{6, 3, 5, 2}};
  cases.add({{"check", "diagram (6,3,5,2) size and height"}}, fig1.size() == 16 && fig1.height() == 4 && fig1.connected());
  return {{"part0", to_string(part0)}};
}

Json task_vforms(const VerifyParams& p, Cases& cases) {
  int k_max = scalar_bound(p, 4, 6);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<VarLabel> up, lo;
    for (int m = k; m >= 1; --m) {
      up.push_back(VarLabel::t(2, m));
      lo.push_back(VarLabel::t(1, m));
    }
    for (auto v : {VVariant::V, VVariant::Vtilde}) {
      bool same = rat_eq(v_series(up, lo, v, VForm::First), v_series(up, lo, v, VForm::Second), mode_for(p));
      cases.add({{"length", k}, {"variant", v == VVariant::V ? "V" : "Vtilde"}}, same);
    }
  }
  return {};
}

Json task_gl2_nigs(const VerifyParams& p, Cases& cases) {
  int b = scalar_bound(p, 4, kMaxGl2Bound);
  auto nigs = gl2_inverse_series(b);
  auto proj = pminus_current_series(b);
  auto closed = closed_form_inverse(2, MultiIndex({b}), proj);
  for (int n = 1; n <= b; ++n)
    cases.add({{"n", n}, {"check", "closed form"}}, alg_eq(nigs.coeff(MultiIndex({n})), closed.coeff(MultiIndex({n})), mode_for(p)));
  cases.add({{"check", "inverse * projected currents = 1"}},
            series_eq(star(nigs, proj, MultiIndex({b})), GenSeries(2, MultiIndex({b})), mode_for(p)));
  return {};
}

Json task_df_gen(const VerifyParams& p, Cases& cases) {
  int b = scalar_bound(p, 3, kMaxDfDegree);
  const VarLabel t1 = VarLabel::t(1, 1);
  AlgElem two_term = AlgElem::atom(CurrF{1, t1}) - AlgElem::atom(pminus_block(1, 1));
  cases.add({{"check", "n = 1 two-term form"}}, alg_eq(df_presentation(1), two_term, mode_for(p)));
  auto prod = star(gl2_inverse_series(b), current_series(2, MultiIndex({b})), MultiIndex({b}));
  for (int n = 0; n <= b; ++n)
    cases.add({{"n", n}, {"check", "star product"}}, alg_eq(df_presentation(n), prod.coeff(MultiIndex({n})), mode_for(p)));
  return {};
}

Json task_bethe_residue(const VerifyParams& p, Cases& cases) {
  int n_max = scalar_bound(p, kMaxBetheRoots, kMaxBetheRoots);
  for (int n = 1; n <= n_max; ++n) {
    Json per_root = Json::array();
    bool all = true;
    for (const auto& r : residue_report(n)) {
      per_root.push_back({{"j", r.j}, {"residue_zero", r.residue_zero}});
      all = all && r.residue_zero;
    }
    cases.add({{"n", n}, {"per_root", per_root}}, all);
  }
  return {};
}

Json task_lhs3(const VerifyParams& p, Cases& cases) {
  int n_max = scalar_bound(p, 3, 3);
  for (int n = 1; n <= n_max; ++n) {
    Lhs3Report r = lhs3_cancellation_check(n);
    Json per_root = Json::array();
    for (const auto& x : residue_report(n)) per_root.push_back({{"j", x.j}, {"residue_zero", x.residue_zero}});
    Json report = {{"n", n}, {"per_root", per_root}, {"lhs3", {{"pairing", r.pairing}, {"per_m", r.per_m}}}};
    cases.add(report, r.pairing != "none");
  }
  return {};
}

Json task_sym_identities(const VerifyParams& p, Cases& cases) {
  int n_max = scalar_bound(p, 4, 5);
  Rng rng(p.seed);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<VarLabel> vars;
    for (int j = 1; j <= n; ++j) vars.push_back(VarLabel::t(1, j));
    AlgElem g(random_scalar(vars, rng, true));
    for (auto v : {SymVariant::Last, SymVariant::First})
      cases.add({{"n", n}, {"variant", v == SymVariant::Last ? "last" : "first"}}, sym_identity_check(v, n, g, mode_for(p)));
  }
  return {};
}

const std::map<std::string, TaskFn>& registry() {
  static const std::map<std::string, TaskFn> tasks = {
      {"projector", task_projector},
      {"exqsym", task_exqsym},
      {"assoc", task_assoc},
      {"inverse", task_inverse},
      {"rec3", task_rec3},
      {"admissibility", task_admissibility},
      {"tableaux-closed-form", task_tableaux_closed_form},
      {"zfactor", task_zfactor},
      {"fig3", task_fig3},
      {"vforms", task_vforms},
      {"gl2-nigs", task_gl2_nigs},
      {"df-gen", task_df_gen},
      {"bethe-residue", task_bethe_residue},
      {"lhs3-cancel", task_lhs3},
      {"sym-identities", task_sym_identities},
  };
  return tasks;
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {
      "projector", "exqsym",   "assoc",  "inverse",       "rec3",        "admissibility",
      "tableaux-closed-form",  "zfactor", "fig3",         "vforms",      "gl2-nigs",
      "df-gen",    "bethe-residue",       "lhs3-cancel",  "sym-identities"};
  return names;
}

Report run_verify(const VerifyTask& task) {
  Report r;
  r.task = task.name;
  r.seed = task.params.seed;
  auto start = std::chrono::steady_clock::now();
  try {
    auto it = registry().find(task.name);
    if (it == registry().end()) throw UnknownTask("unknown task " + task.name);
    Cases cases;
    Json extra = it->second(task.params, cases);
    r.details = {{"cases", cases.list}, {"mode", task.params.randomized ? "randomized" : "exact"}};
    if (extra.is_object())
      for (auto& [k, v] : extra.items()) r.details[k] = v;
    r.status = cases.ok ? Status::Pass : Status::Fail;
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.details = {{"error", e.what()}};
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_verify_all(const VerifyParams& params, int threads) {
  const auto& names = task_names();
  std::vector<Report> reports(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) reports[i] = run_verify({names[i], params});
  };
  std::vector<std::jthread> pool;
  const int n = std::clamp(threads, 1, static_cast<int>(names.size()));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  return reports;
}

int default_threads() {
  if (const char* env = std::getenv("BETHE_SERIES_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Error:
      return 2;
  }
  return 2;
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) code = std::max(code, exit_code(r.status));
  return code;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "error";
}

Json to_json(const Report& r) {
  return {{"task", r.task}, {"status", to_string(r.status)}, {"elapsed", r.elapsed}, {"details", r.details}, {"seed", r.seed}};
}

Report report_from_json(const Json& j) {
  Report r;
  try {
    r.task = j.at("task").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status == "pass") {
      r.status = Status::Pass;
    } else if (status == "fail") {
      r.status = Status::Fail;
    } else if (status == "error") {
      r.status = Status::Error;
    } else {
      throw ParseError("unknown status " + status);
    }
    r.elapsed = j.at("elapsed").get<double>();
    r.details = j.at("details");
    r.seed = j.at("seed").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad report: ") + e.what());
  }
  return r;
}

std::string summary_line(const Report& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << r.task << ": " << to_string(r.status) << " (" << r.elapsed << " s)";
  if (r.status == Status::Error && r.details.contains("error")) out << " " << r.details["error"].get<std::string>();
  return out.str();
}

}  // namespace bethe::cli
