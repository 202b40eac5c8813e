#include "bethe/gl2.hpp"

#include <algorithm>

#include "bethe/strings.hpp"

namespace bethe {

namespace {

Poly var(const VarLabel& v) { return Poly::variable(v); }
Poly q2() { return Poly::variable(VarLabel::q(), 2); }

// Cut points 0 = k_0 < k_1 < ... < k_{p+1} = n.
std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> cuts{0};
    for (int c = 1; c < n; ++c)
      if (mask & (1u << (c - 1))) cuts.push_back(c);
    cuts.push_back(n);
    out.push_back(std::move(cuts));
  }
  return out;
}

// Sum over compositions of the ordered block products on t_{offset+1} .. t_{offset+len}.
AlgElem block_sum(int offset, int len) {
  AlgElem sum;
  for (const auto& cuts : compositions(len)) {
    const int parts = static_cast<int>(cuts.size()) - 1;
    Word w;
    Rational norm = parts % 2 == 0 ? 1 : -1;
    for (int m = parts; m >= 1; --m) {
      const auto hi = cuts[static_cast<std::size_t>(m)];
      const auto lo = cuts[static_cast<std::size_t>(m - 1)];
      norm /= factorial(hi - lo);
      w.push_back(pminus_block(offset + lo + 1, offset + hi));
    }
    sum.add_term(w, RatFunc(norm));
  }
  return sum;
}

AlgElem plain_currents(int s) {
  return s == 0 ? AlgElem(1) : current_word(MultiIndex({s}));
}

AlgElem qsym_roots(const AlgElem& x, int n) { return qsym(x, Segment::canonical(MultiIndex({n}))); }

}  // namespace

Atom pminus_block(int lo, int hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("Pminus block needs 1 <= lo <= hi");
  std::vector<VarLabel> vars;
  Word payload;
  for (int l = hi; l >= lo; --l) {
    vars.push_back(VarLabel::t(1, l));
    payload.push_back(CurrF{1, VarLabel::t(1, l)});
  }
  return make_opaque("Pminus", std::move(vars), std::move(payload));
}

GenSeries gl2_inverse_series(int bound) {
  if (bound > kMaxGl2Bound) throw BoundExceeded("gl2 inverse series is capped at bound " + std::to_string(kMaxGl2Bound));
  GenSeries::Coeffs raw;
  for (int n = 1; n <= bound; ++n) raw.emplace(MultiIndex({n}), block_sum(0, n));
  return GenSeries::from_raw(2, MultiIndex({bound}), raw);
}

GenSeries pminus_current_series(int bound) { return current_series(2, MultiIndex({bound}), Projection::Minus); }

AlgElem df_presentation(int n) {
  if (n > kMaxDfDegree) throw BoundExceeded("df_presentation is capped at n = " + std::to_string(kMaxDfDegree));
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n == 0) return AlgElem(1);
  AlgElem sum;
  for (int s = 0; s < n; ++s) sum += block_sum(s, n - s) * plain_currents(s);
  sum += plain_currents(n);
  return qsym_roots(sum, n);
}

RatFunc bethe_rhs(int j, const BetheConfig& cfg) {
  if (j < 1 || j > cfg.n) throw std::invalid_argument("root index out of range");
  RatFunc r(1);
  const Poly tj = var(cfg.root(j));
  for (int m = 1; m <= cfg.n; ++m) {
    if (m == j) continue;
    const Poly tm = var(cfg.root(m));
    // (q t_j - q^-1 t_m) / (q^-1 t_j - q t_m)
    r *= RatFunc::fraction(q2() * tj - tm, tj - q2() * tm);
  }
  return r;
}

RatFunc tau_eigenvalue(const VarLabel& t, const BetheConfig& cfg) {
  const Poly pt = var(t);
  const Poly q = var(VarLabel::q());
  RatFunc a = RatFunc::variable(VarLabel::cartan(1, 0));
  RatFunc b = RatFunc::variable(VarLabel::cartan(2, 0));
  for (int j = 1; j <= cfg.n; ++j) {
    const Poly tj = var(cfg.root(j));
    a *= RatFunc::fraction(pt - q2() * tj, q * (pt - tj));
    b *= RatFunc::fraction(q2() * pt - tj, q * (pt - tj));
  }
  return a + b;
}

RatFunc tau_residue(int j, const BetheConfig& cfg) {
  RatFunc r = residue_simple_pole(tau_eigenvalue(VarLabel::spectral(), cfg), VarLabel::spectral(),
                                  RatFunc::variable(cfg.root(j)));
  r = subst(r, VarLabel::cartan(1, 0), RatFunc::variable(cfg.k1(j)));
  return subst(r, VarLabel::cartan(2, 0), RatFunc::variable(cfg.k2(j)));
}

RatFunc impose_bethe(const RatFunc& f, int j, const BetheConfig& cfg) {
  return subst(f, cfg.k1(j), bethe_rhs(j, cfg) * RatFunc::variable(cfg.k2(j)));
}

std::vector<RootResidue> residue_report(int n, bool substitute) {
  if (n > kMaxBetheRoots) throw BoundExceeded("residue check is capped at n = " + std::to_string(kMaxBetheRoots));
  BetheConfig cfg{n};
  std::vector<RootResidue> out;
  for (int j = 1; j <= n; ++j) {
    RatFunc r = tau_residue(j, cfg);
    if (substitute) r = impose_bethe(r, j, cfg);
    out.push_back({j, r.is_zero()});
  }
  return out;
}

bool residue_cancellation_check(int n, bool substitute) {
  auto report = residue_report(n, substitute);
  return std::all_of(report.begin(), report.end(), [](const RootResidue& r) { return r.residue_zero; });
}

bool Lhs3Pairing::cancels() const {
  return identities_hold && std::all_of(per_m.begin(), per_m.end(), [](bool b) { return b; });
}

namespace {

// G(t; args) standing for the positive projection of F(t) K2(t) F(args...).
AlgElem g_block(const std::vector<VarLabel>& args) {
  const VarLabel t = VarLabel::spectral();
  std::vector<VarLabel> vars{t};
  Word payload{make_opaque("Fhalf", {t}), make_opaque("K2half", {t})};
  for (const auto& a : args) {
    vars.push_back(a);
    payload.push_back(CurrF{1, a});
  }
  return AlgElem::atom(make_opaque("G", std::move(vars), std::move(payload)));
}

std::vector<VarLabel> roots_descending(int hi, int lo) {
  std::vector<VarLabel> out;
  for (int j = hi; j >= lo; --j) out.push_back(VarLabel::t(1, j));
  return out;
}

Lhs3Pairing try_pairing(int n, SymVariant third, SymVariant fourth, Lhs3Reduction reduction) {
  const BetheConfig cfg{n};
  const Poly t = var(VarLabel::spectral());
  const Poly q = var(VarLabel::q());
  const RatFunc qq = RatFunc::fraction(q2() - Poly(Rational(1)), q);
  const Poly t1 = var(cfg.root(1));
  const Poly tn = var(cfg.root(n));
  // (q - q^-1) t_1/(t - t_1) K1_1/K2_1 and (q - q^-1) t_n/(t - t_n)
  const RatFunc c3 = qq * RatFunc::fraction(t1, t - t1) *
                     RatFunc::fraction(var(cfg.k1(1)), var(cfg.k2(1)));
  const RatFunc c4 = qq * RatFunc::fraction(tn, t - tn);
  const AlgElem h3 = c3 * g_block(roots_descending(n, 2));
  const AlgElem h4 = c4 * g_block(roots_descending(n - 1, 1));

  Lhs3Pairing out;
  out.name = std::string(third == SymVariant::First ? "first" : "last") + "-" +
             (fourth == SymVariant::First ? "first" : "last");
  out.identities_hold = sym_identity_check(third, n, h3) && sym_identity_check(fourth, n, h4);
  auto x3 = sym_identity_terms(third, n, h3);
  auto x4 = sym_identity_terms(fourth, n, h4);
  for (int m = 1; m <= n; ++m) {
    AlgElem x = x3[static_cast<std::size_t>(m - 1)] - x4[static_cast<std::size_t>(m - 1)];
    x = x.map_coefficients([&](const RatFunc& c) {
      if (reduction == Lhs3Reduction::Bethe) return impose_bethe(c, m, cfg);
      RatFunc r = subst(c, VarLabel::q(), RatFunc(1));
      return subst(r, cfg.k1(m), RatFunc::variable(cfg.k2(m)));
    });
    out.per_m.push_back(x.is_zero());
  }
  return out;
}

}  // namespace

Lhs3Report lhs3_cancellation_check(int n, Lhs3Reduction reduction) {
  if (n < 1 || n > 3) throw BoundExceeded("lhs3 check supports 1 <= n <= 3");
  Lhs3Report report;
  report.n = n;
  report.tried.push_back(try_pairing(n, SymVariant::First, SymVariant::Last, reduction));
  report.tried.push_back(try_pairing(n, SymVariant::Last, SymVariant::First, reduction));
  report.pairing = "none";
  report.per_m = report.tried.front().per_m;
  for (const auto& p : report.tried) {
    if (p.cancels()) {
      report.pairing = p.name;
      report.per_m = p.per_m;
      break;
    }
  }
  return report;
}

}  // namespace bethe
