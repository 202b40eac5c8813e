#include "bethe/strings.hpp"

namespace bethe {

bool AdmissibleIndex::is_admissible() const {
  for (int v : values)
    if (v < 0) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (direction == Direction::Ascending && values[i] < values[i - 1]) return false;
    if (direction == Direction::Descending && values[i] > values[i - 1]) return false;
  }
  return true;
}

void AdmissibleIndex::validate() const {
  if (first_type < 1) throw InadmissibleIndex("index must start at type 1 or later");
  if (!is_admissible()) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) text += (i ? "," : "") + std::to_string(values[i]);
    throw InadmissibleIndex("index (" + text + ") violates the admissibility condition");
  }
}

int AdmissibleIndex::at(int a) const {
  if (a < first_type || a > last_type()) return 0;
  return values[static_cast<std::size_t>(a - first_type)];
}

namespace {

RatFunc ratio_pole(const VarLabel& x, const VarLabel& y) {
  // 1 / (1 - x/y) = y / (y - x)
  Poly py = Poly::variable(y);
  return RatFunc::fraction(py, py - Poly::variable(x));
}

RatFunc shifted(const RatFunc& f, const MultiIndex& shift) {
  return shift_vars(AlgElem(f), shift).scalar_part();
}

void check_span(const AdmissibleIndex& index, const Segment& seg) {
  MultiIndex span = seg.span();
  for (int a = 1; a <= span.rank(); ++a) {
    if (span[a - 1] != index.at(a)) {
      throw SpanMismatch("segment span " + span.to_string() + " does not match the index at type " +
                         std::to_string(a));
    }
  }
  if (index.last_type() > span.rank()) throw SpanMismatch("index has more types than the segment");
}

}  // namespace

RatFunc v_series(const std::vector<VarLabel>& upper, const std::vector<VarLabel>& lower, VVariant variant,
                 VForm form) {
  if (upper.size() != lower.size()) throw LengthMismatch("V needs lists of equal length");
  const int k = static_cast<int>(upper.size());
  auto u = [&](int m) { return upper[static_cast<std::size_t>(k - m)]; };
  auto l = [&](int m) { return lower[static_cast<std::size_t>(k - m)]; };
  RatFunc r(1);
  for (int m = 1; m <= k; ++m) {
    RatFunc diag = ratio_pole(l(m), u(m));
    if (variant == VVariant::V) diag *= RatFunc::fraction(Poly::variable(l(m)), Poly::variable(u(m)));
    r *= diag;
    if (form == VForm::First) {
      for (int mp = m + 1; mp <= k; ++mp) r *= z_factor(l(mp), u(m));
    } else {
      for (int mp = 1; mp < m; ++mp) r *= z_factor(l(m), u(mp));
    }
  }
  return r;
}

RatFunc x_prefactor(const AdmissibleIndex& index, XVariant variant, const Segment& seg) {
  index.validate();
  check_span(index, seg);
  const int N = seg.rank() + 1;
  RatFunc r(1);
  if (variant == XVariant::X) {
    if (index.direction != AdmissibleIndex::Direction::Ascending || index.first_type != 1)
      throw InadmissibleIndex("X needs an ascending index starting at type 1");
    for (int a = 1; a < index.last_type(); ++a) {
      std::vector<VarLabel> up, lo;
      for (int l = index.at(a); l >= 1; --l) {
        up.push_back(VarLabel::t(a + 1, l));
        lo.push_back(VarLabel::t(a, l));
      }
      r *= v_series(up, lo, VVariant::V);
    }
  } else {
    if (index.direction != AdmissibleIndex::Direction::Descending || index.last_type() != N - 1)
      throw InadmissibleIndex("Xtilde needs a descending index ending at type N-1");
    for (int a = index.first_type; a <= N - 2; ++a) {
      std::vector<VarLabel> up, lo;
      for (int l = index.at(a + 1); l >= 1; --l) up.push_back(VarLabel::t(a + 1, l));
      for (int l = index.at(a); l >= index.at(a) - index.at(a + 1) + 1; --l) lo.push_back(VarLabel::t(a, l));
      r *= v_series(up, lo, VVariant::Vtilde);
    }
  }
  return shifted(r, seg.lower);
}

AlgElem build_string(int j, const AdmissibleIndex& index, const Segment& seg) {
  if (index.direction != AdmissibleIndex::Direction::Ascending || index.last_type() != j)
    throw InadmissibleIndex("a string of type j needs an ascending index of length j");
  check_span(index, seg);
  RatFunc x = x_prefactor(index, XVariant::X, Segment::canonical(seg.span()));
  Word w;
  Rational norm = 1;
  for (int a = j; a >= 1; --a) {
    const int lo = index.at(a - 1);
    const int hi = index.at(a);
    norm /= factorial(hi - lo);
    for (int l = hi; l > lo; --l) w.push_back(CompF{j + 1, a, VarLabel::t(j, l)});
  }
  return shift_vars(AlgElem::word(std::move(w), RatFunc(norm) * x), seg.lower);
}

Word dual_string_word(int k, const AdmissibleIndex& index, const Segment& seg) {
  const int N = seg.rank() + 1;
  if (index.direction != AdmissibleIndex::Direction::Descending || index.first_type != k ||
      index.last_type() != N - 1)
    throw InadmissibleIndex("a dual string needs a descending index over types k..N-1");
  index.validate();
  check_span(index, seg);
  const int sk = index.at(k);
  Word w;
  for (int a = N; a > k; --a) {
    for (int l = sk - index.at(a); l > sk - index.at(a - 1); --l)
      w.push_back(CompF{a, k, VarLabel::t(k, seg.lower[k - 1] + l)});
  }
  return w;
}

AlgElem build_dual_string(int k, const AdmissibleIndex& index, const Segment& seg) {
  Word w = dual_string_word(k, index, seg);
  const int N = seg.rank() + 1;
  Rational norm = 1;
  for (int a = N; a > k; --a) norm /= factorial(index.at(a - 1) - index.at(a));
  return AlgElem::word(std::move(w), RatFunc(norm) * x_prefactor(index, XVariant::Xtilde, seg));
}

namespace {

// Expanded word with the accumulated power of (q - q^-1).
std::pair<Word, int> expand_word(const Word& w) {
  Word out;
  int power = 0;
  for (const auto& atom : w) {
    if (const auto* c = atom.get_if<CompF>()) {
      power += c->j - c->i - 1;
      for (int a = c->i; a < c->j; ++a) out.push_back(CurrF{a, c->var});
    } else if (const auto* o = atom.get_if<Opaque>()) {
      auto [inner, p] = expand_word(o->payload);
      power += p;
      out.push_back(Opaque{o->name, o->vars, std::move(inner)});
    } else {
      out.push_back(atom);
    }
  }
  return {std::move(out), power};
}

}  // namespace

AlgElem expand_composed(const AlgElem& x) {
  const Poly q = Poly::variable(VarLabel::q());
  const RatFunc qq = RatFunc::fraction(q * q - Poly(Rational(1)), q);
  AlgElem r;
  for (const auto& [w, c] : x.terms()) {
    auto [ew, power] = expand_word(w);
    r.add_term(ew, power == 0 ? c : c * qq.pow(power));
  }
  return r;
}

AlgElem current_word(const MultiIndex& n) {
  Word w;
  Rational norm = 1;
  for (int a = n.rank(); a >= 1; --a) {
    norm /= factorial(n[a - 1]);
    for (int l = n[a - 1]; l >= 1; --l) w.push_back(CurrF{a, VarLabel::t(a, l)});
  }
  return AlgElem::word(std::move(w), RatFunc(norm));
}

AlgElem project_words(const AlgElem& x, Projection p) {
  if (p == Projection::None) return x;
  const char* name = p == Projection::Minus ? "Pminus" : "Pplus";
  AlgElem r;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) {
      r.add_term(w, c);
      continue;
    }
    std::vector<VarLabel> vars;
    for (const auto& atom : w) {
      std::set<VarId> ids;
      atom.collect_variables(ids);
      for (VarId id : ids) vars.push_back(VarLabel::from_id(id));
    }
    r.add_term(Word{make_opaque(name, std::move(vars), w)}, c);
  }
  return r;
}

GenSeries current_series(int N, const MultiIndex& bound, Projection p) {
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound))
    if (!n.is_zero()) raw.emplace(n, project_words(current_word(n), p));
  return GenSeries::from_raw(N, bound, raw);
}

GenSeries string_series(int j, const MultiIndex& bound, Projection p) {
  const int N = bound.rank() + 1;
  if (j < 1 || j > N - 1) throw RankMismatch("string type out of range");
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound)) {
    if (n.is_zero()) continue;
    std::vector<int> v(n.entries().begin(), n.entries().begin() + j);
    bool tail_zero = true;
    for (int a = j + 1; a <= N - 1; ++a) tail_zero = tail_zero && n[a - 1] == 0;
    AdmissibleIndex idx = AdmissibleIndex::ascending(std::move(v));
    if (!tail_zero || !idx.is_admissible()) continue;
    raw.emplace(n, project_words(build_string(j, idx, Segment::canonical(n)), p));
  }
  return GenSeries::from_raw(N, bound, raw);
}

GenSeries dual_string_series(int k, const MultiIndex& bound, Projection p) {
  const int N = bound.rank() + 1;
  if (k < 1 || k > N - 1) throw RankMismatch("dual string type out of range");
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound)) {
    if (n.is_zero()) continue;
    std::vector<int> v(n.entries().begin() + (k - 1), n.entries().end());
    bool head_zero = true;
    for (int a = 1; a < k; ++a) head_zero = head_zero && n[a - 1] == 0;
    AdmissibleIndex idx = AdmissibleIndex::descending(k, std::move(v));
    if (!head_zero || !idx.is_admissible()) continue;
    raw.emplace(n, project_words(build_dual_string(k, idx, Segment::canonical(n)), p));
  }
  return GenSeries::from_raw(N, bound, raw);
}

}  // namespace bethe
