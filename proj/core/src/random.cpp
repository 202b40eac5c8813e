#include "bethe/random.hpp"

namespace bethe {

namespace {

Rational small(Rng& rng, bool nonzero) {
  std::uniform_int_distribution<int> d(-3, 3);
  int v = d(rng);
  while (nonzero && v == 0) v = d(rng);
  return Rational(v);
}

}  // namespace

RatFunc random_scalar(const std::vector<VarLabel>& vars, Rng& rng, bool with_pole) {
  Poly num(small(rng, true));
  for (const auto& v : vars) num += Poly::variable(v).scaled(small(rng, false));
  if (!with_pole || vars.empty()) return RatFunc(num);
  std::uniform_int_distribution<int> c(1, 5);
  return RatFunc::fraction(num, Poly::variable(vars.front()) + Poly(Rational(c(rng))));
}

GenSeries random_scalar_series(int N, const MultiIndex& bound, Rng& rng) {
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound)) {
    if (n.is_zero()) continue;
    std::vector<VarLabel> vars;
    for (const auto& g : Segment::canonical(n).groups()) vars.insert(vars.end(), g.begin(), g.end());
    raw.emplace(n, AlgElem(random_scalar(vars, rng)));
  }
  return GenSeries::from_raw(N, bound, raw);
}

}  // namespace bethe
