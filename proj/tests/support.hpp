#ifndef BETHE_TESTS_SUPPORT_HPP
#define BETHE_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "bethe/random.hpp"
#include "bethe/tableaux.hpp"

namespace bethe::test {

inline VarLabel tv(int a, int i) { return VarLabel::t(a, i); }
inline RatFunc T(int a, int i) { return RatFunc::variable(tv(a, i)); }
inline RatFunc Q() { return RatFunc::variable(VarLabel::q()); }
inline RatFunc Qinv() { return Q().inverse(); }
inline RatFunc spec_t() { return RatFunc::variable(VarLabel::spectral()); }

inline AlgElem F(int a, const VarLabel& v) { return AlgElem::atom(CurrF{a, v}); }
inline AlgElem FF(int j, int i, const VarLabel& v) { return AlgElem::atom(CompF{j, i, v}); }
inline AlgElem E(std::vector<VarLabel> vars) { return AlgElem::atom(make_opaque("E", std::move(vars))); }

/// Hand transposition weight for two variables of one type.
inline RatFunc swap_weight(const RatFunc& x, const RatFunc& y) {
  RatFunc r = x / y;
  return (Qinv() - Q() * r) / (Q() - Qinv() * r);
}

/// Two-variable q-symmetrization written out term by term.
inline AlgElem qsym2(const AlgElem& g, const VarLabel& a, const VarLabel& b) {
  AlgElem swapped = alg_rename(g, {{a, b}, {b, a}});
  return RatFunc(Rational(1, 2)) * (g + swap_weight(RatFunc::variable(a), RatFunc::variable(b)) * swapped);
}

/// Random element with up to three words of currents over t[1,1..nvars].
inline AlgElem random_elem(Rng& rng, int nvars) {
  std::vector<VarLabel> vars;
  for (int i = 1; i <= nvars; ++i) vars.push_back(tv(1, i));
  std::uniform_int_distribution<int> pick(1, nvars), len(0, 2), count(1, 3);
  AlgElem x;
  for (int k = count(rng); k > 0; --k) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(CurrF{1, tv(1, pick(rng))});
    x += AlgElem::word(w, random_scalar(vars, rng, k % 2 == 0));
  }
  return x;
}

/// All connected tableaux of a weight by exhaustive search over row lengths and fillings.
inline std::vector<Tableaux> brute_force_tableaux(int N, const std::vector<int>& weight) {
  const int rank = N - 1;
  std::vector<int> counts(static_cast<std::size_t>(rank));
  for (int a = 0; a < rank; ++a) counts[a] = weight[a] - (a + 1 < rank ? weight[a + 1] : 0);
  const int boxes = weight.empty() ? 0 : weight[0];
  std::vector<Tableaux> out;
  if (boxes == 0) return out;

  std::vector<std::vector<int>> fillings_of_len;
  auto fillings = [&](int len) {
    std::vector<std::vector<int>> all;
    std::vector<int> row(static_cast<std::size_t>(len), 1);
    while (true) {
      if (std::is_sorted(row.rbegin(), row.rend())) all.push_back(row);
      int p = 0;
      while (p < len && row[p] == rank) row[p++] = 1;
      if (p == len) break;
      ++row[p];
    }
    return all;
  };
  for (unsigned mask = 0; mask < (1u << (boxes - 1)); ++mask) {
    std::vector<int> lens;
    int cur = 1;
    for (int c = 1; c < boxes; ++c) {
      if (mask & (1u << (c - 1))) {
        lens.push_back(cur);
        cur = 1;
      } else {
        ++cur;
      }
    }
    lens.push_back(cur);
    std::vector<std::vector<std::vector<int>>> choices;
    for (int l : lens) choices.push_back(fillings(l));
    std::vector<std::size_t> pick(lens.size(), 0);
    while (true) {
      Tableaux t;
      std::vector<int> seen(static_cast<std::size_t>(rank), 0);
      for (std::size_t r = 0; r < lens.size(); ++r) {
        t.rows.push_back(choices[r][pick[r]]);
        for (int x : t.rows.back()) ++seen[static_cast<std::size_t>(x - 1)];
      }
      if (seen == counts) out.push_back(t);
      std::size_t r = 0;
      while (r < pick.size() && ++pick[r] == choices[r].size()) pick[r++] = 0;
      if (r == pick.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bethe::test

#endif  // BETHE_TESTS_SUPPORT_HPP
