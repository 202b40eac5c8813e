#ifndef BETHE_SERIES_HPP
#define BETHE_SERIES_HPP

// Truncated multi-index generating series with q-symmetric coefficients.

#include <map>

#include "bethe/symmetrize.hpp"

namespace bethe {

class GenSeries {
 public:
  using Coeffs = std::map<MultiIndex, AlgElem>;

  /// The unit series 1 of algebra rank N (multi-indices of length N-1).
  GenSeries(int N, MultiIndex bound);

  /// Entries override the unit series; an explicit zero entry removes the constant term.
  /// q-symmetrizes every coefficient on its canonical variables.
  static GenSeries from_raw(int N, MultiIndex bound, const Coeffs& raw);
  /// Stores coefficients as given; with verify set each one must pass is_qsymmetric.
  static GenSeries from_symmetric(int N, MultiIndex bound, Coeffs coeffs, bool verify = true);

  int N() const { return N_; }
  const MultiIndex& bound() const { return bound_; }
  const Coeffs& coeffs() const { return coeffs_; }
  /// Zero when absent; throws IndexOutOfBound beyond the bound.
  AlgElem coeff(const MultiIndex& n) const;
  bool is_unital() const;
  /// True when construction applied qsym to raw input.
  bool symmetrized_on_construction() const { return symmetrized_; }

  /// Same coefficients, smaller bound.
  GenSeries truncated(const MultiIndex& bound) const;

 private:
  GenSeries() = default;
  void check_index(const MultiIndex& n) const;
  void set(const MultiIndex& n, AlgElem value);

  int N_ = 2;
  MultiIndex bound_;
  Coeffs coeffs_;
  bool symmetrized_ = false;

  friend GenSeries star(const GenSeries&, const GenSeries&, const MultiIndex&);
  friend GenSeries invert(const GenSeries&, const MultiIndex&, int);
};

/// (q - q^-1 x/y) / (1 - x/y).
RatFunc z_factor(const VarLabel& x, const VarLabel& y);

/// prod_a prod_{s_a < l <= n_a} prod_{0 < l' <= s_{a+1}} (q - q^-1 t^a_l/t^{a+1}_l') / (1 - t^a_l/t^{a+1}_l').
RatFunc z_weight(const MultiIndex& n, const MultiIndex& s);

/// Renames t^a_i to t^a_{shift_a + i}.
AlgElem shift_vars(const AlgElem& x, const MultiIndex& shift);

GenSeries star(const GenSeries& a, const GenSeries& b, const MultiIndex& bound);

enum RecursionOrder : int { kLexOrder = 0, kGradedOrder = 1 };

/// B with B * A = 1 up to the bound; coefficients solved in the given order.
GenSeries invert(const GenSeries& a, const MultiIndex& bound, int order = kLexOrder);

bool series_eq(const GenSeries& a, const GenSeries& b, const EqualityMode& mode = ExactMode{});

}  // namespace bethe

#endif  // BETHE_SERIES_HPP
