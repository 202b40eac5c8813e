#ifndef BETHE_GL2_HPP
#define BETHE_GL2_HPP

// The rank-one case: inverse projection series, the Ding-Frenkel type
// presentation, universal Bethe equations and the transfer-matrix eigenvalue.

#include <string>
#include <vector>

#include "bethe/series.hpp"

namespace bethe {

/// Roots t_j = t[1,j]; K1_j, K2_j = k[1,j], k[2,j]; the spectral parameter t
/// carries K1(t), K2(t) = k[1,0], k[2,0].
struct BetheConfig {
  int n = 0;

  VarLabel root(int j) const { return VarLabel::t(1, j); }
  VarLabel k1(int j) const { return VarLabel::cartan(1, j); }
  VarLabel k2(int j) const { return VarLabel::cartan(2, j); }
};

constexpr int kMaxGl2Bound = 6;
constexpr int kMaxDfDegree = 5;
constexpr int kMaxBetheRoots = 4;

/// Pminus[F(t_hi) ... F(t_lo)] for lo <= hi.
Atom pminus_block(int lo, int hi);

/// Inverse of the projected current series, written with compositions of n.
GenSeries gl2_inverse_series(int bound);

/// Projected current series: qsym(Pminus[F(t_n)...F(t_1)]) / n!.
GenSeries pminus_current_series(int bound);

/// Coefficient of u^n in the inverse series times the current series, in the
/// block presentation.
AlgElem df_presentation(int n);

RatFunc bethe_rhs(int j, const BetheConfig& cfg);

/// K1(t) prod (q^-1 t - q t_j)/(t - t_j) + K2(t) prod (q t - q^-1 t_j)/(t - t_j).
RatFunc tau_eigenvalue(const VarLabel& t, const BetheConfig& cfg);

/// Residue of tau at t = t_j with K_w(t) evaluated at t_j.
RatFunc tau_residue(int j, const BetheConfig& cfg);

/// K1_j -> bethe_rhs(j) K2_j.
RatFunc impose_bethe(const RatFunc& f, int j, const BetheConfig& cfg);

struct RootResidue {
  int j = 0;
  bool residue_zero = false;
};

std::vector<RootResidue> residue_report(int n, bool substitute = true);
bool residue_cancellation_check(int n, bool substitute = true);

enum class Lhs3Reduction { Bethe, Classical };

struct Lhs3Pairing {
  std::string name;
  bool identities_hold = false;
  std::vector<bool> per_m;
  bool cancels() const;
};

struct Lhs3Report {
  int n = 0;
  /// Name of the first pairing that cancels, "none" otherwise.
  std::string pairing;
  std::vector<bool> per_m;
  std::vector<Lhs3Pairing> tried;
};

/// The two G-terms rewritten through the Sym identities, one pairing per
/// orientation; Classical sets q = 1 and K1_m = K2_m instead of the Bethe substitution.
Lhs3Report lhs3_cancellation_check(int n, Lhs3Reduction reduction = Lhs3Reduction::Bethe);

}  // namespace bethe

#endif  // BETHE_GL2_HPP
