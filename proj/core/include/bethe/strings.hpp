#ifndef BETHE_STRINGS_HPP
#define BETHE_STRINGS_HPP

// Rational prefactors, string and dual-string words, composed currents and
// the normalized current-product series.

#include <optional>
#include <vector>

#include "bethe/series.hpp"

namespace bethe {

/// Monotone index: ascending s_1 <= ... <= s_j for strings, descending
/// s_k >= ... >= s_{N-1} for dual strings. first_type is 1 resp. k.
struct AdmissibleIndex {
  enum class Direction { Ascending, Descending };
  Direction direction = Direction::Ascending;
  int first_type = 1;
  std::vector<int> values;

  static AdmissibleIndex ascending(std::vector<int> v) { return {Direction::Ascending, 1, std::move(v)}; }
  static AdmissibleIndex descending(int k, std::vector<int> v) { return {Direction::Descending, k, std::move(v)}; }

  bool is_admissible() const;
  /// Throws InadmissibleIndex.
  void validate() const;
  int last_type() const { return first_type + static_cast<int>(values.size()) - 1; }
  /// Value for type a, zero outside first_type..last_type.
  int at(int a) const;
};

enum class VVariant { V, Vtilde };
/// Which of the two equal displayed products to evaluate.
enum class VForm { First, Second };

/// upper = (t2_k, ..., t2_1), lower = (t1_k, ..., t1_1), listed highest index first.
RatFunc v_series(const std::vector<VarLabel>& upper, const std::vector<VarLabel>& lower, VVariant variant,
                 VForm form = VForm::First);

enum class XVariant { X, Xtilde };

/// X for ascending indices, Xtilde for descending ones. The algebra rank is
/// seg.rank() + 1 and seg.lower shifts all variables.
RatFunc x_prefactor(const AdmissibleIndex& index, XVariant variant, const Segment& seg);

/// String of type j over t[seg]; seg has rank N-1 and span equal to the index.
AlgElem build_string(int j, const AdmissibleIndex& index, const Segment& seg);

/// Dual string starting at type k; N = seg.rank() + 1.
AlgElem build_dual_string(int k, const AdmissibleIndex& index, const Segment& seg);

/// Word part of a dual string without its factorials, as in the displayed row example.
Word dual_string_word(int k, const AdmissibleIndex& index, const Segment& seg);

/// CompF(j,i,v) -> (q - q^-1)^(j-i-1) F_i(v) ... F_{j-1}(v), also inside payloads.
AlgElem expand_composed(const AlgElem& x);

/// Unsymmetrized coefficient of the current-product series at n.
AlgElem current_word(const MultiIndex& n);

enum class Projection { None, Minus, Plus };

/// Wraps every word into Pminus/Pplus, keeping the rational coefficient outside.
AlgElem project_words(const AlgElem& x, Projection p);

GenSeries current_series(int N, const MultiIndex& bound, Projection p = Projection::None);

/// Series with coefficients qsym(build_string) at ascending indices supported on types 1..j.
GenSeries string_series(int j, const MultiIndex& bound, Projection p = Projection::None);

/// Series with coefficients qsym(build_dual_string) at descending indices supported on types k..N-1.
GenSeries dual_string_series(int k, const MultiIndex& bound, Projection p = Projection::None);

}  // namespace bethe

#endif  // BETHE_STRINGS_HPP
