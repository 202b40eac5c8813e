#ifndef BETHE_TABLEAUX_HPP
#define BETHE_TABLEAUX_HPP

// Connected tableaux, their statistics and variable assignment, and the
// closed-form inverse of the dual-string series.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bethe/series.hpp"

namespace bethe {

/// Ordered decomposition of a size into parts, bottom row first.
struct Diagram {
  std::vector<int> parts;

  int size() const;
  int height() const { return static_cast<int>(parts.size()); }
  bool connected() const;
};

/// Rows listed bottom to top; each row holds type labels non-increasing from the left.
struct Tableaux {
  std::vector<std::vector<int>> rows;

  int height() const { return static_cast<int>(rows.size()); }
  Diagram diagram() const;
  /// Rows non-increasing with labels in [1, N-1].
  bool is_valid(int N) const;
  bool connected() const { return diagram().connected(); }

  friend bool operator==(const Tableaux&, const Tableaux&) = default;
  friend auto operator<=>(const Tableaux&, const Tableaux&) = default;
};

/// c[i][a-1]: boxes of type a in row i (0-based from the bottom); d and h as cumulative counts.
struct TabStats {
  std::vector<std::vector<int>> c;
  std::vector<std::vector<int>> d;
  std::vector<std::vector<int>> h;
  MultiIndex weight;
};

TabStats tableaux_stats(const Tableaux& t, int N);

constexpr int kMaxTableauxBoxes = 12;

/// All connected tableaux of the given weight, ordered by (height, parts, rows).
std::vector<Tableaux> enum_connected_tableaux(int N, const MultiIndex& weight);

/// Variables of one row grouped by type: vars[a-1] in increasing position.
using RowVars = std::vector<std::vector<VarLabel>>;

/// One RowVars per row, bottom row first.
std::vector<RowVars> assign_vars(const Tableaux& t, const Segment& seg);

/// Variables of every box, per row from the left; box_vars[i][b][a-1] is its type-a variable.
std::vector<std::vector<std::vector<VarLabel>>> box_vars(const Tableaux& t, const Segment& seg);

/// "(t3_1;t2_2,t2_1;t1_3,t1_2,t1_1)" with types and positions descending, empty types as ".".
std::string render_row_vars(const RowVars& row);

RatFunc z_chi(const Tableaux& t, const Segment& seg);

enum class EMode { Opaque, Expanded };

/// q-symmetrized Opaque("E", vars) over the row's groups.
AlgElem opaque_row(const RowVars& row);

/// Row coefficient as displayed in the worked example: diagonal box factors
/// times Pminus of the word F_{a+1,1}(t1 of box), boxes left to right.
AlgElem expanded_row(const Tableaux& t, const Segment& seg, int row);

/// Ordered product over rows, top row leftmost.
AlgElem e_chi(const Tableaux& t, const Segment& seg, EMode mode = EMode::Opaque);

/// Same product with each row's coefficient read from a series and shifted to its variables.
AlgElem e_chi_from_series(const Tableaux& t, const Segment& seg, const GenSeries& e);

/// Dual-string series with opaque coefficients: qsym(E(vars)) at admissible nonzero indices.
GenSeries opaque_e_series(int N, const MultiIndex& bound);

/// Single-type inverse coefficient at n: qsym of the signed sum over
/// compositions of ordered products of shifted coefficients of e.
AlgElem single_type_inverse(const GenSeries& e, int n);

/// Sum over connected tableaux of (-1)^h qsym(Z_chi E_chi), with rows read
/// from e (the opaque series when omitted).
GenSeries closed_form_inverse(int N, const MultiIndex& bound, const std::optional<GenSeries>& e = std::nullopt);

}  // namespace bethe

#endif  // BETHE_TABLEAUX_HPP
