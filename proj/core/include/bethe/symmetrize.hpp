#ifndef BETHE_SYMMETRIZE_HPP
#define BETHE_SYMMETRIZE_HPP

// q-symmetrization over products of symmetric groups acting on typed variables.

#include <string>
#include <vector>

#include "bethe/freealg.hpp"

namespace bethe {

/// (n_1, ..., n_{N-1}) with the componentwise partial order.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  static MultiIndex zero(int rank) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(e_.size()); }
  int operator[](int a) const { return e_[static_cast<std::size_t>(a)]; }
  int& operator[](int a) { return e_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& entries() const { return e_; }
  bool is_zero() const;
  int total() const;
  /// n_1 >= n_2 >= ... >= n_{N-1}.
  bool is_admissible() const;

  /// Componentwise <=.
  bool leq(const MultiIndex& other) const;
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;
  static MultiIndex parse(const std::string& text);

 private:
  std::vector<int> e_;
};

/// All s with 0 <= s <= bound componentwise, in lexicographic order.
std::vector<MultiIndex> indices_below(const MultiIndex& bound);

/// Per-type position ranges l_a+1 .. r_a; type a (1-based) is entry a-1.
struct Segment {
  MultiIndex lower;
  MultiIndex upper;

  Segment(MultiIndex l, MultiIndex r);
  static Segment canonical(const MultiIndex& n) { return Segment(MultiIndex::zero(n.rank()), n); }

  int rank() const { return lower.rank(); }
  MultiIndex span() const { return upper - lower; }
  /// Variables t^a_{l_a+1} .. t^a_{r_a}, one group per type.
  std::vector<std::vector<VarLabel>> groups() const;
};

/// One permutation per type; perms[a-1][k] is sigma^a(l_a + 1 + k).
struct GroupPerm {
  std::vector<std::vector<int>> perms;
};

/// (q^-1 - q y/x) / (q - q^-1 y/x), the weight of one inversion.
RatFunc inversion_weight(const VarLabel& x, const VarLabel& y);

RatFunc perm_weight(const GroupPerm& sigma, const Segment& seg);

constexpr int kMaxGroupSize = 6;

/// q-symmetrization over independent groups of variables, each acted on by
/// its own symmetric group; the listed order fixes the inversion weights.
/// Includes the 1/|group|! normalization.
AlgElem qsym_over(const AlgElem& x, const std::vector<std::vector<VarLabel>>& groups);

AlgElem qsym(const AlgElem& x, const Segment& seg);

/// qsym for inputs already invariant under the subgroup preserving the split
/// positions l_a+1..l_a+s_a and l_a+s_a+1..r_a of every type; sums over
/// shuffles only.
AlgElem qsym_shuffle(const AlgElem& x, const Segment& seg, const MultiIndex& split);

bool is_qsymmetric(const AlgElem& x, const Segment& seg, const EqualityMode& mode = ExactMode{});

enum class SymVariant { Last, First };
/// Which orientation of the distinguished-variable weights to use.
enum class SymOrientation { Corrected, Printed };

/// Weight attached to t_m: last uses j > m, first uses j < m.
RatFunc sym_identity_weight(SymVariant which, int n, int m, SymOrientation orientation = SymOrientation::Corrected);

/// Terms of the right-hand side, one per m = 1..n, acting on t[1,1..n].
std::vector<AlgElem> sym_identity_terms(SymVariant which, int n, const AlgElem& g,
                                        SymOrientation orientation = SymOrientation::Corrected);

/// n * Sym(G) against the sum of sym_identity_terms.
bool sym_identity_check(SymVariant which, int n, const AlgElem& g, const EqualityMode& mode = ExactMode{},
                        SymOrientation orientation = SymOrientation::Corrected);

}  // namespace bethe

#endif  // BETHE_SYMMETRIZE_HPP
