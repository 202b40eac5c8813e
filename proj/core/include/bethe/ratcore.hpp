#ifndef BETHE_RATCORE_HPP
#define BETHE_RATCORE_HPP

// Exact sparse multivariate rational functions over Q.
//
// Variables are the deformation parameter q, the indexed variables t^a_i,
// a spectral variable t and the commuting Cartan symbols k_w(t_i) used by
// the gl(2) checks.  Numerators are Laurent polynomials (monomials are
// units), denominators are kept as a multiset of canonical polynomial
// factors.  Nothing is ever reduced by a GCD; equality goes through the
// zero test of a difference.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "bethe/errors.hpp"

namespace bethe {

using Rational = mpq_class;

/// Packed 16-bit identifier of a variable; ordering of ids is the variable order.
using VarId = std::uint16_t;

/// Name of one indeterminate.
///
/// Ordering: q, then t^a_i by (a, i), then the spectral t, then the Cartan
/// symbols k_w(t^1_i) by (w, i) where i = 0 stands for k_w(t).
class VarLabel {
 public:
  enum class Kind : std::uint8_t { Q = 0, T = 1, Spectral = 2, Cartan = 3 };

  static VarLabel q() { return VarLabel(Kind::Q, 0, 0); }
  static VarLabel t(int type, int position);
  static VarLabel spectral() { return VarLabel(Kind::Spectral, 0, 0); }
  /// k_which(t^1_position); position 0 means k_which(t) at the spectral variable.
  static VarLabel cartan(int which, int position);

  Kind kind() const { return kind_; }
  int type_index() const { return index_; }
  int position() const { return position_; }

  VarId id() const;
  static VarLabel from_id(VarId id);

  /// "q", "t[a,i]", "t" or "k[w,i]".
  std::string to_string() const;
  static VarLabel parse(const std::string& text);

  friend bool operator==(const VarLabel&, const VarLabel&) = default;
  friend auto operator<=>(const VarLabel& a, const VarLabel& b) { return a.id() <=> b.id(); }

 private:
  VarLabel(Kind kind, int index, int position);

  Kind kind_ = Kind::Q;
  std::uint8_t index_ = 0;
  std::uint16_t position_ = 0;
};

using RenameMap = std::map<VarLabel, VarLabel>;

/// Laurent monomial: sorted (variable, nonzero exponent) pairs, fixed capacity.
class Monomial {
 public:
  static constexpr std::size_t kCapacity = 28;

  Monomial() = default;
  static Monomial variable(VarId v, int exponent = 1);

  std::size_t size() const { return size_; }
  VarId var(std::size_t i) const { return vars_[i]; }
  int exponent(std::size_t i) const { return exps_[i]; }
  int exponent_of(VarId v) const;
  int degree() const;
  bool is_one() const { return size_ == 0; }
  bool has_negative_exponent() const;

  Monomial inverse() const;
  /// True when every exponent of `other` minus this one stays nonnegative.
  bool divides(const Monomial& other) const;
  /// Componentwise minimum, treating absent variables as exponent 0.
  static Monomial min(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  void push(VarId v, int e);

  std::uint8_t size_ = 0;
  std::array<VarId, kCapacity> vars_{};
  std::array<std::int16_t, kCapacity> exps_{};
};

/// Graded lexicographic comparison (smaller id is the more significant variable).
int compare(const Monomial& a, const Monomial& b);

/// Sparse Laurent polynomial over Q in canonical form: terms strictly
/// decreasing in graded-lex order, no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long constant) : Poly(Rational(constant)) {}
  static Poly variable(const VarLabel& v, int exponent = 1);
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts, merges and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  std::set<VarId> variables() const;
  int max_degree_in(VarId v) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Rational& c, const Monomial& m = Monomial()) const;
  Poly pow(unsigned e) const;

  /// Componentwise minimum exponent over all terms (the monomial content).
  Monomial min_monomial() const;
  /// Exact quotient by `divisor` when it divides; both must be ordinary
  /// polynomials apart from a common monomial shift.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  Poly renamed(const std::map<VarId, VarId>& map) const;
  Rational evaluate(const std::map<VarId, Rational>& point) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

/// A unit (nonzero scalar times Laurent monomial) and the remaining canonical
/// factor: a polynomial without monomial content with leading coefficient 1.
struct FactorSplit {
  Rational coeff;
  Monomial monomial;
  Poly factor;  // constant 1 when the input was a unit
};
FactorSplit split_unit(const Poly& p);

/// Rational function num / prod(factor^mult).
class RatFunc {
 public:
  using Factor = std::pair<Poly, int>;

  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(Rational(c)) {}    // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly num) : num_(std::move(num)) {}
  static RatFunc variable(const VarLabel& v) { return RatFunc(Poly::variable(v)); }
  /// num / den; throws DivisionByZero on a zero denominator.
  static RatFunc fraction(const Poly& num, const Poly& den);
  /// Builds directly from parts; factors must already be canonical.
  static RatFunc from_parts(Poly num, std::vector<Factor> den);

  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Poly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  std::set<VarId> variables() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// Cancels denominator factors that divide the numerator exactly.
  RatFunc reduced() const;

  /// Value at a point; nullopt if a denominator factor vanishes there.
  std::optional<Rational> evaluate(const std::map<VarId, Rational>& point) const;

  /// Structural equality of the stored representation.
  friend bool same_representation(const RatFunc& a, const RatFunc& b);

 private:
  Poly num_;
  std::vector<Factor> den_;
};

struct ExactMode {};
struct RandomizedMode {
  std::uint64_t seed = 1;
  int trials = 3;
};
using EqualityMode = std::variant<ExactMode, RandomizedMode>;

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Field arithmetic; Neg ignores rhs.
/// Sum over one common denominator, reduced once.
RatFunc sum(const std::vector<RatFunc>& terms);

RatFunc rat_arith(const RatFunc& lhs, const RatFunc& rhs, ArithOp op);

bool rat_eq(const RatFunc& lhs, const RatFunc& rhs, const EqualityMode& mode = ExactMode{});

/// Relabels variables. Unmapped labels stay; a Cartan symbol k_w(t^1_i) follows
/// its root t^1_i unless mapped explicitly.
RatFunc rename(const RatFunc& f, const RenameMap& map);

/// Applies an id map produced by rename_ids.
RatFunc rename_by_ids(const RatFunc& f, const std::map<VarId, VarId>& ids);

/// Expanded id map for `map` restricted to `occurring`; validates injectivity.
std::map<VarId, VarId> rename_ids(const RenameMap& map, const std::set<VarId>& occurring);

RatFunc subst(const RatFunc& f, const VarLabel& var, const RatFunc& value);

/// ((var - at) f)|_{var = at}.
RatFunc residue_simple_pole(const RatFunc& f, const VarLabel& var, const RatFunc& at);

Rational factorial(int n);

/// Human-readable rendering.
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);

}  // namespace bethe

#endif  // BETHE_RATCORE_HPP
