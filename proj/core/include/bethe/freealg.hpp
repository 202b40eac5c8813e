#ifndef BETHE_FREEALG_HPP
#define BETHE_FREEALG_HPP

// Free associative algebra over an alphabet of currents, composed currents
// and opaque blocks, with rational-function coefficients.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bethe/ratcore.hpp"

namespace bethe {

class Atom;
using Word = std::vector<Atom>;

/// F_a(var).
struct CurrF {
  int a = 1;
  VarLabel var = VarLabel::q();
};

/// F_{j,i}(var), 1 <= i < j.
struct CompF {
  int j = 2;
  int i = 1;
  VarLabel var = VarLabel::q();
};

/// Uninterpreted symbol carrying its variables and, optionally, the word it wraps.
struct Opaque {
  std::string name;
  std::vector<VarLabel> vars;
  Word payload;
};

/// Names accepted for Opaque atoms.
const std::set<std::string>& opaque_vocabulary();

class Atom {
 public:
  using Value = std::variant<CurrF, CompF, Opaque>;

  Atom(CurrF x);   // NOLINT(google-explicit-constructor)
  Atom(CompF x);   // NOLINT(google-explicit-constructor)
  Atom(Opaque x);  // NOLINT(google-explicit-constructor)

  const Value& value() const { return value_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&value_);
  }

  /// Every variable slot, including those inside the payload.
  void collect_variables(std::set<VarId>& out) const;
  Atom renamed(const std::map<VarId, VarId>& ids) const;

  friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  Value value_;
};

Atom make_opaque(const std::string& name, std::vector<VarLabel> vars, Word payload = {});

std::string to_string(const Atom& atom);
std::string to_string(const Word& word);

/// Finite sum of coefficient * word, canonical: no zero coefficients.
class AlgElem {
 public:
  using Terms = std::map<Word, RatFunc>;

  AlgElem() = default;
  AlgElem(const RatFunc& scalar);  // NOLINT(google-explicit-constructor)
  AlgElem(int scalar) : AlgElem(RatFunc(scalar)) {}  // NOLINT(google-explicit-constructor)
  static AlgElem word(Word w, const RatFunc& coeff = RatFunc(1));
  static AlgElem atom(Atom a, const RatFunc& coeff = RatFunc(1));

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty word.
  RatFunc scalar_part() const;
  RatFunc coefficient(const Word& w) const;
  std::set<VarId> variables() const;

  /// Adds coeff * w in place.
  void add_term(const Word& w, const RatFunc& coeff);

  AlgElem operator-() const;
  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const RatFunc& c, const AlgElem& x);
  AlgElem& operator+=(const AlgElem& y);
  AlgElem& operator-=(const AlgElem& y);

  /// Applies f to every coefficient, dropping terms that become zero.
  template <class Fn>
  AlgElem map_coefficients(Fn&& f) const {
    AlgElem r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

 private:
  Terms terms_;
};

AlgElem alg_mul(const AlgElem& lhs, const AlgElem& rhs);

/// Renames coefficient variables and every atom slot.
AlgElem alg_rename(const AlgElem& x, const RenameMap& map);
AlgElem alg_rename_by_ids(const AlgElem& x, const std::map<VarId, VarId>& ids);

bool alg_eq(const AlgElem& lhs, const AlgElem& rhs, const EqualityMode& mode = ExactMode{});

/// Human-readable rendering.
std::string to_string(const AlgElem& x);

}  // namespace bethe

#endif  // BETHE_FREEALG_HPP
