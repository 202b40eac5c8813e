#include "bethe/freealg.hpp"

#include <sstream>

namespace bethe {

const std::set<std::string>& opaque_vocabulary() {
  static const std::set<std::string> names = {"E", "Pminus", "Pplus", "K1", "K2", "G", "Fhalf", "K2half"};
  return names;
}

Atom::Atom(CurrF x) : value_(std::move(x)) {
  if (std::get<CurrF>(value_).a < 1) throw std::invalid_argument("current index must be positive");
}

Atom::Atom(CompF x) : value_(std::move(x)) {
  const auto& c = std::get<CompF>(value_);
  if (c.i < 1 || c.j <= c.i) throw std::invalid_argument("composed current needs 1 <= i < j");
}

Atom::Atom(Opaque x) : value_(std::move(x)) {
  const auto& o = std::get<Opaque>(value_);
  if (opaque_vocabulary().count(o.name) == 0) throw std::invalid_argument("unregistered opaque symbol " + o.name);
}

Atom make_opaque(const std::string& name, std::vector<VarLabel> vars, Word payload) {
  return Atom(Opaque{name, std::move(vars), std::move(payload)});
}

void Atom::collect_variables(std::set<VarId>& out) const {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Opaque>) {
          for (const auto& v : x.vars) out.insert(v.id());
          for (const auto& a : x.payload) a.collect_variables(out);
        } else {
          out.insert(x.var.id());
        }
      },
      value_);
}

namespace {

VarLabel map_label(const VarLabel& v, const std::map<VarId, VarId>& ids) {
  auto it = ids.find(v.id());
  return it == ids.end() ? v : VarLabel::from_id(it->second);
}

}  // namespace

Atom Atom::renamed(const std::map<VarId, VarId>& ids) const {
  return std::visit(
      [&ids](const auto& x) -> Atom {
        using T = std::decay_t<decltype(x)>;
        T y = x;
        if constexpr (std::is_same_v<T, Opaque>) {
          for (auto& v : y.vars) v = map_label(v, ids);
          for (auto& a : y.payload) a = a.renamed(ids);
        } else {
          y.var = map_label(y.var, ids);
        }
        return Atom(std::move(y));
      },
      value_);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  if (const auto* x = a.get_if<CurrF>()) {
    const auto* y = b.get_if<CurrF>();
    if (auto c = x->a <=> y->a; c != 0) return c;
    return x->var <=> y->var;
  }
  if (const auto* x = a.get_if<CompF>()) {
    const auto* y = b.get_if<CompF>();
    if (auto c = x->j <=> y->j; c != 0) return c;
    if (auto c = x->i <=> y->i; c != 0) return c;
    return x->var <=> y->var;
  }
  const auto& x = std::get<Opaque>(a.value_);
  const auto& y = std::get<Opaque>(b.value_);
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.vars <=> y.vars; c != 0) return c;
  return x.payload <=> y.payload;
}

std::string to_string(const Atom& atom) {
  std::ostringstream out;
  if (const auto* x = atom.get_if<CurrF>()) {
    out << "F" << x->a << "(" << x->var.to_string() << ")";
  } else if (const auto* x = atom.get_if<CompF>()) {
    out << "F" << x->j << "," << x->i << "(" << x->var.to_string() << ")";
  } else {
    const auto& o = std::get<Opaque>(atom.value());
    out << o.name;
    if (!o.payload.empty()) {
      out << "[" << to_string(o.payload) << "]";
    } else {
      out << "(";
      for (std::size_t i = 0; i < o.vars.size(); ++i) out << (i ? "," : "") << o.vars[i].to_string();
      out << ")";
    }
  }
  return out.str();
}

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += to_string(word[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------

AlgElem::AlgElem(const RatFunc& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

AlgElem AlgElem::word(Word w, const RatFunc& coeff) {
  AlgElem x;
  if (!coeff.is_zero()) x.terms_.emplace(std::move(w), coeff);
  return x;
}

AlgElem AlgElem::atom(Atom a, const RatFunc& coeff) { return word(Word{std::move(a)}, coeff); }

RatFunc AlgElem::scalar_part() const { return coefficient(Word{}); }

RatFunc AlgElem::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::set<VarId> AlgElem::variables() const {
  std::set<VarId> out;
  for (const auto& [w, c] : terms_) {
    for (const auto& a : w) a.collect_variables(out);
    auto cv = c.variables();
    out.insert(cv.begin(), cv.end());
  }
  return out;
}

void AlgElem::add_term(const Word& w, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, -c);
  return *this;
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  r += y;
  return r;
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  r -= y;
  return r;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  AlgElem r;
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      r.add_term(w, cx * cy);
    }
  }
  return r;
}

AlgElem operator*(const RatFunc& c, const AlgElem& x) {
  if (c.is_zero()) return AlgElem();
  AlgElem r;
  for (const auto& [w, cx] : x.terms_) r.terms_.emplace(w, c * cx);
  return r;
}

AlgElem alg_mul(const AlgElem& lhs, const AlgElem& rhs) { return lhs * rhs; }

AlgElem alg_rename_by_ids(const AlgElem& x, const std::map<VarId, VarId>& ids) {
  if (ids.empty()) return x;
  AlgElem r;
  for (const auto& [w, c] : x.terms()) {
    Word rw;
    rw.reserve(w.size());
    for (const auto& a : w) rw.push_back(a.renamed(ids));
    r.add_term(rw, rename_by_ids(c, ids));
  }
  return r;
}

AlgElem alg_rename(const AlgElem& x, const RenameMap& map) {
  return alg_rename_by_ids(x, rename_ids(map, x.variables()));
}

bool alg_eq(const AlgElem& lhs, const AlgElem& rhs, const EqualityMode& mode) {
  if (std::holds_alternative<ExactMode>(mode)) return (lhs - rhs).is_zero();
  std::set<Word> words;
  for (const auto& [w, c] : lhs.terms()) words.insert(w);
  for (const auto& [w, c] : rhs.terms()) words.insert(w);
  for (const auto& w : words) {
    if (!rat_eq(lhs.coefficient(w), rhs.coefficient(w), mode)) return false;
  }
  return true;
}

std::string to_string(const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string cs = to_string(c);
    if (w.empty()) {
      out << (x.size() == 1 ? cs : "(" + cs + ")");
    } else if (c.is_one()) {
      out << to_string(w);
    } else {
      out << "(" << cs << ")*" << to_string(w);
    }
  }
  return out.str();
}

}  // namespace bethe
