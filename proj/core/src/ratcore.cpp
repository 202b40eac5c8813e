#include "bethe/ratcore.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace bethe {

// ---------------------------------------------------------------------------
// VarLabel

namespace {
constexpr int kKindShift = 14;
constexpr int kIndexShift = 10;
constexpr int kMaxIndex = 15;
constexpr int kMaxPosition = 1023;
}  // namespace

VarLabel::VarLabel(Kind kind, int index, int position)
    : kind_(kind), index_(static_cast<std::uint8_t>(index)), position_(static_cast<std::uint16_t>(position)) {}

VarLabel VarLabel::t(int type, int position) {
  if (type < 1 || type > kMaxIndex || position < 1 || position > kMaxPosition) {
    throw std::invalid_argument("t[" + std::to_string(type) + "," + std::to_string(position) + "] out of range");
  }
  return VarLabel(Kind::T, type, position);
}

VarLabel VarLabel::cartan(int which, int position) {
  if (which < 1 || which > 2 || position < 0 || position > kMaxPosition) {
    throw std::invalid_argument("k[" + std::to_string(which) + "," + std::to_string(position) + "] out of range");
  }
  return VarLabel(Kind::Cartan, which, position);
}

VarId VarLabel::id() const {
  return static_cast<VarId>((static_cast<int>(kind_) << kKindShift) | (index_ << kIndexShift) | position_);
}

VarLabel VarLabel::from_id(VarId id) {
  auto kind = static_cast<Kind>(id >> kKindShift);
  int index = (id >> kIndexShift) & kMaxIndex;
  int position = id & kMaxPosition;
  return VarLabel(kind, index, position);
}

std::string VarLabel::to_string() const {
  switch (kind_) {
    case Kind::Q:
      return "q";
    case Kind::T:
      return "t[" + std::to_string(index_) + "," + std::to_string(position_) + "]";
    case Kind::Spectral:
      return "t";
    case Kind::Cartan:
      return "k[" + std::to_string(index_) + "," + std::to_string(position_) + "]";
  }
  return "?";
}

VarLabel VarLabel::parse(const std::string& text) {
  if (text == "q") return q();
  if (text == "t") return spectral();
  if (text.size() >= 6 && (text[0] == 't' || text[0] == 'k') && text[1] == '[' && text.back() == ']') {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("bad variable label: " + text);
    try {
      int a = std::stoi(text.substr(2, comma - 2));
      int i = std::stoi(text.substr(comma + 1, text.size() - comma - 2));
      return text[0] == 't' ? t(a, i) : cartan(a, i);
    } catch (const std::logic_error&) {
      throw ParseError("bad variable label: " + text);
    }
  }
  throw ParseError("bad variable label: " + text);
}

// ---------------------------------------------------------------------------
// Monomial

void Monomial::push(VarId v, int e) {
  if (e == 0) return;
  if (size_ >= kCapacity) throw CapacityExceeded("monomial has too many variables");
  if (e > INT16_MAX || e < INT16_MIN) throw CapacityExceeded("exponent overflow");
  vars_[size_] = v;
  exps_[size_] = static_cast<std::int16_t>(e);
  ++size_;
}

Monomial Monomial::variable(VarId v, int exponent) {
  Monomial m;
  m.push(v, exponent);
  return m;
}

int Monomial::exponent_of(VarId v) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (vars_[i] == v) return exps_[i];
    if (vars_[i] > v) break;
  }
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
  return d;
}

bool Monomial::has_negative_exponent() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (exps_[i] < 0) return true;
  return false;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (std::size_t i = 0; i < size_; ++i) m.exps_[i] = static_cast<std::int16_t>(-exps_[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size_ || j < b.size_) {
    if (j == b.size_ || (i < a.size_ && a.vars_[i] < b.vars_[j])) {
      r.push(a.vars_[i], a.exps_[i]);
      ++i;
    } else if (i == a.size_ || b.vars_[j] < a.vars_[i]) {
      r.push(b.vars_[j], b.exps_[j]);
      ++j;
    } else {
      r.push(a.vars_[i], a.exps_[i] + b.exps_[j]);
      ++i;
      ++j;
    }
  }
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.vars_[i] != b.vars_[i] || a.exps_[i] != b.exps_[i]) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t i = 0, j = 0;
  while (i < size_ || j < other.size_) {
    if (j == other.size_ || (i < size_ && vars_[i] < other.vars_[j])) {
      if (exps_[i] > 0) return false;
      ++i;
    } else if (i == size_ || other.vars_[j] < vars_[i]) {
      if (other.exps_[j] < 0) return false;
      ++j;
    } else {
      if (exps_[i] > other.exps_[j]) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size_ || j < b.size_) {
    if (j == b.size_ || (i < a.size_ && a.vars_[i] < b.vars_[j])) {
      r.push(a.vars_[i], std::min<int>(a.exps_[i], 0));
      ++i;
    } else if (i == a.size_ || b.vars_[j] < a.vars_[i]) {
      r.push(b.vars_[j], std::min<int>(b.exps_[j], 0));
      ++j;
    } else {
      r.push(a.vars_[i], std::min<int>(a.exps_[i], b.exps_[j]));
      ++i;
      ++j;
    }
  }
  return r;
}

int compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ea, eb;
    if (j == b.size() || (i < a.size() && a.var(i) < b.var(j))) {
      ea = a.exponent(i++);
      eb = 0;
    } else if (i == a.size() || b.var(j) < a.var(i)) {
      ea = 0;
      eb = b.exponent(j++);
    } else {
      ea = a.exponent(i++);
      eb = b.exponent(j++);
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_before(const Poly::Term& x, const Poly::Term& y) { return compare(x.first, y.first) > 0; }

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational power(const Rational& base, int e) {
  if (e == 0) return 1;
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw DivisionByZero("zero to a negative power");
    b = 1 / b;
    e = -e;
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace_back(Monomial(), constant);
}

Poly Poly::variable(const VarLabel& v, int exponent) { return monomial(Monomial::variable(v.id(), exponent)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

std::set<VarId> Poly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) vars.insert(m.var(i));
  return vars;
}

int Poly::max_degree_in(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, false);
  return p;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, true);
  return p;
}

Poly Poly::scaled(const Rational& c, const Monomial& m) const {
  Poly p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) p.terms_.emplace_back(mono * m, coeff * c);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  // Each row stays sorted because graded lex is multiplicative; merge rows pairwise.
  std::vector<std::vector<Poly::Term>> rows;
  rows.reserve(small.size());
  for (const auto& [m, c] : small.terms_) rows.push_back(big.scaled(c, m).terms_);
  while (rows.size() > 1) {
    std::vector<std::vector<Poly::Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge_terms(rows[i], rows[i + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  Poly p;
  p.terms_ = std::move(rows.front());
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Monomial Poly::min_monomial() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_.front().first;
  for (const auto& t : terms_) m = Monomial::min(m, t.first);
  return m;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Poly();
  Monomial shift_p = min_monomial();
  Monomial shift_d = divisor.min_monomial();
  Poly rem = scaled(1, shift_p.inverse());
  Poly d = divisor.scaled(1, shift_d.inverse());
  const auto& [lead_m, lead_c] = d.leading();
  if (rem.leading().first.degree() < lead_m.degree()) return std::nullopt;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial qm = m / lead_m;
    Rational qc = c / lead_c;
    rem = rem - d.scaled(qc, qm);
    quotient.emplace_back(std::move(qm), std::move(qc));
  }
  Poly q;
  q.terms_ = std::move(quotient);
  return q.scaled(1, shift_p / shift_d);
}

Poly Poly::renamed(const std::map<VarId, VarId>& map) const {
  if (map.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto it = map.find(m.var(i));
      VarId v = it == map.end() ? m.var(i) : it->second;
      r = r * Monomial::variable(v, m.exponent(i));
    }
    out.emplace_back(std::move(r), c);
  }
  return from_terms(std::move(out));
}

Rational Poly::evaluate(const std::map<VarId, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto it = point.find(m.var(i));
      if (it == point.end()) throw std::invalid_argument("evaluation point misses " + VarLabel::from_id(m.var(i)).to_string());
      v *= power(it->second, m.exponent(i));
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms_[i].first, b.terms_[i].first);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int cc = cmp(a.terms_[i].second, b.terms_[i].second);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

FactorSplit split_unit(const Poly& p) {
  if (p.is_zero()) throw DivisionByZero("zero has no unit part");
  Monomial m = p.min_monomial();
  Poly shifted = p.scaled(1, m.inverse());
  Rational c = shifted.leading().second;
  Poly f = shifted.scaled(1 / c);
  return {c, m, f.is_constant() ? Poly(Rational(1)) : std::move(f)};
}

// ---------------------------------------------------------------------------
// RatFunc

namespace {

using FactorList = std::vector<RatFunc::Factor>;

void insert_factor(FactorList& list, const Poly& f, int mult) {
  auto it = std::lower_bound(list.begin(), list.end(), f,
                             [](const RatFunc::Factor& x, const Poly& y) { return x.first < y; });
  if (it != list.end() && it->first == f) {
    it->second += mult;
  } else {
    list.insert(it, {f, mult});
  }
}

FactorList merge_factors(const FactorList& a, const FactorList& b, bool take_max) {
  FactorList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    auto c = (i == a.size()) ? std::strong_ordering::greater
             : (j == b.size()) ? std::strong_ordering::less
                               : (a[i].first <=> b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, take_max ? std::max(a[i].second, b[j].second) : a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int multiplicity(const FactorList& list, const Poly& f) {
  auto it = std::lower_bound(list.begin(), list.end(), f,
                             [](const RatFunc::Factor& x, const Poly& y) { return x.first < y; });
  return (it != list.end() && it->first == f) ? it->second : 0;
}

// Product of factor powers in `lcm` exceeding those in `have`.
Poly cofactor(const FactorList& lcm, const FactorList& have) {
  Poly r(Rational(1));
  for (const auto& [f, k] : lcm) {
    int extra = k - multiplicity(have, f);
    if (extra > 0) r = r * f.pow(static_cast<unsigned>(extra));
  }
  return r;
}

}  // namespace

RatFunc RatFunc::from_parts(Poly num, std::vector<Factor> den) {
  RatFunc r;
  r.num_ = std::move(num);
  if (!r.num_.is_zero()) {
    for (auto& [f, k] : den)
      if (k > 0) insert_factor(r.den_, f, k);
  }
  return r;
}

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("denominator is the zero polynomial");
  RatFunc r;
  if (num.is_zero()) return r;
  FactorSplit s = split_unit(den);
  r.num_ = num.scaled(1 / s.coeff, s.monomial.inverse());
  if (!s.factor.is_constant()) r.den_.emplace_back(std::move(s.factor), 1);
  return r;
}

Poly RatFunc::denominator() const {
  Poly d(Rational(1));
  for (const auto& [f, k] : den_) d = d * f.pow(static_cast<unsigned>(k));
  return d;
}

bool RatFunc::is_one() const { return den_.empty() && num_.is_constant() && !num_.is_zero() && num_.leading().second == 1; }

std::set<VarId> RatFunc::variables() const {
  std::set<VarId> vars = num_.variables();
  for (const auto& [f, k] : den_) {
    auto v = f.variables();
    vars.insert(v.begin(), v.end());
  }
  return vars;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_ = merge_factors(a.den_, b.den_, false);
  return r;
}

namespace {

RatFunc add_impl(const RatFunc& a, const RatFunc& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  const auto& da = a.denominator_factors();
  const auto& db = b.denominator_factors();
  if (da == db) {
    Poly num = subtract ? a.numerator() - b.numerator() : a.numerator() + b.numerator();
    return RatFunc::from_parts(std::move(num), da).reduced();
  }
  FactorList lcm = merge_factors(da, db, true);
  Poly na = a.numerator() * cofactor(lcm, da);
  Poly nb = b.numerator() * cofactor(lcm, db);
  Poly num = subtract ? na - nb : na + nb;
  return RatFunc::from_parts(std::move(num), std::move(lcm)).reduced();
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add_impl(a, b, false); }

RatFunc sum(const std::vector<RatFunc>& terms) {
  FactorList lcm;
  std::size_t nonzero = 0;
  const RatFunc* last = nullptr;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    ++nonzero;
    last = &t;
    lcm = merge_factors(lcm, t.denominator_factors(), true);
  }
  if (nonzero == 0) return RatFunc();
  if (nonzero == 1) return *last;
  std::vector<Poly::Term> acc;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    Poly part = t.numerator() * cofactor(lcm, t.denominator_factors());
    acc.insert(acc.end(), part.terms().begin(), part.terms().end());
  }
  return RatFunc::from_parts(Poly::from_terms(std::move(acc)), std::move(lcm)).reduced();
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add_impl(a, b, true); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  FactorSplit s = split_unit(num_);
  RatFunc r;
  r.num_ = denominator().scaled(1 / s.coeff, s.monomial.inverse());
  if (!s.factor.is_constant()) r.den_.emplace_back(std::move(s.factor), 1);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by a rational function with zero numerator");
  if (a.is_zero()) return RatFunc();
  return a * b.inverse();
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

RatFunc RatFunc::reduced() const {
  if (den_.empty()) return *this;
  if (num_.is_zero()) return RatFunc();
  RatFunc r;
  r.num_ = num_;
  for (const auto& [f, k] : den_) {
    int left = k;
    while (left > 0) {
      auto q = r.num_.divide_exact(f);
      if (!q) break;
      r.num_ = std::move(*q);
      --left;
    }
    if (left > 0) r.den_.emplace_back(f, left);
  }
  return r;
}

std::optional<Rational> RatFunc::evaluate(const std::map<VarId, Rational>& point) const {
  Rational d = 1;
  for (const auto& [f, k] : den_) {
    Rational v = f.evaluate(point);
    if (v == 0) return std::nullopt;
    d *= power(v, k);
  }
  return num_.evaluate(point) / d;
}

bool same_representation(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

// ---------------------------------------------------------------------------
// Operations

RatFunc rat_arith(const RatFunc& lhs, const RatFunc& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return lhs + rhs;
    case ArithOp::Sub:
      return lhs - rhs;
    case ArithOp::Mul:
      return lhs * rhs;
    case ArithOp::Div:
      return lhs / rhs;
    case ArithOp::Neg:
      return -lhs;
  }
  return lhs;
}

namespace {

constexpr int kMaxPointRetries = 64;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 1000000);
  long n = dist(rng);
  long d = dist(rng);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

bool rat_eq(const RatFunc& lhs, const RatFunc& rhs, const EqualityMode& mode) {
  if (std::holds_alternative<ExactMode>(mode)) return (lhs - rhs).is_zero();
  const auto& rnd = std::get<RandomizedMode>(mode);
  if (rnd.trials < 3) throw std::invalid_argument("randomized equality needs at least 3 trials");
  std::set<VarId> vars = lhs.variables();
  auto rv = rhs.variables();
  vars.insert(rv.begin(), rv.end());
  std::mt19937_64 rng(rnd.seed);
  for (int trial = 0; trial < rnd.trials; ++trial) {
    bool evaluated = false;
    for (int attempt = 0; attempt < kMaxPointRetries && !evaluated; ++attempt) {
      std::map<VarId, Rational> point;
      for (VarId v : vars) point.emplace(v, random_rational(rng));
      auto l = lhs.evaluate(point);
      auto r = rhs.evaluate(point);
      if (!l || !r) continue;
      evaluated = true;
      if (*l != *r) return false;
    }
    if (!evaluated) throw Unevaluable("no sample point avoids the denominator zeros");
  }
  return true;
}

std::map<VarId, VarId> rename_ids(const RenameMap& map, const std::set<VarId>& occurring) {
  for (const auto& [from, to] : map) {
    if ((from.kind() == VarLabel::Kind::Q || to.kind() == VarLabel::Kind::Q) && !(from == to)) {
      throw NonInjectiveRename("q cannot be renamed");
    }
  }
  std::map<VarId, VarId> ids;
  std::set<VarId> images;
  for (VarId v : occurring) {
    VarLabel label = VarLabel::from_id(v);
    VarLabel target = label;
    if (auto it = map.find(label); it != map.end()) {
      target = it->second;
    } else if (label.kind() == VarLabel::Kind::Cartan && label.position() > 0) {
      auto root = map.find(VarLabel::t(1, label.position()));
      if (root != map.end() && root->second.kind() == VarLabel::Kind::T && root->second.type_index() == 1) {
        target = VarLabel::cartan(label.type_index(), root->second.position());
      }
    }
    if (!images.insert(target.id()).second) {
      throw NonInjectiveRename("rename sends two variables to " + target.to_string());
    }
    if (target.id() != v) ids.emplace(v, target.id());
  }
  return ids;
}

RatFunc rename(const RatFunc& f, const RenameMap& map) { return rename_by_ids(f, rename_ids(map, f.variables())); }

RatFunc rename_by_ids(const RatFunc& f, const std::map<VarId, VarId>& ids) {
  if (ids.empty()) return f;
  Poly num = f.numerator().renamed(ids);
  Rational scale = 1;
  Monomial shift;
  std::vector<RatFunc::Factor> den;
  for (const auto& [factor, k] : f.denominator_factors()) {
    FactorSplit s = split_unit(factor.renamed(ids));
    scale *= power(s.coeff, k);
    for (int i = 0; i < k; ++i) shift = shift * s.monomial;
    den.emplace_back(std::move(s.factor), k);
  }
  return RatFunc::from_parts(num.scaled(1 / scale, shift.inverse()), std::move(den));
}

namespace {

RatFunc substitute_poly(const Poly& p, VarId var, const RatFunc& value, std::map<int, RatFunc>& powers) {
  std::map<int, std::vector<Poly::Term>> buckets;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent_of(var);
    Monomial rest = e == 0 ? m : m / Monomial::variable(var, e);
    buckets[e].emplace_back(std::move(rest), c);
  }
  RatFunc sum;
  for (auto& [e, terms] : buckets) {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    sum += RatFunc(Poly::from_terms(std::move(terms))) * it->second;
  }
  return sum;
}

std::optional<RatFunc> try_subst(const RatFunc& f, VarId var, const RatFunc& value) {
  std::map<int, RatFunc> powers;
  RatFunc den(1);
  for (const auto& [factor, k] : f.denominator_factors()) {
    if (factor.max_degree_in(var) == 0) {
      den = den * RatFunc::from_parts(Poly(Rational(1)), {{factor, k}}).inverse();
      continue;
    }
    RatFunc s = substitute_poly(factor, var, value, powers);
    if (s.is_zero()) return std::nullopt;
    den = den * s.pow(k);
  }
  return substitute_poly(f.numerator(), var, value, powers) / den;
}

}  // namespace

RatFunc subst(const RatFunc& f, const VarLabel& var, const RatFunc& value) {
  if (value.variables().count(var.id()) != 0) throw std::invalid_argument("substituted value contains the variable");
  if (f.variables().count(var.id()) == 0) return f;
  if (auto r = try_subst(f, var.id(), value)) return *r;
  if (auto r = try_subst(f.reduced(), var.id(), value)) return *r;
  throw ResultingZeroDenominator("substituting " + var.to_string() + " makes a denominator vanish");
}

RatFunc residue_simple_pole(const RatFunc& f, const VarLabel& var, const RatFunc& at) {
  RatFunc shifted = (f * (RatFunc::variable(var) - at)).reduced();
  try {
    return subst(shifted, var, at);
  } catch (const ResultingZeroDenominator&) {
    throw HigherOrderPole("pole of order > 1 at " + var.to_string() + " = " + to_string(at));
  }
}

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.is_one()) out << a.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!unit || i > 0) out << "*";
      out << VarLabel::from_id(m.var(i)).to_string();
      if (m.exponent(i) != 1) out << "^" << m.exponent(i);
    }
  }
  return out.str();
}

std::string to_string(const RatFunc& f) {
  std::string num = to_string(f.numerator());
  if (f.denominator_factors().empty()) return num;
  std::ostringstream out;
  out << (f.numerator().size() > 1 ? "(" + num + ")" : num) << "/(";
  bool first = true;
  for (const auto& [factor, k] : f.denominator_factors()) {
    if (!first) out << "*";
    first = false;
    out << "(" << to_string(factor) << ")";
    if (k != 1) out << "^" << k;
  }
  out << ")";
  return out.str();
}

}  // namespace bethe
