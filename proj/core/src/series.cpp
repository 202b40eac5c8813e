#include "bethe/series.hpp"

#include <algorithm>

namespace bethe {

GenSeries::GenSeries(int N, MultiIndex bound) : N_(N), bound_(std::move(bound)) {
  if (N < 2 || bound_.rank() != N - 1) throw RankMismatch("bound must have N-1 entries");
  coeffs_.emplace(MultiIndex::zero(N - 1), AlgElem(1));
}

void GenSeries::check_index(const MultiIndex& n) const {
  if (n.rank() != N_ - 1) throw RankMismatch("index " + n.to_string() + " has the wrong rank");
  if (!n.leq(bound_)) throw IndexOutOfBound("index " + n.to_string() + " beyond bound " + bound_.to_string());
}

void GenSeries::set(const MultiIndex& n, AlgElem value) {
  check_index(n);
  if (value.is_zero()) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = std::move(value);
  }
}

GenSeries GenSeries::from_raw(int N, MultiIndex bound, const Coeffs& raw) {
  GenSeries s(N, std::move(bound));
  for (const auto& [n, x] : raw) s.set(n, qsym(x, Segment::canonical(n)));
  s.symmetrized_ = true;
  return s;
}

GenSeries GenSeries::from_symmetric(int N, MultiIndex bound, Coeffs coeffs, bool verify) {
  GenSeries s(N, std::move(bound));
  for (auto& [n, x] : coeffs) {
    if (verify && !is_qsymmetric(x, Segment::canonical(n))) {
      throw std::invalid_argument("coefficient at " + n.to_string() + " is not q-symmetric");
    }
    s.set(n, std::move(x));
  }
  return s;
}

AlgElem GenSeries::coeff(const MultiIndex& n) const {
  check_index(n);
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? AlgElem() : it->second;
}

bool GenSeries::is_unital() const {
  auto it = coeffs_.find(MultiIndex::zero(N_ - 1));
  return it != coeffs_.end() && it->second.size() == 1 && it->second.scalar_part().is_one();
}

GenSeries GenSeries::truncated(const MultiIndex& bound) const {
  check_index(bound);
  GenSeries s = *this;
  s.bound_ = bound;
  std::erase_if(s.coeffs_, [&bound](const auto& kv) { return !kv.first.leq(bound); });
  return s;
}

RatFunc z_factor(const VarLabel& x, const VarLabel& y) {
  // (q^2 y - x) / (q (y - x))
  Poly px = Poly::variable(x);
  Poly py = Poly::variable(y);
  return RatFunc::fraction(Poly::variable(VarLabel::q(), 2) * py - px, Poly::variable(VarLabel::q()) * (py - px));
}

RatFunc z_weight(const MultiIndex& n, const MultiIndex& s) {
  if (n.rank() != s.rank()) throw RankMismatch("z_weight needs indices of equal rank");
  if (!s.leq(n)) throw IndexOutOfBound("z_weight needs s <= n");
  RatFunc z(1);
  for (int a = 0; a + 1 < n.rank(); ++a)
    for (int l = s[a] + 1; l <= n[a]; ++l)
      for (int lp = 1; lp <= s[a + 1]; ++lp) z *= z_factor(VarLabel::t(a + 1, l), VarLabel::t(a + 2, lp));
  return z;
}

AlgElem shift_vars(const AlgElem& x, const MultiIndex& shift) {
  if (shift.is_zero()) return x;
  RenameMap map;
  for (VarId id : x.variables()) {
    VarLabel v = VarLabel::from_id(id);
    if (v.kind() != VarLabel::Kind::T) continue;
    int a = v.type_index();
    if (a > shift.rank() || shift[a - 1] == 0) continue;
    map.emplace(v, VarLabel::t(a, v.position() + shift[a - 1]));
  }
  return alg_rename(x, map);
}

namespace {

// qsym(Z(n,s) * A_{n-s}(shifted by s) * B_s), using that both factors are q-symmetric.
AlgElem star_term(const MultiIndex& n, const MultiIndex& s, const AlgElem& a, const AlgElem& b) {
  if (a.is_zero() || b.is_zero()) return AlgElem();
  AlgElem x = z_weight(n, s) * (shift_vars(a, s) * b);
  return qsym_shuffle(x, Segment::canonical(n), s);
}

}  // namespace

GenSeries star(const GenSeries& a, const GenSeries& b, const MultiIndex& bound) {
  if (a.N() != b.N()) throw RankMismatch("star of series of different rank");
  if (!bound.leq(a.bound()) || !bound.leq(b.bound())) throw IndexOutOfBound("star bound exceeds an operand bound");
  GenSeries c(a.N(), bound);
  c.coeffs_.clear();
  for (const auto& n : indices_below(bound)) {
    AlgElem sum;
    for (const auto& s : indices_below(n)) sum += star_term(n, s, a.coeff(n - s), b.coeff(s));
    c.set(n, std::move(sum));
  }
  return c;
}

GenSeries invert(const GenSeries& a, const MultiIndex& bound, int order) {
  if (!a.is_unital()) throw std::invalid_argument("invert needs a unital series");
  if (!bound.leq(a.bound())) throw IndexOutOfBound("invert bound exceeds the operand bound");
  std::vector<MultiIndex> sequence = indices_below(bound);
  if (order == kGradedOrder) {
    std::stable_sort(sequence.begin(), sequence.end(), [](const MultiIndex& x, const MultiIndex& y) {
      if (x.total() != y.total()) return x.total() < y.total();
      return y < x;
    });
  }
  GenSeries inv(a.N(), bound);
  for (const auto& n : sequence) {
    if (n.is_zero()) continue;
    AlgElem sum;
    for (const auto& s : indices_below(n)) {
      if (s.is_zero()) continue;
      sum += star_term(n, s, inv.coeff(n - s), a.coeff(s));
    }
    inv.set(n, -sum);
  }
  return inv;
}

bool series_eq(const GenSeries& a, const GenSeries& b, const EqualityMode& mode) {
  if (a.N() != b.N() || !(a.bound() == b.bound())) return false;
  for (const auto& n : indices_below(a.bound()))
    if (!alg_eq(a.coeff(n), b.coeff(n), mode)) return false;
  return true;
}

}  // namespace bethe
