#include "bethe/symmetrize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bethe {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
}

bool MultiIndex::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool MultiIndex::is_admissible() const { return std::is_sorted(e_.rbegin(), e_.rend()); }

bool MultiIndex::leq(const MultiIndex& other) const {
  if (rank() != other.rank()) throw RankMismatch("multi-indices of different rank");
  for (std::size_t a = 0; a < e_.size(); ++a)
    if (e_[a] > other.e_[a]) return false;
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) throw RankMismatch("multi-indices of different rank");
  std::vector<int> r(a.e_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.e_[i] + b.e_[i];
  return MultiIndex(std::move(r));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) throw RankMismatch("multi-indices of different rank");
  std::vector<int> r(a.e_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = a.e_[i] - b.e_[i];
    if (r[i] < 0) throw IndexOutOfBound("negative multi-index difference");
  }
  return MultiIndex(std::move(r));
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < e_.size(); ++i) out << (i ? "," : "") << e_[i];
  out << ")";
  return out.str();
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<int> e;
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') cleaned += c;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw ParseError("bad multi-index: " + text);
      e.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad multi-index: " + text);
    }
  }
  if (e.empty()) throw ParseError("empty multi-index");
  return MultiIndex(std::move(e));
}

std::vector<MultiIndex> indices_below(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zero(bound.rank());
  while (true) {
    out.push_back(cur);
    int a = bound.rank() - 1;
    while (a >= 0 && cur[a] == bound[a]) {
      cur[a] = 0;
      --a;
    }
    if (a < 0) break;
    ++cur[a];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Segment

Segment::Segment(MultiIndex l, MultiIndex r) : lower(std::move(l)), upper(std::move(r)) {
  if (lower.rank() != upper.rank()) throw RankMismatch("segment bounds of different rank");
  if (!lower.leq(upper)) throw std::invalid_argument("segment needs l_a <= r_a");
}

std::vector<std::vector<VarLabel>> Segment::groups() const {
  std::vector<std::vector<VarLabel>> g(static_cast<std::size_t>(rank()));
  for (int a = 0; a < rank(); ++a)
    for (int i = lower[a] + 1; i <= upper[a]; ++i) g[static_cast<std::size_t>(a)].push_back(VarLabel::t(a + 1, i));
  return g;
}

// ---------------------------------------------------------------------------
// Weights

RatFunc inversion_weight(const VarLabel& x, const VarLabel& y) {
  Poly q2 = Poly::variable(VarLabel::q(), 2);
  Poly px = Poly::variable(x);
  Poly py = Poly::variable(y);
  return RatFunc::fraction(px - q2 * py, q2 * px - py);
}

namespace {

// Weight of the permutation sending group[i] to group[p[i]].
RatFunc group_weight(const std::vector<VarLabel>& group, const std::vector<int>& p) {
  RatFunc w(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) w *= inversion_weight(group[static_cast<std::size_t>(p[i])], group[static_cast<std::size_t>(p[j])]);
  return w;
}

struct TypeAction {
  std::vector<VarLabel> group;
  std::vector<std::pair<std::vector<int>, RatFunc>> elements;
};

TypeAction all_permutations(const std::vector<VarLabel>& group) {
  if (static_cast<int>(group.size()) > kMaxGroupSize) {
    throw GroupTooLarge("q-symmetrization over " + std::to_string(group.size()) + " variables of one type");
  }
  TypeAction t{group, {}};
  std::vector<int> p(group.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    t.elements.emplace_back(p, group_weight(group, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

// Permutations increasing on [0, s) and on [s, k): one per coset of S_s x S_{k-s}.
TypeAction shuffles(const std::vector<VarLabel>& group, int s) {
  if (static_cast<int>(group.size()) > kMaxGroupSize) {
    throw GroupTooLarge("q-symmetrization over " + std::to_string(group.size()) + " variables of one type");
  }
  TypeAction t{group, {}};
  int k = static_cast<int>(group.size());
  std::vector<bool> chosen(static_cast<std::size_t>(k), false);
  std::fill(chosen.begin(), chosen.begin() + s, true);
  do {
    std::vector<int> p;
    for (int i = 0; i < k; ++i)
      if (chosen[static_cast<std::size_t>(i)]) p.push_back(i);
    for (int i = 0; i < k; ++i)
      if (!chosen[static_cast<std::size_t>(i)]) p.push_back(i);
    t.elements.emplace_back(p, group_weight(group, p));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return t;
}

AlgElem act(const AlgElem& x, const std::vector<TypeAction>& types, const Rational& normalization) {
  std::set<VarId> occurring = x.variables();
  std::map<Word, std::vector<RatFunc>> parts;
  std::vector<std::size_t> pick(types.size(), 0);
  while (true) {
    RenameMap map;
    RatFunc weight(1);
    for (std::size_t a = 0; a < types.size(); ++a) {
      const auto& [p, w] = types[a].elements[pick[a]];
      weight *= w;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (static_cast<int>(i) != p[i]) map.emplace(types[a].group[i], types[a].group[static_cast<std::size_t>(p[i])]);
    }
    AlgElem moved = alg_rename_by_ids(x, rename_ids(map, occurring));
    for (const auto& [w, c] : moved.terms()) parts[w].push_back(weight * c);

    std::size_t a = 0;
    while (a < types.size() && ++pick[a] == types[a].elements.size()) {
      pick[a] = 0;
      ++a;
    }
    if (a == types.size()) break;
  }
  AlgElem result;
  for (const auto& [w, cs] : parts) result.add_term(w, sum(cs));
  if (normalization == 1) return result;
  return RatFunc(normalization) * result;
}

}  // namespace

RatFunc perm_weight(const GroupPerm& sigma, const Segment& seg) {
  if (static_cast<int>(sigma.perms.size()) != seg.rank()) throw RankMismatch("permutation rank differs from segment");
  RatFunc w(1);
  auto groups = seg.groups();
  for (int a = 0; a < seg.rank(); ++a) {
    const auto& perm = sigma.perms[static_cast<std::size_t>(a)];
    const auto& group = groups[static_cast<std::size_t>(a)];
    if (perm.size() != group.size()) throw std::invalid_argument("permutation does not match the segment");
    std::vector<int> p;
    std::vector<bool> seen(group.size(), false);
    for (int image : perm) {
      int k = image - seg.lower[a] - 1;
      if (k < 0 || k >= static_cast<int>(group.size()) || seen[static_cast<std::size_t>(k)]) {
        throw std::invalid_argument("not a permutation of the segment positions");
      }
      seen[static_cast<std::size_t>(k)] = true;
      p.push_back(k);
    }
    w *= group_weight(group, p);
  }
  return w;
}

AlgElem qsym_over(const AlgElem& x, const std::vector<std::vector<VarLabel>>& groups) {
  std::vector<TypeAction> types;
  Rational norm = 1;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    types.push_back(all_permutations(g));
    norm /= factorial(static_cast<int>(g.size()));
  }
  if (types.empty()) return x;
  return act(x, types, norm);
}

AlgElem qsym(const AlgElem& x, const Segment& seg) { return qsym_over(x, seg.groups()); }

AlgElem qsym_shuffle(const AlgElem& x, const Segment& seg, const MultiIndex& split) {
  if (split.rank() != seg.rank()) throw RankMismatch("split rank differs from segment");
  if (!split.leq(seg.span())) throw IndexOutOfBound("split exceeds the segment");
  std::vector<TypeAction> types;
  Rational norm = 1;
  auto groups = seg.groups();
  for (int a = 0; a < seg.rank(); ++a) {
    const auto& g = groups[static_cast<std::size_t>(a)];
    int k = static_cast<int>(g.size());
    int s = split[a];
    if (s == 0 || s == k) continue;
    types.push_back(shuffles(g, s));
    norm *= factorial(s) * factorial(k - s) / factorial(k);
  }
  if (types.empty()) return x;
  return act(x, types, norm);
}

bool is_qsymmetric(const AlgElem& x, const Segment& seg, const EqualityMode& mode) {
  return alg_eq(qsym(x, seg), x, mode);
}

// ---------------------------------------------------------------------------
// Distinguished-variable identities

RatFunc sym_identity_weight(SymVariant which, int n, int m, SymOrientation orientation) {
  RatFunc w(1);
  VarLabel tm = VarLabel::t(1, m);
  int from = which == SymVariant::Last ? m + 1 : 1;
  int to = which == SymVariant::Last ? n : m - 1;
  for (int j = from; j <= to; ++j) {
    VarLabel tj = VarLabel::t(1, j);
    bool corrected = orientation == SymOrientation::Corrected;
    if (which == SymVariant::Last) {
      w *= corrected ? inversion_weight(tj, tm) : inversion_weight(tm, tj);
    } else {
      w *= corrected ? inversion_weight(tm, tj) : inversion_weight(tj, tm);
    }
  }
  return w;
}

std::vector<AlgElem> sym_identity_terms(SymVariant which, int n, const AlgElem& g, SymOrientation orientation) {
  std::vector<AlgElem> terms;
  for (int m = 1; m <= n; ++m) {
    // Slot k of G receives the variable listed at position k.
    std::vector<int> slots;
    if (which == SymVariant::Last) {
      for (int k = 1; k <= n; ++k)
        if (k != m) slots.push_back(k);
      slots.push_back(m);
    } else {
      slots.push_back(m);
      for (int k = 1; k <= n; ++k)
        if (k != m) slots.push_back(k);
    }
    RenameMap map;
    for (int k = 1; k <= n; ++k)
      if (slots[static_cast<std::size_t>(k - 1)] != k) map.emplace(VarLabel::t(1, k), VarLabel::t(1, slots[static_cast<std::size_t>(k - 1)]));
    std::vector<VarLabel> rest;
    for (int k = 1; k <= n; ++k)
      if (k != m) rest.push_back(VarLabel::t(1, k));
    AlgElem moved = alg_rename(g, map);
    terms.push_back(sym_identity_weight(which, n, m, orientation) * qsym_over(moved, {rest}));
  }
  return terms;
}

bool sym_identity_check(SymVariant which, int n, const AlgElem& g, const EqualityMode& mode,
                        SymOrientation orientation) {
  std::vector<VarLabel> all;
  for (int k = 1; k <= n; ++k) all.push_back(VarLabel::t(1, k));
  AlgElem lhs = RatFunc(n) * qsym_over(g, {all});
  AlgElem rhs;
  for (const auto& term : sym_identity_terms(which, n, g, orientation)) rhs += term;
  return alg_eq(lhs, rhs, mode);
}

}  // namespace bethe
