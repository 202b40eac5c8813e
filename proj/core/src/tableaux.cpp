#include "bethe/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bethe/strings.hpp"

namespace bethe {

int Diagram::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Diagram::connected() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; });
}

Diagram Tableaux::diagram() const {
  Diagram d;
  for (const auto& r : rows) d.parts.push_back(static_cast<int>(r.size()));
  return d;
}

bool Tableaux::is_valid(int N) const {
  for (const auto& r : rows) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (r[b] < 1 || r[b] > N - 1) return false;
      if (b > 0 && r[b] > r[b - 1]) return false;
    }
  }
  return true;
}

TabStats tableaux_stats(const Tableaux& t, int N) {
  if (!t.is_valid(N)) throw std::invalid_argument("tableaux rows must be non-increasing with types in [1, N-1]");
  const auto rank = static_cast<std::size_t>(N - 1);
  TabStats s;
  std::vector<int> running(rank, 0);
  for (const auto& row : t.rows) {
    std::vector<int> c(rank, 0);
    for (int type : row) ++c[static_cast<std::size_t>(type - 1)];
    std::vector<int> d(rank, 0);
    int acc = 0;
    for (std::size_t a = rank; a-- > 0;) d[a] = acc += c[a];
    for (std::size_t a = 0; a < rank; ++a) running[a] += d[a];
    s.c.push_back(std::move(c));
    s.d.push_back(std::move(d));
    s.h.push_back(running);
  }
  s.weight = MultiIndex(running);
  return s;
}

namespace {

void extend(std::vector<int>& remaining, std::vector<std::vector<int>>& rows, int N,
            std::vector<Tableaux>& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; })) {
    out.push_back(Tableaux{rows});
    return;
  }
  // every nonzero count vector below the remaining counts is a candidate row
  std::vector<int> take(remaining.size(), 0);
  while (true) {
    std::size_t a = 0;
    while (a < take.size() && take[a] == remaining[a]) take[a++] = 0;
    if (a == take.size()) break;
    ++take[a];
    std::vector<int> row;
    for (std::size_t b = take.size(); b-- > 0;) row.insert(row.end(), static_cast<std::size_t>(take[b]), static_cast<int>(b) + 1);
    for (std::size_t b = 0; b < take.size(); ++b) remaining[b] -= take[b];
    rows.push_back(std::move(row));
    extend(remaining, rows, N, out);
    rows.pop_back();
    for (std::size_t b = 0; b < take.size(); ++b) remaining[b] += take[b];
  }
}

}  // namespace

std::vector<Tableaux> enum_connected_tableaux(int N, const MultiIndex& weight) {
  if (weight.rank() != N - 1) throw RankMismatch("weight must have N-1 entries");
  if (!weight.is_admissible() || (weight.rank() > 0 && weight[weight.rank() - 1] < 0))
    throw WeightNotAdmissible("weight " + weight.to_string() + " is not admissible");
  if (weight.rank() > 0 && weight[0] > kMaxTableauxBoxes)
    throw SizeGuardExceeded("tableaux with more than " + std::to_string(kMaxTableauxBoxes) + " boxes");
  std::vector<int> counts(static_cast<std::size_t>(N - 1), 0);
  for (int a = 0; a < N - 1; ++a) counts[static_cast<std::size_t>(a)] = weight[a] - (a + 1 < N - 1 ? weight[a + 1] : 0);
  std::vector<Tableaux> out;
  if (weight.is_zero()) return out;
  std::vector<std::vector<int>> rows;
  extend(counts, rows, N, out);
  std::sort(out.begin(), out.end(), [](const Tableaux& x, const Tableaux& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    auto px = x.diagram().parts;
    auto py = y.diagram().parts;
    if (px != py) return px < py;
    return x.rows < y.rows;
  });
  return out;
}

namespace {

TabStats checked_stats(const Tableaux& t, const Segment& seg) {
  TabStats s = tableaux_stats(t, seg.rank() + 1);
  if (!(s.weight == seg.span()))
    throw SpanMismatch("segment span " + seg.span().to_string() + " differs from tableaux weight " +
                       s.weight.to_string());
  return s;
}

MultiIndex row_offset(const TabStats& s, const Segment& seg, std::size_t i) {
  return i == 0 ? seg.lower : seg.lower + MultiIndex(s.h[i - 1]);
}

}  // namespace

std::vector<RowVars> assign_vars(const Tableaux& t, const Segment& seg) {
  TabStats s = checked_stats(t, seg);
  std::vector<RowVars> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    MultiIndex lo = row_offset(s, seg, i);
    RowVars row(static_cast<std::size_t>(seg.rank()));
    for (int a = 1; a <= seg.rank(); ++a)
      for (int k = lo[a - 1] + 1; k <= lo[a - 1] + s.d[i][static_cast<std::size_t>(a - 1)]; ++k)
        row[static_cast<std::size_t>(a - 1)].push_back(VarLabel::t(a, k));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::vector<VarLabel>>> box_vars(const Tableaux& t, const Segment& seg) {
  TabStats s = checked_stats(t, seg);
  std::vector<std::vector<std::vector<VarLabel>>> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    MultiIndex top = seg.lower + MultiIndex(s.h[i]);
    std::vector<std::vector<VarLabel>> boxes;
    for (std::size_t b = 0; b < t.rows[i].size(); ++b) {
      std::vector<VarLabel> vars;
      for (int a = 1; a <= t.rows[i][b]; ++a) vars.push_back(VarLabel::t(a, top[a - 1] - static_cast<int>(b)));
      boxes.push_back(std::move(vars));
    }
    out.push_back(std::move(boxes));
  }
  return out;
}

std::string render_row_vars(const RowVars& row) {
  std::ostringstream out;
  out << "(";
  for (std::size_t a = row.size(); a-- > 0;) {
    if (row[a].empty()) {
      out << ".";
    } else {
      for (std::size_t k = row[a].size(); k-- > 0;) out << row[a][k].to_string() << (k ? "," : "");
    }
    if (a) out << ";";
  }
  out << ")";
  return out.str();
}

RatFunc z_chi(const Tableaux& t, const Segment& seg) {
  auto rows = assign_vars(t, seg);
  RatFunc z(1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(seg.rank()); ++a)
        for (const auto& x : rows[j][a])
          for (const auto& y : rows[i][a + 1]) z *= z_factor(x, y);
  return z;
}

AlgElem opaque_row(const RowVars& row) {
  std::vector<VarLabel> vars;
  for (const auto& g : row) vars.insert(vars.end(), g.begin(), g.end());
  return qsym_over(AlgElem::atom(make_opaque("E", vars)), row);
}

AlgElem expanded_row(const Tableaux& t, const Segment& seg, int row) {
  auto boxes = box_vars(t, seg)[static_cast<std::size_t>(row)];
  RatFunc prefactor(1);
  Word w;
  for (const auto& box : boxes) {
    for (std::size_t b = 0; b + 1 < box.size(); ++b) {
      Poly y = Poly::variable(box[b + 1]);
      prefactor *= RatFunc::fraction(y, y - Poly::variable(box[b]));
    }
    w.push_back(CompF{static_cast<int>(box.size()) + 1, 1, box[0]});
  }
  return project_words(AlgElem::word(std::move(w), prefactor), Projection::Minus);
}

AlgElem e_chi(const Tableaux& t, const Segment& seg, EMode mode) {
  auto rows = assign_vars(t, seg);
  AlgElem r(1);
  for (std::size_t i = rows.size(); i-- > 0;)
    r = r * (mode == EMode::Opaque ? opaque_row(rows[i]) : expanded_row(t, seg, static_cast<int>(i)));
  return r;
}

AlgElem e_chi_from_series(const Tableaux& t, const Segment& seg, const GenSeries& e) {
  TabStats s = checked_stats(t, seg);
  AlgElem r(1);
  for (std::size_t i = t.rows.size(); i-- > 0;)
    r = r * shift_vars(e.coeff(MultiIndex(s.d[i])), row_offset(s, seg, i));
  return r;
}

GenSeries opaque_e_series(int N, const MultiIndex& bound) {
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound)) {
    if (n.is_zero() || !n.is_admissible()) continue;
    std::vector<VarLabel> vars;
    for (const auto& g : Segment::canonical(n).groups()) vars.insert(vars.end(), g.begin(), g.end());
    raw.emplace(n, AlgElem::atom(make_opaque("E", vars)));
  }
  return GenSeries::from_raw(N, bound, raw);
}

AlgElem single_type_inverse(const GenSeries& e, int n) {
  if (n < 1) throw std::invalid_argument("single_type_inverse needs n >= 1");
  const int rank = e.N() - 1;
  AlgElem sum;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> cuts{0};
    for (int c = 1; c < n; ++c)
      if (mask & (1u << (c - 1))) cuts.push_back(c);
    cuts.push_back(n);
    AlgElem term(cuts.size() % 2 == 0 ? -1 : 1);
    for (std::size_t r = cuts.size() - 1; r >= 1; --r) {
      MultiIndex len = MultiIndex::zero(rank);
      MultiIndex offset = MultiIndex::zero(rank);
      len[0] = cuts[r] - cuts[r - 1];
      offset[0] = cuts[r - 1];
      term = term * shift_vars(e.coeff(len), offset);
    }
    sum += term;
  }
  MultiIndex full = MultiIndex::zero(rank);
  full[0] = n;
  return qsym(sum, Segment::canonical(full));
}

GenSeries closed_form_inverse(int N, const MultiIndex& bound, const std::optional<GenSeries>& e) {
  const GenSeries rows = e ? *e : opaque_e_series(N, bound);
  GenSeries::Coeffs raw;
  for (const auto& n : indices_below(bound)) {
    if (n.is_zero() || !n.is_admissible()) continue;
    Segment seg = Segment::canonical(n);
    AlgElem sum;
    for (const auto& t : enum_connected_tableaux(N, n)) {
      AlgElem term = z_chi(t, seg) * e_chi_from_series(t, seg, rows);
      sum += t.height() % 2 == 0 ? term : -term;
    }
    raw.emplace(n, sum);
  }
  return GenSeries::from_raw(N, bound, raw);
}

}  // namespace bethe
