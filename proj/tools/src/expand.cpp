#include <sstream>

#include "bethe/gl2.hpp"
#include "bethe/strings.hpp"
#include "bethe_cli/cli.hpp"

namespace bethe::cli {

namespace {

constexpr int kMaxExpandTotal = 8;

std::vector<int> split_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw ParseError("bad integer " + part);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list " + text);
    }
  }
  return out;
}

void guard(const MultiIndex& n) {
  if (n.total() > kMaxExpandTotal) throw GuardExceeded("index " + n.to_string() + " exceeds the expansion guard");
}

std::string render(const AlgElem& x, bool json) { return json ? to_json(x).dump() : to_string(x); }

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing --") + flag);
  return *v;
}

std::string expand_string(const ExpandParams& p, bool json) {
  const int j = need(p.j, "j");
  const int N = p.N.value_or(j + 1);
  auto values = p.index.value_or(std::vector<int>(static_cast<std::size_t>(j), 1));
  std::vector<int> full(values);
  full.resize(static_cast<std::size_t>(N - 1), 0);
  MultiIndex n(full);
  guard(n);
  AlgElem s = build_string(j, AdmissibleIndex::ascending(values), Segment::canonical(n));
  return render(p.expand ? expand_composed(s) : s, json);
}

std::string expand_dual(const ExpandParams& p, bool json) {
  const int k = p.k.value_or(1);
  auto values = p.index.value_or(std::vector<int>{1});
  const int N = p.N.value_or(k + static_cast<int>(values.size()));
  std::vector<int> full(static_cast<std::size_t>(k - 1), 0);
  full.insert(full.end(), values.begin(), values.end());
  if (static_cast<int>(full.size()) != N - 1) throw RankMismatch("--index must list s_k .. s_{N-1}");
  MultiIndex n(full);
  guard(n);
  AlgElem s = build_dual_string(k, AdmissibleIndex::descending(k, values), Segment::canonical(n));
  return render(p.expand ? expand_composed(s) : s, json);
}

std::string expand_composed_cmd(const ExpandParams& p, bool json) {
  const int j = need(p.j, "j");
  const int i = need(p.i, "i");
  if (j - i > kMaxExpandTotal) throw GuardExceeded("composed current too long");
  return render(expand_composed(AlgElem::atom(CompF{j, i, VarLabel::spectral()})), json);
}

std::string expand_series_coeff(const ExpandParams& p, bool json) {
  const int N = p.N.value_or(2);
  auto values = p.index.value_or(std::vector<int>(static_cast<std::size_t>(N - 1), 0));
  MultiIndex n(values);
  if (n.rank() != N - 1) throw RankMismatch("--index must have N-1 entries");
  guard(n);
  GenSeries s(N, n);
  if (p.which == "current") {
    s = current_series(N, n);
  } else if (p.which == "string") {
    s = string_series(p.j.value_or(N - 1), n);
  } else if (p.which == "dual-string") {
    s = dual_string_series(p.k.value_or(1), n);
  } else if (p.which == "opaque-e") {
    s = opaque_e_series(N, n);
  } else if (p.which == "inverse") {
    s = closed_form_inverse(N, n);
  } else if (p.which == "gl2-inverse") {
    if (N != 2) throw RankMismatch("gl2-inverse needs N = 2");
    s = gl2_inverse_series(n[0]);
  } else {
    throw UnknownTask("unknown series " + p.which);
  }
  AlgElem c = s.coeff(n);
  return render(p.expand ? expand_composed(c) : c, json);
}

std::string expand_tableaux(const ExpandParams& p, bool json) {
  Tableaux t = parse_rows(p.rows);
  int max_type = 1;
  for (const auto& r : t.rows)
    for (int x : r) max_type = std::max(max_type, x);
  const int N = p.N.value_or(max_type + 1);
  TabStats stats = tableaux_stats(t, N);
  if (stats.weight[0] > kMaxTableauxBoxes) throw GuardExceeded("tableaux too large");
  std::vector<std::string> groups;
  if (p.assign) {
    auto rows = assign_vars(t, Segment::canonical(stats.weight));
    for (std::size_t i = rows.size(); i-- > 0;) groups.push_back(render_row_vars(rows[i]));
  }
  if (json) {
    Json j = to_json(t);
    j["weight"] = stats.weight.entries();
    if (p.assign) j["groups"] = groups;
    return j.dump();
  }
  std::ostringstream out;
  out << render_grid(t);
  out << "weight " << stats.weight.to_string() << "\n";
  if (p.assign) {
    for (std::size_t i = 0; i < groups.size(); ++i) out << (i ? " " : "") << groups[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace

const std::vector<std::string>& expand_targets() {
  static const std::vector<std::string> names = {"string", "dual-string", "composed", "series-coeff", "tableaux"};
  return names;
}

Tableaux parse_rows(const std::string& text) {
  if (text.empty()) throw ParseError("empty --rows");
  Tableaux t;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, '|')) t.rows.push_back(split_ints(row, ','));
  return t;
}

std::string render_grid(const Tableaux& t) {
  std::ostringstream out;
  auto border = [&out](std::size_t width) {
    out << "+";
    for (std::size_t b = 0; b < width; ++b) out << "---+";
    out << "\n";
  };
  for (std::size_t i = t.rows.size(); i-- > 0;) {
    std::size_t width = t.rows[i].size();
    if (i + 1 < t.rows.size()) width = std::max(width, t.rows[i + 1].size());
    border(width);
    out << "|";
    for (int x : t.rows[i]) out << " " << x << " |";
    out << "\n";
  }
  if (!t.rows.empty()) border(t.rows.front().size());
  return out.str();
}

std::string run_expand(const std::string& what, const ExpandParams& params, bool json) {
  if (what == "string") return expand_string(params, json);
  if (what == "dual-string") return expand_dual(params, json);
  if (what == "composed") return expand_composed_cmd(params, json);
  if (what == "series-coeff") return expand_series_coeff(params, json);
  if (what == "tableaux") return expand_tableaux(params, json);
  throw UnknownTask("unknown expand target " + what);
}

}  // namespace bethe::cli
