#include "bethe/json.hpp"

namespace bethe {

namespace {

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("coefficient must be a string");
  try {
    Rational r(j.get<std::string>());
    if (r.get_den() == 0) throw ParseError("zero denominator in " + j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational " + j.get<std::string>());
  }
}

VarLabel var_from(const Json& j) {
  if (!j.is_string()) throw ParseError("variable must be a string");
  return VarLabel::parse(j.get<std::string>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field ") + key);
  return j.at(key);
}

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (const auto& a : w) arr.push_back(to_json(a));
  return arr;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("word must be an array");
  Word w;
  for (const auto& a : j) w.push_back(atom_from_json(a));
  return w;
}

MultiIndex index_from(const Json& j) {
  if (!j.is_array()) throw ParseError("index must be an array");
  return MultiIndex(j.get<std::vector<int>>());
}

}  // namespace

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
      exps.push_back(Json::array({VarLabel::from_id(m.var(i)).to_string(), m.exponent(i)}));
    arr.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  std::vector<Poly::Term> terms;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& e : field(t, "exps")) {
      if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer()) throw ParseError("exponent entry must be [var, k]");
      m = m * Monomial::variable(var_from(e[0]).id(), e[1].get<int>());
    }
    terms.emplace_back(m, rational_from(field(t, "coeff")));
  }
  return Poly::from_terms(std::move(terms));
}

Json to_json(const RatFunc& f) {
  Json den = Json::array();
  for (const auto& [factor, pow] : f.denominator_factors()) den.push_back({{"factor", to_json(factor)}, {"pow", pow}});
  return {{"num", to_json(f.numerator())}, {"den", den}};
}

RatFunc ratfunc_from_json(const Json& j) {
  std::vector<RatFunc::Factor> den;
  for (const auto& d : field(j, "den")) {
    const Json& pow = field(d, "pow");
    if (!pow.is_number_integer() || pow.get<int>() < 1) throw ParseError("factor power must be a positive integer");
    den.emplace_back(poly_from_json(field(d, "factor")), pow.get<int>());
  }
  return RatFunc::from_parts(poly_from_json(field(j, "num")), std::move(den));
}

Json to_json(const Atom& a) {
  if (const auto* x = a.get_if<CurrF>()) return {{"CurrF", Json::array({x->a, x->var.to_string()})}};
  if (const auto* x = a.get_if<CompF>()) return {{"CompF", Json::array({x->j, x->i, x->var.to_string()})}};
  const auto& o = std::get<Opaque>(a.value());
  Json vars = Json::array();
  for (const auto& v : o.vars) vars.push_back(v.to_string());
  Json body = Json::array({o.name, vars});
  if (!o.payload.empty()) body.push_back(word_to_json(o.payload));
  return {{"Opaque", body}};
}

Atom atom_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("atom must be a single-key object");
  const auto& [key, body] = *j.items().begin();
  if (!body.is_array()) throw ParseError("atom body must be an array");
  try {
    if (key == "CurrF" && body.size() == 2) return CurrF{body[0].get<int>(), var_from(body[1])};
    if (key == "CompF" && body.size() == 3) return CompF{body[0].get<int>(), body[1].get<int>(), var_from(body[2])};
    if (key == "Opaque" && (body.size() == 2 || body.size() == 3)) {
      std::vector<VarLabel> vars;
      for (const auto& v : body[1]) vars.push_back(var_from(v));
      Word payload = body.size() == 3 ? word_from_json(body[2]) : Word{};
      return make_opaque(body[0].get<std::string>(), std::move(vars), std::move(payload));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad atom: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad atom: ") + e.what());
  }
  throw ParseError("unknown atom kind " + key);
}

Json to_json(const AlgElem& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"coeff", to_json(c)}, {"word", word_to_json(w)}});
  return {{"terms", terms}};
}

AlgElem algelem_from_json(const Json& j) {
  AlgElem x;
  for (const auto& t : field(j, "terms")) x.add_term(word_from_json(field(t, "word")), ratfunc_from_json(field(t, "coeff")));
  return x;
}

Json to_json(const GenSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [n, x] : s.coeffs()) coeffs.push_back({{"index", n.entries()}, {"value", to_json(x)}});
  return {{"N", s.N()}, {"bound", s.bound().entries()}, {"coeffs", coeffs}};
}

GenSeries series_from_json(const Json& j) {
  GenSeries::Coeffs coeffs;
  bool has_unit = false;
  for (const auto& c : field(j, "coeffs")) {
    MultiIndex n = index_from(field(c, "index"));
    has_unit = has_unit || n.is_zero();
    coeffs.emplace(n, algelem_from_json(field(c, "value")));
  }
  MultiIndex bound = index_from(field(j, "bound"));
  if (!has_unit) coeffs.emplace(MultiIndex::zero(bound.rank()), AlgElem());
  return GenSeries::from_symmetric(field(j, "N").get<int>(), bound, std::move(coeffs), false);
}

Json to_json(const Tableaux& t) { return {{"rows", t.rows}, {"convention", "bottom-to-top"}}; }

Tableaux tableaux_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw ParseError("rows must be an array");
  try {
    return Tableaux{rows.get<std::vector<std::vector<int>>>()};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad rows: ") + e.what());
  }
}

}  // namespace bethe
