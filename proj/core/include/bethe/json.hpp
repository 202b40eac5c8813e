#ifndef BETHE_JSON_HPP
#define BETHE_JSON_HPP

// JSON encodings of the algebraic objects. Decoding reproduces the stored
// representation exactly; malformed input throws ParseError.

#include <nlohmann/json.hpp>

#include "bethe/tableaux.hpp"

namespace bethe {

using Json = nlohmann::json;

/// [{"coeff": "p/q", "exps": [["t[1,2]", k], ...]}, ...]
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num": Poly, "den": [{"factor": Poly, "pow": k}, ...]}
Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

/// {"CurrF": [a, var]} | {"CompF": [j, i, var]} | {"Opaque": [name, [vars], payload]}
Json to_json(const Atom& a);
Atom atom_from_json(const Json& j);

/// {"terms": [{"coeff": RatFunc, "word": [Atom, ...]}, ...]}
Json to_json(const AlgElem& x);
AlgElem algelem_from_json(const Json& j);

/// {"N": N, "bound": [...], "coeffs": [{"index": [...], "value": AlgElem}, ...]}
Json to_json(const GenSeries& s);
GenSeries series_from_json(const Json& j);

/// {"rows": [[types], ...], "convention": "bottom-to-top"}
Json to_json(const Tableaux& t);
Tableaux tableaux_from_json(const Json& j);

}  // namespace bethe

#endif  // BETHE_JSON_HPP
