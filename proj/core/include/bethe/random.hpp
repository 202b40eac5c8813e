#ifndef BETHE_RANDOM_HPP
#define BETHE_RANDOM_HPP

// Seeded random scalars and series for property checks.

#include <cstdint>
#include <random>

#include "bethe/series.hpp"

namespace bethe {

using Rng = std::mt19937_64;

/// c_0 + sum c_v v with small integer coefficients; with_pole divides by (v_1 + c).
RatFunc random_scalar(const std::vector<VarLabel>& vars, Rng& rng, bool with_pole = false);

/// Unital series whose coefficients are q-symmetrized random scalars.
GenSeries random_scalar_series(int N, const MultiIndex& bound, Rng& rng);

}  // namespace bethe

#endif  // BETHE_RANDOM_HPP
