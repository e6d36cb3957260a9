#pragma once

#include <parahiggs/hitchin.hpp>

#include "support/random.hpp"

namespace parahiggs::testing {

inline Line random_line(Rng& rng) {
    if (rng.between(0, 5) == 0) return Line::through(Rat(0), Rat(1));
    return Line::through(Rat(1), rng.small_rat(4));
}

/// Random combination of the parabolic basis for the given flags.
inline ParabolicHiggsField random_field(const MarkedCurve& mc, const FlagData& flags, Rng& rng) {
    const auto basis = mc.parabolic_basis(flags);
    RatVector coords(3 * mc.omega().dim());
    for (const auto& b : basis) {
        const Rat s = rng.small_rat(3);
        for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += s * b[j];
    }
    return mc.field_from_coordinates(coords, flags);
}

}  // namespace parahiggs::testing
