#pragma once

#include "wcifano/arith.hpp"

#include <optional>
#include <vector>

namespace wcifano {

/// Chern-character pairings against the effective-cycle generators of the
/// blow-up of a point on projective n-space. Exact rationals; denominators
/// divide k! (resp. n! for the top value).
struct PairingResult {
    Int n = 0;
    Int k = 0;
    BigRat ch_dot_X; // ch_k . X_k
    BigRat ch_dot_Y; // ch_k . Y_k
    std::optional<BigRat> top; // ch_n, present when k = n
};

/// Pairings for 1 <= k < n, computed by expanding exp(H+E) + n exp(H-E) - 1
/// degree by degree in the two-generator ring with H.E = 0, H^n = 1,
/// E^n = (-1)^{n+1}, and intersecting with the cycle generators. Never a
/// table of constants.
PairingResult blowup_chern_pairings(Int n, Int k);

/// ch_n paired with the point class; equals (1 - (-1)^n)/n!.
BigRat blowup_top_chern(Int n);

/// Whole table for one n (rows k = 1..n-1 plus the top row), sharing a
/// single expansion of the Chern character.
std::vector<PairingResult> blowup_pairing_table(Int n);

} // namespace wcifano
