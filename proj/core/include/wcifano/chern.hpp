#pragma once

#include "wcifano/types.hpp"

namespace wcifano {

/// c_m = sum_j a_j^m - sum_i d_i^m, exact. The sign equals the sign of the
/// coefficient of H^m|_X in m! * ch_m(X).
BigInt chern_coefficient(const WciCandidate& cand, int m);

ChernProfile chern_profile(const WciCandidate& cand, int depth);

enum class FanoMode { full_chain, top_only };

/// full_chain: c_m > 0 for all 1 <= m <= l. top_only: c_l > 0 alone; valid
/// as an l-Fano test only on candidates already past the necessary
/// conditions (caller contract; the enumeration hot path relies on it).
bool is_l_fano(const WciCandidate& cand, int l, FanoMode mode = FanoMode::full_chain);

struct LWindow {
    int lo = 0;
    int hi = 0;
    bool empty() const { return lo > hi; }
};

/// lo = ceil(log3(n+2)), hi = ceil(log2(n+2)) - 1; hi is the largest l the
/// log2 bound does not exclude, and the window may be empty (e.g. n = 2).
LWindow l_window(Int n);

} // namespace wcifano
