#include "wcifano/chern.hpp"

namespace wcifano {

BigInt chern_coefficient(const WciCandidate& cand, int m) {
    if (m < 1) throw std::invalid_argument("chern_coefficient: m must be >= 1");
    return power_sum(cand.ws().values(), m) - power_sum(cand.md().values(), m);
}

ChernProfile chern_profile(const WciCandidate& cand, int depth) {
    if (depth < 1) throw std::invalid_argument("chern_profile: depth must be >= 1");
    ChernProfile profile;
    chern_values(cand.ws().values(), cand.md().values(), depth,
                 profile.coefficients);
    return profile;
}

bool is_l_fano(const WciCandidate& cand, int l, FanoMode mode) {
    if (l < 1) throw std::invalid_argument("is_l_fano: l must be >= 1");
    const auto& a = cand.ws().values();
    const auto& d = cand.md().values();
    if (mode == FanoMode::top_only) return power_sum_sign(a, d, l) > 0;
    for (int m = 1; m <= l; ++m)
        if (power_sum_sign(a, d, m) <= 0) return false;
    return true;
}

LWindow l_window(Int n) {
    if (n < 1) throw std::invalid_argument("l_window: n must be >= 1");
    return LWindow{ceil_log(3, n + 2), ceil_log(2, n + 2) - 1};
}

} // namespace wcifano
