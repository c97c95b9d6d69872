#include "wcifano/conditions.hpp"

#include <algorithm>
#include <numeric>

namespace wcifano {

bool ConditionReport::all_pass() const {
    if (!wf_space || !not_linear_cone) return false;
    return std::all_of(items.begin(), items.end(), [](bool b) { return b; });
}

bool wps_well_formed(const WeightSystem& ws) {
    // Leave-one-out gcds via prefix/suffix arrays.
    const auto& a = ws.values();
    const std::size_t n = a.size();
    std::vector<Int> prefix(n + 1, 0), suffix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = std::gcd(prefix[i], a[i]);
    for (std::size_t i = n; i > 0; --i) suffix[i - 1] = std::gcd(suffix[i], a[i - 1]);
    for (std::size_t i = 0; i < n; ++i)
        if (std::gcd(prefix[i], suffix[i + 1]) != 1) return false;
    return true;
}

namespace {

bool no_common_value(std::span<const Int> sorted_a, std::span<const Int> sorted_b) {
    std::size_t i = 0, j = 0;
    while (i < sorted_a.size() && j < sorted_b.size()) {
        if (sorted_a[i] == sorted_b[j]) return false;
        if (sorted_a[i] < sorted_b[j]) ++i; else ++j;
    }
    return true;
}

Int count_ones(std::span<const Int> sorted) {
    std::size_t i = 0;
    while (i < sorted.size() && sorted[i] == 1) ++i;
    return static_cast<Int>(i);
}

// (1): d_i > a_{N-k+i} for 1 <= i <= k-1 (vacuous at k = 1).
bool cond_degree_dominance(std::span<const Int> a, std::span<const Int> d) {
    const std::size_t k = d.size();
    const std::size_t N = a.size() - 1;
    for (std::size_t i = 1; i + 1 <= k; ++i)
        if (!(d[i - 1] > a[N - k + i])) return false;
    return true;
}

// (3): s >= sum a - sum d.
bool cond_fano_budget(std::span<const Int> a, std::span<const Int> d, Int s) {
    Int sum_a = 0, sum_d = 0; // desk-scale sums fit Int easily
    bool small = true;
    for (Int w : a) { sum_a += w; if (w > (Int(1) << 40)) small = false; }
    for (Int x : d) { sum_d += x; if (x > (Int(1) << 40)) small = false; }
    if (small) return s >= sum_a - sum_d;
    BigInt A = 0, D = 0;
    for (Int w : a) A += w;
    for (Int x : d) D += x;
    return BigInt(s) >= A - D;
}

// (7): #{j : b | a_j} <= #{i : b | d_i} for every b >= 2. Only b <= a_N
// dividing at least one weight can make the left side nonzero.
bool cond_divisor_counts(std::span<const Int> a, std::span<const Int> d) {
    const Int top = a.back();
    for (Int b = 2; b <= top; ++b) {
        int left = 0;
        for (Int w : a)
            if (w % b == 0) ++left;
        if (left == 0) continue;
        int right = 0;
        for (Int x : d)
            if (x % b == 0) ++right;
        if (left > right) return false;
    }
    return true;
}

// (8): prod a | prod d, without forming big products: cancel each weight's
// prime content against the degree multiset by gcd. Exact prime-exponent
// bookkeeping in disguise, zero allocation on the hot path.
bool cond_product_divides(std::span<const Int> a, std::span<const Int> d) {
    Int residue[64];
    std::vector<Int> heap_residue;
    Int* ds = residue;
    if (d.size() > 64) {
        heap_residue.assign(d.begin(), d.end());
        ds = heap_residue.data();
    } else {
        std::copy(d.begin(), d.end(), ds);
    }
    const std::size_t k = d.size();
    for (Int w : a) {
        if (w == 1) continue;
        Int rest = w;
        for (std::size_t i = 0; i < k && rest > 1; ++i) {
            while (rest > 1) {
                const Int g = std::gcd(rest, ds[i]);
                if (g == 1) break;
                ds[i] /= g;
                rest /= g;
            }
        }
        if (rest > 1) return false;
    }
    return true;
}

} // namespace

bool not_linear_cone(const WciCandidate& cand) {
    return no_common_value(cand.ws().values(), cand.md().values());
}

ConditionReport necessary_conditions(const WciCandidate& cand) {
    const auto& a = cand.ws().values();
    const auto& d = cand.md().values();
    const Int N = cand.ambient();
    const Int k = cand.codim();
    const Int s = cand.ones();

    ConditionReport report;
    report.wf_space = wps_well_formed(cand.ws());
    report.not_linear_cone = no_common_value(a, d);
    report.items[0] = cond_degree_dominance(a, d);
    report.items[1] = s >= k + 1;
    report.items[2] = cond_fano_budget(a, d, s);
    report.items[3] = report.not_linear_cone;
    report.items[4] = std::none_of(d.begin(), d.end(), [](Int x) { return x == 1; });
    report.items[5] = N >= 2 * k;
    report.items[6] = cond_divisor_counts(a, d);
    report.items[7] = cond_product_divides(a, d);
    report.items[8] = d.back() >= 2 * a.back();

    if (!report.wf_space) report.first_failure = kIdWfSpace;
    else if (!report.not_linear_cone) report.first_failure = kIdLinearCone;
    else {
        for (int i = 0; i < 9; ++i) {
            if (!report.items[static_cast<std::size_t>(i)]) {
                report.first_failure = kConditionIds[static_cast<std::size_t>(i)];
                break;
            }
        }
    }
    return report;
}

bool passes_necessary_conditions(std::span<const Int> a, std::span<const Int> d) {
    const Int N = static_cast<Int>(a.size()) - 1;
    const Int k = static_cast<Int>(d.size());
    const Int s = count_ones(a);
    // Cheapest-first order: (5),(6),(2),(9),(4),(1),(3),(7),(8); wf-space is
    // free once (2) holds (two unit weights force every leave-one-out gcd
    // to 1), so it is only computed in the s < 2 corner.
    if (d.front() == 1) return false;                       // (5)
    if (N < 2 * k) return false;                            // (6)
    if (s < k + 1) return false;                            // (2)
    if (d.back() < 2 * a.back()) return false;              // (9)
    if (!no_common_value(a, d)) return false;               // (4)
    if (!cond_degree_dominance(a, d)) return false;         // (1)
    if (!cond_fano_budget(a, d, s)) return false;           // (3)
    if (!cond_divisor_counts(a, d)) return false;           // (7)
    if (!cond_product_divides(a, d)) return false;          // (8)
    return true;
}

bool passes_necessary_conditions(const WciCandidate& cand) {
    return passes_necessary_conditions(
        std::span<const Int>(cand.ws().values()),
        std::span<const Int>(cand.md().values()));
}

bool is_quadric_ci_form(const WciCandidate& cand, int l) {
    if (l < 1) throw std::invalid_argument("is_quadric_ci_form: l must be >= 1");
    const auto& a = cand.ws().values();
    const auto& d = cand.md().values();
    if (a.back() != 1) return false;
    if (d.front() != 2 || d.back() != 2) return false;
    const BigInt two_l = int_pow(BigInt(2), static_cast<unsigned>(l));
    const BigInt bound = (BigInt(cand.ambient() + 1) + two_l - 1) / two_l - 1;
    return BigInt(cand.codim()) <= bound;
}

} // namespace wcifano
