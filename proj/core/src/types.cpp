#include "wcifano/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace wcifano {

// ---------------------------------------------------------------------------
// arith.hpp

int ceil_log(Int base, Int x) {
    if (base < 2) throw std::invalid_argument("ceil_log: base must be >= 2");
    if (x < 1) throw std::invalid_argument("ceil_log: x must be >= 1");
    // p stays below x * base <= 2^126, so an unsigned 128-bit accumulator
    // never wraps.
    unsigned __int128 p = 1;
    const auto target = static_cast<unsigned __int128>(x);
    int level = 0;
    while (p < target) {
        p *= static_cast<unsigned __int128>(base);
        ++level;
    }
    return level;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

BigInt power_sum(std::span<const Int> xs, int m) {
    if (m < 0) throw std::invalid_argument("power_sum: m must be >= 0");
    BigInt total = 0;
    for (Int x : xs) total += int_pow(BigInt(x), static_cast<unsigned>(m));
    return total;
}

bool power_sum_fits_i128(Int max_value, std::size_t count, int m) {
    if (max_value < 0 || m < 0) return false;
    if (max_value <= 1) return true;
    // count * max_value^m < 2^126 <=> guarded repeated multiplication.
    const unsigned __int128 limit = (static_cast<unsigned __int128>(1) << 126);
    unsigned __int128 p = count == 0 ? 1 : static_cast<unsigned __int128>(count);
    for (int e = 0; e < m; ++e) {
        if (p > limit / static_cast<unsigned __int128>(max_value)) return false;
        p *= static_cast<unsigned __int128>(max_value);
    }
    return p < limit;
}

namespace {

__int128 power_sum_i128(std::span<const Int> xs, int m) {
    __int128 total = 0;
    for (Int x : xs) {
        __int128 p = 1;
        for (int e = 0; e < m; ++e) p *= x;
        total += p;
    }
    return total;
}

} // namespace

int power_sum_sign(std::span<const Int> a, std::span<const Int> d, int m) {
    if (m < 0) throw std::invalid_argument("power_sum_sign: m must be >= 0");
    Int max_val = 1;
    for (Int x : a) max_val = std::max(max_val, x);
    for (Int x : d) max_val = std::max(max_val, x);
    const std::size_t count = std::max(a.size(), d.size());
    if (power_sum_fits_i128(max_val, count, m)) {
        const __int128 diff = power_sum_i128(a, m) - power_sum_i128(d, m);
        return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    }
    const BigInt diff = power_sum(a, m) - power_sum(d, m);
    return diff.sign();
}

void chern_values(std::span<const Int> a, std::span<const Int> d, int depth,
                  std::vector<BigInt>& out) {
    out.clear();
    out.reserve(static_cast<std::size_t>(std::max(depth, 0)));
    Int max_val = 1;
    for (Int x : a) max_val = std::max(max_val, x);
    for (Int x : d) max_val = std::max(max_val, x);
    const std::size_t count = std::max(a.size(), d.size());
    if (power_sum_fits_i128(max_val, count, depth)) {
        // Incremental powers: one multiply per value per level.
        std::vector<__int128> pa(a.begin(), a.end());
        std::vector<__int128> pd(d.begin(), d.end());
        std::vector<Int> base_a(a.begin(), a.end());
        std::vector<Int> base_d(d.begin(), d.end());
        for (int m = 1; m <= depth; ++m) {
            __int128 diff = 0;
            for (auto& p : pa) diff += p;
            for (auto& p : pd) diff -= p;
            out.emplace_back(diff);
            if (m < depth) {
                for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= base_a[i];
                for (std::size_t i = 0; i < pd.size(); ++i) pd[i] *= base_d[i];
            }
        }
        return;
    }
    for (int m = 1; m <= depth; ++m)
        out.push_back(power_sum(a, m) - power_sum(d, m));
}

std::string to_fraction_string(const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<BigRat> parse_fraction(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return BigRat(BigInt(std::string(text)));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        return BigRat(BigInt(std::string(num)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<Int> parse_int(std::string_view text) {
    Int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

} // namespace

std::vector<Int> parse_positive_csv(std::string_view text, std::string_view what) {
    std::vector<Int> values;
    for (auto part : split_csv(text)) {
        const auto v = parse_int(part);
        if (!v || *v < 1)
            throw std::invalid_argument(std::string(what) +
                                        ": expected comma-separated positive integers, got '" +
                                        std::string(text) + "'");
        values.push_back(*v);
    }
    if (values.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

std::vector<BigRat> parse_rational_csv(std::string_view text, std::string_view what) {
    std::vector<BigRat> values;
    for (auto part : split_csv(text)) {
        const auto v = parse_fraction(part);
        if (!v || *v <= 0)
            throw std::invalid_argument(std::string(what) +
                                        ": expected comma-separated positive rationals, got '" +
                                        std::string(text) + "'");
        values.push_back(*v);
    }
    if (values.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

// ---------------------------------------------------------------------------
// types.hpp

WeightSystem::WeightSystem(std::vector<Int> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2)
        throw std::invalid_argument("WeightSystem: need at least two weights");
    for (Int w : weights_)
        if (w < 1) throw std::invalid_argument("WeightSystem: weights must be >= 1");
    std::sort(weights_.begin(), weights_.end());
    ones_ = static_cast<Int>(std::count(weights_.begin(), weights_.end(), Int(1)));
}

BigInt WeightSystem::sum() const {
    BigInt total = 0;
    for (Int w : weights_) total += w;
    return total;
}

Multidegree::Multidegree(std::vector<Int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty())
        throw std::invalid_argument("Multidegree: need at least one degree");
    for (Int d : degrees_)
        if (d < 1) throw std::invalid_argument("Multidegree: degrees must be >= 1");
    std::sort(degrees_.begin(), degrees_.end());
}

BigInt Multidegree::sum() const {
    BigInt total = 0;
    for (Int d : degrees_) total += d;
    return total;
}

WciCandidate::WciCandidate(WeightSystem ws, Multidegree md)
    : ws_(std::move(ws)), md_(std::move(md)) {
    if (dim() < 1)
        throw std::invalid_argument("WciCandidate: dimension N - k must be >= 1");
}

} // namespace wcifano
