#include "wcifano/blowup.hpp"

#include <stdexcept>
#include <vector>

namespace wcifano {

namespace {

// Numerical intersection ring of the blow-up of a point on P^n, truncated in
// degree n. Relations H.E = 0, H^n = 1, E^n = (-1)^{n+1} kill every mixed
// monomial, so one (H^j, E^j) coefficient pair per degree is a faithful and
// complete model.
struct RingElement {
    Int n;
    BigRat scalar;
    std::vector<BigRat> h; // h[j-1] multiplies H^j
    std::vector<BigRat> e; // e[j-1] multiplies E^j

    explicit RingElement(Int dim)
        : n(dim), scalar(0),
          h(static_cast<std::size_t>(dim), BigRat(0)),
          e(static_cast<std::size_t>(dim), BigRat(0)) {}
};

RingElement one(Int n) {
    RingElement r(n);
    r.scalar = 1;
    return r;
}

RingElement multiply(const RingElement& x, const RingElement& y) {
    RingElement r(x.n);
    r.scalar = x.scalar * y.scalar;
    for (Int j = 1; j <= x.n; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        BigRat hj = x.scalar * y.h[idx] + y.scalar * x.h[idx];
        BigRat ej = x.scalar * y.e[idx] + y.scalar * x.e[idx];
        for (Int i = 1; i < j; ++i) {
            const auto a = static_cast<std::size_t>(i - 1);
            const auto b = static_cast<std::size_t>(j - i - 1);
            hj += x.h[a] * y.h[b]; // H^i . H^{j-i}
            ej += x.e[a] * y.e[b]; // E^i . E^{j-i}; H^i . E^{j-i} = 0
        }
        r.h[idx] = hj;
        r.e[idx] = ej;
    }
    return r;
}

void add_scaled(RingElement& acc, const RingElement& x, const BigRat& factor) {
    acc.scalar += factor * x.scalar;
    for (std::size_t j = 0; j < acc.h.size(); ++j) {
        acc.h[j] += factor * x.h[j];
        acc.e[j] += factor * x.e[j];
    }
}

RingElement exponential(const RingElement& d) {
    RingElement acc = one(d.n);
    RingElement term = one(d.n);
    BigRat factorial = 1;
    for (Int t = 1; t <= d.n; ++t) {
        term = multiply(term, d);
        factorial *= t;
        add_scaled(acc, term, BigRat(1) / factorial);
    }
    return acc;
}

// ch(X) = exp(H+E) + n exp(H-E) - 1, expanded degree by degree.
RingElement chern_character(Int n) {
    RingElement h_plus_e(n), h_minus_e(n);
    h_plus_e.h[0] = 1;
    h_plus_e.e[0] = 1;
    h_minus_e.h[0] = 1;
    h_minus_e.e[0] = -1;
    RingElement ch = exponential(h_plus_e);
    add_scaled(ch, exponential(h_minus_e), BigRat(n));
    ch.scalar -= 1;
    return ch;
}

// Evaluate the degree-n component against the point: H^n = 1, E^n = (-1)^{n+1}.
BigRat evaluate_top(const RingElement& x) {
    const auto idx = static_cast<std::size_t>(x.n - 1);
    const int sign = (x.n % 2 == 0) ? -1 : 1;
    return x.h[idx] + sign * x.e[idx];
}

} // namespace

namespace {

PairingResult pair_degree(const RingElement& ch, Int n, Int k) {
    RingElement ch_k(n);
    ch_k.h[static_cast<std::size_t>(k - 1)] = ch.h[static_cast<std::size_t>(k - 1)];
    ch_k.e[static_cast<std::size_t>(k - 1)] = ch.e[static_cast<std::size_t>(k - 1)];

    // Effective k-cycle generators in degree n-k:
    //   X_k = H^{n-k} - (-1)^{n-k+1} E^{n-k},   Y_k = (-1)^{n-k+1} E^{n-k}.
    const int sign = ((n - k + 1) % 2 == 0) ? 1 : -1;
    RingElement x_cycle(n), y_cycle(n);
    x_cycle.h[static_cast<std::size_t>(n - k - 1)] = 1;
    x_cycle.e[static_cast<std::size_t>(n - k - 1)] = -sign;
    y_cycle.e[static_cast<std::size_t>(n - k - 1)] = sign;

    PairingResult result;
    result.n = n;
    result.k = k;
    result.ch_dot_X = evaluate_top(multiply(ch_k, x_cycle));
    result.ch_dot_Y = evaluate_top(multiply(ch_k, y_cycle));
    return result;
}

} // namespace

PairingResult blowup_chern_pairings(Int n, Int k) {
    if (n < 2) throw std::invalid_argument("blowup_chern_pairings: need n >= 2");
    if (k < 1 || k >= n)
        throw std::invalid_argument("blowup_chern_pairings: need 1 <= k < n");
    return pair_degree(chern_character(n), n, k);
}

BigRat blowup_top_chern(Int n) {
    if (n < 2) throw std::invalid_argument("blowup_top_chern: need n >= 2");
    return evaluate_top(chern_character(n));
}

std::vector<PairingResult> blowup_pairing_table(Int n) {
    if (n < 2) throw std::invalid_argument("blowup_pairing_table: need n >= 2");
    const RingElement ch = chern_character(n);
    std::vector<PairingResult> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (Int k = 1; k < n; ++k) rows.push_back(pair_degree(ch, n, k));
    PairingResult top;
    top.n = n;
    top.k = n;
    top.top = evaluate_top(ch);
    rows.push_back(std::move(top));
    return rows;
}

} // namespace wcifano
