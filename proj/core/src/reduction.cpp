#include "wcifano/reduction.hpp"

#include "wcifano/chern.hpp"
#include "wcifano/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace wcifano {

const char* to_string(StepCase c) {
    switch (c) {
        case StepCase::s_up: return "s-up";
        case StepCase::drop_pair: return "drop-pair";
        case StepCase::both: return "both";
    }
    return "?";
}

const char* to_string(TerminalKind t) {
    switch (t) {
        case TerminalKind::s_eq_N: return "s=N";
        case TerminalKind::s_eq_N_plus_1: return "s=N+1";
        case TerminalKind::case1: return "case-1";
        case TerminalKind::case2: return "case-2";
        case TerminalKind::case3: return "case-3";
    }
    return "?";
}

namespace {

BigRat rat_pow(const BigRat& x, int e) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return BigRat(int_pow(numerator(x), static_cast<unsigned>(e)),
                  int_pow(denominator(x), static_cast<unsigned>(e)));
}

[[noreturn]] void reject(const char* id, const std::string& message) {
    throw hypothesis_error(id, std::string(id) + ": " + message);
}

} // namespace

// ---------------------------------------------------------------------------
// Additive walk (integer transfers)

Int AdditiveState::ones() const {
    std::size_t i = 0;
    while (i < weights.size() && weights[i] == 1) ++i;
    return static_cast<Int>(i);
}

void AdditiveState::validate() const {
    if (weights.size() < 2) reject("add/shape", "need at least two weights");
    if (degrees.empty()) reject("add/shape", "need at least one degree");
    if (!std::is_sorted(weights.begin(), weights.end()))
        reject("add/order", "weights must be nondecreasing");
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        reject("add/order", "degrees must be nondecreasing");
    if (weights.front() < 1) reject("add/a>=1", "weights must be positive");
    const Int N = top_index();
    const Int k = codim();
    const Int s = ones();
    if (s < 1) reject("add/s>=1", "need at least one unit weight");
    if (k > N + 1) reject("add/k<=N+1", "too many degrees");
    if (degrees.front() < 2) reject("add/d>=2", "degrees must be >= 2");
    for (Int i = 1; i <= k; ++i) {
        const Int idx = N - k + i;
        if (!(degrees[static_cast<std::size_t>(i - 1)] >
              weights[static_cast<std::size_t>(idx)]))
            reject("add/d>a", "d_" + std::to_string(i) + " must exceed a_" +
                                  std::to_string(idx));
    }
    Int nonunit = 0, total_d = 0;
    for (Int j = s; j <= N; ++j) nonunit += weights[static_cast<std::size_t>(j)];
    for (Int d : degrees) total_d += d;
    if (!(nonunit <= total_d && total_d < nonunit + s))
        reject("add/budget",
               "sum of degrees must lie in [sum nonunit weights, + s)");
}

namespace {

std::string additive_terminal_form(const AdditiveState& state, TerminalKind kind) {
    std::ostringstream out;
    out << "f(l) = ";
    for (std::size_t i = 0; i < state.degrees.size(); ++i) {
        if (i) out << " + ";
        out << state.degrees[i] << "^l";
    }
    if (kind == TerminalKind::s_eq_N)
        out << " - " << state.weights.back() << "^l - " << state.ones();
    else
        out << " - " << (state.top_index() + 1);
    return out.str();
}

// Terminal closed form is a sum of strictly increasing terms; also sweep the
// integer grid m = 1..12 exactly.
bool additive_terminal_monotone(const AdditiveState& state, TerminalKind kind) {
    if (kind == TerminalKind::s_eq_N &&
        !(state.degrees.back() > state.weights.back()))
        return false;
    if (state.degrees.front() < 2) return false;
    BigInt prev;
    for (int m = 1; m <= 12; ++m) {
        BigInt f = power_sum(state.degrees, m) - power_sum(state.weights, m);
        if (m > 1 && !(f > prev)) return false;
        prev = std::move(f);
    }
    return true;
}

} // namespace

AdditiveTrace reduce_additive(const AdditiveState& initial) {
    initial.validate();
    AdditiveTrace trace{initial, {}, TerminalKind::s_eq_N, false, {}};
    AdditiveState state = initial;
    const Int step_bound = initial.top_index() + initial.codim();

    while (true) {
        const Int N = state.top_index();
        const Int s = state.ones();
        if (s >= N) {
            trace.terminal =
                s == N ? TerminalKind::s_eq_N : TerminalKind::s_eq_N_plus_1;
            break;
        }
        if (static_cast<Int>(trace.steps.size()) >= step_bound)
            throw std::logic_error("reduce_additive: step bound N+k exceeded");

        const Int a_s = state.weights[static_cast<std::size_t>(s)];
        const Int a_top = state.weights.back();
        const Int d_top = state.degrees.back();
        const Int c = std::min(a_s - 1, d_top - a_top);
        if (c < 1) throw std::logic_error("reduce_additive: nonpositive transfer");

        const bool hits_one = (a_s - c == 1);
        const bool hits_degree = (a_top + c == d_top);
        AdditiveState next = state;
        StepCase kind;
        if (hits_one && !hits_degree) {
            kind = StepCase::s_up;
            next.weights[static_cast<std::size_t>(s)] = 1;
            next.weights.back() = a_top + c;
        } else if (!hits_one && hits_degree) {
            // The pair (d_k, a_N + c) cancels; a_s keeps the residue.
            kind = StepCase::drop_pair;
            next.weights[static_cast<std::size_t>(s)] = a_s - c;
            next.weights.pop_back();
            next.degrees.pop_back();
        } else {
            kind = StepCase::both;
            next.weights[static_cast<std::size_t>(s)] = 1;
            next.weights.pop_back();
            next.degrees.pop_back();
        }

        try {
            next.validate();
        } catch (const hypothesis_error& e) {
            throw std::logic_error(
                std::string("reduce_additive: invariant broke mid-trace: ") +
                e.what());
        }
        trace.steps.push_back({kind, c, next});
        state = std::move(next);
    }

    trace.terminal_form = additive_terminal_form(state, trace.terminal);
    trace.verdict = additive_terminal_monotone(state, trace.terminal);
    return trace;
}

// ---------------------------------------------------------------------------
// Multiplicative walk (exact rational transfers)

Int MultiplicativeState::ones() const {
    return static_cast<Int>(
        std::count(weights.begin(), weights.end(), BigRat(1)));
}

void MultiplicativeState::validate() const {
    using boost::multiprecision::denominator;
    if (weights.size() < 2) reject("mul/shape", "need at least two weights");
    if (degrees.empty()) reject("mul/shape", "need at least one degree");
    const Int N = top_index();
    const Int k = codim();
    if (N - k < 2) reject("mul/N-k>=2", "need N - k >= 2");
    if (weights.front() != 1) reject("mul/a0=1", "smallest weight must be 1");
    for (const auto& w : weights)
        if (w < 1) reject("mul/a>=1", "weights must be >= 1");
    for (Int j = 0; j + 1 <= N - 1; ++j)
        if (weights[static_cast<std::size_t>(j)] >
            weights[static_cast<std::size_t>(j + 1)])
            reject("mul/order", "a_0 <= ... <= a_{N-1} violated");
    if (N >= 2 && weights[static_cast<std::size_t>(N - 2)] > weights.back())
        reject("mul/order", "a_{N-2} <= a_N violated");
    const Int s = ones();
    for (Int j = 0; j <= N; ++j) {
        if (j == s || j == N - 1) continue;
        if (denominator(weights[static_cast<std::size_t>(j)]) != 1)
            reject("mul/integrality",
                   "only a_s and a_{N-1} may be non-integral (a_" +
                       std::to_string(j) + " is not)");
    }
    if (weights.back() < 3) reject("mul/aN>=3", "need a_N >= 3");
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        reject("mul/order", "degrees must be nondecreasing");
    if (degrees.front() < 2) reject("mul/d!=1", "degrees must be >= 2");
    for (Int i = 1; i <= k - 1; ++i) {
        const Int idx = N - k + i;
        if (!(BigRat(degrees[static_cast<std::size_t>(i - 1)]) >
              weights[static_cast<std::size_t>(idx)]))
            reject("mul/d>a", "d_" + std::to_string(i) + " must exceed a_" +
                                  std::to_string(idx));
    }
    if (BigRat(degrees.back()) < 2 * weights.back())
        reject("mul/d>=2aN", "need d_k >= 2 a_N");
    BigRat ratio = 1;
    for (Int d : degrees) ratio *= d;
    for (const auto& w : weights) ratio /= w;
    if (denominator(ratio) != 1 || ratio < 1)
        reject("mul/product",
               "prod d must be a positive integer multiple of prod a (ratio " +
                   to_fraction_string(ratio) + ")");
}

MultiplicativeTrace reduce_multiplicative(const MultiplicativeState& initial) {
    initial.validate();
    MultiplicativeTrace trace{initial, {}, TerminalKind::case2, {}, 0, false};
    MultiplicativeState state = initial;
    const Int step_bound = initial.top_index() + initial.codim();

    while (true) {
        const Int N = state.top_index();
        const Int k = state.codim();
        const Int s = state.ones();
        if (s >= N) {
            trace.terminal = TerminalKind::case2;
            break;
        }
        if (s == N - 1 && k > 1) {
            trace.terminal = TerminalKind::case1;
            break;
        }
        if (k == 1) {
            trace.terminal = TerminalKind::case3;
            break;
        }
        if (static_cast<Int>(trace.steps.size()) >= step_bound)
            throw std::logic_error(
                "reduce_multiplicative: step bound N+k exceeded");

        // s <= N-2 and k >= 2 here.
        const BigRat a_s = state.weights[static_cast<std::size_t>(s)];
        const BigRat a_next_to_top = state.weights[static_cast<std::size_t>(N - 1)];
        const Int d_next_to_top = state.degrees[static_cast<std::size_t>(k - 2)];
        const BigRat ratio = BigRat(d_next_to_top) / a_next_to_top;
        const BigRat p = std::min(a_s, ratio);
        if (p <= 1)
            throw std::logic_error("reduce_multiplicative: transfer factor <= 1");

        const bool hits_one = (p == a_s);
        const bool hits_degree = (p == ratio);
        MultiplicativeState next = state;
        StepCase kind;
        if (hits_one && !hits_degree) {
            kind = StepCase::s_up;
            next.weights[static_cast<std::size_t>(s)] = 1;
            next.weights[static_cast<std::size_t>(N - 1)] = a_next_to_top * p;
        } else if (!hits_one && hits_degree) {
            // The pair (d_{k-1}, a_{N-1} p) cancels; a_N and d_k survive.
            kind = StepCase::drop_pair;
            next.weights[static_cast<std::size_t>(s)] = a_s / p;
            next.weights.erase(next.weights.begin() + (N - 1));
            next.degrees.erase(next.degrees.begin() + (k - 2));
        } else {
            kind = StepCase::both;
            next.weights[static_cast<std::size_t>(s)] = 1;
            next.weights.erase(next.weights.begin() + (N - 1));
            next.degrees.erase(next.degrees.begin() + (k - 2));
        }

        try {
            next.validate();
        } catch (const hypothesis_error& e) {
            throw std::logic_error(
                std::string("reduce_multiplicative: invariant broke mid-trace: ") +
                e.what());
        }
        trace.steps.push_back({kind, p, next});
        state = std::move(next);
    }

    const Int N = state.top_index();
    const Int k = state.codim();
    if (trace.terminal == TerminalKind::case3) {
        trace.target_l = ceil_log(3, N + 1);
        trace.checker = "check_case3";
        trace.verdict = check_case3(state, trace.target_l);
    } else {
        trace.target_l = ceil_log(3, N - k + 2);
        trace.checker = "check_allbut1";
        trace.verdict = check_allbut1(state, trace.target_l);
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Terminal lemma checkers

// Hypotheses are checked in the labeling the walk maintains (a_0 <= ... <=
// a_{N-1} with a_{N-2} <= a_N): a grown a_{N-1} may exceed a_N at the stop,
// and the peeling argument pairs d_k with a_N as labeled, not with the
// sorted maximum.
bool check_allbut1(const MultiplicativeState& state, int l) {
    const auto& a = state.weights;
    const auto& d = state.degrees;
    const Int N = static_cast<Int>(a.size()) - 1;
    const Int k = static_cast<Int>(d.size());

    if (N - k < 2) reject("B1/N-k>=2", "need N - k >= 2");
    if (a.front() != 1) reject("B1/a0=1", "smallest weight must be 1");
    for (const auto& w : a)
        if (w < 1) reject("B1/a>=1", "weights must be >= 1");
    for (Int j = 0; j + 1 <= N - 1; ++j)
        if (a[static_cast<std::size_t>(j)] > a[static_cast<std::size_t>(j + 1)])
            reject("B1/order", "a_0 <= ... <= a_{N-1} violated");
    if (N >= 2 && a[static_cast<std::size_t>(N - 2)] > a.back())
        reject("B1/order", "a_{N-2} <= a_N violated");
    if (a.back() < 2) reject("B1/aN>=2", "need a_N >= 2");
    if (!std::is_sorted(d.begin(), d.end()))
        reject("B1/order", "degrees must be nondecreasing");
    if (BigRat(d.back()) < 2 * a.back()) reject("B1/d>=2aN", "need d_k >= 2 a_N");
    for (Int i = 1; i <= k - 1; ++i) {
        const Int idx = N - k + i;
        if (!(BigRat(d[static_cast<std::size_t>(i - 1)]) >
              a[static_cast<std::size_t>(idx)]))
            reject("B1/d>a", "d_" + std::to_string(i) + " must exceed a_" +
                                 std::to_string(idx));
    }
    const Int nonunit =
        static_cast<Int>(a.size()) -
        static_cast<Int>(std::count(a.begin(), a.end(), BigRat(1)));
    if (nonunit < 1 || nonunit > k)
        reject("B1/nonunit-count", "need 1 <= #{a_j != 1} <= k");
    if (l != ceil_log(3, N - k + 2))
        reject("B1/l", "l must equal ceil(log3(N-k+2))");

    BigRat lhs = 0, rhs = 0;
    for (Int x : d) lhs += rat_pow(BigRat(x), l);
    for (const auto& w : a) rhs += rat_pow(w, l);
    return lhs >= rhs;
}

bool check_case3(const MultiplicativeState& state, int l) {
    using boost::multiprecision::denominator;
    const auto& a = state.weights;
    if (state.degrees.size() != 1) reject("B2/k=1", "exactly one degree required");
    const Int d = state.degrees.front();
    const Int N = static_cast<Int>(a.size()) - 1;

    if (N < 3) reject("B2/N>=3", "need N >= 3");
    // Full sortedness is part of the hypotheses here; dropping the pair
    // (d_{k-1}, a_{N-1} p) restores it on every walk that stops in this case.
    if (!std::is_sorted(a.begin(), a.end()))
        reject("B2/order", "weights must be fully nondecreasing");
    if (a.front() != 1) reject("B2/a0=1", "smallest weight must be 1");
    const Int s = static_cast<Int>(std::count(a.begin(), a.end(), BigRat(1)));
    if (s > N - 1) reject("B2/s<=N-1", "need at least two nonunit weights");
    for (Int j = 0; j <= N; ++j) {
        if (j == s) continue;
        if (denominator(a[static_cast<std::size_t>(j)]) != 1)
            reject("B2/integrality", "only a_s may be non-integral");
    }
    if (a.back() < 3) reject("B2/aN>=3", "need a_N >= 3");
    if (BigRat(d) < 2 * a.back()) reject("B2/d>=2aN", "need d >= 2 a_N");
    BigRat ratio = d;
    for (const auto& w : a) ratio /= w;
    if (denominator(ratio) != 1 || ratio < 1)
        reject("B2/product", "d must be a positive integer multiple of prod a");
    if (l != ceil_log(3, N + 1)) reject("B2/l", "l must equal ceil(log3(N+1))");

    BigRat lhs = rat_pow(BigRat(d), l);
    BigRat rhs = 0;
    for (const auto& w : a) rhs += rat_pow(w, l);
    return lhs >= rhs;
}

bool check_alla1(Int top_index, Int codim, std::span<const Int> degrees, int l) {
    if (codim < 1 || static_cast<Int>(degrees.size()) != codim)
        reject("L5.2/k", "degree count must equal the codimension");
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        reject("L5.2/order", "degrees must be nondecreasing");
    if (degrees.front() < 2)
        reject("L5.2/d>=2", "degrees must be >= 2 (not in a hyperplane)");
    if (degrees.back() <= 2)
        reject("L5.2/not-quadrics", "an intersection of quadrics is excluded");
    Int sum_d = 0;
    for (Int x : degrees) sum_d += x;
    if (sum_d > top_index) reject("L5.2/fano", "need sum d <= N (Fano)");
    if (l != ceil_log(3, top_index - codim + 2) || l < 2)
        reject("L5.2/l", "l must equal ceil(log3(N-k+2)) and be >= 2");

    const BigInt lhs = power_sum(degrees, l);
    return lhs >= top_index + 1;
}

bool classify_conic_case(Int top_index, Int codim, const WeightSystem& ws,
                         const Multidegree& md) {
    if (ws.top_index() != top_index || md.count() != codim)
        reject("L5.1/shape", "N, k must match the weight/degree data");
    if (ceil_log(3, top_index - codim + 2) != 1)
        reject("L5.1/log3", "applies only when ceil(log3(N-k+2)) = 1");
    WciCandidate cand{ws, md};
    if (!passes_necessary_conditions(cand) ||
        power_sum_sign(ws.values(), md.values(), 1) <= 0)
        reject("L5.1/hypotheses",
               "candidate must pass the necessary conditions and c_1 > 0");
    return top_index == 2 && codim == 1 && ws.max() == 1 &&
           md.values() == std::vector<Int>{2};
}

// ---------------------------------------------------------------------------
// Real-exponent inequality oracles

namespace {

BigFloat rpow(const BigRat& base, const BigRat& exponent) {
    if (base == 0) return BigFloat(0);
    return boost::multiprecision::pow(static_cast<BigFloat>(base),
                                      static_cast<BigFloat>(exponent));
}

// h(l) = (a+c)^l + (b-c)^l - a^l - b^l with a crude term-magnitude radius.
std::pair<BigFloat, BigFloat> gap_value(const BigRat& a, const BigRat& b,
                                        const BigRat& c, const BigRat& l) {
    const BigFloat t1 = rpow(a + c, l);
    const BigFloat t2 = rpow(b - c, l);
    const BigFloat t3 = rpow(a, l);
    const BigFloat t4 = rpow(b, l);
    const BigFloat magnitude = abs(t1) + abs(t2) + abs(t3) + abs(t4);
    const BigFloat radius =
        magnitude * std::numeric_limits<BigFloat>::epsilon() * 1024;
    return {t1 + t2 - t3 - t4, radius};
}

} // namespace

Ternary lemma_at_gap(const BigRat& a, const BigRat& b, const BigRat& c,
                     const BigRat& l1, const BigRat& l2) {
    if (!(a >= b && b >= c && c > 0))
        throw std::invalid_argument("lemma_at_gap: need a >= b >= c > 0");
    if (!(l1 >= 1 && l2 >= l1))
        throw std::invalid_argument("lemma_at_gap: need 1 <= l1 <= l2");
    if (l1 == l2) return Ternary::yes;
    const auto [h1, r1] = gap_value(a, b, c, l1);
    const auto [h2, r2] = gap_value(a, b, c, l2);
    const BigFloat diff = h2 - h1;
    const BigFloat radius = r1 + r2;
    if (diff > radius) return Ternary::yes;
    if (diff < -radius) return Ternary::no;
    return Ternary::indeterminate;
}

bool lemma_at2(const BigRat& a, const BigRat& b, const BigRat& d) {
    if (!(1 <= d && d <= a && a <= b))
        throw std::invalid_argument("lemma_at2: need 1 <= d <= a <= b");
    const BigRat difference = a / d + b * d - a - b;
    const BigRat product = (a / d) * (d - 1) * (b * d / a - 1);
    if (difference != product)
        throw std::logic_error("lemma_at2: factorization identity failed");
    return product >= 0;
}

BigFloat lemma_power_gap(const BigRat& l) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (l < 2) throw std::invalid_argument("lemma_power_gap: need l >= 2");
    if (denominator(l) == 1) {
        const auto e = static_cast<unsigned>(numerator(l));
        const BigInt exact =
            int_pow(BigInt(4), e) - int_pow(BigInt(2), e) - int_pow(BigInt(3), e);
        return static_cast<BigFloat>(exact);
    }
    return rpow(BigRat(4), l) - rpow(BigRat(2), l) - rpow(BigRat(3), l);
}

} // namespace wcifano
