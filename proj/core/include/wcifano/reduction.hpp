#pragma once

#include "wcifano/types.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcifano {

/// Thrown when an input violates a stated lemma/state hypothesis. `id` names
/// the failing hypothesis (e.g. "add/budget", "mul/product", "B1/d>=2aN").
struct hypothesis_error : std::invalid_argument {
    std::string id;
    hypothesis_error(std::string id_, const std::string& message)
        : std::invalid_argument(message), id(std::move(id_)) {}
};

/// State of the additive normalization walk: integer weights with s leading
/// ones, integer degrees >= 2, and the budget
///   sum_{j>=s} a_j <= sum d_i < sum_{j>=s} a_j + s.
struct AdditiveState {
    std::vector<Int> weights;
    std::vector<Int> degrees;

    Int top_index() const { return static_cast<Int>(weights.size()) - 1; } // N
    Int codim() const { return static_cast<Int>(degrees.size()); }        // k
    Int ones() const;                                                     // s

    /// Throws hypothesis_error on any violated invariant.
    void validate() const;
};

/// State of the multiplicative walk: rational weights (all integral except
/// possibly positions s and N-1), ordered a_0 <= ... <= a_{N-1} with
/// a_{N-2} <= a_N, integer degrees, and prod d = m * prod a for integer m.
struct MultiplicativeState {
    std::vector<BigRat> weights;
    std::vector<Int> degrees;

    Int top_index() const { return static_cast<Int>(weights.size()) - 1; } // N
    Int codim() const { return static_cast<Int>(degrees.size()); }        // k
    Int ones() const;                                                     // s

    void validate() const;
};

enum class StepCase { s_up, drop_pair, both };
enum class TerminalKind { s_eq_N, s_eq_N_plus_1, case1, case2, case3 };

const char* to_string(StepCase c);
const char* to_string(TerminalKind t);

struct AdditiveStep {
    StepCase kind;
    Int transfer; // c
    AdditiveState after;
};

struct AdditiveTrace {
    AdditiveState initial;
    std::vector<AdditiveStep> steps;
    TerminalKind terminal;
    bool verdict = false;       // terminal closed form monotone
    std::string terminal_form;  // rendered closed form, for reports
};

struct MultiplicativeStep {
    StepCase kind;
    BigRat factor; // p
    MultiplicativeState after;
};

struct MultiplicativeTrace {
    MultiplicativeState initial;
    std::vector<MultiplicativeStep> steps;
    TerminalKind terminal;
    std::string checker; // "check_allbut1" or "check_case3"
    int target_l = 0;
    bool verdict = false;
};

/// Repeats the three-case integer transfer c = min{a_s - 1, d_k - a_N} until
/// s = N or s = N + 1, revalidating after every step. A mid-trace invariant
/// break is an implementation bug and aborts via std::logic_error.
AdditiveTrace reduce_additive(const AdditiveState& initial);

/// Repeats the three-case rational transfer p = min{a_s, d_{k-1}/a_{N-1}}
/// until one of the three stop cases, then dispatches the matching terminal
/// checker. Requires k >= 2 to step; degenerate starts are terminal with an
/// empty step list.
MultiplicativeTrace reduce_multiplicative(const MultiplicativeState& initial);

enum class Ternary { yes, no, indeterminate };

/// Whether h(l2) >= h(l1) for h(l) = (a+c)^l + (b-c)^l - a^l - b^l, given
/// a >= b >= c > 0 and 1 <= l1 <= l2. Real exponents: evaluated in 50-digit
/// floats with an error radius; a comparison inside the radius is
/// indeterminate, never a pass or a fail.
Ternary lemma_at_gap(const BigRat& a, const BigRat& b, const BigRat& c,
                     const BigRat& l1, const BigRat& l2);

/// a + b <= a/d + b*d for 1 <= d <= a <= b, decided exactly via the
/// factorization (a/d)(d-1)(bd/a - 1) >= 0.
bool lemma_at2(const BigRat& a, const BigRat& b, const BigRat& d);

/// 4^l - 2^l - 3^l for l >= 2; exact when l is an integer.
BigFloat lemma_power_gap(const BigRat& l);

/// Hypotheses of the "all but at most k nonunit weights" terminal lemma,
/// checked on the sorted weight multiset; then sum d^l >= sum a^l at
/// l = ceil(log3(N-k+2)).
bool check_allbut1(const MultiplicativeState& state, int l);

/// k = 1 terminal: d^l >= sum a^l at l = ceil(log3(N+1)) under the
/// divisibility hypothesis d = m * prod a.
bool check_case3(const MultiplicativeState& state, int l);

/// Straight projective space case (all weights 1), some degree >= 3:
/// sum d^l >= N + 1 at l = ceil(log3(N-k+2)).
bool check_alla1(Int top_index, Int codim, std::span<const Int> degrees, int l);

/// When ceil(log3(N-k+2)) = 1, a candidate passing the necessary conditions
/// and c_1 > 0 must be the conic: N = 2, k = 1, weights (1,1,1), degree 2.
/// Returns whether the given data is exactly that candidate.
bool classify_conic_case(Int top_index, Int codim, const WeightSystem& ws,
                         const Multidegree& md);

} // namespace wcifano
