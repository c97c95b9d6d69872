// Acceptance suite: eight desk-scale checks, one per --criterion, each
// printing a single PASS/FAIL line. Run with no arguments to execute all.

#include "wcifano/blowup.hpp"
#include "wcifano/chern.hpp"
#include "wcifano/conditions.hpp"
#include "wcifano/reduction.hpp"
#include "wcifano/search.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace wcifano;

namespace {

std::uint64_t g_seed = 20250809ull;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

SearchCaps box(Int dim, Int max_weight, Int max_degree) {
    SearchCaps caps;
    caps.dim = dim;
    caps.max_weight = max_weight;
    caps.max_degree = max_degree;
    return caps;
}

// --- criterion 1: log2 emptiness over n = 1..10 plus oracle cross-checks ---

Outcome criterion_log2() {
    Outcome outcome;
    const auto report = verify_log2(1, 10, box(1, 20, 40), 1);
    if (!report.confirmed() || report.survivor_total() != 0)
        outcome.fail("survivors found at l = ceil(log2(n+2)) within caps 20/40");

    // Naive-oracle cross-checks; caps per dimension keep the oracle within
    // a few million raw pairs (the pruned side has no such limit).
    struct CrossCheck {
        Int n, max_weight, max_degree;
    };
    const CrossCheck boxes[] = {{1, 20, 40}, {2, 12, 24}, {3, 8, 16}, {4, 6, 12}};
    for (const auto& cc : boxes) {
        const auto caps = box(cc.n, cc.max_weight, cc.max_degree);
        const int l = ceil_log(2, cc.n + 2);
        const auto expected = testing::oracle_enumerate(caps, l);
        const auto actual = testing::pruned_enumerate(caps, l);
        if (actual != expected)
            outcome.fail("pruned search disagrees with the naive oracle at n = " +
                         std::to_string(cc.n));
    }
    return outcome;
}

// --- criterion 2: log3 window survivors are exactly the quadric forms ------

Outcome criterion_log3() {
    Outcome outcome;
    const auto report = verify_log3(5, 9, box(5, 20, 40), 1);
    if (!report.confirmed()) outcome.fail("window survivor fails the quadric form");
    for (const auto& run : report.runs) {
        // Expected set: all-unit weights, all degrees 2, k * 2^l < N + 1.
        std::vector<testing::OracleRecord> expected;
        for (Int k = 1; k <= run.n; ++k) {
            const Int N = run.n + k;
            const BigInt bound = BigInt(k) * int_pow(BigInt(2),
                                                     static_cast<unsigned>(run.l));
            if (bound < N + 1)
                expected.push_back(
                    {std::vector<Int>(static_cast<std::size_t>(N) + 1, 1),
                     std::vector<Int>(static_cast<std::size_t>(k), 2)});
        }
        std::vector<testing::OracleRecord> actual;
        for (const auto& record : run.survivors)
            actual.push_back({record.cand.ws().values(), record.cand.md().values()});
        if (actual != expected)
            outcome.fail("survivor set mismatch at n = " + std::to_string(run.n) +
                         ", l = " + std::to_string(run.l));
        if (run.n == 7 && run.l == 3 &&
            !(actual.size() == 1 &&
              actual[0] == testing::OracleRecord{std::vector<Int>(9, 1), {2}}))
            outcome.fail("n = 7, l = 3 survivor list is not exactly the quadric");
    }
    return outcome;
}

// --- criterion 3: chain decrease on the filtered corpus --------------------

Outcome criterion_monotonic() {
    Outcome outcome;
    const auto report = verify_monotonic(1, 9, box(1, 20, 40), 13, 1);
    if (!report.confirmed())
        outcome.fail("chain violation: " + report.violations.front().reason);
    if (report.scanned_total == 0) outcome.fail("empty corpus");
    return outcome;
}

// --- criterion 4: projective-space closed forms -----------------------------

Outcome criterion_closed_forms() {
    Outcome outcome;
    std::mt19937_64 rng(g_seed + 4);
    std::uniform_int_distribution<Int> n_dist(2, 2000);
    std::uniform_int_distribution<int> l_dist(1, 12);
    for (int i = 0; i < 10'000; ++i) {
        const Int N = n_dist(rng);
        std::uniform_int_distribution<Int> k_dist(1, N - 1);
        const Int k = k_dist(rng);
        const int l = l_dist(rng);
        const WciCandidate cand{
            WeightSystem(std::vector<Int>(static_cast<std::size_t>(N) + 1, 1)),
            Multidegree(std::vector<Int>(static_cast<std::size_t>(k), 2))};
        const bool closed =
            BigInt(k) * int_pow(BigInt(2), static_cast<unsigned>(l)) < N + 1;
        if (is_l_fano(cand, l, FanoMode::full_chain) != closed) {
            outcome.fail("quadric closed form mismatch at N = " +
                         std::to_string(N) + ", k = " + std::to_string(k) +
                         ", l = " + std::to_string(l));
            break;
        }
    }
    for (int i = 0; i < 10'000; ++i) {
        const Int N = n_dist(rng);
        const int l = l_dist(rng);
        const WciCandidate cubic{
            WeightSystem(std::vector<Int>(static_cast<std::size_t>(N) + 1, 1)),
            Multidegree({3})};
        const bool closed = l <= ceil_log(3, N + 1) - 1;
        if (is_l_fano(cubic, l, FanoMode::full_chain) != closed) {
            outcome.fail("cubic closed form mismatch at N = " + std::to_string(N) +
                         ", l = " + std::to_string(l));
            break;
        }
    }
    return outcome;
}

// --- criterion 5: blow-up pairings two ways ---------------------------------

Outcome criterion_blowup() {
    Outcome outcome;
    auto factorial = [](Int m) {
        BigInt f = 1;
        for (Int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    for (Int n = 2; n <= 20; ++n) {
        for (const auto& pairing : blowup_pairing_table(n)) { // expansion route
            const Int k = pairing.k;
            const int sign = k % 2 == 0 ? 1 : -1;
            if (pairing.top) {
                if (*pairing.top != BigRat(1 - sign, factorial(n)))
                    outcome.fail("top value mismatch at n = " + std::to_string(n));
                if (n % 2 == 0 && *pairing.top != 0)
                    outcome.fail("even top value is nonzero");
                continue;
            }
            const BigRat closed_x(1 - sign, factorial(k)); // closed forms
            const BigRat closed_y(n + sign, factorial(k));
            if (pairing.ch_dot_X != closed_x || pairing.ch_dot_Y != closed_y)
                outcome.fail("pairing mismatch at n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
            if (k % 2 == 0 && pairing.ch_dot_X != 0)
                outcome.fail("even-degree pairing with the strict cycle is nonzero");
        }
    }
    return outcome;
}

// --- criterion 6: appendix inequality suites --------------------------------

Outcome criterion_appendix() {
    Outcome outcome;
    std::mt19937_64 rng(g_seed + 6);
    std::uniform_int_distribution<Int> num(1, 1000), den(1, 40);

    int indeterminate = 0;
    for (int i = 0; i < 10'000; ++i) {
        BigRat v[3];
        for (auto& x : v) x = BigRat(num(rng), den(rng));
        std::sort(v, v + 3, [](const BigRat& x, const BigRat& y) { return x > y; });
        // Rational exponents 1 <= l1 <= l2 <= 12.
        BigRat l1 = 1 + BigRat(num(rng) % 89, 8);
        BigRat l2 = 1 + BigRat(num(rng) % 89, 8);
        if (l2 < l1) std::swap(l1, l2);
        switch (lemma_at_gap(v[0], v[1], v[2], l1, l2)) {
            case Ternary::no:
                outcome.fail("gap lemma failed on a sample");
                break;
            case Ternary::indeterminate:
                ++indeterminate;
                break;
            case Ternary::yes:
                break;
        }
    }
    if (indeterminate >= 100) // < 1% of 10^4
        outcome.fail("gap lemma: too many indeterminate samples (" +
                     std::to_string(indeterminate) + ")");

    for (int i = 0; i < 10'000; ++i) {
        BigRat v[3];
        for (auto& x : v) x = 1 + BigRat(num(rng), den(rng));
        std::sort(v, v + 3);
        if (!lemma_at2(v[1], v[2], v[0])) {
            outcome.fail("rebalancing inequality failed on a sample");
            break;
        }
    }

    if (lemma_power_gap(2) != 3) outcome.fail("power gap at l = 2 is not exactly 3");
    for (BigRat l = 2; l <= 12; l += BigRat(1, 8))
        if (lemma_power_gap(l) <= 0) {
            outcome.fail("power gap not positive at a grid point");
            break;
        }
    return outcome;
}

// --- criterion 7: reduction engines ------------------------------------------

Outcome criterion_reduction() {
    Outcome outcome;
    std::mt19937_64 rng(g_seed + 7);

    // Golden trace first.
    const auto golden = reduce_additive(AdditiveState{{1, 1, 2, 3}, {6}});
    if (!(golden.steps.size() == 1 && golden.steps[0].kind == StepCase::s_up &&
          golden.steps[0].transfer == 1 &&
          golden.steps[0].after.weights == std::vector<Int>{1, 1, 1, 4} &&
          golden.terminal == TerminalKind::s_eq_N && golden.verdict))
        outcome.fail("golden additive trace mismatch");

    for (int i = 0; i < 1000; ++i) {
        const auto initial = testing::random_additive(rng);
        const auto trace = reduce_additive(initial);
        if (static_cast<Int>(trace.steps.size()) >
            initial.top_index() + initial.codim()) {
            outcome.fail("additive step bound exceeded");
            break;
        }
        bool states_ok = true;
        for (const auto& step : trace.steps) {
            try {
                step.after.validate();
            } catch (const std::exception&) {
                states_ok = false;
            }
        }
        if (!states_ok) {
            outcome.fail("additive intermediate state failed revalidation");
            break;
        }
        const AdditiveState& final_state =
            trace.steps.empty() ? initial : trace.steps.back().after;
        BigInt prev;
        for (int m = 1; m <= 12; ++m) {
            BigInt f = power_sum(final_state.degrees, m) -
                       power_sum(final_state.weights, m);
            if (m > 1 && !(f > prev)) {
                outcome.fail("terminal closed form not increasing");
                break;
            }
            prev = std::move(f);
        }
        if (!trace.verdict) {
            outcome.fail("additive terminal verdict false");
            break;
        }
    }

    const auto pool = testing::multiplicative_pool(6, 10, 20);
    if (pool.empty()) {
        outcome.fail("empty multiplicative state pool");
        return outcome;
    }
    for (int i = 0; i < 1000; ++i) {
        const auto initial = testing::random_multiplicative(rng, pool);
        const auto trace = reduce_multiplicative(initial);
        if (static_cast<Int>(trace.steps.size()) >
            initial.top_index() + initial.codim()) {
            outcome.fail("multiplicative step bound exceeded");
            break;
        }
        for (const auto& step : trace.steps) {
            try {
                step.after.validate();
            } catch (const std::exception&) {
                outcome.fail("multiplicative intermediate state failed revalidation");
            }
        }
        if (!trace.verdict) {
            outcome.fail("multiplicative terminal checker rejected");
            break;
        }
    }
    return outcome;
}

// --- criterion 8: worker-count determinism through the CLI -------------------

std::string run_cli_capture(const std::string& args, int& exit_code) {
    const std::string cmd =
        std::string(WCIFANO_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

Outcome criterion_determinism() {
    Outcome outcome;
    const std::string base = "enumerate --dim 7 --max-weight 12 --max-degree 24 --l 2";
    int code1 = 0, code8 = 0;
    const std::string jobs1 = run_cli_capture(base + " --jobs 1", code1);
    const std::string jobs8 = run_cli_capture(base + " --jobs 8", code8);
    if (code1 != 0 || code8 != 0) outcome.fail("enumerate exited nonzero");
    if (jobs1.empty()) outcome.fail("empty survivor stream");
    if (jobs1 != jobs8) outcome.fail("jobs 1 and jobs 8 streams differ");
    return outcome;
}

struct Criterion {
    int number;
    const char* label;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "log2 bound: zero survivors over n = 1..10 (caps 20/40), oracle-checked",
     criterion_log2},
    {2, "log3 window: survivors are exactly the bounded quadric intersections",
     criterion_log3},
    {3, "chain decrease c_m > c_{m+1}, m <= 12, on the n <= 9 corpus",
     criterion_monotonic},
    {4, "projective-space closed forms for quadric and cubic intersections",
     criterion_closed_forms},
    {5, "blow-up pairings: expansion equals closed forms, exact rationals",
     criterion_blowup},
    {6, "inequality oracles: gap lemma, rebalancing, power gap",
     criterion_appendix},
    {7, "reduction walks: termination, revalidation, monotone terminals",
     criterion_reduction},
    {8, "determinism: byte-identical streams for jobs 1 and jobs 8",
     criterion_determinism},
};

} // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            selected = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            g_seed = std::strtoull(argv[++i], nullptr, 10);
    }

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (selected != 0 && criterion.number != selected) continue;
        const Outcome outcome = criterion.run();
        if (outcome.pass) {
            std::cout << "[PASS] criterion " << criterion.number << ": "
                      << criterion.label << "\n";
        } else {
            std::cout << "[FAIL] criterion " << criterion.number << ": "
                      << criterion.label << " -- " << outcome.detail << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
