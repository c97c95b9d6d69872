#pragma once

#include "wcifano/chern.hpp"
#include "wcifano/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wcifano {

struct SearchCaps {
    Int dim = 1;                   // n
    std::optional<Int> max_codim;  // default: n (k <= n is forced anyway)
    Int max_weight = 1;
    Int max_degree = 2;
};

/// Advisory misconfiguration notes (never errors): max_degree < 2*max_weight
/// leaves nonunit top weights unreachable (d_k >= 2 a_N), max_degree < 4
/// excludes every candidate with a nonunit weight.
std::vector<std::string> caps_warnings(const SearchCaps& caps);

struct SurvivorRecord {
    WciCandidate cand;
    ChernProfile chern;
    int l = 0;
};

struct EnumerationStats {
    std::uint64_t scanned = 0;   // complete (weights; degrees) tuples tested
    std::uint64_t survivors = 0;
    double elapsed_ms = 0.0;
};

using RecordSink = std::function<void(const SurvivorRecord&)>;

/// Visits every candidate within caps passing the necessary conditions and
/// c_1 > 0, keeps those with is_l_fano(l, top_only), and feeds the sink in
/// strict lexicographic order (k asc, weights lex asc, degrees lex asc).
/// The stream is byte-for-byte identical for any worker count.
std::uint64_t enumerate_candidates(const SearchCaps& caps, int l,
                                   const RecordSink& sink, int jobs = 1,
                                   EnumerationStats* stats = nullptr);

/// Same walk without the l-Fano filter: the necessary-conditions + Fano
/// corpus. Records carry profiles to `profile_depth`.
std::uint64_t enumerate_filtered(const SearchCaps& caps, int profile_depth,
                                 const RecordSink& sink, int jobs = 1,
                                 EnumerationStats* stats = nullptr);

struct VerificationRun {
    Int n = 0;
    int l = 0;
    std::uint64_t scanned = 0;
    std::vector<SurvivorRecord> survivors;
};

struct Violation {
    SurvivorRecord record;
    std::string reason;
};

/// Verdicts are always caps-relative: "confirmed-within-caps" claims nothing
/// beyond the finite box that was searched.
struct VerificationReport {
    std::string theorem;
    SearchCaps caps; // caps.dim unused; dims below
    Int dim_min = 0;
    Int dim_max = 0;
    int m_max = 0; // monotonic runs only
    std::vector<VerificationRun> runs;
    std::vector<Violation> violations;
    std::uint64_t scanned_total = 0;
    double elapsed_ms = 0.0;

    bool confirmed() const { return violations.empty(); }
    std::uint64_t survivor_total() const;
};

/// Runs the enumeration at l = ceil(log2(n+2)) for each n; confirmed iff
/// every survivor set is empty.
VerificationReport verify_log2(Int dim_min, Int dim_max, const SearchCaps& caps,
                               int jobs = 1);

/// For each n and each l in the (possibly empty) window, survivors must all
/// be quadric complete intersections of the bounded codimension form.
VerificationReport verify_log3(Int dim_min, Int dim_max, const SearchCaps& caps,
                               int jobs = 1);

/// c_m > c_{m+1} for 1 <= m < m_max on every corpus element. Elements must
/// pass the necessary conditions and c_1 > 0; violations of that
/// precondition are rejected with an exception.
VerificationReport verify_monotonic(std::span<const WciCandidate> corpus, int m_max);

/// Convenience: builds the filtered corpus over dims and delegates.
VerificationReport verify_monotonic(Int dim_min, Int dim_max, const SearchCaps& caps,
                                    int m_max, int jobs = 1);

/// Default sweep depth: window top + margin.
int default_m_max(Int dim_max);

} // namespace wcifano
