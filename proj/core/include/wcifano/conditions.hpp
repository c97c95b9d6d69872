#pragma once

#include "wcifano/types.hpp"

#include <array>
#include <optional>
#include <string>

namespace wcifano {

// Stable identifiers used in every serialized report.
inline constexpr const char* kIdWfSpace = "wf-space";
inline constexpr const char* kIdLinearCone = "linear-cone";
inline constexpr std::array<const char*, 9> kConditionIds = {
    "thm2.6/1", "thm2.6/2", "thm2.6/3", "thm2.6/4", "thm2.6/5",
    "thm2.6/6", "thm2.6/7", "thm2.6/8", "thm2.6/9",
};

// A passing report asserts combinatorial *necessary* conditions only; it
// never certifies that a smooth model exists. wf_note carries that caveat.
inline constexpr const char* kWfNote = "necessary-conditions regime";

struct ConditionReport {
    bool wf_space = false;
    std::string wf_note = kWfNote;
    bool not_linear_cone = false;
    std::array<bool, 9> items{}; // items[i] is condition (i+1)
    std::optional<std::string> first_failure;

    bool all_pass() const;
    bool item(int number) const { return items.at(number - 1); } // 1-based
};

/// gcd of every N-subset of the weights equals 1.
bool wps_well_formed(const WeightSystem& ws);

/// No degree equals any weight.
bool not_linear_cone(const WciCandidate& cand);

/// Evaluates all nine conditions plus the well-formedness / linear-cone
/// flags; records every flag even after a failure.
ConditionReport necessary_conditions(const WciCandidate& cand);

/// Short-circuiting variant ordered cheapest-first:
/// (5),(6),(2),(9),(4),(1),(3),(7),(8). Also requires wf-space. Used by the
/// enumeration hot path.
bool passes_necessary_conditions(const WciCandidate& cand);
bool passes_necessary_conditions(std::span<const Int> weights,
                                 std::span<const Int> degrees);

/// All weights 1, all degrees 2, and k <= ceil((N+1)/2^l) - 1.
bool is_quadric_ci_form(const WciCandidate& cand, int l);

} // namespace wcifano
