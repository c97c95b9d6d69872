#include "jsonio.hpp"

#include "wcifano/blowup.hpp"
#include "wcifano/chern.hpp"

#include <limits>
#include <sstream>

namespace wcifano::jsonio {

namespace {

constexpr Int kSchemaVersion = 1;

std::string joined(const std::vector<Int>& values, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

} // namespace

Json chern_value(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Json chern_array(const ChernProfile& profile) {
    Json arr = Json::array();
    for (const auto& c : profile.coefficients) arr.push_back(chern_value(c));
    return arr;
}

Json candidate_to_json(const WciCandidate& cand) {
    return Json{{"n", cand.dim()},
                {"k", cand.codim()},
                {"N", cand.ambient()},
                {"s", cand.ones()},
                {"weights", cand.ws().values()},
                {"degrees", cand.md().values()}};
}

Json conditions_to_json(const ConditionReport& report) {
    Json flags = Json::object();
    flags[kIdWfSpace] = report.wf_space;
    flags[kIdLinearCone] = report.not_linear_cone;
    for (std::size_t i = 0; i < kConditionIds.size(); ++i)
        flags[kConditionIds[i]] = report.items[i];
    Json j{{"wf_note", report.wf_note},
           {"flags", std::move(flags)},
           {"all_pass", report.all_pass()}};
    j["first_failure"] =
        report.first_failure ? Json(*report.first_failure) : Json(nullptr);
    return j;
}

Json record_to_json(const SurvivorRecord& record) {
    Json j{{"schema", kSchemaVersion},
           {"n", record.cand.dim()},
           {"k", record.cand.codim()},
           {"weights", record.cand.ws().values()},
           {"degrees", record.cand.md().values()},
           {"chern", chern_array(record.chern)}};
    if (record.l > 0) j["l"] = record.l;
    return j;
}

std::optional<SurvivorRecord> record_from_json(const Json& j) {
    try {
        std::vector<Int> weights = j.at("weights").get<std::vector<Int>>();
        std::vector<Int> degrees = j.at("degrees").get<std::vector<Int>>();
        WciCandidate cand{WeightSystem(std::move(weights)),
                          Multidegree(std::move(degrees))};
        if (j.at("n").get<Int>() != cand.dim() ||
            j.at("k").get<Int>() != cand.codim())
            return std::nullopt;
        ChernProfile profile;
        for (const auto& v : j.at("chern")) {
            if (v.is_string())
                profile.coefficients.emplace_back(v.get<std::string>());
            else
                profile.coefficients.emplace_back(v.get<std::int64_t>());
        }
        const int l = j.contains("l") ? j.at("l").get<int>() : 0;
        return SurvivorRecord{std::move(cand), std::move(profile), l};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string csv_header(int depth) {
    std::ostringstream out;
    out << "n,k,weights,degrees";
    for (int m = 1; m <= depth; ++m) out << ",c" << m;
    return out.str();
}

std::string record_to_csv(const SurvivorRecord& record) {
    std::ostringstream out;
    out << record.cand.dim() << ',' << record.cand.codim() << ','
        << joined(record.cand.ws().values(), '+') << ','
        << joined(record.cand.md().values(), '+');
    for (const auto& c : record.chern.coefficients) out << ',' << c.str();
    return out.str();
}

Json report_to_json(const VerificationReport& report, const Json& config) {
    Json caps{{"max_weight", report.caps.max_weight},
              {"max_degree", report.caps.max_degree}};
    caps["max_codim"] =
        report.caps.max_codim ? Json(*report.caps.max_codim) : Json(nullptr);

    Json runs = Json::array();
    for (const auto& run : report.runs) {
        Json r{{"n", run.n}};
        if (run.l > 0) r["l"] = run.l;
        r["scanned"] = run.scanned;
        Json survivors = Json::array();
        for (const auto& record : run.survivors)
            survivors.push_back(record_to_json(record));
        r["survivors"] = std::move(survivors);
        runs.push_back(std::move(r));
    }

    Json violations = Json::array();
    for (const auto& violation : report.violations)
        violations.push_back(Json{{"record", record_to_json(violation.record)},
                                  {"reason", violation.reason}});

    Json j{{"schema", kSchemaVersion},
           {"theorem", report.theorem},
           {"caps", std::move(caps)},
           {"dims", Json{{"min", report.dim_min}, {"max", report.dim_max}}}};
    if (report.m_max > 0) j["m_max"] = report.m_max;
    j["runs"] = std::move(runs);
    j["scanned_total"] = report.scanned_total;
    j["survivor_total"] = report.survivor_total();
    j["violations"] = std::move(violations);
    j["verdict"] = report.confirmed() ? "confirmed-within-caps" : "violation";
    j["elapsed_ms"] = report.elapsed_ms;
    j["config"] = config;
    return j;
}

Json check_report(const WciCandidate& cand, std::optional<int> requested_l,
                  const Json& config) {
    const LWindow window = l_window(cand.dim());
    int depth = std::max(window.hi, 1);
    if (requested_l) depth = std::max(depth, *requested_l);
    const ChernProfile profile = chern_profile(cand, depth);

    Json lfano = Json::object();
    for (int l = window.lo; l <= window.hi; ++l)
        lfano[std::to_string(l)] = is_l_fano(cand, l);
    if (requested_l && (window.empty() || *requested_l < window.lo ||
                        *requested_l > window.hi))
        lfano[std::to_string(*requested_l)] = is_l_fano(cand, *requested_l);

    return Json{{"schema", kSchemaVersion},
                {"candidate", candidate_to_json(cand)},
                {"conditions", conditions_to_json(necessary_conditions(cand))},
                {"window", Json{{"lo", window.lo},
                                {"hi", window.hi},
                                {"empty", window.empty()}}},
                {"fano", profile.at(1) > 0},
                {"chern", chern_array(profile)},
                {"lfano", std::move(lfano)},
                {"config", config}};
}

Json additive_state_to_json(const AdditiveState& state) {
    return Json{{"weights", state.weights},
                {"degrees", state.degrees},
                {"N", state.top_index()},
                {"k", state.codim()},
                {"s", state.ones()}};
}

Json multiplicative_state_to_json(const MultiplicativeState& state) {
    Json weights = Json::array();
    for (const auto& w : state.weights) weights.push_back(to_fraction_string(w));
    return Json{{"weights", std::move(weights)},
                {"degrees", state.degrees},
                {"N", state.top_index()},
                {"k", state.codim()},
                {"s", state.ones()}};
}

Json trace_to_json(const AdditiveTrace& trace, const Json& config) {
    Json steps = Json::array();
    for (const auto& step : trace.steps)
        steps.push_back(Json{{"case", to_string(step.kind)},
                             {"c", step.transfer},
                             {"state", additive_state_to_json(step.after)}});
    return Json{{"schema", kSchemaVersion},
                {"mode", "additive"},
                {"initial", additive_state_to_json(trace.initial)},
                {"steps", std::move(steps)},
                {"terminal", Json{{"kind", to_string(trace.terminal)},
                                  {"form", trace.terminal_form},
                                  {"verdict", trace.verdict}}},
                {"config", config}};
}

Json trace_to_json(const MultiplicativeTrace& trace, const Json& config) {
    Json steps = Json::array();
    for (const auto& step : trace.steps)
        steps.push_back(Json{{"case", to_string(step.kind)},
                             {"p", to_fraction_string(step.factor)},
                             {"state", multiplicative_state_to_json(step.after)}});
    return Json{{"schema", kSchemaVersion},
                {"mode", "multiplicative"},
                {"initial", multiplicative_state_to_json(trace.initial)},
                {"steps", std::move(steps)},
                {"terminal", Json{{"kind", to_string(trace.terminal)},
                                  {"checker", trace.checker},
                                  {"l", trace.target_l},
                                  {"verdict", trace.verdict}}},
                {"config", config}};
}

Json blowup_table(Int n, const Json& config) {
    Json rows = Json::array();
    for (const auto& pairing : blowup_pairing_table(n)) {
        if (pairing.top) {
            rows.push_back(Json{{"k", pairing.k},
                                {"ch_top", to_fraction_string(*pairing.top)}});
        } else {
            rows.push_back(Json{{"k", pairing.k},
                                {"ch_dot_X", to_fraction_string(pairing.ch_dot_X)},
                                {"ch_dot_Y", to_fraction_string(pairing.ch_dot_Y)}});
        }
    }
    return Json{{"schema", kSchemaVersion},
                {"n", n},
                {"rows", std::move(rows)},
                {"config", config}};
}

} // namespace wcifano::jsonio
