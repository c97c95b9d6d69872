#include "wcifano/search.hpp"

#include "wcifano/conditions.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <thread>

namespace wcifano {

std::uint64_t VerificationReport::survivor_total() const {
    std::uint64_t total = 0;
    for (const auto& run : runs) total += run.survivors.size();
    return total;
}

std::vector<std::string> caps_warnings(const SearchCaps& caps) {
    std::vector<std::string> warnings;
    if (caps.max_degree < 2 * caps.max_weight)
        warnings.push_back(
            "max_degree < 2*max_weight: top weights above max_degree/2 are "
            "unreachable (d_k >= 2 a_N)");
    if (caps.max_degree < 4)
        warnings.push_back(
            "max_degree < 4: every candidate with a nonunit weight is excluded");
    return warnings;
}

int default_m_max(Int dim_max) {
    return std::max(l_window(dim_max).hi + 3, 10);
}

namespace {

// One work unit: fixed codimension k, fixed count of unit weights s, and the
// first one or two nonunit values pinned (0 = absent). Global emission order
// is the task order (k asc, s desc, first asc, second asc) with
// lexicographic streams inside each task, which together give the strict
// (k, weights, degrees) order.
struct Task {
    Int k = 0;
    Int s = 0;
    Int first = 0;
    Int second = 0;
};

using CandidateFn =
    std::function<void(std::span<const Int>, std::span<const Int>)>;

// Divisors >= 2 (value included), indexed by value. Sieved up to a sane
// bound; larger values fall back to trial division in the walker.
using DivisorTable = std::vector<std::vector<Int>>;

constexpr Int kDivisorTableLimit = 1 << 20;

DivisorTable build_divisor_table(Int w_cap) {
    const Int limit = std::clamp<Int>(w_cap, 1, kDivisorTableLimit);
    DivisorTable table(static_cast<std::size_t>(limit) + 1);
    for (Int b = 2; b <= limit; ++b)
        for (Int v = b; v <= limit; v += b)
            table[static_cast<std::size_t>(v)].push_back(b);
    return table;
}

void divisors_of(Int value, std::vector<Int>& out) {
    out.clear();
    for (Int i = 1; i * i <= value; ++i) {
        if (value % i != 0) continue;
        if (i >= 2) out.push_back(i);
        if (value / i != i && value / i >= 2) out.push_back(value / i);
    }
}

class TaskWalker {
public:
    TaskWalker(const SearchCaps& caps, const DivisorTable& divisors,
               const Task& task, const CandidateFn& emit)
        : caps_(caps), divisors_(divisors), task_(task), emit_(emit) {
        n_ = caps.dim;
        k_ = task.k;
        N_ = n_ + k_;
        s_ = task.s;
        t_ = N_ + 1 - s_;
        w_cap_ = std::min(caps.max_weight, caps.max_degree / 2);
        weights_.assign(static_cast<std::size_t>(N_) + 1, 1);
        degrees_.assign(static_cast<std::size_t>(k_), 0);
        weight_count_.assign(static_cast<std::size_t>(caps.max_weight) + 1, 0);
        weight_count_[1] = static_cast<int>(s_);
        lower_.assign(static_cast<std::size_t>(k_), 2);
        div_count_.assign(static_cast<std::size_t>(w_cap_) + 1, 0);
        demands_.reserve(static_cast<std::size_t>(std::max<Int>(w_cap_, 1)));
        supplied_.resize(static_cast<std::size_t>(k_ + 1) *
                         static_cast<std::size_t>(std::max<Int>(w_cap_, 1)));
    }

    std::uint64_t run() {
        if (t_ == 0) {
            nonunit_sum_ = 0;
            degrees_phase();
        } else {
            place_weight(s_, task_.first, 0, 0);
        }
        return scanned_;
    }

private:
    // Necessary consequence of (1) + (9) + the sum budget: writing u_1 <=
    // ... <= u_t for the nonunit weights, the degree floor sum is
    // (k-1 slot floors) + 2 u_t, and it must fit under sum(u) + s - 1:
    //   u_t <= s - k + sum of the bottom (t-k) nonunits   (t >= k)
    //   u_t <= s + t - 2k                                 (t <  k).
    // Every value in the top min(t,k)-block is <= u_t, so the bound prunes
    // the whole block. `bottom_sum` is the sum of the first t-k values.
    Int top_cap(Int ordinal, Int bottom_sum) const {
        if (t_ < k_) return s_ + t_ - 2 * k_;
        if (ordinal < t_ - k_) return w_cap_;
        return s_ - k_ + bottom_sum;
    }

    // Divisor demands from (7): every b >= 2 dividing some weight needs at
    // least as many divisible degrees, and there are only k of those.
    std::span<const Int> divisor_list(Int value) {
        if (value < static_cast<Int>(divisors_.size()))
            return divisors_[static_cast<std::size_t>(value)];
        divisors_of(value, scratch_divisors_);
        return scratch_divisors_;
    }

    bool add_divisor_demands(Int value) {
        bool feasible = true;
        for (Int b : divisor_list(value))
            if (++div_count_[static_cast<std::size_t>(b)] > k_) feasible = false;
        if (!feasible) remove_divisor_demands(value);
        return feasible;
    }

    void remove_divisor_demands(Int value) {
        for (Int b : divisor_list(value))
            --div_count_[static_cast<std::size_t>(b)];
    }

    // Distinct weight values with pairwise lcm above max_degree cannot share
    // a degree, and each demands div_count[v] degrees of value >= 2v (a
    // degree divisible by v cannot equal the weight v). The resulting floor
    // on sum(d) must stay under the best possible budget sum(u) + s - 1,
    // where future bottom-block weights reach at most w_cap and future
    // top-block weights at most their cap.
    bool degree_floor_feasible(Int ordinal, Int partial_sum, Int bottom_sum) {
        clique_.clear();
        Int slots_needed = 0;
        Int floor_sum = 0;
        for (Int v = w_cap_; v >= 2; --v) {
            if (weight_count_[static_cast<std::size_t>(v)] == 0) continue;
            bool disjoint = true;
            for (Int u : clique_) {
                const Int g = std::gcd(u, v);
                if ((u / g) * v <= caps_.max_degree) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            clique_.push_back(v);
            const Int need = div_count_[static_cast<std::size_t>(v)];
            slots_needed += need;
            floor_sum += need * 2 * v;
        }
        if (slots_needed > k_) return false;
        floor_sum += (k_ - slots_needed) * 2;
        const Int slots_left = t_ - ordinal - 1;
        const Int bottom_left = std::max<Int>(0, t_ - k_ - (ordinal + 1));
        const Int top_left = slots_left - bottom_left;
        const Int top_value_max =
            std::min(w_cap_, top_cap(std::max(ordinal + 1, t_ - k_),
                                     bottom_sum + bottom_left * w_cap_));
        const Int best_budget = partial_sum + bottom_left * w_cap_ +
                                top_left * std::max<Int>(top_value_max, 0) +
                                s_ - 1;
        return floor_sum <= best_budget;
    }

    void place_weight(Int pos, Int value, Int partial_sum, Int bottom_sum) {
        const Int ordinal = pos - s_;
        if (value < 2 || value > w_cap_ || value > top_cap(ordinal, bottom_sum))
            return;
        // Every remaining slot is >= value, so the final nonunit sum is at
        // least partial + (N - pos + 1) * value; prune against the largest
        // possible degree budget sum(d) <= k * max_degree.
        const Int remaining = N_ - pos + 1;
        if (partial_sum + remaining * value > k_ * caps_.max_degree) return;
        if (!add_divisor_demands(value)) return;
        weights_[static_cast<std::size_t>(pos)] = value;
        ++weight_count_[static_cast<std::size_t>(value)];
        const Int next_bottom = bottom_sum + (ordinal < t_ - k_ ? value : 0);
        if (!degree_floor_feasible(ordinal, partial_sum + value, next_bottom)) {
            --weight_count_[static_cast<std::size_t>(value)];
            remove_divisor_demands(value);
            return;
        }
        if (pos == N_) {
            nonunit_sum_ = partial_sum + value;
            degrees_phase();
        } else if (ordinal + 1 < pinned_count()) {
            place_weight(pos + 1, fixed_value(ordinal + 1),
                         partial_sum + value, next_bottom);
        } else {
            const Int cap = std::min(w_cap_, top_cap(ordinal + 1, next_bottom));
            const Int rest = N_ - pos;
            for (Int w = value; w <= cap; ++w) {
                if (partial_sum + value + rest * w > k_ * caps_.max_degree) break;
                place_weight(pos + 1, w, partial_sum + value, next_bottom);
            }
        }
        --weight_count_[static_cast<std::size_t>(value)];
        remove_divisor_demands(value);
    }

    Int pinned_count() const { return task_.second > 0 ? 2 : (task_.first > 0 ? 1 : 0); }
    Int fixed_value(Int ordinal) const { return ordinal == 0 ? task_.first : task_.second; }

    void degrees_phase() {
        // Budget from condition (3) plus c1 > 0:
        //   T <= sum(d) <= T + s - 1,   T = sum of nonunit weights.
        budget_lo_ = nonunit_sum_;
        budget_hi_ = nonunit_sum_ + s_ - 1;
        // Per-slot floors: (1) d_i > a_{N-k+i} for i < k, (9) d_k >= 2 a_N,
        // (5) d_i >= 2.
        for (Int i = 1; i <= k_; ++i) {
            Int lb = 2;
            if (i < k_) lb = std::max(lb, weights_[static_cast<std::size_t>(N_ - k_ + i)] + 1);
            else lb = std::max(lb, 2 * weights_.back());
            lower_[static_cast<std::size_t>(i - 1)] = lb;
        }
        Int min_total = 0;
        for (Int i = 0; i < k_; ++i) min_total += lower_[static_cast<std::size_t>(i)];
        if (min_total > budget_hi_) return;

        demands_.clear();
        const Int top = weights_.back();
        for (Int b = 2; b <= top; ++b)
            if (div_count_[static_cast<std::size_t>(b)] > 0)
                demands_.emplace_back(b, div_count_[static_cast<std::size_t>(b)]);
        std::fill_n(supplied_.begin(), demands_.size(), 0);
        place_degree(0, 2, 0);
    }

    Int min_future(Int slot, Int value) const {
        Int total = 0;
        for (Int j = slot + 1; j < k_; ++j)
            total += std::max(lower_[static_cast<std::size_t>(j)], value);
        return total;
    }

    bool is_weight_value(Int x) const {
        return x <= caps_.max_weight && weight_count_[static_cast<std::size_t>(x)] > 0;
    }

    // Degrees divisible by each demanded b placed so far must be able to
    // reach the demand with the slots that remain.
    bool demands_feasible(Int slot, Int x) {
        const std::size_t m = demands_.size();
        const int* prev = supplied_.data() + static_cast<std::size_t>(slot) * m;
        int* level = supplied_.data() + static_cast<std::size_t>(slot + 1) * m;
        const Int slots_after = k_ - slot - 1;
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j) {
            level[j] = prev[j] + (x % demands_[j].first == 0 ? 1 : 0);
            if (demands_[j].second - level[j] > slots_after) ok = false;
        }
        return ok;
    }

    void place_degree(Int slot, Int prev, Int partial) {
        const Int slots_after = k_ - slot - 1;
        Int lo = std::max(lower_[static_cast<std::size_t>(slot)], prev);
        // Too-small values can never reach the budget floor even with all
        // later slots maxed out.
        lo = std::max(lo, budget_lo_ - partial - slots_after * caps_.max_degree);
        for (Int x = lo; x <= caps_.max_degree; ++x) {
            if (partial + x + min_future(slot, x) > budget_hi_) break;
            if (is_weight_value(x)) continue; // (4) linear cone
            if (!demands_feasible(slot, x)) continue;
            degrees_[static_cast<std::size_t>(slot)] = x;
            if (slot == k_ - 1) {
                if (partial + x >= budget_lo_) candidate_ready();
            } else {
                place_degree(slot + 1, x, partial + x);
            }
        }
    }

    void candidate_ready() {
        ++scanned_;
        if (!passes_necessary_conditions(weights_, degrees_)) return;
        emit_(weights_, degrees_);
    }

    SearchCaps caps_;
    const DivisorTable& divisors_;
    Task task_;
    const CandidateFn& emit_;
    Int n_ = 0, k_ = 0, N_ = 0, s_ = 0, t_ = 0, w_cap_ = 0;
    Int nonunit_sum_ = 0;
    Int budget_lo_ = 0, budget_hi_ = 0;
    std::vector<Int> weights_;
    std::vector<Int> degrees_;
    std::vector<Int> lower_;
    std::vector<int> weight_count_;
    std::vector<int> div_count_;
    std::vector<Int> clique_;
    std::vector<Int> scratch_divisors_;
    std::vector<std::pair<Int, int>> demands_;
    std::vector<int> supplied_; // (k+1) flat levels of demands_.size()
    std::uint64_t scanned_ = 0;
};

std::vector<Task> build_tasks(const SearchCaps& caps) {
    std::vector<Task> tasks;
    const Int n = caps.dim;
    const Int k_max = std::min(caps.max_codim.value_or(n), n);
    const Int w_cap = std::min(caps.max_weight, caps.max_degree / 2);
    for (Int k = 1; k <= k_max; ++k) {
        const Int N = n + k;
        for (Int s = N + 1; s >= k + 1; --s) {
            const Int t = N + 1 - s;
            if (t == 0) {
                tasks.push_back({k, s, 0, 0});
            } else if (t == 1) {
                for (Int first = 2; first <= w_cap; ++first)
                    tasks.push_back({k, s, first, 0});
            } else {
                for (Int first = 2; first <= w_cap; ++first)
                    for (Int second = first; second <= w_cap; ++second)
                        tasks.push_back({k, s, first, second});
            }
        }
    }
    return tasks;
}

struct TaskResult {
    std::vector<SurvivorRecord> records;
    std::uint64_t scanned = 0;
};

// Runs all tasks (parallel when jobs > 1) and feeds the sink in task order.
std::uint64_t run_boxed(const SearchCaps& caps,
                        const std::function<TaskResult(const DivisorTable&, const Task&)>& run_task,
                        const RecordSink& sink, int jobs,
                        EnumerationStats* stats) {
    if (caps.dim < 1) throw std::invalid_argument("SearchCaps: dim must be >= 1");
    if (caps.max_weight < 1 || caps.max_degree < 1)
        throw std::invalid_argument("SearchCaps: caps must be >= 1");
    if (caps.max_codim && *caps.max_codim < 1)
        throw std::invalid_argument("SearchCaps: max_codim must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    const DivisorTable divisors =
        build_divisor_table(std::min(caps.max_weight, caps.max_degree / 2));
    const auto tasks = build_tasks(caps);
    std::uint64_t scanned = 0;
    std::uint64_t survivors = 0;

    auto flush = [&](TaskResult& result) {
        scanned += result.scanned;
        survivors += result.records.size();
        for (const auto& record : result.records)
            if (sink) sink(record);
        result = TaskResult{};
    };

    if (jobs <= 1 || tasks.size() <= 1) {
        for (const auto& task : tasks) {
            TaskResult result = run_task(divisors, task);
            flush(result);
        }
    } else {
        std::vector<TaskResult> results(tasks.size());
        std::vector<char> done(tasks.size(), 0);
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::condition_variable cv;
        const int worker_count =
            static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size()));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= tasks.size()) return;
                    TaskResult local = run_task(divisors, tasks[idx]);
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        results[idx] = std::move(local);
                        done[idx] = 1;
                    }
                    cv.notify_all();
                }
            });
        }
        // The sink is the only serialization point: flush strictly in task
        // order as results become ready.
        for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return done[idx] != 0; });
            TaskResult result = std::move(results[idx]);
            lock.unlock();
            flush(result);
        }
        for (auto& t : pool) t.join();
    }

    const auto t1 = std::chrono::steady_clock::now();
    if (stats) {
        stats->scanned = scanned;
        stats->survivors = survivors;
        stats->elapsed_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return survivors;
}

SurvivorRecord make_record(std::span<const Int> weights,
                           std::span<const Int> degrees, int depth, int l) {
    WciCandidate cand(WeightSystem(std::vector<Int>(weights.begin(), weights.end())),
                      Multidegree(std::vector<Int>(degrees.begin(), degrees.end())));
    ChernProfile profile;
    chern_values(weights, degrees, depth, profile.coefficients);
    return SurvivorRecord{std::move(cand), std::move(profile), l};
}

} // namespace

std::uint64_t enumerate_candidates(const SearchCaps& caps, int l,
                                   const RecordSink& sink, int jobs,
                                   EnumerationStats* stats) {
    if (l < 1) throw std::invalid_argument("enumerate_candidates: l must be >= 1");
    auto run_task = [&caps, l](const DivisorTable& divisors, const Task& task) {
        TaskResult result;
        CandidateFn emit = [&result, l](std::span<const Int> w, std::span<const Int> d) {
            const bool top = power_sum_sign(w, d, l) > 0;
#ifndef NDEBUG
            bool chain = true;
            for (int m = 1; m <= l && chain; ++m)
                chain = power_sum_sign(w, d, m) > 0;
            assert(chain == top && "top-only / full-chain disagreement past the filter");
#endif
            if (top) result.records.push_back(make_record(w, d, l, l));
        };
        TaskWalker walker(caps, divisors, task, emit);
        result.scanned = walker.run();
        return result;
    };
    return run_boxed(caps, run_task, sink, jobs, stats);
}

std::uint64_t enumerate_filtered(const SearchCaps& caps, int profile_depth,
                                 const RecordSink& sink, int jobs,
                                 EnumerationStats* stats) {
    if (profile_depth < 1)
        throw std::invalid_argument("enumerate_filtered: profile depth must be >= 1");
    auto run_task = [&caps, profile_depth](const DivisorTable& divisors,
                                           const Task& task) {
        TaskResult result;
        CandidateFn emit = [&result, profile_depth](std::span<const Int> w,
                                                    std::span<const Int> d) {
            result.records.push_back(make_record(w, d, profile_depth, 0));
        };
        TaskWalker walker(caps, divisors, task, emit);
        result.scanned = walker.run();
        return result;
    };
    return run_boxed(caps, run_task, sink, jobs, stats);
}

namespace {

VerificationReport make_report(std::string theorem, Int dim_min, Int dim_max,
                               const SearchCaps& caps) {
    if (dim_min < 1 || dim_max < dim_min)
        throw std::invalid_argument("verify: dimension range is empty or invalid");
    VerificationReport report;
    report.theorem = std::move(theorem);
    report.caps = caps;
    report.dim_min = dim_min;
    report.dim_max = dim_max;
    return report;
}

} // namespace

VerificationReport verify_log2(Int dim_min, Int dim_max, const SearchCaps& caps,
                               int jobs) {
    auto report = make_report("log2", dim_min, dim_max, caps);
    const auto t0 = std::chrono::steady_clock::now();
    for (Int n = dim_min; n <= dim_max; ++n) {
        SearchCaps box = caps;
        box.dim = n;
        const int l = ceil_log(2, n + 2);
        VerificationRun run{n, l, 0, {}};
        EnumerationStats stats;
        enumerate_candidates(
            box, l, [&run](const SurvivorRecord& r) { run.survivors.push_back(r); },
            jobs, &stats);
        run.scanned = stats.scanned;
        report.scanned_total += stats.scanned;
        for (const auto& survivor : run.survivors)
            report.violations.push_back(
                {survivor, "survivor at l = ceil(log2(n+2)), predicted empty"});
        report.runs.push_back(std::move(run));
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

VerificationReport verify_log3(Int dim_min, Int dim_max, const SearchCaps& caps,
                               int jobs) {
    auto report = make_report("log3", dim_min, dim_max, caps);
    const auto t0 = std::chrono::steady_clock::now();
    for (Int n = dim_min; n <= dim_max; ++n) {
        const LWindow window = l_window(n);
        for (int l = window.lo; l <= window.hi; ++l) {
            SearchCaps box = caps;
            box.dim = n;
            VerificationRun run{n, l, 0, {}};
            EnumerationStats stats;
            enumerate_candidates(
                box, l,
                [&run](const SurvivorRecord& r) { run.survivors.push_back(r); },
                jobs, &stats);
            run.scanned = stats.scanned;
            report.scanned_total += stats.scanned;
            for (const auto& survivor : run.survivors)
                if (!is_quadric_ci_form(survivor.cand, l))
                    report.violations.push_back(
                        {survivor,
                         "window survivor is not a bounded quadric intersection"});
            report.runs.push_back(std::move(run));
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

namespace {

// Chain check c_m > c_{m+1} for 1 <= m < m_max; empty string when clean.
std::string chain_violation(std::span<const Int> w, std::span<const Int> d,
                            int m_max, std::vector<BigInt>& scratch) {
    chern_values(w, d, m_max, scratch);
    for (int m = 1; m < m_max; ++m) {
        if (!(scratch[static_cast<std::size_t>(m - 1)] >
              scratch[static_cast<std::size_t>(m)]))
            return "c_" + std::to_string(m) + " <= c_" + std::to_string(m + 1);
    }
    return {};
}

} // namespace

VerificationReport verify_monotonic(std::span<const WciCandidate> corpus, int m_max) {
    if (m_max < 2) throw std::invalid_argument("verify_monotonic: m_max must be >= 2");
    VerificationReport report;
    report.theorem = "monotonic";
    report.m_max = m_max;
    const auto t0 = std::chrono::steady_clock::now();
    VerificationRun run{0, 0, 0, {}};
    std::vector<BigInt> scratch;
    for (const auto& cand : corpus) {
        if (!passes_necessary_conditions(cand) ||
            power_sum_sign(cand.ws().values(), cand.md().values(), 1) <= 0)
            throw std::invalid_argument(
                "verify_monotonic: corpus element fails necessary conditions or c1 > 0");
        ++run.scanned;
        const auto reason = chain_violation(cand.ws().values(), cand.md().values(),
                                            m_max, scratch);
        if (!reason.empty()) {
            ChernProfile profile;
            profile.coefficients = scratch;
            report.violations.push_back({SurvivorRecord{cand, profile, 0}, reason});
        }
    }
    report.scanned_total = run.scanned;
    report.runs.push_back(std::move(run));
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

VerificationReport verify_monotonic(Int dim_min, Int dim_max, const SearchCaps& caps,
                                    int m_max, int jobs) {
    auto report = make_report("monotonic", dim_min, dim_max, caps);
    if (m_max < 2) throw std::invalid_argument("verify_monotonic: m_max must be >= 2");
    report.m_max = m_max;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<BigInt> scratch;
    for (Int n = dim_min; n <= dim_max; ++n) {
        SearchCaps box = caps;
        box.dim = n;
        VerificationRun run{n, 0, 0, {}};
        EnumerationStats stats;
        enumerate_filtered(
            box, 1,
            [&](const SurvivorRecord& record) {
                ++run.scanned;
                const auto reason =
                    chain_violation(record.cand.ws().values(),
                                    record.cand.md().values(), m_max, scratch);
                if (!reason.empty()) {
                    ChernProfile profile;
                    profile.coefficients = scratch;
                    report.violations.push_back(
                        {SurvivorRecord{record.cand, profile, 0}, reason});
                }
            },
            jobs, &stats);
        report.scanned_total += run.scanned;
        report.runs.push_back(std::move(run));
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

} // namespace wcifano
