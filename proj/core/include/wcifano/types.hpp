#pragma once

#include "wcifano/arith.hpp"

#include <vector>

namespace wcifano {

/// Weights (a_0, ..., a_N) of a weighted projective space, stored sorted
/// nondecreasing. Constructors sort; all downstream formulas are symmetric,
/// so the original permutation is irrelevant.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Int> weights);

    const std::vector<Int>& values() const { return weights_; }
    Int top_index() const { return static_cast<Int>(weights_.size()) - 1; } // N
    Int max() const { return weights_.back(); }                             // a_N
    Int ones() const { return ones_; }                                      // s
    BigInt sum() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<Int> weights_;
    Int ones_ = 0;
};

/// Degrees (d_1, ..., d_k), sorted nondecreasing. Entries >= 1 here; the
/// predicates in conditions.hpp are what enforce >= 2.
class Multidegree {
public:
    explicit Multidegree(std::vector<Int> degrees);

    const std::vector<Int>& values() const { return degrees_; }
    Int count() const { return static_cast<Int>(degrees_.size()); } // k
    Int max() const { return degrees_.back(); }                     // d_k
    BigInt sum() const;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;

private:
    std::vector<Int> degrees_;
};

/// A (weights; degrees) candidate with n = N - k >= 1.
class WciCandidate {
public:
    WciCandidate(WeightSystem ws, Multidegree md);

    const WeightSystem& ws() const { return ws_; }
    const Multidegree& md() const { return md_; }
    Int dim() const { return ws_.top_index() - md_.count(); } // n
    Int codim() const { return md_.count(); }                 // k
    Int ambient() const { return ws_.top_index(); }           // N
    Int ones() const { return ws_.ones(); }                   // s

    friend bool operator==(const WciCandidate&, const WciCandidate&) = default;

private:
    WeightSystem ws_;
    Multidegree md_;
};

/// Chern coefficients c_m = sum a^m - sum d^m for m = 1..depth, exact.
struct ChernProfile {
    std::vector<BigInt> coefficients;

    int depth() const { return static_cast<int>(coefficients.size()); }
    const BigInt& at(int m) const { return coefficients.at(m - 1); } // 1-based
};

} // namespace wcifano
