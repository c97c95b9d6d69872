#pragma once

// Exact arithmetic helpers shared by all modules. Everything here is integer
// or rational; the only floating point in the library lives in reduction.cpp
// (real-exponent lemma evaluation) and is interval-guarded there.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcifano {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Least L >= 0 with base^L >= x, by integer multiplication only.
/// The off-by-one at exact powers (x = base^L) matters everywhere downstream,
/// so no transcendental functions are involved.
int ceil_log(Int base, Int x);

BigInt int_pow(const BigInt& base, unsigned exp);

/// sum(xs[i]^m) exactly.
BigInt power_sum(std::span<const Int> xs, int m);

/// Sign of sum(a^m) - sum(d^m): -1, 0, +1. Uses 128-bit arithmetic when a
/// conservative bound proves it cannot overflow, otherwise cpp_int.
int power_sum_sign(std::span<const Int> a, std::span<const Int> d, int m);

/// True when every sum(x^e), e <= m, over `count` values bounded by
/// `max_value` fits comfortably in a signed 128-bit accumulator.
bool power_sum_fits_i128(Int max_value, std::size_t count, int m);

/// Chern-chain values sum(a^m) - sum(d^m) for m = 1..depth into `out`
/// (128-bit fast path with cpp_int fallback).
void chern_values(std::span<const Int> a, std::span<const Int> d, int depth,
                  std::vector<BigInt>& out);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_fraction_string(const BigRat& value);

/// Parses "p" or "p/q" (q > 0 after normalization). Empty optional on junk.
std::optional<BigRat> parse_fraction(std::string_view text);

std::optional<Int> parse_int(std::string_view text);

/// Comma-separated positive integers; throws std::invalid_argument otherwise.
std::vector<Int> parse_positive_csv(std::string_view text, std::string_view what);

/// Comma-separated positive rationals ("3/2" allowed).
std::vector<BigRat> parse_rational_csv(std::string_view text, std::string_view what);

} // namespace wcifano
