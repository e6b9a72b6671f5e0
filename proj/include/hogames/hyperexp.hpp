#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace hogames {

using BigInt = boost::multiprecision::cpp_int;

/// Exact tower value, or a symbolic (a, n, m) descriptor when the exact
/// value would exceed the digit cap.
struct HyperValue {
    bool exact = true;
    BigInt value;
    std::uint64_t a = 0, n = 0, m = 0;  // descriptor when !exact

    std::string str() const;
};

/// Digit cap for exact tower values: 10000, overridable through the
/// HOGAMES_DIGIT_CAP environment variable.
std::size_t hyperexp_digit_cap();

/// The tower a_n^m: a_0^m = m, a_{n+1}^m = a^(a_n^m).
HyperValue hyperexp(std::uint64_t a, std::uint64_t n, std::uint64_t m);

/// Interaction-length bound for strategy levels n and m with view bound k:
/// the tower k_b^k with b = min(n, m). With a finite arena depth d the
/// refined variant is (2k)_b^(2k) with b = min(n, m, d - 2). Requires
/// k >= 1 and, when given, d >= 2.
HyperValue interaction_bound(std::size_t n, std::size_t m, std::size_t k,
                             std::optional<std::size_t> d = std::nullopt);

}  // namespace hogames
