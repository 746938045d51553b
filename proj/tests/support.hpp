#pragma once

// Brute-force reference implementations and generators for the test suite.
// Everything here is deliberately simple and independent of the library's
// algorithms, so disagreements point at the library.

#include <algorithm>
#include <random>
#include <span>
#include <vector>

#include "privword/bigmath.hpp"
#include "privword/word.hpp"

namespace testsupport {

inline std::vector<privword::Symbol> random_word(std::mt19937& rng, std::size_t n,
                                                 unsigned k = 2) {
    std::uniform_int_distribution<unsigned> dist(0, k - 1);
    std::vector<privword::Symbol> w(n);
    for (auto& s : w) s = static_cast<privword::Symbol>(dist(rng));
    return w;
}

/// Longest proper border of every prefix, by direct comparison. Quadratic.
inline std::vector<std::uint32_t> brute_failure_table(std::span<const privword::Symbol> w) {
    std::vector<std::uint32_t> table(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto prefix = w.first(i + 1);
        for (std::size_t len = i; len > 0; --len) {
            if (std::equal(prefix.begin(), prefix.begin() + len, prefix.end() - len)) {
                table[i] = static_cast<std::uint32_t>(len);
                break;
            }
        }
    }
    return table;
}

/// F(0) = 0, F(1) = 1.
inline privword::BigInt fibonacci(std::size_t n) {
    privword::BigInt a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const privword::BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

inline std::vector<privword::Symbol> complemented(std::span<const privword::Symbol> w) {
    std::vector<privword::Symbol> out(w.begin(), w.end());
    for (auto& s : out) s = static_cast<privword::Symbol>(1 - s);
    return out;
}

inline std::vector<privword::Symbol> reversed(std::span<const privword::Symbol> w) {
    std::vector<privword::Symbol> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace testsupport
