#pragma once

// Linear-time privilege check. The scan is the KMP failure-table
// construction with one extra comparison: whenever T[i] is set by a symbol
// match and equals p (the length of the longest privileged prefix seen so
// far), the prefix read so far has a privileged border repeated for the
// first time, so p advances to i+1. The word is privileged iff p ends at |w|.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "privword/word.hpp"

namespace privword {

/// KMP failure table: t[i] is the length of the longest proper border of
/// the prefix w[0..i].
struct FailureTable {
    std::vector<std::uint32_t> t;

    bool operator==(const FailureTable&) const = default;
};

struct PrivilegeReport {
    bool privileged = false;
    /// Length of the longest privileged prefix at termination (p).
    std::size_t longest_privileged_prefix = 0;
    /// Number of executions of the inner while-loop body.
    std::uint64_t while_iterations = 0;
};

/// Privilege checker with a reusable table buffer, for hot enumeration loops.
class LinearChecker {
public:
    PrivilegeReport check(std::span<const Symbol> w) {
        const std::size_t n = w.size();
        if (n <= 1) return {true, n, 0};
        if (n > std::numeric_limits<std::uint32_t>::max())
            throw std::length_error("word too long for 32-bit failure table");
        // Every T[i] with i >= 1 is written before it is read, so stale
        // entries from a previous call never leak.
        if (table_.size() < n) table_.resize(n);
        table_[0] = 0;
        std::size_t p = 1;
        std::uint64_t iterations = 0;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t j = table_[i - 1];
            for (;;) {
                ++iterations;
                if (w[j] == w[i]) {
                    table_[i] = static_cast<std::uint32_t>(j + 1);
                    if (table_[i] == p) p = i + 1;
                    break;
                }
                if (j == 0) {
                    table_[i] = 0;
                    break;
                }
                j = table_[j - 1];
            }
        }
        return {p == n, p, iterations};
    }

    PrivilegeReport check(const Word& w) { return check(w.view()); }

    /// The failure table of the last checked word (first `n` entries).
    std::span<const std::uint32_t> table(std::size_t n) const {
        return {table_.data(), n};
    }

private:
    std::vector<std::uint32_t> table_;
};

inline PrivilegeReport is_privileged_linear(std::span<const Symbol> w) {
    LinearChecker checker;
    return checker.check(w);
}

inline PrivilegeReport is_privileged_linear(const Word& w) {
    return is_privileged_linear(w.view());
}

/// Failure table of w, built by the same scan the checker runs. |w| >= 1.
inline FailureTable failure_table(std::span<const Symbol> w) {
    if (w.empty()) throw std::invalid_argument("failure table of empty word");
    if (w.size() == 1) return {{0}};
    LinearChecker checker;
    checker.check(w);
    auto view = checker.table(w.size());
    return {{view.begin(), view.end()}};
}

inline FailureTable failure_table(const Word& w) { return failure_table(w.view()); }

/// Length of the longest privileged prefix of w. |w| >= 1.
inline std::size_t longest_privileged_prefix_len(std::span<const Symbol> w) {
    if (w.empty())
        throw std::invalid_argument("longest privileged prefix of empty word");
    return is_privileged_linear(w).longest_privileged_prefix;
}

inline std::size_t longest_privileged_prefix_len(const Word& w) {
    return longest_privileged_prefix_len(w.view());
}

} // namespace privword
