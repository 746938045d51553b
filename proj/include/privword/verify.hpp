#pragma once

// Exhaustive small-scale verification sweeps. Each function scans its whole
// input range and returns the first counterexample as a formatted message,
// or nothing if the property holds. The CLI `verify` command and the test
// suites are thin wrappers around these.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "privword/bounds.hpp"
#include "privword/enumerate.hpp"
#include "privword/languages.hpp"
#include "privword/linear.hpp"
#include "privword/naive.hpp"
#include "privword/word.hpp"

namespace privword {

using VerifyResult = std::optional<std::string>;

namespace detail {

inline std::string render(std::span<const Symbol> w) {
    static constexpr std::string_view digits = "0123456789";
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(s < digits.size() ? digits[s] : '?');
    return out.empty() ? "(empty)" : out;
}

// Applies fn to every word of length 0..max_len over {0..k-1} until fn
// returns a failure message.
template <typename Fn>
VerifyResult sweep_words(std::size_t max_len, unsigned k, Fn&& fn) {
    VerifyResult failure;
    for (std::size_t n = 0; n <= max_len && !failure; ++n) {
        for_each_word(n, k, [&](std::span<const Symbol> w) {
            if (!failure) failure = fn(w);
        });
    }
    return failure;
}

} // namespace detail

/// Every border of a privileged word is privileged.
inline VerifyResult verify_borders_privileged(std::size_t max_len, unsigned k = 2) {
    NaiveOracle oracle;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        if (!oracle.is_privileged(w)) return std::nullopt;
        for (std::size_t len : borders(w).lengths)
            if (!oracle.is_privileged(w.first(len)))
                return "privileged word " + detail::render(w) + " has unprivileged border of length " +
                       std::to_string(len);
        return std::nullopt;
    });
}

/// A privileged prefix of a privileged word is also a suffix, and vice versa.
inline VerifyResult verify_privileged_prefix_suffix(std::size_t max_len, unsigned k = 2) {
    NaiveOracle oracle;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        if (!oracle.is_privileged(w)) return std::nullopt;
        const std::size_t n = w.size();
        for (std::size_t len = 1; len < n; ++len) {
            const auto head = w.first(len);
            const auto tail = w.last(len);
            const bool head_is_tail = std::equal(head.begin(), head.end(), tail.begin());
            if (oracle.is_privileged(head) && !head_is_tail)
                return "privileged prefix of length " + std::to_string(len) + " of " +
                       detail::render(w) + " is not a suffix";
            if (oracle.is_privileged(tail) && !head_is_tail)
                return "privileged suffix of length " + std::to_string(len) + " of " +
                       detail::render(w) + " is not a prefix";
        }
        return std::nullopt;
    });
}

/// Leading and trailing maximal runs of a privileged word agree.
inline VerifyResult verify_run_symmetry(std::size_t max_len, unsigned k = 2) {
    NaiveOracle oracle;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        if (w.empty() || !oracle.is_privileged(w)) return std::nullopt;
        if (leading_run(w) != trailing_run(w))
            return "privileged word " + detail::render(w) + " has asymmetric end runs";
        return std::nullopt;
    });
}

/// A nonempty word is privileged iff its longest proper privileged prefix is
/// also a suffix.
inline VerifyResult verify_longest_prefix_criterion(std::size_t max_len, unsigned k = 2) {
    NaiveOracle oracle;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        if (w.empty()) return std::nullopt;
        const std::size_t len = longest_proper_privileged_prefix_len(oracle, w);
        const bool prefix_is_suffix =
            std::equal(w.begin(), w.begin() + len, w.end() - len);
        if (oracle.is_privileged(w) != prefix_is_suffix)
            return "longest-prefix criterion fails on " + detail::render(w);
        return std::nullopt;
    });
}

/// Powers of a word are privileged all-or-nothing.
inline VerifyResult verify_power_closure_all(std::size_t max_len, unsigned j_max,
                                             unsigned k = 2) {
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        Word base(std::vector<Symbol>(w.begin(), w.end()), k);
        if (!check_power_closure(base, j_max))
            return "power closure fails for base word " + detail::render(w);
        return std::nullopt;
    });
}

/// a^i is privileged for every letter a and every i up to max_exponent.
inline VerifyResult verify_unary_closure(std::size_t max_exponent, unsigned k = 2) {
    NaiveOracle oracle;
    for (unsigned letter = 0; letter < k; ++letter) {
        for (std::size_t i = 0; i <= max_exponent; ++i) {
            const std::vector<Symbol> w(i, static_cast<Symbol>(letter));
            if (!oracle.is_privileged(std::span<const Symbol>(w.data(), w.size())))
                return "unary word of letter " + std::to_string(letter) + " and length " +
                       std::to_string(i) + " reported unprivileged";
        }
    }
    return std::nullopt;
}

/// Any privilege checker against the definitional oracle; used with the real
/// linear checker below and with deliberately broken ones in tests.
template <typename CheckFn>
VerifyResult verify_checker_equivalence_with(std::size_t max_len, unsigned k, CheckFn&& check) {
    NaiveOracle oracle;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        const bool expected = oracle.is_privileged(w);
        const bool actual = check(w);
        if (expected != actual)
            return "checker disagrees with oracle on " + detail::render(w) + " (oracle says " +
                   (expected ? "privileged" : "unprivileged") + ")";
        return std::nullopt;
    });
}

/// The linear checker agrees with the definitional oracle everywhere.
inline VerifyResult verify_checker_equivalence(std::size_t max_len, unsigned k = 2) {
    LinearChecker checker;
    return verify_checker_equivalence_with(
        max_len, k, [&](std::span<const Symbol> w) { return checker.check(w).privileged; });
}

/// The linear checker's p equals the oracle's longest privileged prefix.
inline VerifyResult verify_longest_prefix_agreement(std::size_t max_len, unsigned k = 2) {
    NaiveOracle oracle;
    LinearChecker checker;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        if (w.empty()) return std::nullopt;
        const std::size_t linear_p = checker.check(w).longest_privileged_prefix;
        const std::size_t naive_p = longest_privileged_prefix_len_naive(oracle, w);
        if (linear_p != naive_p)
            return "longest privileged prefix of " + detail::render(w) + ": checker says " +
                   std::to_string(linear_p) + ", oracle says " + std::to_string(naive_p);
        return std::nullopt;
    });
}

struct IterationStats {
    std::uint64_t max_iterations = 0;
    std::string argmax_word;
    std::size_t argmax_length = 0;
};

/// Largest while-loop iteration count over all words of length <= max_len.
inline IterationStats iteration_stats(std::size_t max_len, unsigned k = 2) {
    IterationStats stats;
    LinearChecker checker;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for_each_word(n, k, [&](std::span<const Symbol> w) {
            const auto report = checker.check(w);
            if (report.while_iterations > stats.max_iterations) {
                stats.max_iterations = report.while_iterations;
                stats.argmax_word = detail::render(w);
                stats.argmax_length = n;
            }
        });
    }
    return stats;
}

/// While-loop iterations stay within 2n on every word of length <= max_len.
inline VerifyResult verify_iteration_budget(std::size_t max_len, unsigned k = 2) {
    LinearChecker checker;
    return detail::sweep_words(max_len, k, [&](std::span<const Symbol> w) -> VerifyResult {
        const auto report = checker.check(w);
        if (report.while_iterations > 2 * w.size())
            return "word " + detail::render(w) + " took " +
                   std::to_string(report.while_iterations) + " iterations (budget " +
                   std::to_string(2 * w.size()) + ")";
        return std::nullopt;
    });
}

/// Privilege inside 0+10+110+ is exactly (a == c and a > b).
inline VerifyResult verify_triple_run_characterization(std::size_t max_len) {
    NaiveOracle oracle;
    for (std::size_t i = 1; i + 5 <= max_len; ++i) {
        for (std::size_t j = 1; i + j + 4 <= max_len; ++j) {
            for (std::size_t l = 1; i + j + l + 3 <= max_len; ++l) {
                std::vector<Symbol> w(i + j + l + 3, 0);
                w[i] = 1;
                w[i + 1 + j] = 1;
                w[i + 2 + j] = 1;
                const std::span<const Symbol> view(w.data(), w.size());
                const auto parsed = parse_triple_run_pattern(view);
                if (!parsed || *parsed != RunTriple{i - 1, j - 1, l - 1})
                    return "triple-run parse failed on " + detail::render(view);
                if (oracle.is_privileged(view) != triple_run_membership(view))
                    return "triple-run characterization disagrees with oracle on " +
                           detail::render(view);
            }
        }
    }
    return std::nullopt;
}

/// Privilege inside 0+10+ is exactly equal zero-run lengths.
inline VerifyResult verify_zero_one_zero_characterization(std::size_t max_len) {
    NaiveOracle oracle;
    for (std::size_t i = 1; i + 2 <= max_len; ++i) {
        for (std::size_t j = 1; i + j + 1 <= max_len; ++j) {
            std::vector<Symbol> w(i + j + 1, 0);
            w[i] = 1;
            const std::span<const Symbol> view(w.data(), w.size());
            const auto parsed = parse_zero_one_zero(view);
            if (!parsed || parsed->first != i || parsed->second != j)
                return "0+10+ parse failed on " + detail::render(view);
            if (oracle.is_privileged(view) != zero_one_zero_membership(view))
                return "0+10+ characterization disagrees with oracle on " + detail::render(view);
        }
    }
    return std::nullopt;
}

/// Recurrence and run-length DP count the same words.
inline VerifyResult verify_gfib_dp_agreement(std::size_t n_max, unsigned t_max) {
    for (unsigned t = 1; t <= t_max; ++t) {
        GFib gfib(t);
        for (std::size_t n = 0; n <= n_max; ++n)
            if (gfib.value(n) != count_avoiding_zero_run(n, t))
                return "recurrence and DP disagree at n=" + std::to_string(n) +
                       ", t=" + std::to_string(t);
    }
    return std::nullopt;
}

/// With t = 2 the recurrence is the Fibonacci sequence shifted by two.
inline VerifyResult verify_gfib_fibonacci(std::size_t n_max) {
    BigInt fib_prev = 0, fib_curr = 1;  // F_0, F_1
    // Advance to F_2 so that fib_curr tracks F_(n+2) as n runs from 0.
    fib_prev = std::exchange(fib_curr, fib_prev + fib_curr);
    GFib gfib(2);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (gfib.value(n) != fib_curr)
            return "G(n,2) != F(n+2) at n=" + std::to_string(n);
        fib_prev = std::exchange(fib_curr, fib_prev + fib_curr);
    }
    return std::nullopt;
}

/// Truncated-binomial inequality over a grid of beta in [0, 6/s].
inline VerifyResult verify_binomial_truncation_sweep(unsigned s_max) {
    for (unsigned s = 2; s <= s_max; ++s) {
        for (unsigned step = 0; step <= 20; ++step) {
            const BigRational beta_value(6 * step, 20u * s);
            if (!verify_binomial_truncation(s, beta_value))
                return "truncated binomial bound fails at s=" + std::to_string(s) +
                       ", beta=" + to_display(beta_value);
        }
    }
    return std::nullopt;
}

inline VerifyResult verify_alpha_root_bound_sweep(unsigned t_max) {
    for (unsigned t = 2; t <= t_max; ++t)
        if (!verify_alpha_root_bound(t))
            return "alpha root bound fails at t=" + std::to_string(t);
    return std::nullopt;
}

inline VerifyResult verify_gfib_lower_bound_sweep(std::size_t n_max, unsigned t_max) {
    for (unsigned t = 2; t <= t_max; ++t)
        for (std::size_t n = 0; n <= n_max; ++n)
            if (!verify_gfib_lower_bound(n, t))
                return "G(n,t) >= alpha^n fails at n=" + std::to_string(n) +
                       ", t=" + std::to_string(t);
    return std::nullopt;
}

/// Seed families have the predicted size and every member is privileged by
/// both the oracle and the linear checker.
inline VerifyResult verify_seed_family(std::size_t n_max, unsigned t_max) {
    NaiveOracle oracle;
    LinearChecker checker;
    VerifyResult failure;
    for (unsigned t = 1; t <= t_max; ++t) {
        GFib gfib(t);
        for (std::size_t n = 2 * static_cast<std::size_t>(t) + 2; n <= n_max; ++n) {
            BigInt size = 0;
            seed_family(n, t, [&](std::span<const Symbol> w) {
                ++size;
                if (failure) return;
                if (!checker.check(w).privileged || !oracle.is_privileged(w))
                    failure = "seed family member " + detail::render(w) + " is not privileged";
            });
            if (failure) return failure;
            if (size != gfib.value(n - 2 * t - 2))
                return "seed family size mismatch at n=" + std::to_string(n) +
                       ", t=" + std::to_string(t);
        }
    }
    return std::nullopt;
}

/// B(n) >= 2^(n-5)/n^2 for every n in [1, n_max].
inline VerifyResult verify_count_lower_bound_sweep(std::size_t n_max,
                                                   const EnumOptions& opts = {}) {
    for (std::size_t n = 1; n <= n_max; ++n)
        if (!verify_privileged_count_bound(n, opts))
            return "count lower bound fails at n=" + std::to_string(n);
    return std::nullopt;
}

/// Binary counts are even for n >= 1 (exchanging 0 and 1 preserves privilege).
inline VerifyResult verify_count_parity(std::size_t n_max, const EnumOptions& opts = {}) {
    for (std::size_t n = 1; n <= n_max; ++n)
        if (count_privileged(n, 2, opts).count % 2 != 0)
            return "odd binary count at n=" + std::to_string(n);
    return std::nullopt;
}

} // namespace privword
