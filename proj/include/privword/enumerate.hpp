#pragma once

// Exhaustive enumeration and counting of privileged words. Counting may be
// partitioned by word prefix across a worker pool; per-block tallies are
// summed in block order, so totals are bit-identical for any thread count.

#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "privword/bigmath.hpp"
#include "privword/linear.hpp"
#include "privword/word.hpp"

namespace privword {

/// Thrown when an enumeration would scan more candidates than the cap allows.
struct enumeration_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumOptions {
    unsigned threads = 0;                     // 0 = hardware concurrency
    std::uint64_t max_candidates = 1u << 24;  // guardrail, not a correctness bound
    bool force = false;                       // ignore the cap
};

struct CountRecord {
    std::size_t n = 0;
    unsigned k = 0;
    BigInt count;

    bool operator==(const CountRecord&) const = default;
};

namespace detail {

/// k^n clamped to 2^63 (anything that large trips the cap anyway).
inline std::uint64_t candidate_count(std::size_t n, unsigned k) {
    constexpr std::uint64_t clamp = std::uint64_t(1) << 63;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > clamp / k) return clamp;
        total *= k;
    }
    return total;
}

inline std::uint64_t checked_candidate_count(std::size_t n, unsigned k,
                                             const EnumOptions& opts) {
    if (k == 0) throw std::invalid_argument("alphabet size must be positive");
    const std::uint64_t total = candidate_count(n, k);
    if (!opts.force && total > opts.max_candidates)
        throw enumeration_cap_error(
            "enumeration of " + std::to_string(total) + " candidates exceeds the cap of " +
            std::to_string(opts.max_candidates) + " (use force to override)");
    return total;
}

/// Visits every length-n word over {0..k-1} with the given fixed prefix,
/// in lexicographic order. The visited span aliases an internal buffer.
template <typename Fn>
void for_each_word_with_prefix(std::span<const Symbol> prefix, std::size_t n, unsigned k,
                               Fn&& fn) {
    std::vector<Symbol> buf(prefix.begin(), prefix.end());
    buf.resize(n, 0);
    const std::size_t fixed = prefix.size();
    for (;;) {
        fn(std::span<const Symbol>(buf.data(), n));
        std::size_t pos = n;
        while (pos > fixed && buf[pos - 1] == k - 1) buf[--pos] = 0;
        if (pos == fixed) return;
        ++buf[pos - 1];
    }
}

inline void decode_prefix(std::uint64_t block, unsigned k, std::span<Symbol> prefix) {
    for (std::size_t pos = prefix.size(); pos > 0; --pos) {
        prefix[pos - 1] = static_cast<Symbol>(block % k);
        block /= k;
    }
}

} // namespace detail

/// Visits every length-n word over {0..k-1} in lexicographic order.
template <typename Fn>
void for_each_word(std::size_t n, unsigned k, Fn&& fn) {
    if (k == 0) throw std::invalid_argument("alphabet size must be positive");
    detail::for_each_word_with_prefix({}, n, k, std::forward<Fn>(fn));
}

/// Yields exactly the privileged words of length n over a k-letter alphabet,
/// in lexicographic order, as spans into a reused buffer.
template <typename Fn>
void enumerate_privileged(std::size_t n, unsigned k, Fn&& sink,
                          const EnumOptions& opts = {}) {
    detail::checked_candidate_count(n, k, opts);
    LinearChecker checker;
    for_each_word(n, k, [&](std::span<const Symbol> w) {
        if (checker.check(w).privileged) sink(w);
    });
}

/// Collects the privileged words of length n as Word values (desk scale only).
inline std::vector<Word> privileged_words(std::size_t n, unsigned k,
                                          const EnumOptions& opts = {}) {
    std::vector<Word> out;
    enumerate_privileged(
        n, k,
        [&](std::span<const Symbol> w) {
            out.emplace_back(std::vector<Symbol>(w.begin(), w.end()), k);
        },
        opts);
    return out;
}

/// Number of privileged length-n words over a k-letter alphabet.
/// Deterministic for every thread count.
inline CountRecord count_privileged(std::size_t n, unsigned k, const EnumOptions& opts = {}) {
    const std::uint64_t total = detail::checked_candidate_count(n, k, opts);

    unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    if (threads == 1 || total <= 4096) {
        std::uint64_t count = 0;
        LinearChecker checker;
        for_each_word(n, k, [&](std::span<const Symbol> w) {
            if (checker.check(w).privileged) ++count;
        });
        return {n, k, BigInt(count)};
    }

    // Partition by prefix: enough blocks to balance, few enough to stay cheap.
    std::size_t prefix_len = 0;
    std::uint64_t blocks = 1;
    while (prefix_len < n && blocks < 16u * threads) {
        blocks *= k;
        ++prefix_len;
    }

    std::vector<std::uint64_t> block_counts(blocks, 0);
    std::atomic<std::uint64_t> next_block{0};
    auto worker = [&] {
        LinearChecker checker;
        std::vector<Symbol> prefix(prefix_len);
        for (;;) {
            const std::uint64_t block = next_block.fetch_add(1);
            if (block >= blocks) return;
            detail::decode_prefix(block, k, prefix);
            std::uint64_t count = 0;
            detail::for_each_word_with_prefix(prefix, n, k, [&](std::span<const Symbol> w) {
                if (checker.check(w).privileged) ++count;
            });
            block_counts[block] = count;
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::uint64_t count = 0;
    for (std::uint64_t c : block_counts) count += c;
    return {n, k, BigInt(count)};
}

} // namespace privword
