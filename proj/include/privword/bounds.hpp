#pragma once

// The counting side: the order-t recurrence G_n^(t) for binary words with no
// run of t zeros, the rational growth-rate proxy alpha_t = 2 - beta_t, and
// exact verification of the inequality chain that yields the lower bound
// B(n) >= 2^(n-5)/n^2. All comparisons are exact rational arithmetic; the
// chain is tight near equality and would not survive float tolerances.

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "privword/bigmath.hpp"
#include "privword/enumerate.hpp"
#include "privword/word.hpp"

namespace privword {

/// Memoized values of G^(t): G_n = 2^n for n < t, else the sum of the
/// previous t values. Counts binary words of length n with no factor 0^t.
class GFib {
public:
    explicit GFib(unsigned run_bound) : t_(run_bound) {
        if (t_ == 0) throw std::invalid_argument("run bound t must be >= 1");
    }

    unsigned run_bound() const { return t_; }

    const BigInt& value(std::size_t n) {
        while (values_.size() <= n) {
            const std::size_t m = values_.size();
            if (m < t_) {
                values_.push_back(pow2(m));
            } else {
                BigInt sum = 0;
                for (std::size_t i = m - t_; i < m; ++i) sum += values_[i];
                values_.push_back(sum);
            }
        }
        return values_[n];
    }

private:
    unsigned t_;
    std::vector<BigInt> values_;
};

inline BigInt g_value(std::size_t n, unsigned t) { return GFib(t).value(n); }

/// Independent route to the same count: DP over the trailing-zero run
/// length (states 0..t-1). Must agree with g_value everywhere.
inline BigInt count_avoiding_zero_run(std::size_t n, unsigned t) {
    if (t == 0) throw std::invalid_argument("run bound t must be >= 1");
    std::vector<BigInt> by_run(t, BigInt(0));
    by_run[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<BigInt> next(t, BigInt(0));
        for (unsigned run = 0; run < t; ++run) {
            if (by_run[run] == 0) continue;
            next[0] += by_run[run];                        // append 1
            if (run + 1 < t) next[run + 1] += by_run[run]; // append 0
        }
        by_run.swap(next);
    }
    BigInt total = 0;
    for (const BigInt& v : by_run) total += v;
    return total;
}

/// beta_t = 1 / (2^t - t/2 - t^2/2^t), exact. Requires t >= 2.
inline BigRational beta(unsigned t) {
    if (t < 2) throw std::invalid_argument("beta(t) requires t >= 2");
    // Scale by 2^t: denominator becomes (2^(2t) - t*2^(t-1) - t^2) / 2^t.
    const BigInt scaled = pow2(2 * t) - BigInt(t) * pow2(t - 1) - BigInt(t) * t;
    return BigRational(pow2(t), scaled);
}

/// alpha_t = 2 - beta_t, the rational proxy for the recurrence's dominant
/// root. Lies strictly between 1 and 2 for every t >= 2.
inline BigRational alpha(unsigned t) { return BigRational(2) - beta(t); }

/// Exact check of 2^s - beta*s*2^(s-1) <= (2 - beta)^s.
/// Hypotheses: s >= 2 and 0 <= beta <= 6/s.
inline bool verify_binomial_truncation(unsigned s, const BigRational& beta_value) {
    if (s < 2) throw std::invalid_argument("binomial truncation bound requires s >= 2");
    if (beta_value < 0 || beta_value > BigRational(6, s))
        throw std::invalid_argument("binomial truncation bound requires 0 <= beta <= 6/s");
    const BigRational lhs =
        BigRational(pow2(s)) - beta_value * s * BigRational(pow2(s - 1));
    const BigRational rhs = rational_pow(BigRational(2) - beta_value, s);
    return lhs <= rhs;
}

/// Exact check of alpha_t <= 2 - alpha_t^(-t).
inline bool verify_alpha_root_bound(unsigned t) {
    const BigRational a = alpha(t);
    return a <= BigRational(2) - rational_pow(a, -static_cast<long>(t));
}

/// Exact check of G_n^(t) >= alpha_t^n. Requires t >= 2.
inline bool verify_gfib_lower_bound(std::size_t n, unsigned t) {
    return BigRational(g_value(n, t)) >= rational_pow(alpha(t), static_cast<long>(n));
}

/// Words 0^t 1 w 1 0^t with |w| = n - 2t - 2 and w containing no factor 0^t.
/// All of them are privileged; there are exactly g_value(n-2t-2, t) of them.
template <typename Fn>
void seed_family(std::size_t n, unsigned t, Fn&& sink) {
    if (t == 0) throw std::invalid_argument("seed family requires t >= 1");
    if (n < 2 * static_cast<std::size_t>(t) + 2)
        throw std::invalid_argument("seed family requires n >= 2t + 2");
    const std::size_t middle = n - 2 * t - 2;
    std::vector<Symbol> buf(n, 0);
    buf[t] = 1;
    buf[t + 1 + middle] = 1;
    for_each_word(middle, 2, [&](std::span<const Symbol> w) {
        unsigned zero_run = 0;
        for (Symbol s : w) {
            zero_run = (s == 0) ? zero_run + 1 : 0;
            if (zero_run >= t) return;
        }
        std::copy(w.begin(), w.end(), buf.begin() + t + 1);
        sink(std::span<const Symbol>(buf.data(), n));
    });
}

inline std::vector<Word> seed_family_words(std::size_t n, unsigned t) {
    std::vector<Word> out;
    seed_family(n, t, [&](std::span<const Symbol> w) {
        out.emplace_back(std::vector<Symbol>(w.begin(), w.end()), 2u);
    });
    return out;
}

/// The run length used to seed the length-n bound: floor(log2 n) + 1,
/// so that 2^(t-1) <= n < 2^t. Requires n >= 1.
inline unsigned choose_run_length(std::size_t n) {
    if (n == 0) throw std::invalid_argument("choose_run_length requires n >= 1");
    return static_cast<unsigned>(std::bit_width(n));
}

/// The exact rational 2^(n-5)/n^2. Requires n >= 1.
inline BigRational privileged_count_lower_bound(std::size_t n) {
    if (n == 0) throw std::invalid_argument("lower bound requires n >= 1");
    const BigInt n_squared = BigInt(n) * n;
    if (n >= 5) return BigRational(pow2(n - 5), n_squared);
    return BigRational(1, pow2(5 - n) * n_squared);
}

/// Exact check that the number of privileged binary words of length n is at
/// least 2^(n-5)/n^2. Counts exhaustively, so n is subject to the cap.
inline bool verify_privileged_count_bound(std::size_t n, const EnumOptions& opts = {}) {
    const CountRecord record = count_privileged(n, 2, opts);
    return BigRational(record.count) >= privileged_count_lower_bound(n);
}

} // namespace privword
