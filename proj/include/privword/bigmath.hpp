#pragma once

// Exact arbitrary-precision arithmetic. Rationals are kept in lowest terms
// with positive denominators by the backend; every comparison here is exact,
// no floating point anywhere in the bound verifications.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace privword {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::size_t exponent) { return BigInt(1) << exponent; }

inline BigInt int_pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

/// Exact q^e for integer e (negative exponents allowed for nonzero q).
inline BigRational rational_pow(const BigRational& q, long exponent) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (exponent == 0) return BigRational(1);
    if (exponent < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        return rational_pow(BigRational(denominator(q), numerator(q)), -exponent);
    }
    const auto e = static_cast<unsigned>(exponent);
    return BigRational(int_pow(numerator(q), e), int_pow(denominator(q), e));
}

/// "n" or "n/d", with the fraction already in lowest terms.
inline std::string to_display(const BigRational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::string out = numerator(q).str();
    if (denominator(q) != 1) out += "/" + denominator(q).str();
    return out;
}

} // namespace privword
