#ifndef UDR_COEFF_HPP
#define UDR_COEFF_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "udr/errors.hpp"

namespace udr {

/// Coefficient domains for the symbolic layer.  Exact-integer mode is used
/// for the symbolic matrix identities, prime-field and rational modes for
/// quotient-ring models and oracles.  The mode travels with every value so
/// that mixing is caught at the operation boundary.
enum class CoeffMode : std::uint8_t {
    ExactInt,
    Rational,
    PrimeField,
};

std::string to_string(CoeffMode mode);

/// One exact coefficient.  Exact-integer and rational values are arbitrary
/// precision; prime-field values keep their canonical representative in
/// [0, p).
class Coeff {
public:
    Coeff() : mode_(CoeffMode::ExactInt), p_(0), v_(0) {}

    static Coeff zero(CoeffMode mode, std::uint32_t p = 0) {
        return Coeff(mode, p, 0);
    }
    static Coeff one(CoeffMode mode, std::uint32_t p = 0) {
        return Coeff(mode, p, 1);
    }
    static Coeff integer(long v) { return Coeff(CoeffMode::ExactInt, 0, v); }
    static Coeff integer(const mpz_class& v) {
        return Coeff(CoeffMode::ExactInt, 0, mpq_class(v));
    }
    static Coeff rational(long num, long den);
    static Coeff rational(const mpq_class& q) {
        return Coeff(CoeffMode::Rational, 0, q);
    }
    static Coeff primeField(long v, std::uint32_t p);
    /// Same numeric value, requested mode (used to move integer data into a
    /// field).  Rational -> prime field requires an invertible denominator.
    Coeff convertTo(CoeffMode mode, std::uint32_t p = 0) const;

    CoeffMode mode() const { return mode_; }
    std::uint32_t prime() const { return p_; }
    const mpq_class& value() const { return v_; }

    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    /// Division; requires a field mode (Rational or PrimeField).
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inverse() const;

    bool operator==(const Coeff& o) const {
        return mode_ == o.mode_ && p_ == o.p_ && v_ == o.v_;
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    std::string text() const;

    /// Integer value reduced mod q (requires an integer value, i.e.
    /// denominator 1).  Used when re-running integer data over a prime field.
    std::uint32_t reduceMod(std::uint32_t q) const;

private:
    Coeff(CoeffMode mode, std::uint32_t p, mpq_class v);
    void canonicalize();

    CoeffMode mode_;
    std::uint32_t p_;
    mpq_class v_;
};

/// Throws MismatchError unless both coefficients share mode and modulus.
void requireSameMode(const Coeff& a, const Coeff& b);

} // namespace udr

#endif
