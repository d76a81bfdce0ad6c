#include "udr/coeff.hpp"

namespace udr {

std::string to_string(CoeffMode mode) {
    switch (mode) {
        case CoeffMode::ExactInt: return "exact-integer";
        case CoeffMode::Rational: return "rational";
        case CoeffMode::PrimeField: return "prime-field";
    }
    return "?";
}

Coeff::Coeff(CoeffMode mode, std::uint32_t p, mpq_class v)
    : mode_(mode), p_(p), v_(std::move(v)) {
    if (mode_ == CoeffMode::PrimeField && p_ < 2)
        throw DomainError("prime-field coefficient needs a modulus >= 2");
    if (mode_ != CoeffMode::PrimeField) p_ = 0;
    canonicalize();
}

void Coeff::canonicalize() {
    v_.canonicalize();
    if (mode_ == CoeffMode::ExactInt) {
        if (v_.get_den() != 1)
            throw UnsupportedModeError("non-integral value in exact-integer mode");
    } else if (mode_ == CoeffMode::PrimeField) {
        if (v_.get_den() != 1)
            throw InternalError("prime-field value with denominator");
        mpz_class r = v_.get_num() % p_;
        if (r < 0) r += p_;
        v_ = mpq_class(r);
    }
}

Coeff Coeff::rational(long num, long den) {
    if (den == 0) throw DomainError("rational coefficient with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(CoeffMode::Rational, 0, q);
}

Coeff Coeff::primeField(long v, std::uint32_t p) {
    return Coeff(CoeffMode::PrimeField, p, mpq_class(v));
}

Coeff Coeff::convertTo(CoeffMode mode, std::uint32_t p) const {
    if (mode == mode_ && (mode != CoeffMode::PrimeField || p == p_)) return *this;
    switch (mode) {
        case CoeffMode::ExactInt:
            if (v_.get_den() != 1)
                throw UnsupportedModeError("cannot convert a proper fraction to exact-integer mode");
            return Coeff(CoeffMode::ExactInt, 0, v_);
        case CoeffMode::Rational:
            return Coeff(CoeffMode::Rational, 0, v_);
        case CoeffMode::PrimeField: {
            if (p < 2) throw DomainError("prime-field conversion needs a modulus >= 2");
            mpz_class den = v_.get_den();
            mpz_class num = v_.get_num();
            mpz_class pz(p);
            if (den != 1) {
                mpz_class deninv;
                if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
                    throw UnsupportedModeError("denominator not invertible mod " + std::to_string(p));
                num *= deninv;
            }
            return Coeff(CoeffMode::PrimeField, p, mpq_class(num));
        }
    }
    throw InternalError("unreachable coefficient conversion");
}

void requireSameMode(const Coeff& a, const Coeff& b) {
    if (a.mode() != b.mode() || a.prime() != b.prime())
        throw MismatchError("coefficient mode mismatch: " + to_string(a.mode()) +
                            " vs " + to_string(b.mode()));
}

Coeff Coeff::operator+(const Coeff& o) const {
    requireSameMode(*this, o);
    return Coeff(mode_, p_, v_ + o.v_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    requireSameMode(*this, o);
    return Coeff(mode_, p_, v_ - o.v_);
}

Coeff Coeff::operator*(const Coeff& o) const {
    requireSameMode(*this, o);
    return Coeff(mode_, p_, v_ * o.v_);
}

Coeff Coeff::operator-() const { return Coeff(mode_, p_, -v_); }

Coeff Coeff::inverse() const {
    if (isZero()) throw DomainError("inverse of zero");
    switch (mode_) {
        case CoeffMode::ExactInt:
            throw UnsupportedModeError("inverse requested in exact-integer mode");
        case CoeffMode::Rational:
            return Coeff(CoeffMode::Rational, 0, 1 / v_);
        case CoeffMode::PrimeField: {
            mpz_class inv, pz(p_);
            if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), pz.get_mpz_t()) == 0)
                throw DomainError("non-invertible element mod " + std::to_string(p_));
            return Coeff(CoeffMode::PrimeField, p_, mpq_class(inv));
        }
    }
    throw InternalError("unreachable");
}

Coeff Coeff::operator/(const Coeff& o) const {
    requireSameMode(*this, o);
    return *this * o.inverse();
}

std::string Coeff::text() const { return v_.get_str(); }

std::uint32_t Coeff::reduceMod(std::uint32_t q) const {
    if (v_.get_den() != 1)
        throw UnsupportedModeError("reduceMod needs an integral value");
    mpz_class r = v_.get_num() % q;
    if (r < 0) r += q;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace udr
