#ifndef UDR_POLY_HPP
#define UDR_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udr/coeff.hpp"
#include "udr/monomial.hpp"

namespace udr {

/// An exact multivariate polynomial in t1..tn, reduced modulo total degree
/// >= D.  Stored terms never have zero coefficients and never reach the
/// truncation degree; the zero polynomial is the empty term map.
class Poly {
public:
    Poly() : n_(0), D_(1), mode_(CoeffMode::ExactInt), p_(0) {}
    Poly(int n, int D, CoeffMode mode, std::uint32_t p = 0);

    static Poly zero(int n, int D, CoeffMode mode, std::uint32_t p = 0) {
        return Poly(n, D, mode, p);
    }
    static Poly constant(const Coeff& c, int n, int D);
    static Poly one(int n, int D, CoeffMode mode, std::uint32_t p = 0) {
        return constant(Coeff::one(mode, p), n, D);
    }
    /// tj as a polynomial (1-based j).
    static Poly variable(int j, int n, int D, CoeffMode mode, std::uint32_t p = 0);
    static Poly monomial(const Monomial& m, const Coeff& c, int D);

    /// Parse the text form produced by text(): terms joined by '+'/'-',
    /// factors joined by '*', '^' for powers, e.g. "t2^2 + t1^2*t2".
    static Poly parse(const std::string& s, int n, int D, CoeffMode mode,
                      std::uint32_t p = 0);

    int vars() const { return n_; }
    int truncation() const { return D_; }
    CoeffMode mode() const { return mode_; }
    std::uint32_t prime() const { return p_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const std::map<Monomial, Coeff, MonomialOrder>& terms() const { return terms_; }

    /// Total degree; nullopt for the zero polynomial (degree -infinity).
    std::optional<int> degree() const;
    std::optional<int> minDegree() const;
    std::optional<long> maxWeight() const;
    /// Weight when every term has the same weight, else nullopt.  The zero
    /// polynomial is homogeneous of every weight (returns 0).
    std::optional<long> homogeneousWeight() const;
    /// Split into weight-homogeneous components, ascending by weight.
    std::vector<Poly> weightComponents() const;

    Coeff coefficient(const Monomial& m) const;
    void addTerm(const Monomial& m, const Coeff& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Coeff& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Substitute tj -> values[j-1]; values live in a target polynomial ring
    /// that all shares (n', D', mode').
    Poly substitute(const std::vector<Poly>& values) const;
    /// Same polynomial re-truncated / re-moded.
    Poly convertTo(int D, CoeffMode mode, std::uint32_t p = 0) const;

    /// Spec text form: terms ascending in the global monomial order,
    /// coefficient 1 omitted, e.g. "t2^2 + t1^2*t2".
    std::string text() const;

private:
    void requireCompatible(const Poly& o) const;

    int n_;
    int D_;
    CoeffMode mode_;
    std::uint32_t p_;
    std::map<Monomial, Coeff, MonomialOrder> terms_;
};

} // namespace udr

#endif
