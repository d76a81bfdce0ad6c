#ifndef UDR_MONOMIAL_HPP
#define UDR_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace udr {

/// A monomial in the variables t1..tn, stored as its exponent vector.
///
/// Two gradings are in play throughout the library:
///  - the total degree deg = sum of exponents, and
///  - the weight wt = sum of j * exp(tj).
/// The weight grading is the one under which the ideals J_n(m) are
/// homogeneous; it drives the blockwise quotient-ring engine.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint8_t> exps) : e_(std::move(exps)) {}
    static Monomial one(int n) { return Monomial(std::vector<std::uint8_t>(n, 0)); }
    static Monomial variable(int j, int n);  // tj, 1-based j

    int vars() const { return static_cast<int>(e_.size()); }
    int exp(int j) const { return e_[static_cast<std::size_t>(j - 1)]; }  // 1-based
    const std::vector<std::uint8_t>& exps() const { return e_; }

    int degree() const;
    long weight() const;
    bool isOne() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;
    /// Divide, or return false when not divisible.
    bool tryDivide(const Monomial& o, Monomial& out) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    /// Text form: factors joined by '*', '^' for powers, e.g. "t1^2*t2".
    std::string text() const;

private:
    std::vector<std::uint8_t> e_;
};

/// The global monomial order: by total degree first, ties broken
/// lexicographically on the exponents of the highest variable down
/// (more of a higher variable sorts earlier).  Display order and row
/// reduction pivots both ascend through this order, which reproduces the
/// local-ring staircase ({1, t1, t1^2} for (t1*t2, t2 + t1^2)).
bool monomialLess(const Monomial& a, const Monomial& b);

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomialLess(a, b);
    }
};

/// All monomials in n variables with total degree < D, ascending.
std::vector<Monomial> monomialsBelowDegree(int n, int D);
/// All monomials in n variables of weight exactly W, ascending.
std::vector<Monomial> monomialsOfWeight(int n, long W);

} // namespace udr

#endif
