#ifndef UDR_QUOTIENT_MODEL_HPP
#define UDR_QUOTIENT_MODEL_HPP

#include <map>
#include <vector>

#include "udr/poly.hpp"

namespace udr {

/// A finite generating set of an ideal of the truncated ring.  n == 0 with
/// no generators is the distinguished zero ideal of k (the base ring itself,
/// used for presentations equal to k).
struct IdealBasis {
    int n = 0;
    int D = 1;
    CoeffMode mode = CoeffMode::ExactInt;
    std::uint32_t p = 0;
    std::vector<Poly> generators;

    static IdealBasis zeroIdealOverK();
    static IdealBasis make(std::vector<Poly> gens);

    bool isZeroIdealOverK() const { return n == 0; }
    /// Same generators over another coefficient field / truncation.
    IdealBasis convertTo(int D, CoeffMode mode, std::uint32_t p = 0) const;
};

/// Degree-graded model of k[t1..tn]/(J + m^D): a monomial basis plus normal
/// forms for every monomial of total degree < D.  Built by dense row
/// reduction of the multiples of the generators, pivoting on the smallest
/// surviving monomial in the global order.  Requires a field coefficient
/// mode (rational or prime-field).
class QuotientModel {
public:
    QuotientModel(const IdealBasis& J, int D);

    int truncation() const { return D_; }
    int vars() const { return n_; }
    long dimension() const { return static_cast<long>(standard_.size()); }
    const std::vector<Monomial>& standardMonomials() const { return standard_; }

    /// Normal form supported on the standard monomials.  Terms of degree
    /// >= D reduce to zero by the truncation.
    Poly normalForm(const Poly& f) const;
    Poly normalForm(const Monomial& m) const;
    bool contains(const Poly& f) const { return normalForm(f).isZero(); }

private:
    int n_, D_;
    CoeffMode mode_;
    std::uint32_t p_;
    std::vector<Monomial> cols_;                 // ascending
    std::map<Monomial, int, MonomialOrder> colIndex_;
    std::vector<Monomial> standard_;
    // For every column: either standard (nfRow empty, nfSelf true) or the
    // normal form as (standard index, coefficient) pairs.
    struct NF {
        bool standard = false;
        std::vector<std::pair<int, Coeff>> combo;  // indices into standard_
    };
    std::vector<NF> nf_;
};

/// True when f lies in the ideal modelled by `model` (normal form zero).
bool idealMembership(const Poly& f, const QuotientModel& model);

/// Mutual containment of the generators at truncation D.
bool idealEqual(const IdealBasis& a, const IdealBasis& b, int D);

struct StabilizedDimension {
    long dimension = 0;
    int witness = 0;  // truncation degree at which stabilization was seen
};

/// Raise D from D0 until the model dimension repeats, i.e. dim at D equals
/// dim at D-1 (for an ideal of the local ring this certifies m^D <= J, so
/// the quotient is Artinian of the reported dimension).  Throws
/// NotArtinianError when Dmax passes without stabilization.
StabilizedDimension quotientDimensionStabilized(const IdealBasis& J, int D0, int Dmax);

} // namespace udr

#endif
