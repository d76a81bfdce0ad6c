#ifndef UDR_STRUCTURED_MATRIX_HPP
#define UDR_STRUCTURED_MATRIX_HPP

#include "udr/poly_matrix.hpp"
#include "udr/quotient_model.hpp"
#include "udr/report.hpp"

namespace udr {

/// The n x n companion-style matrix
///     N_n = [ 0 ... 0      t_n  ]
///           [ I_{n-1} | t_{n-1} ]
///           [         |   ...   ]
///           [         |   t_1   ]
/// over Z[t1..tn], truncated at D.  N_1 = (t1).
PolyMatrix buildNn(int n, int D, CoeffMode mode = CoeffMode::ExactInt,
                   std::uint32_t p = 0);

/// The (n+1) x (n+1) matrix obtained from N_{n+1} by setting t_{n+1} = 0,
/// still living in the n-variable ring.
PolyMatrix buildNnTilde(int n, int D, CoeffMode mode = CoeffMode::ExactInt,
                        std::uint32_t p = 0);

/// Memoized table of the polynomials h_{a,nu}:
///   h_{1,0} = 1, h_{a,0} = 0 (a >= 2),
///   h_{1,nu} = t_n h_{n,nu-1},
///   h_{a,nu} = h_{a-1,nu-1} + t_{n-a+1} h_{n,nu-1}   (2 <= a <= n).
/// Every h_{a,nu} is weighted-homogeneous of weight nu - a + 1.
class HPolynomialTable {
public:
    HPolynomialTable(int n, int maxNu, CoeffMode mode = CoeffMode::ExactInt,
                     std::uint32_t p = 0);

    int vars() const { return n_; }
    int maxNu() const { return maxNu_; }
    int truncation() const { return D_; }
    /// h_{a,nu}; extends the table on demand when nu exceeds maxNu.
    const Poly& value(int a, int nu);

    /// Structural observation: every coefficient is a nonnegative integer.
    /// Reported rather than asserted.
    bool allCoefficientsNonnegative() const;

private:
    void extendTo(int nu);
    int n_, maxNu_, D_;
    CoeffMode mode_;
    std::uint32_t p_;
    std::vector<std::vector<Poly>> h_;  // h_[nu][a-1]
};

/// h_{a,nu} for the n-variable table (convenience, unmemoized across calls).
Poly hPoly(int n, int a, int nu, int D);

/// The closed form of Lemma on powers: the n x n matrix with (a,b) entry
/// h_{a, nu+b-1}.
PolyMatrix matrixPowerClosedForm(int n, int nu, int D);
PolyMatrix matrixPowerClosedForm(HPolynomialTable& table, int nu);

/// Checks, exactly over the integers:
///  (a) repeated products of N_n match the closed form for 1 <= nu <= nuMax,
///  (b) (N_n)^n = sum_j t_{n-j+1} (N_n)^{j-1},
///  (c) (Ntilde_n)^{n+1} = sum_j t_{n-j+1} (Ntilde_n)^j,
///  (d) the block formula for (Ntilde_n)^nu in terms of (N_n)^{nu-1}.
Report verifyPowerLemma(int n, int nuMax);

/// J_n(m) presented by the generators h_{1,m}, ..., h_{n,m} in exact-integer
/// mode.  n = 0 yields the distinguished zero ideal of k.
IdealBasis buildJIdeal(int n, int m);

/// The same ideal presented by all n^2 entries of (N_n)^m.
IdealBasis buildJIdealFromEntries(int n, int m);

} // namespace udr

#endif
