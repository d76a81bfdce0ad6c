#ifndef UDR_EXT_SEQUENCES_HPP
#define UDR_EXT_SEQUENCES_HPP

#include "udr/matrix_rep.hpp"

namespace udr {

/// beta_{c,d} : V_{c,i} -> V_{d,i} as a matrix over F_p: the identity for
/// c = d, the natural projection for c > d, the natural inclusion (onto the
/// socle-side submodule) for c < d.  Both modules have top vertex 1.
FpMat betaVV(const NakayamaSpec& spec, int i, int c, int d, std::uint32_t p);

/// The short exact sequence E_s : 0 -> V_{n,i} -> V_{n+s,i} + V_{n-s,i}
/// -> V_{n,i} -> 0 with iota_s = (beta_{n,n+s}; -beta_{n,n-s}) and
/// pi_s = (beta_{n+s,n}, beta_{n-s,n}).
struct ExtSequence {
    int s = 1;
    int dimMid = 0;      // 2 * ell_{n,i}
    FpMat iota;          // dimMid x ell_{n,i}
    FpMat pi;            // ell_{n,i} x dimMid
    FpMat eps;           // iota * pi, squares to zero
    FpRep midRep;        // block-diagonal action on V_{n+s,i} + V_{n-s,i}
};

ExtSequence buildExtSequence(const NakayamaSpec& spec, int n, int i, int s,
                             std::uint32_t p);

/// Exactness and the square-zero property of eps_s, by rank computations.
Report verifyExtSequence(const ExtSequence& seq, const NakayamaSpec& spec, int n, int i);

/// A lift of rho_{n,i} over the dual numbers k[eps]: matrices A + eps*B
/// stored as (base, eps) pairs per generator.  Arrow v with v = i mod e
/// carries the T_s perturbation (t_s in the (n-s+1)-th entry of the last
/// column of its block).
struct DualNumberLift {
    NakayamaSpec spec;
    int n = 0, i = 0, s = 0;
    int dim = 0;
    std::uint32_t p = 2;
    std::vector<FpMat> vertexBase;
    std::vector<FpMat> arrowBase;
    std::vector<FpMat> arrowEps;
};

DualNumberLift buildDualNumberLift(const NakayamaSpec& spec, int n, int i, int s,
                                   std::uint32_t p);

/// Identity check with the extension construction: in the k[eps]-basis of
/// the middle module M_s (with t_s acting as eps_s = iota_s pi_s) the action
/// equals rho_{n,i,s}; also the algebra relations over k[eps] and the
/// reduction mod eps.
Report verifyDualNumberLift(const DualNumberLift& lift);

/// Strict equivalence of two dual-number lifts with the same base: a matrix
/// I + eps*X conjugating one into the other (a linear system over F_p).
bool strictEquivDual(const DualNumberLift& a, const DualNumberLift& b);

/// The n dual-number lifts of rho_{n,i} are pairwise non-strictly-equivalent
/// and none is equivalent to the trivial lift.
Report verifyDualLiftsIndependent(const NakayamaSpec& spec, int n, int i, std::uint32_t p);

} // namespace udr

#endif
