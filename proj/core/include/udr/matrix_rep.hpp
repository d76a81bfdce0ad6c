#ifndef UDR_MATRIX_REP_HPP
#define UDR_MATRIX_REP_HPP

#include <vector>

#include "udr/fp_linalg.hpp"
#include "udr/nakayama.hpp"

namespace udr {

/// Matrix representation of a uniserial module over F_p: one idempotent
/// matrix per vertex and one matrix per arrow.  The basis is the block
/// basis B_{n,i}: block v collects the theta(v,n,i) occurrences of S_v,
/// coordinate w + sum_{u<v} theta(u,n,i).
struct FpRep {
    NakayamaSpec spec;
    int dim = 0;
    std::uint32_t p = 2;
    std::vector<FpMat> vertex;  // e idempotents
    std::vector<FpMat> arrow;   // e arrow images, arrow[v-1] : v -> v+1

    const FpMat& vertexMat(int v) const { return vertex[static_cast<std::size_t>(v - 1)]; }
    const FpMat& arrowMat(int v) const { return arrow[static_cast<std::size_t>(v - 1)]; }
};

/// x-by-y matrix of rank r with I_r in the lower-left corner.
FpMat idRank(int x, int y, int r, std::uint32_t p);

/// Block offsets of the basis B_{n,i}: offset(v) = sum_{u<v} theta(u,n,i).
std::vector<int> blockOffsets(int e, int n, int i);
/// Basis coordinate (1-based) of the depth position q in V_{n,i}.
int positionToCoord(int q, int e, int n, int i);

/// The representation rho_{n,i} of V_{n,i} (top vertex 1, dim n*e + i).
FpRep buildRho(const NakayamaSpec& spec, int n, int i, std::uint32_t p);
/// Representation of the uniserial module with arbitrary top, obtained by
/// rotating the vertex labels of rho_{n,i}.
FpRep buildRhoTop(const UniserialModule& V, std::uint32_t p);

/// Product of `length` consecutive arrow matrices ending with alpha_v:
/// rho(alpha_v) rho(alpha_{v-1}) ... (indices mod e).
FpMat arrowPathProduct(const FpRep& rep, int v, int length);

/// Checks the representation invariants: orthogonal idempotents summing to
/// the identity, arrow compatibility e_{v+1} a_v e_v = a_v, and every
/// ell-fold product of consecutive arrows vanishing.
Report verifyRep(const FpRep& rep);

} // namespace udr

#endif
