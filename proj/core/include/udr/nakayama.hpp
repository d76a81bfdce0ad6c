#ifndef UDR_NAKAYAMA_HPP
#define UDR_NAKAYAMA_HPP

#include <utility>

#include "udr/report.hpp"
#include "udr/errors.hpp"

namespace udr {

/// Euclidean division ell = mu*e + ell' with 0 <= ell' <= e-1.
/// Requires e >= 1 and ell >= 2.
std::pair<int, int> decomposeEll(int e, int ell);

/// The algebra N(e, ell) = kQ_e / J^ell: circular quiver with e vertices,
/// arrows alpha_v : v -> v+1 (mod e), paths of length ell vanish.
struct NakayamaSpec {
    int e = 1;
    int ell = 2;
    int mu = 2;        // ell = mu*e + ellPrime
    int ellPrime = 0;

    static NakayamaSpec make(int e, int ell);

    /// Normalize a cyclic vertex index into 1..e.
    int vertex(int v) const {
        int r = (v - 1) % e;
        if (r < 0) r += e;
        return r + 1;
    }
    bool operator==(const NakayamaSpec& o) const { return e == o.e && ell == o.ell; }
};

/// An indecomposable N(e,ell)-module: uniserial with the given top simple
/// and length.  Composition factors descend cyclically from the top.
struct UniserialModule {
    NakayamaSpec spec;
    int top = 1;  // 1..e
    int len = 1;  // 1..ell

    static UniserialModule make(const NakayamaSpec& spec, int top, int len);

    bool projective() const { return len == spec.ell; }
    /// Distance data: ellV = min(len, ell - len); 0 exactly for projectives.
    int ellV() const { return std::min(len, spec.ell - len); }
    int n() const { return ellV() / spec.e; }
    int i() const { return ellV() % spec.e; }
    /// Stable AR-quiver distance d_V = ellV - 1 (non-projective only).
    bool operator==(const UniserialModule& o) const {
        return spec == o.spec && top == o.top && len == o.len;
    }
};

/// theta(v, n, i): multiplicity of S_v as a composition factor of V_{n,i}.
int thetaOf(int v, int n, int i);
/// theta(1..e, n, i); the sum is n*e + i.
std::vector<int> thetaProfile(int e, int n, int i);

struct NormalizedModule {
    UniserialModule module;  // top 1, len = ellV
    bool appliedOmega = false;
    int rotation = 0;  // vertices were rotated down by this amount
};

/// Replace V by its syzygy when the length exceeds ell/2 (ties keep V) and
/// rotate the top to vertex 1.  Throws ProjectiveModuleError on projectives.
/// Neither step changes the deformation-ring presentation.
NormalizedModule normalizeModule(const UniserialModule& V);

/// Syzygy at the (top, len) level: kernel of the projective cover,
/// top -> top + len (mod e), len -> ell - len.  Non-projective input only.
UniserialModule syzygy(const UniserialModule& V);

/// d_V = ellV - 1; distance of [V] to the boundary of the stable AR quiver.
int arDistance(const UniserialModule& V);

/// dim_k Hom(U, W), counted on the uniserial structure: one dimension per
/// submodule of W whose top matches a quotient of U.
int homDimCombinatorial(const UniserialModule& U, const UniserialModule& W);
/// The same dimension from the intertwiner equations of the matrix
/// representations over F_p.
int homDimLinear(const UniserialModule& U, const UniserialModule& W, std::uint32_t p);
/// Both routes, cross-checked; throws InternalError on disagreement.
int homDim(const UniserialModule& U, const UniserialModule& W);

/// dim_k Ext^1(V, V) = n for the normalized module; cross-checked against
/// dim Hom(Omega V, V) over F_2, with the projective-factoring subspace
/// verified to vanish.
int ext1Dim(const UniserialModule& V);

/// Socle pattern of the projectives: soc(P_j) = S_{j-1+ell'}, and the
/// algebra is symmetric precisely when ell' = 1.
Report projectiveCheck(const NakayamaSpec& spec, std::uint32_t p = 2);

} // namespace udr

#endif
