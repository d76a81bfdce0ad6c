#ifndef UDR_ORACLE_HPP
#define UDR_ORACLE_HPP

#include "udr/artin_ring.hpp"
#include "udr/deformation.hpp"
#include "udr/matrix_rep.hpp"

namespace udr {

/// Resource caps for the exhaustive searches.  Exceeding a cap aborts with
/// ResourceCapError carrying the measured requirement; nothing is sampled
/// silently.
struct OracleCaps {
    long long maxCandidates = 1LL << 24;
    long long maxGroup = 1LL << 20;
};

/// A lift of the base representation over a test ring: arrow matrices with
/// radical perturbations inside their arrow blocks; idempotent images stay
/// pinned at the base (every strict-equivalence class contains such a
/// representative, and a conjugator between two pinned lifts automatically
/// commutes with the pinned idempotents, hence is block diagonal).
struct LiftCandidate {
    std::vector<RMatrix> arrows;
    std::string key;  // flattened coordinates; lexicographic order is canonical
};

struct LiftEnumeration {
    std::vector<LiftCandidate> lifts;  // sorted by key
    long long searchSpace = 0;         // p^(free parameter count)
    int freeParameters = 0;
};

/// Exhaustive lift enumeration: every radical-valued perturbation of the
/// arrow blocks, keeping candidates that satisfy all ell-fold path
/// relations over R.
LiftEnumeration enumerateLifts(const FpRep& base, const ArtinTestRing& R,
                               const OracleCaps& caps = {});

struct StrictEquivClass {
    LiftCandidate representative;  // lexicographically smallest in its orbit
    long long orbitSize = 0;
};

/// Partition into conjugation orbits under the block-diagonal congruence
/// subgroup (matrices = identity + radical block-diagonal), applied
/// definition-level: every group element conjugates every orbit member.
std::vector<StrictEquivClass> strictEquivClasses(const LiftEnumeration& lifts,
                                                 const FpRep& base,
                                                 const ArtinTestRing& R,
                                                 const OracleCaps& caps = {});

/// |Def(V, R)| by orbit enumeration compared against the hom count of the
/// emitted presentation.
Report checkRepresentability(const UniserialModule& V,
                             const DeformationPresentation& pres,
                             const ArtinTestRing& R, const OracleCaps& caps = {});

struct TangentResult {
    long long classCount = 0;
    int dimension = 0;  // log_p of the class count
};

/// Tangent-space dimension over F_p[eps] by exhaustive orbit enumeration;
/// fails structurally when the count is not a power of p, and cross-checks
/// dim = ext1Dim(V).
TangentResult tangentDimension(const UniserialModule& V, std::uint32_t p,
                               const OracleCaps& caps = {});
Report tangentDimensionReport(const UniserialModule& V, std::uint32_t p,
                              const OracleCaps& caps = {});

/// Centralizer lifting across a small extension A1 -> A0: for every strict
/// equivalence class of lifts over A1, the centralizer subgroup Z(tau_1)
/// inside G_{A1} surjects onto Z(tau_0); decided by F_p-linear solves on
/// the radical-valued commutant spaces.
Report checkCentralizerLifting(const UniserialModule& V, const SmallExtension& ext,
                               const OracleCaps& caps = {});

} // namespace udr

#endif
