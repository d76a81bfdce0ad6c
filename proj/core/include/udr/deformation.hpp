#ifndef UDR_DEFORMATION_HPP
#define UDR_DEFORMATION_HPP

#include <optional>

#include "udr/artin_ring.hpp"
#include "udr/ext_sequences.hpp"
#include "udr/poly_matrix.hpp"
#include "udr/structured_matrix.hpp"
#include "udr/weighted_model.hpp"

namespace udr {

/// The exponent of Theorem: m_V = mu for 0 <= i <= ell', mu - 1 for
/// ell' + 1 <= i <= e - 1.
int mVOf(int mu, int ellPrime, int i);

/// The universal deformation ring presentation of an indecomposable module:
/// R(N(e,ell), V) = k[[t1..tn]]/(h_{1,mV}, ..., h_{n,mV}), together with
/// its stabilized k-dimension and the normalization trace.
struct DeformationPresentation {
    int n = 0;
    int mV = 0;                     // 0 for the trivial presentation k
    std::vector<Poly> generators;   // exact-integer mode, canonical order
    long kDimension = 1;
    long dimWitnessWeight = 0;

    struct Provenance {
        int e = 1, ell = 2, mu = 2, ellPrime = 0;
        int top = 1, len = 1;       // the input module
        int ellV = 0, i = 0, dV = -1;
        bool projective = false;
        bool appliedOmega = false;
        int rotation = 0;
    } prov;

    bool trivial() const { return n == 0; }
    std::vector<std::string> generatorStrings() const;
    /// Full string form "k" or "k[[t1..tn]]/(g1, ..., gn)".
    std::string ringString() const;
    /// Criterion for presentation identity: same n, mV and generator strings.
    bool samePresentation(const DeformationPresentation& o) const;
};

struct PresentationOptions {
    bool computeDimension = true;
    std::uint32_t dimFieldPrime = 2;  // quotient dimension computed over F_p
    long weightCap = 400;
};

/// Full pipeline: projective modules yield the trivial presentation k;
/// otherwise normalize (syzygy + rotation), split ellV = n e + i, pick mV
/// and emit J_n(mV).
DeformationPresentation udrPresentation(const UniserialModule& V,
                                        const PresentationOptions& opt = {});

/// The universal lift rho_{U,n,i}: vertex matrices of rho_{n,i} and arrow
/// matrices B_v = A_v, with the arrow v = i mod e carrying the extra
/// (t_n, ..., t_1) column in its block.  Entries are integer polynomials;
/// relations hold exactly modulo J_n(mV).
struct UniversalLift {
    NakayamaSpec spec;
    int n = 1, i = 0, mV = 2;
    int dim = 0;
    int perturbedArrow = 1;  // v with v = i mod e
    std::vector<PolyMatrix> vertex;
    std::vector<PolyMatrix> arrow;

    const PolyMatrix& vertexMat(int v) const { return vertex[static_cast<std::size_t>(v - 1)]; }
    const PolyMatrix& arrowMat(int v) const { return arrow[static_cast<std::size_t>(v - 1)]; }
};

UniversalLift buildUniversalLift(const NakayamaSpec& spec, int n, int i);

/// E_{v,n,i}: the product of ell consecutive arrow images ending with
/// arrow v (exact integer polynomial matrices).
PolyMatrix liftPathProduct(const UniversalLift& lift, int v);

/// Checks that the lift defines an algebra homomorphism into matrices over
/// k[[t]]/J_n(mV): idempotent and compatibility relations, specialization
/// t -> 0, and every E_v entry reducing to zero in the quotient model.
/// `mode`/`p` select the coefficient field of the membership computation.
Report verifyLiftRelations(const UniversalLift& lift,
                           CoeffMode mode = CoeffMode::Rational, std::uint32_t p = 0);

/// Same membership computation against J_n(m) for an arbitrary exponent m
/// (the m = mV + 1 model is the minimality negative control: some entry
/// must fail to reduce).
Report verifyLiftRelationsModulo(const UniversalLift& lift, int m,
                                 CoeffMode mode = CoeffMode::Rational,
                                 std::uint32_t p = 0);

/// Minimality (the ideal story): the E_v entries generate exactly J_n(mV),
/// the entries of E_{v0} with v0 = ell' mod e alone generate it, and
/// dropping a generator changes the ideal.
Report verifyMinimality(const NakayamaSpec& spec, int n, int i,
                        CoeffMode mode = CoeffMode::Rational, std::uint32_t p = 0);

/// For each s, the specialization t_s -> eps, t_j -> 0 of the lift is
/// strictly equivalent over k[eps] to the dual-number lift rho_{n,i,s}.
Report verifyTangentSpecializations(const UniversalLift& lift, std::uint32_t p);

/// The centralizer of the lift inside matrices over R = k[t]/J_n(mV):
/// solved as a graded F_p-linear system and compared with the block
/// pattern diag(M(c), ..., M'(c)); its k-dimension is theta(1,n,i) * dim R.
struct CentralizerDescription {
    int thetaOne = 0;
    long ringDimension = 0;
    long centralizerDimension = 0;
};

Report centralizerStructure(const UniversalLift& lift, std::uint32_t p,
                            CentralizerDescription* out = nullptr);

/// countHoms on a presentation (assignments of radical elements killing
/// every generator).
long long countHoms(const DeformationPresentation& pres, const ArtinTestRing& R,
                    long long cap = (1LL << 24));

} // namespace udr

#endif
