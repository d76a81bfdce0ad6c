#ifndef UDR_WEIGHTED_MODEL_HPP
#define UDR_WEIGHTED_MODEL_HPP

#include <map>
#include <optional>
#include <vector>

#include "udr/quotient_model.hpp"

namespace udr {

/// Quotient-ring engine for ideals that are homogeneous under the weight
/// grading wt(tj) = j (all ideals J_n(m) are).  The graded pieces of the
/// quotient are computed independently, one small row reduction per weight,
/// so membership and dimension stay exact with no truncation error: a
/// weight-W polynomial lies in J iff its normal form in the weight-W block
/// vanishes.
///
/// Dimension stabilization: the quotient is generated in weights 1..n, so n
/// consecutive zero-dimensional graded pieces certify that all higher
/// pieces vanish and the quotient is Artinian.
class WeightedModel {
public:
    /// Requires weighted-homogeneous generators and a field mode.
    explicit WeightedModel(const IdealBasis& J);

    int vars() const { return n_; }
    CoeffMode mode() const { return mode_; }
    std::uint32_t prime() const { return p_; }

    /// k-dimension of the weight-W piece of k[t]/J.
    long blockDimension(long W);

    struct Stabilized {
        long dimension = 0;
        long witnessWeight = 0;  // last weight inspected for the certificate
    };
    /// Total dimension with an Artinian certificate; throws NotArtinianError
    /// if no window of n consecutive empty pieces appears by Wmax.
    Stabilized stabilizedDimension(long Wmax = 200);

    /// Exact normal form modulo J (input decomposed by weight).
    Poly normalForm(const Poly& f);
    bool contains(const Poly& f) { return normalForm(f).isZero(); }

    /// Standard monomials of all weights <= W, in the global order.
    std::vector<Monomial> standardMonomialsUpTo(long W);

private:
    struct Block {
        std::vector<Monomial> cols;
        std::vector<int> standardLocal;               // local indices, ascending
        // pivot local col -> normal form over standard local cols
        std::map<int, std::vector<std::pair<int, Coeff>>> nf;
    };
    const Block& block(long W);
    Block reduceBlock(long W) const;

    int n_;
    CoeffMode mode_;
    std::uint32_t p_;
    std::vector<Poly> gens_;
    std::vector<long> genWeight_;
    std::map<long, Block> blocks_;
    long colCap_ = 500000;
};

} // namespace udr

#endif
