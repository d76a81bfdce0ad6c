#include "udr/deformation.hpp"

#include <algorithm>
#include <map>

namespace udr {

int mVOf(int mu, int ellPrime, int i) {
    if (i < 0) throw DomainError("mVOf needs i >= 0");
    return i <= ellPrime ? mu : mu - 1;
}

std::vector<std::string> DeformationPresentation::generatorStrings() const {
    std::vector<std::string> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.text());
    return out;
}

std::string DeformationPresentation::ringString() const {
    if (trivial()) return "k";
    std::string vars = "t1";
    for (int j = 2; j <= n; ++j) vars += ",t" + std::to_string(j);
    std::string s = "k[[" + vars + "]]/(";
    bool first = true;
    for (const auto& g : generators) {
        if (!first) s += ", ";
        first = false;
        s += g.text();
    }
    return s + ")";
}

bool DeformationPresentation::samePresentation(const DeformationPresentation& o) const {
    return n == o.n && mV == o.mV && generatorStrings() == o.generatorStrings();
}

namespace {

std::vector<Poly> canonicalGenerators(int n, int mV) {
    IdealBasis J = buildJIdeal(n, mV);
    std::vector<Poly> gens = J.generators;
    std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        return monomialLess(a.terms().begin()->first, b.terms().begin()->first);
    });
    return gens;
}

} // namespace

DeformationPresentation udrPresentation(const UniserialModule& V,
                                        const PresentationOptions& opt) {
    DeformationPresentation pres;
    auto& pv = pres.prov;
    pv.e = V.spec.e;
    pv.ell = V.spec.ell;
    pv.mu = V.spec.mu;
    pv.ellPrime = V.spec.ellPrime;
    pv.top = V.top;
    pv.len = V.len;

    if (V.projective()) {
        pv.projective = true;
        return pres;  // presentation k
    }
    NormalizedModule norm = normalizeModule(V);
    pv.appliedOmega = norm.appliedOmega;
    pv.rotation = norm.rotation;
    pv.ellV = norm.module.len;
    pv.i = norm.module.i();
    pv.dV = pv.ellV - 1;
    const int n = norm.module.n();
    if (n == 0) return pres;  // Ext^1 = 0, presentation k

    pres.n = n;
    pres.mV = mVOf(pv.mu, pv.ellPrime, pv.i);
    pres.generators = canonicalGenerators(n, pres.mV);
    if (opt.computeDimension) {
        IdealBasis J = buildJIdeal(n, pres.mV)
                           .convertTo(pres.mV + 2, CoeffMode::PrimeField, opt.dimFieldPrime);
        WeightedModel model(J);
        auto stab = model.stabilizedDimension(opt.weightCap);
        pres.kDimension = stab.dimension;
        pres.dimWitnessWeight = stab.witnessWeight;
    } else {
        pres.kDimension = -1;
    }
    return pres;
}

UniversalLift buildUniversalLift(const NakayamaSpec& spec, int n, int i) {
    if (n < 1) throw DomainError("buildUniversalLift needs n >= 1 (n = 0 lifts are trivial)");
    const int e = spec.e;
    const int dim = n * e + i;
    if (2 * dim > spec.ell)
        throw DomainError("buildUniversalLift needs ell_V <= floor(ell/2)");
    const int D = spec.ell + 2;
    UniversalLift lift;
    lift.spec = spec;
    lift.n = n;
    lift.i = i;
    lift.mV = mVOf(spec.mu, spec.ellPrime, i);
    lift.dim = dim;
    lift.perturbedArrow = (i == 0) ? e : i;

    FpRep base = buildRho(spec, n, i, 2);  // 0/1 matrices, lifted to Z[t]
    auto liftMat = [&](const FpMat& src) {
        PolyMatrix m(dim, dim, n, D, CoeffMode::ExactInt);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (src.at(r, c)) m.at(r, c) = Poly::one(n, D, CoeffMode::ExactInt);
        return m;
    };
    for (int v = 1; v <= e; ++v) {
        lift.vertex.push_back(liftMat(base.vertexMat(v)));
        lift.arrow.push_back(liftMat(base.arrowMat(v)));
    }

    // The B-block deviation: arrow v* = i mod e gains the column
    // (t_n, ..., t_1) in the last column of its block.
    auto off = blockOffsets(e, n, i);
    const int vStar = lift.perturbedArrow;
    const int blockRow = (i == 0) ? 1 : i + 1;
    const int blockCol = (i == 0) ? e : i;
    const int rowBase = off[static_cast<std::size_t>(blockRow - 1)];
    const int colIdx = off[static_cast<std::size_t>(blockCol - 1)] + thetaOf(blockCol, n, i) - 1;
    PolyMatrix& B = lift.arrow[static_cast<std::size_t>(vStar - 1)];
    for (int a = 1; a <= n; ++a) {
        Poly t = Poly::variable(n - a + 1, n, D, CoeffMode::ExactInt);
        B.at(rowBase + a - 1, colIdx) = B.at(rowBase + a - 1, colIdx) + t;
    }
    return lift;
}

PolyMatrix liftPathProduct(const UniversalLift& lift, int v) {
    PolyMatrix prod = PolyMatrix::identity(lift.dim, lift.n, lift.spec.ell + 2,
                                           CoeffMode::ExactInt);
    for (int k = 0; k < lift.spec.ell; ++k)
        prod = prod * lift.arrowMat(lift.spec.vertex(v - k));
    return prod;
}

namespace {

Report liftStructureChecks(const UniversalLift& lift) {
    Report rep;
    const NakayamaSpec& spec = lift.spec;
    const int e = spec.e;
    const int dim = lift.dim;
    const int D = spec.ell + 2;
    PolyMatrix I = PolyMatrix::identity(dim, lift.n, D, CoeffMode::ExactInt);
    PolyMatrix sum(dim, dim, lift.n, D, CoeffMode::ExactInt);
    bool idem = true, orth = true, compat = true;
    for (int v = 1; v <= e; ++v) {
        const PolyMatrix& ev = lift.vertexMat(v);
        if (!(ev * ev == ev)) idem = false;
        for (int w = 1; w <= e; ++w)
            if (w != v && !(ev * lift.vertexMat(w)).isZero()) orth = false;
        sum = sum + ev;
        PolyMatrix av = lift.arrowMat(v);
        if (!(lift.vertexMat(spec.vertex(v + 1)) * av * lift.vertexMat(v) == av))
            compat = false;
    }
    rep.add("vertex-idempotents", idem);
    rep.add("vertex-orthogonality", orth);
    rep.add("vertex-sum-identity", sum == I);
    rep.add("arrow-compatibility", compat);

    // Specializing every variable to zero must recover rho_{n,i}.
    std::vector<Poly> zeros(static_cast<std::size_t>(lift.n),
                            Poly::zero(lift.n, D, CoeffMode::ExactInt));
    FpRep base = buildRho(spec, lift.n, lift.i, 2);
    bool specializes = true;
    for (int v = 1; v <= e && specializes; ++v) {
        PolyMatrix a0 = lift.arrowMat(v).substitute(zeros);
        for (int r = 0; r < dim && specializes; ++r)
            for (int c = 0; c < dim; ++c) {
                long want = base.arrowMat(v).at(r, c);
                const Poly& got = a0.at(r, c);
                bool match = want == 0 ? got.isZero()
                                       : (got.termCount() == 1 &&
                                          got.coefficient(Monomial::one(lift.n)) ==
                                              Coeff::integer(want));
                if (!match) {
                    specializes = false;
                    break;
                }
            }
    }
    rep.add("specializes-to-rho-at-zero", specializes);
    return rep;
}

} // namespace

Report verifyLiftRelationsModulo(const UniversalLift& lift, int m, CoeffMode mode,
                                 std::uint32_t p) {
    Report rep = liftStructureChecks(lift);
    IdealBasis J = buildJIdeal(lift.n, m);
    WeightedModel model(J.convertTo(J.D, mode, p));
    bool all = true;
    std::string detail;
    for (int v = 1; v <= lift.spec.e; ++v) {
        PolyMatrix Ev = liftPathProduct(lift, v);
        for (int r = 0; r < Ev.rows(); ++r)
            for (int c = 0; c < Ev.cols(); ++c) {
                const Poly& entry = Ev.at(r, c);
                if (entry.isZero()) continue;
                Poly nf = model.normalForm(entry.convertTo(entry.truncation(), mode, p));
                if (!nf.isZero()) {
                    all = false;
                    if (detail.empty())
                        detail = "E_" + std::to_string(v) + " entry (" +
                                 std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                 ") has normal form " + nf.text();
                }
            }
    }
    rep.add("path-products-vanish-mod-J", all, detail);
    return rep;
}

Report verifyLiftRelations(const UniversalLift& lift, CoeffMode mode, std::uint32_t p) {
    return verifyLiftRelationsModulo(lift, lift.mV, mode, p);
}

namespace {

/// Nonzero entries of all E_v (or one E_v) as an ideal basis in `mode`.
std::vector<Poly> pathProductEntries(const UniversalLift& lift, int onlyV, CoeffMode mode,
                                     std::uint32_t p) {
    std::vector<Poly> out;
    for (int v = 1; v <= lift.spec.e; ++v) {
        if (onlyV != 0 && v != onlyV) continue;
        PolyMatrix Ev = liftPathProduct(lift, v);
        for (int r = 0; r < Ev.rows(); ++r)
            for (int c = 0; c < Ev.cols(); ++c) {
                const Poly& f = Ev.at(r, c);
                if (f.isZero()) continue;
                Poly g = f.convertTo(f.truncation(), mode, p);
                if (!g.isZero()) out.push_back(std::move(g));
            }
    }
    return out;
}

bool weightedMutualContainment(const std::vector<Poly>& gensA,
                               const std::vector<Poly>& gensB) {
    WeightedModel mb(IdealBasis::make(gensB));
    for (const auto& g : gensA)
        if (!mb.contains(g)) return false;
    WeightedModel ma(IdealBasis::make(gensA));
    for (const auto& g : gensB)
        if (!ma.contains(g)) return false;
    return true;
}

} // namespace

Report verifyMinimality(const NakayamaSpec& spec, int n, int i, CoeffMode mode,
                        std::uint32_t p) {
    Report rep;
    UniversalLift lift = buildUniversalLift(spec, n, i);
    IdealBasis J = buildJIdeal(n, lift.mV).convertTo(lift.mV + 2, mode, p);

    std::vector<Poly> allEntries = pathProductEntries(lift, 0, mode, p);
    if (allEntries.empty()) {
        rep.add("path-product-entries-exist", false);
        return rep;
    }
    rep.add("entries-generate-J", weightedMutualContainment(allEntries, J.generators),
            "ideal of all E_v entries vs J_" + std::to_string(n) + "(" +
                std::to_string(lift.mV) + ")");

    const int v0 = spec.ellPrime == 0 ? spec.e : spec.ellPrime;
    std::vector<Poly> v0Entries = pathProductEntries(lift, v0, mode, p);
    bool v0Gen = !v0Entries.empty();
    if (v0Gen) {
        WeightedModel mv0(IdealBasis::make(v0Entries));
        for (const auto& g : J.generators) v0Gen = v0Gen && mv0.contains(g);
    }
    rep.add("E_v0-entries-generate-J", v0Gen, "v0 = " + std::to_string(v0));

    // Dropping a generator must shrink the ideal.
    bool dropChanges = true;
    if (n == 1) {
        // the remaining ideal is zero and h_{1,mV} is not
        dropChanges = !J.generators.empty() && !J.generators.front().isZero();
    } else {
        std::vector<Poly> rest(J.generators.begin() + 1, J.generators.end());
        WeightedModel mrest(IdealBasis::make(rest));
        dropChanges = !mrest.contains(J.generators.front());
    }
    rep.add("dropping-a-generator-shrinks-J", dropChanges);
    return rep;
}

Report verifyTangentSpecializations(const UniversalLift& lift, std::uint32_t p) {
    Report rep;
    const NakayamaSpec& spec = lift.spec;
    const int e = spec.e;
    const int dim = lift.dim;
    const int n = lift.n;

    bool degreeOne = true;
    for (int v = 1; v <= e; ++v) {
        auto d = lift.arrowMat(v).entries();
        for (const auto& f : d)
            if (!f.isZero() && *f.degree() > 1) degreeOne = false;
    }
    rep.add("lift-entries-linear", degreeOne);
    if (!degreeOne) return rep;

    bool all = true;
    std::string detail;
    for (int s = 1; s <= n && all; ++s) {
        DualNumberLift gammaS;
        gammaS.spec = spec;
        gammaS.n = n;
        gammaS.i = lift.i;
        gammaS.s = s;
        gammaS.p = p;
        gammaS.dim = dim;
        Monomial ts = Monomial::variable(s, n);
        for (int v = 1; v <= e; ++v) {
            FpMat base(dim, dim, p), eps(dim, dim, p), vert(dim, dim, p);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    const Poly& fa = lift.arrowMat(v).at(r, c);
                    base.set(r, c, fa.coefficient(Monomial::one(n)).reduceMod(p));
                    eps.set(r, c, fa.coefficient(ts).reduceMod(p));
                    vert.set(r, c,
                             lift.vertexMat(v).at(r, c).coefficient(Monomial::one(n)).reduceMod(p));
                }
            gammaS.arrowBase.push_back(base);
            gammaS.arrowEps.push_back(eps);
            gammaS.vertexBase.push_back(vert);
        }
        DualNumberLift expected = buildDualNumberLift(spec, n, lift.i, s, p);
        // reduction mod eps of the specialization is rho itself
        bool baseMatches = true;
        for (int v = 1; v <= e; ++v)
            baseMatches = baseMatches &&
                          gammaS.arrowBase[static_cast<std::size_t>(v - 1)] ==
                              expected.arrowBase[static_cast<std::size_t>(v - 1)];
        if (!baseMatches) {
            all = false;
            detail = "s=" + std::to_string(s) + ": base does not reduce to rho";
            break;
        }
        if (!strictEquivDual(gammaS, expected)) {
            all = false;
            detail = "s=" + std::to_string(s) + ": not strictly equivalent to rho_{n,i,s}";
        }
    }
    rep.add("tangent-specializations-match", all, detail);
    return rep;
}

// ---------------------------------------------------------------------------
// Centralizer structure
// ---------------------------------------------------------------------------

namespace {

/// Sparse element of R = k[t]/J over the standard-monomial basis.
using SparseR = std::map<int, std::uint32_t>;

void addInto(SparseR& dst, int idx, std::uint64_t coef, std::uint32_t p) {
    if (coef % p == 0) return;
    auto [it, fresh] = dst.emplace(idx, 0);
    it->second = static_cast<std::uint32_t>((it->second + coef) % p);
    if (it->second == 0) dst.erase(it);
}

struct RContext {
    std::uint32_t p;
    std::vector<Monomial> standard;
    std::map<std::string, int> index;         // monomial text -> index
    std::vector<long> weight;                 // per standard monomial
    std::vector<std::vector<SparseR>> mulT;   // mulT[j-1][sigma] = NF(t_j sigma)

    int indexOf(const Monomial& m) const {
        auto it = index.find(m.text());
        return it == index.end() ? -1 : it->second;
    }
};

RContext buildRContext(WeightedModel& model, int n, long witness, std::uint32_t p) {
    RContext ctx;
    ctx.p = p;
    ctx.standard = model.standardMonomialsUpTo(witness);
    for (std::size_t k = 0; k < ctx.standard.size(); ++k) {
        ctx.index.emplace(ctx.standard[k].text(), static_cast<int>(k));
        ctx.weight.push_back(ctx.standard[k].weight());
    }
    ctx.mulT.assign(static_cast<std::size_t>(n), {});
    for (int j = 1; j <= n; ++j) {
        auto& table = ctx.mulT[static_cast<std::size_t>(j - 1)];
        table.resize(ctx.standard.size());
        for (std::size_t k = 0; k < ctx.standard.size(); ++k) {
            Monomial prod = ctx.standard[k] * Monomial::variable(j, n);
            Poly nf = model.normalForm(
                Poly::monomial(prod, Coeff::primeField(1, p), static_cast<int>(prod.degree()) + 2));
            SparseR out;
            for (const auto& [m, c] : nf.terms()) {
                int idx = ctx.indexOf(m);
                if (idx < 0) throw InternalError("normal form left the standard basis");
                addInto(out, idx, c.reduceMod(p), p);
            }
            table[k] = std::move(out);
        }
    }
    return ctx;
}

/// One polynomial entry of the lift as (standard? const : t_j) terms.
struct EntryTerm {
    int var = 0;  // 0 for the constant term, else j for t_j
    std::uint32_t coef = 0;
};

std::vector<EntryTerm> entryTerms(const Poly& f, std::uint32_t p) {
    std::vector<EntryTerm> out;
    for (const auto& [m, c] : f.terms()) {
        int deg = m.degree();
        if (deg > 1) throw InternalError("lift entry of degree > 1");
        EntryTerm t;
        t.coef = c.reduceMod(p);
        if (t.coef == 0) continue;
        if (deg == 0) {
            t.var = 0;
        } else {
            for (int j = 1; j <= f.vars(); ++j)
                if (m.exp(j) == 1) t.var = j;
        }
        out.push_back(t);
    }
    return out;
}

/// Multiply a sparse R element by an entry term (a constant or t_j).
SparseR termMul(const RContext& ctx, const EntryTerm& t, const SparseR& x) {
    SparseR out;
    for (const auto& [idx, c] : x) {
        std::uint64_t f = static_cast<std::uint64_t>(t.coef) * c;
        if (t.var == 0) {
            addInto(out, idx, f, ctx.p);
        } else {
            for (const auto& [ridx, rc] : ctx.mulT[static_cast<std::size_t>(t.var - 1)]
                                                  [static_cast<std::size_t>(idx)])
                addInto(out, ridx, f * rc, ctx.p);
        }
    }
    return out;
}

} // namespace

Report centralizerStructure(const UniversalLift& lift, std::uint32_t p,
                            CentralizerDescription* out) {
    Report rep;
    const NakayamaSpec& spec = lift.spec;
    const int e = spec.e;
    const int n = lift.n;
    const int i = lift.i;
    const int dim = lift.dim;
    const int theta1 = thetaOf(1, n, i);

    // Quotient model of J_n(mV) over F_p.
    IdealBasis J = buildJIdeal(n, lift.mV).convertTo(lift.mV + 2, CoeffMode::PrimeField, p);
    WeightedModel model(J);
    auto stab = model.stabilizedDimension();
    RContext ctx = buildRContext(model, n, stab.witnessWeight, p);
    const long dimR = static_cast<long>(ctx.standard.size());
    if (dimR != stab.dimension) throw InternalError("standard basis size mismatch");

    // Position grading of the module basis and block data.
    auto off = blockOffsets(e, n, i);
    std::vector<int> blockOf(static_cast<std::size_t>(dim) + 1, 0);
    for (int v = 1; v <= e; ++v)
        for (int w = 1; w <= thetaOf(v, n, i); ++w)
            blockOf[static_cast<std::size_t>(off[static_cast<std::size_t>(v - 1)] + w)] = v;
    std::vector<int> posOf(static_cast<std::size_t>(dim) + 1, 0);
    for (int q = 1; q <= dim; ++q) posOf[static_cast<std::size_t>(positionToCoord(q, e, n, i))] = q;

    // The vertex images must be the canonical block idempotents: that is
    // what forces every centralizing matrix to be block diagonal, so the
    // unknowns below range over the diagonal blocks only.
    bool canonicalIdem = true;
    for (int v = 1; v <= e && canonicalIdem; ++v)
        for (int q = 1; q <= dim && canonicalIdem; ++q)
            for (int r = 1; r <= dim; ++r) {
                const Poly& f = lift.vertexMat(v).at(q - 1, r - 1);
                bool expectOne = (q == r && blockOf[static_cast<std::size_t>(q)] == v);
                bool isOne = f.termCount() == 1 &&
                             f.coefficient(Monomial::one(n)) == Coeff::integer(1);
                if (expectOne ? !isOne : !f.isZero()) {
                    canonicalIdem = false;
                    break;
                }
            }
    rep.add("vertex-idempotents-canonical", canonicalIdem);
    if (!canonicalIdem) return rep;

    // Arrow entries must be graded of degree one: position(q) - position(r)
    // + e * weight = 1 for the entry at (q, r).  This grading decomposes the
    // commutant equations into independent blocks.
    bool graded = true;
    for (int v = 1; v <= e && graded; ++v)
        for (int q = 1; q <= dim && graded; ++q)
            for (int r = 1; r <= dim; ++r) {
                const Poly& f = lift.arrowMat(v).at(q - 1, r - 1);
                for (const auto& [m, c] : f.terms()) {
                    long d = posOf[static_cast<std::size_t>(q)] -
                             posOf[static_cast<std::size_t>(r)] + e * m.weight();
                    if (d != 1) {
                        graded = false;
                        break;
                    }
                }
                if (!graded) break;
            }
    rep.add("lift-entries-graded", graded);
    if (!graded) return rep;

    // Unknowns: X_{q,r} sigma-components for q, r in the same block.
    struct Unknown {
        int q, r, sigma;
    };
    std::map<long, std::vector<Unknown>> classes;  // class -> unknown list
    std::map<long, std::map<long, int>> classIndex;  // class -> packed(q,r,sigma) -> idx
    auto packKey = [&](int q, int r, int sigma) {
        return (static_cast<long>(q) * (dim + 1) + r) * (dimR + 1) + sigma;
    };
    for (int q = 1; q <= dim; ++q)
        for (int r = 1; r <= dim; ++r) {
            if (blockOf[static_cast<std::size_t>(q)] != blockOf[static_cast<std::size_t>(r)])
                continue;
            for (int sg = 0; sg < dimR; ++sg) {
                long cls = posOf[static_cast<std::size_t>(q)] - posOf[static_cast<std::size_t>(r)] +
                           static_cast<long>(e) * ctx.weight[static_cast<std::size_t>(sg)];
                auto& lst = classes[cls];
                classIndex[cls][packKey(q, r, sg)] = static_cast<int>(lst.size());
                lst.push_back({q, r, sg});
            }
        }

    // Arrow entry lists.
    struct ArrowEntry {
        int q, r;
        std::vector<EntryTerm> terms;
    };
    std::vector<std::vector<ArrowEntry>> arrows(static_cast<std::size_t>(e));
    for (int v = 1; v <= e; ++v)
        for (int q = 1; q <= dim; ++q)
            for (int r = 1; r <= dim; ++r) {
                const Poly& f = lift.arrowMat(v).at(q - 1, r - 1);
                if (f.isZero()) continue;
                arrows[static_cast<std::size_t>(v - 1)].push_back(
                    {q, r, entryTerms(f, p)});
            }

    // Solve class by class; collect the kernel basis as sparse matrices.
    long dimZ = 0;
    std::vector<std::vector<SparseR>> kernelMatrices;  // flattened dim*dim
    for (const auto& [cls, unknowns] : classes) {
        const int nu = static_cast<int>(unknowns.size());
        // equation rows keyed by (v, q, s, tau)
        std::map<long, std::map<int, std::uint32_t>> eqRows;
        auto eqKey = [&](int v, int q, int s, int tau) {
            return ((static_cast<long>(v) * (dim + 1) + q) * (dim + 1) + s) * (dimR + 1) + tau;
        };
        for (int u = 0; u < nu; ++u) {
            const Unknown& un = unknowns[static_cast<std::size_t>(u)];
            for (int v = 1; v <= e; ++v) {
                for (const auto& entry : arrows[static_cast<std::size_t>(v - 1)]) {
                    // (X B)_{q,s}: X_{un.q, un.r} B_{un.r, s}
                    if (entry.q == un.r) {
                        for (const auto& t : entry.terms) {
                            SparseR base;
                            base.emplace(un.sigma, 1);
                            SparseR prod = termMul(ctx, t, base);
                            for (const auto& [tau, c] : prod) {
                                auto& row = eqRows[eqKey(v, un.q, entry.r, tau)];
                                auto [it, fresh] = row.emplace(u, 0);
                                it->second = (it->second + c) % p;
                                if (it->second == 0) row.erase(it);
                            }
                        }
                    }
                    // -(B X)_{q,s}: B_{q, un.q} X_{un.q... } with X_{m,s}:
                    if (entry.r == un.q) {
                        for (const auto& t : entry.terms) {
                            SparseR base;
                            base.emplace(un.sigma, 1);
                            SparseR prod = termMul(ctx, t, base);
                            for (const auto& [tau, c] : prod) {
                                auto& row = eqRows[eqKey(v, entry.q, un.r, tau)];
                                auto [it, fresh] = row.emplace(u, 0);
                                it->second = (it->second + p - c) % p;
                                if (it->second == 0) row.erase(it);
                            }
                        }
                    }
                }
            }
        }
        FpMat sys(static_cast<int>(eqRows.size()), nu, p);
        int r = 0;
        for (const auto& [key, row] : eqRows) {
            for (const auto& [u, c] : row) sys.set(r, u, c);
            ++r;
        }
        auto null = sys.nullspace();
        dimZ += static_cast<long>(null.size());
        for (const auto& vec : null) {
            std::vector<SparseR> mat(static_cast<std::size_t>(dim) *
                                     static_cast<std::size_t>(dim));
            for (int u = 0; u < nu; ++u) {
                if (!vec[static_cast<std::size_t>(u)]) continue;
                const Unknown& un = unknowns[static_cast<std::size_t>(u)];
                addInto(mat[static_cast<std::size_t>(un.q - 1) * dim +
                            static_cast<std::size_t>(un.r - 1)],
                        un.sigma, vec[static_cast<std::size_t>(u)], p);
            }
            kernelMatrices.push_back(std::move(mat));
        }
    }

    rep.add("centralizer-dimension", dimZ == static_cast<long>(theta1) * dimR,
            "dim Z = " + std::to_string(dimZ) + ", theta(1)*dim R = " +
                std::to_string(static_cast<long>(theta1) * dimR));
    if (out) {
        out->thetaOne = theta1;
        out->ringDimension = dimR;
        out->centralizerDimension = dimZ;
    }

    // The matrix M driving the column recursion: the image of N_n (i = 0)
    // or of Ntilde_n (i >= 1) in Mat_{theta1}(R).
    PolyMatrix Mpat = (i == 0) ? buildNn(n, n + 2) : buildNnTilde(n, n + 2);
    std::vector<std::vector<std::vector<EntryTerm>>> M(
        static_cast<std::size_t>(theta1),
        std::vector<std::vector<EntryTerm>>(static_cast<std::size_t>(theta1)));
    for (int a = 0; a < theta1; ++a)
        for (int b = 0; b < theta1; ++b) M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            entryTerms(Mpat.at(a, b), p);

    auto matVec = [&](const std::vector<SparseR>& x) {
        std::vector<SparseR> y(static_cast<std::size_t>(theta1));
        for (int a = 0; a < theta1; ++a)
            for (int b = 0; b < theta1; ++b)
                for (const auto& t : M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                    SparseR prod = termMul(ctx, t, x[static_cast<std::size_t>(b)]);
                    for (const auto& [idx, c] : prod)
                        addInto(y[static_cast<std::size_t>(a)], idx, c, p);
                }
        return y;
    };

    // Build the pattern matrix from a first column c: the b-th column of
    // M(c) is M^{b-1} c; blocks 1..i (all blocks when i = 0) carry M(c),
    // blocks i+1..e carry M'(c) = M(c) with the first row and column cut.
    auto buildPattern = [&](const std::vector<SparseR>& c) {
        std::vector<std::vector<SparseR>> colVecs;  // colVecs[b] = M^b c
        colVecs.push_back(c);
        for (int b = 1; b < theta1; ++b) colVecs.push_back(matVec(colVecs.back()));
        std::vector<SparseR> full(static_cast<std::size_t>(dim) *
                                  static_cast<std::size_t>(dim));
        for (int v = 1; v <= e; ++v) {
            int base = off[static_cast<std::size_t>(v - 1)];
            int th = thetaOf(v, n, i);
            bool primed = (i >= 1 && v > i);
            for (int bcol = 0; bcol < th; ++bcol)
                for (int arow = 0; arow < th; ++arow)
                    full[static_cast<std::size_t>(base + arow) * dim +
                         static_cast<std::size_t>(base + bcol)] =
                        colVecs[static_cast<std::size_t>(primed ? bcol + 1 : bcol)]
                               [static_cast<std::size_t>(primed ? arow + 1 : arow)];
        }
        return full;
    };

    // Containment: the pattern built from each unit vector centralizes.
    bool contained = true;
    for (int j = 0; j < theta1 && contained; ++j) {
        std::vector<SparseR> c(static_cast<std::size_t>(theta1));
        int oneIdx = ctx.indexOf(Monomial::one(n));
        if (oneIdx < 0) throw InternalError("1 is not a standard monomial");
        c[static_cast<std::size_t>(j)].emplace(oneIdx, 1);
        auto pat = buildPattern(c);
        // [pat, B_v] = 0 for every arrow
        for (int v = 1; v <= e && contained; ++v) {
            std::vector<SparseR> comm(static_cast<std::size_t>(dim) *
                                      static_cast<std::size_t>(dim));
            for (const auto& entry : arrows[static_cast<std::size_t>(v - 1)]) {
                for (const auto& t : entry.terms) {
                    // pat * B contribution: pat_{q, entry.q} * t at (q, entry.r)
                    for (int q = 1; q <= dim; ++q) {
                        const SparseR& pv = pat[static_cast<std::size_t>(q - 1) * dim +
                                                static_cast<std::size_t>(entry.q - 1)];
                        if (pv.empty()) continue;
                        SparseR prod = termMul(ctx, t, pv);
                        for (const auto& [idx, cc] : prod)
                            addInto(comm[static_cast<std::size_t>(q - 1) * dim +
                                         static_cast<std::size_t>(entry.r - 1)],
                                    idx, cc, p);
                    }
                    // -B * pat contribution: t * pat_{entry.r, s} at (entry.q, s)
                    for (int s = 1; s <= dim; ++s) {
                        const SparseR& pv = pat[static_cast<std::size_t>(entry.r - 1) * dim +
                                                static_cast<std::size_t>(s - 1)];
                        if (pv.empty()) continue;
                        SparseR prod = termMul(ctx, t, pv);
                        for (const auto& [idx, cc] : prod)
                            addInto(comm[static_cast<std::size_t>(entry.q - 1) * dim +
                                         static_cast<std::size_t>(s - 1)],
                                    idx, p - cc, p);
                    }
                }
            }
            for (const auto& cell : comm)
                if (!cell.empty()) contained = false;
        }
    }
    rep.add("pattern-centralizes", contained);

    // Every kernel element matches the pattern built from its first column.
    bool patternExact = true;
    bool firstRowShape = true;
    for (const auto& X : kernelMatrices) {
        std::vector<SparseR> c(static_cast<std::size_t>(theta1));
        for (int a = 0; a < theta1; ++a)
            c[static_cast<std::size_t>(a)] = X[static_cast<std::size_t>(a) * dim + 0];
        auto pat = buildPattern(c);
        if (pat != X) {
            patternExact = false;
            break;
        }
        if (i >= 1) {
            // first row of the block-1 component: (c_1, 0, ..., 0)
            for (int b = 1; b < theta1; ++b)
                if (!X[0 * static_cast<std::size_t>(dim) + static_cast<std::size_t>(b)].empty())
                    firstRowShape = false;
        }
    }
    rep.add("centralizer-matches-block-pattern", patternExact);
    if (i >= 1) rep.add("block1-first-row-shape", firstRowShape);
    return rep;
}

long long countHoms(const DeformationPresentation& pres, const ArtinTestRing& R,
                    long long cap) {
    return countHoms(pres.generators, pres.n, R, cap);
}

} // namespace udr
