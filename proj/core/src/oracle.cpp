#include "udr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace udr {

namespace {

/// Block membership of each coordinate, read off the vertex idempotents.
std::vector<int> blockOfCoord(const FpRep& base) {
    std::vector<int> block(static_cast<std::size_t>(base.dim), 0);
    for (int q = 0; q < base.dim; ++q)
        for (int v = 1; v <= base.spec.e; ++v)
            if (base.vertexMat(v).at(q, q)) block[static_cast<std::size_t>(q)] = v;
    return block;
}

struct FreePosition {
    int arrow;  // 1..e
    int row, col;
};

std::vector<FreePosition> freePositions(const FpRep& base) {
    std::vector<FreePosition> out;
    auto block = blockOfCoord(base);
    for (int v = 1; v <= base.spec.e; ++v) {
        int target = base.spec.vertex(v + 1);
        for (int r = 0; r < base.dim; ++r)
            for (int c = 0; c < base.dim; ++c)
                if (block[static_cast<std::size_t>(r)] == target &&
                    block[static_cast<std::size_t>(c)] == v)
                    out.push_back({v, r, c});
    }
    return out;
}

bool relationsHold(const std::vector<RMatrix>& arrows, const FpRep& base,
                   const ArtinTestRing& R) {
    const int e = base.spec.e;
    const int ell = base.spec.ell;
    for (int v = 1; v <= e; ++v) {
        RMatrix prod = RMatrix::identity(base.dim, &R);
        for (int k = 0; k < ell; ++k)
            prod = prod * arrows[static_cast<std::size_t>(base.spec.vertex(v - k) - 1)];
        if (!prod.isZero()) return false;
    }
    return true;
}

std::string liftKey(const std::vector<RMatrix>& arrows) {
    std::string key;
    for (const auto& m : arrows) m.appendKey(key);
    return key;
}

} // namespace

LiftEnumeration enumerateLifts(const FpRep& base, const ArtinTestRing& R,
                               const OracleCaps& caps) {
    if (base.p != R.p) throw MismatchError("base representation and ring characteristic differ");
    LiftEnumeration out;
    auto positions = freePositions(base);
    const int k = R.radicalDim();
    const long long paramCount = static_cast<long long>(positions.size()) * k;
    long long space = 1;
    for (long long j = 0; j < paramCount; ++j) {
        space *= R.p;
        if (space > caps.maxCandidates)
            throw ResourceCapError("lift enumeration space p^" + std::to_string(paramCount) +
                                       " exceeds the candidate cap",
                                   paramCount, caps.maxCandidates);
    }
    out.searchSpace = space;
    out.freeParameters = static_cast<int>(paramCount);

    std::vector<RMatrix> baseArrows;
    for (int v = 1; v <= base.spec.e; ++v)
        baseArrows.push_back(RMatrix::fromFp(base.arrowMat(v), &R));

    std::vector<std::uint32_t> digits(static_cast<std::size_t>(paramCount), 0);
    for (;;) {
        std::vector<RMatrix> arrows = baseArrows;
        for (std::size_t idx = 0; idx < positions.size(); ++idx) {
            const auto& pos = positions[idx];
            RVec v = arrows[static_cast<std::size_t>(pos.arrow - 1)].at(pos.row, pos.col);
            bool touched = false;
            for (int c = 0; c < k; ++c) {
                std::uint32_t d = digits[idx * static_cast<std::size_t>(k) +
                                         static_cast<std::size_t>(c)];
                if (d) {
                    v[static_cast<std::size_t>(c + 1)] =
                        (v[static_cast<std::size_t>(c + 1)] + d) % R.p;
                    touched = true;
                }
            }
            if (touched) arrows[static_cast<std::size_t>(pos.arrow - 1)].set(pos.row, pos.col, v);
        }
        if (relationsHold(arrows, base, R)) {
            LiftCandidate cand;
            cand.key = liftKey(arrows);
            cand.arrows = std::move(arrows);
            out.lifts.push_back(std::move(cand));
        }
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < R.p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (digits.empty() || pos == digits.size()) break;
    }
    std::sort(out.lifts.begin(), out.lifts.end(),
              [](const LiftCandidate& a, const LiftCandidate& b) { return a.key < b.key; });
    return out;
}

std::vector<StrictEquivClass> strictEquivClasses(const LiftEnumeration& lifts,
                                                 const FpRep& base,
                                                 const ArtinTestRing& R,
                                                 const OracleCaps& caps) {
    // Group: identity + radical-valued block-diagonal perturbations.
    auto block = blockOfCoord(base);
    std::vector<std::pair<int, int>> groupPositions;
    for (int r = 0; r < base.dim; ++r)
        for (int c = 0; c < base.dim; ++c)
            if (block[static_cast<std::size_t>(r)] == block[static_cast<std::size_t>(c)])
                groupPositions.emplace_back(r, c);
    const int k = R.radicalDim();
    const long long gParams = static_cast<long long>(groupPositions.size()) * k;
    long long gSize = 1;
    for (long long j = 0; j < gParams; ++j) {
        gSize *= R.p;
        if (gSize > caps.maxGroup)
            throw ResourceCapError("congruence subgroup of size p^" + std::to_string(gParams) +
                                       " exceeds the group cap",
                                   gParams, caps.maxGroup);
    }

    // Materialize the group with inverses once.
    std::vector<std::pair<RMatrix, RMatrix>> group;
    group.reserve(static_cast<std::size_t>(gSize));
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(gParams), 0);
    for (;;) {
        RMatrix C = RMatrix::identity(base.dim, &R);
        for (std::size_t idx = 0; idx < groupPositions.size(); ++idx) {
            RVec v = C.at(groupPositions[idx].first, groupPositions[idx].second);
            bool touched = false;
            for (int c = 0; c < k; ++c) {
                std::uint32_t d = digits[idx * static_cast<std::size_t>(k) +
                                         static_cast<std::size_t>(c)];
                if (d) {
                    v[static_cast<std::size_t>(c + 1)] =
                        (v[static_cast<std::size_t>(c + 1)] + d) % R.p;
                    touched = true;
                }
            }
            if (touched) C.set(groupPositions[idx].first, groupPositions[idx].second, v);
        }
        RMatrix Cinv = C.inverseUnipotent();
        group.emplace_back(std::move(C), std::move(Cinv));
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < R.p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (digits.empty() || pos == digits.size()) break;
    }

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(lifts.lifts.size() * 2);
    for (std::size_t idx = 0; idx < lifts.lifts.size(); ++idx)
        index.emplace(lifts.lifts[idx].key, idx);

    std::vector<bool> classified(lifts.lifts.size(), false);
    std::vector<StrictEquivClass> classes;
    for (std::size_t start = 0; start < lifts.lifts.size(); ++start) {
        if (classified[start]) continue;
        const auto& seed = lifts.lifts[start];
        std::unordered_set<std::string> orbit;
        std::string minKey = seed.key;
        for (const auto& [C, Cinv] : group) {
            std::vector<RMatrix> conj;
            conj.reserve(seed.arrows.size());
            for (const auto& A : seed.arrows) conj.push_back(C * A * Cinv);
            std::string key = liftKey(conj);
            auto it = index.find(key);
            if (it == index.end())
                throw InternalError("conjugation left the enumerated lift set");
            classified[it->second] = true;
            orbit.insert(key);
            if (key < minKey) minKey = key;
        }
        StrictEquivClass cls;
        cls.representative = lifts.lifts[index.at(minKey)];
        cls.orbitSize = static_cast<long long>(orbit.size());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const StrictEquivClass& a, const StrictEquivClass& b) {
                  return a.representative.key < b.representative.key;
              });
    return classes;
}

Report checkRepresentability(const UniserialModule& V,
                             const DeformationPresentation& pres,
                             const ArtinTestRing& R, const OracleCaps& caps) {
    Report rep;
    FpRep base = buildRhoTop(V, R.p);
    LiftEnumeration lifts = enumerateLifts(base, R, caps);
    auto classes = strictEquivClasses(lifts, base, R, caps);
    long long homs = countHoms(pres, R, caps.maxCandidates);
    rep.add("deformations-match-homs",
            static_cast<long long>(classes.size()) == homs,
            "N(" + std::to_string(V.spec.e) + "," + std::to_string(V.spec.ell) +
                ") top=" + std::to_string(V.top) + " len=" + std::to_string(V.len) +
                " over " + R.name + ": |Def| = " + std::to_string(classes.size()) +
                ", |Hom| = " + std::to_string(homs));
    return rep;
}

TangentResult tangentDimension(const UniserialModule& V, std::uint32_t p,
                               const OracleCaps& caps) {
    ArtinTestRing R = makeTestRing("dual", p);
    FpRep base = buildRhoTop(V, p);
    LiftEnumeration lifts = enumerateLifts(base, R, caps);
    auto classes = strictEquivClasses(lifts, base, R, caps);
    TangentResult out;
    out.classCount = static_cast<long long>(classes.size());
    long long c = out.classCount;
    int d = 0;
    while (c > 1 && c % p == 0) {
        c /= p;
        ++d;
    }
    if (c != 1)
        throw InternalError("tangent space size " + std::to_string(out.classCount) +
                            " is not a power of " + std::to_string(p));
    out.dimension = d;
    return out;
}

Report tangentDimensionReport(const UniserialModule& V, std::uint32_t p,
                              const OracleCaps& caps) {
    Report rep;
    TangentResult t = tangentDimension(V, p, caps);
    int expected = ext1Dim(V);
    rep.add("tangent-dimension",
            t.dimension == expected,
            "N(" + std::to_string(V.spec.e) + "," + std::to_string(V.spec.ell) +
                ") top=" + std::to_string(V.top) + " len=" + std::to_string(V.len) +
                " p=" + std::to_string(p) + ": |Def(k[eps])| = " +
                std::to_string(t.classCount) + " = p^" + std::to_string(t.dimension) +
                ", Ext^1 dim = " + std::to_string(expected));
    return rep;
}

namespace {

/// F_p-basis of the radical-valued commutant {X : X tau(g) = tau(g) X},
/// as coordinate vectors over (row, col, radical basis index).
std::vector<std::vector<std::uint32_t>> radicalCommutant(
    const std::vector<RMatrix>& arrows, const FpRep& base, const ArtinTestRing& R) {
    const int d = base.dim;
    const int k = R.radicalDim();
    const std::uint32_t p = R.p;
    const int unknowns = d * d * k;
    std::vector<std::vector<std::uint32_t>> rows;

    // Pre-extract generator matrices over R: vertex idempotents (scalar)
    // and the arrow images.
    std::vector<RMatrix> gens;
    for (int v = 1; v <= base.spec.e; ++v)
        gens.push_back(RMatrix::fromFp(base.vertexMat(v), &R));
    for (const auto& a : arrows) gens.push_back(a);

    for (const auto& T : gens) {
        // (X T - T X)_{q,s} = 0: dim(R) scalar equations per (q,s).
        for (int q = 0; q < d; ++q)
            for (int s = 0; s < d; ++s)
                for (int coord = 0; coord < R.dim; ++coord) {
                    std::vector<std::uint32_t> row(static_cast<std::size_t>(unknowns), 0);
                    bool nonzero = false;
                    for (int r = 0; r < d; ++r) {
                        RVec t1 = T.at(r, s);  // X_{q,r} T_{r,s}
                        RVec t2 = T.at(q, r);  // T_{q,r} X_{r,s}
                        for (int c = 0; c < k; ++c) {
                            // basis element b_{c+1} times t1 / t2
                            std::uint64_t plus = 0, minus = 0;
                            for (int dcoord = 0; dcoord < R.dim; ++dcoord) {
                                if (t1[static_cast<std::size_t>(dcoord)])
                                    plus += static_cast<std::uint64_t>(
                                                t1[static_cast<std::size_t>(dcoord)]) *
                                            R.mult[static_cast<std::size_t>(c + 1)]
                                                  [static_cast<std::size_t>(dcoord)]
                                                  [static_cast<std::size_t>(coord)];
                                if (t2[static_cast<std::size_t>(dcoord)])
                                    minus += static_cast<std::uint64_t>(
                                                 t2[static_cast<std::size_t>(dcoord)]) *
                                             R.mult[static_cast<std::size_t>(c + 1)]
                                                   [static_cast<std::size_t>(dcoord)]
                                                   [static_cast<std::size_t>(coord)];
                            }
                            if (plus % p) {
                                auto& cell =
                                    row[(static_cast<std::size_t>(q) * d +
                                         static_cast<std::size_t>(r)) *
                                            static_cast<std::size_t>(k) +
                                        static_cast<std::size_t>(c)];
                                cell = static_cast<std::uint32_t>((cell + plus) % p);
                                nonzero = true;
                            }
                            if (minus % p) {
                                auto& cell =
                                    row[(static_cast<std::size_t>(r) * d +
                                         static_cast<std::size_t>(s)) *
                                            static_cast<std::size_t>(k) +
                                        static_cast<std::size_t>(c)];
                                cell = static_cast<std::uint32_t>((cell + p - minus % p) % p);
                                nonzero = true;
                            }
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
    }
    FpMat sys(static_cast<int>(rows.size()), unknowns, p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c)
            sys.set(static_cast<int>(r), c, rows[r][static_cast<std::size_t>(c)]);
    return sys.nullspace();
}

} // namespace

Report checkCentralizerLifting(const UniserialModule& V, const SmallExtension& ext,
                               const OracleCaps& caps) {
    Report rep;
    Report extCheck = ext.verify();
    rep.add("small-extension-valid", extCheck.allPass(), extCheck.firstFailure());
    if (!extCheck.allPass()) return rep;

    const std::uint32_t p = ext.A1.p;
    FpRep base = buildRhoTop(V, p);
    LiftEnumeration lifts = enumerateLifts(base, ext.A1, caps);
    auto classes = strictEquivClasses(lifts, base, ext.A1, caps);

    const int d = base.dim;
    const int k1 = ext.A1.radicalDim();
    bool allSurjective = true;
    std::string detail;
    for (const auto& cls : classes) {
        // tau_0 = alpha . tau_1 entrywise
        std::vector<RMatrix> tau0;
        for (const auto& A : cls.representative.arrows) {
            RMatrix B(d, d, &ext.A0);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) B.set(r, c, ext.apply(A.at(r, c)));
            tau0.push_back(std::move(B));
        }
        auto z1 = radicalCommutant(cls.representative.arrows, base, ext.A1);
        auto z0 = radicalCommutant(tau0, base, ext.A0);

        // Image of Z0(tau_1) under alpha, as coordinate vectors downstairs.
        const int k0 = ext.A0.radicalDim();
        std::vector<std::vector<std::uint32_t>> image;
        for (const auto& x : z1) {
            std::vector<std::uint32_t> y(static_cast<std::size_t>(d) * d * k0, 0);
            for (int q = 0; q < d; ++q)
                for (int r = 0; r < d; ++r) {
                    RVec val(static_cast<std::size_t>(ext.A1.dim), 0);
                    for (int c = 0; c < k1; ++c)
                        val[static_cast<std::size_t>(c + 1)] =
                            x[(static_cast<std::size_t>(q) * d + static_cast<std::size_t>(r)) *
                                  static_cast<std::size_t>(k1) +
                              static_cast<std::size_t>(c)];
                    RVec img = ext.apply(val);
                    if (img[0] != 0)
                        throw InternalError("radical element mapped outside the radical");
                    for (int c = 0; c < k0; ++c)
                        y[(static_cast<std::size_t>(q) * d + static_cast<std::size_t>(r)) *
                              static_cast<std::size_t>(k0) +
                          static_cast<std::size_t>(c)] = img[static_cast<std::size_t>(c + 1)];
                }
            image.push_back(std::move(y));
        }
        int imageRank = image.empty() ? 0 : fpSpanRank(image, p);
        if (imageRank != static_cast<int>(z0.size())) {
            allSurjective = false;
            if (detail.empty())
                detail = "class " + cls.representative.key.substr(0, 16) +
                         "...: image rank " + std::to_string(imageRank) + " vs dim Z(tau_0) " +
                         std::to_string(z0.size());
        }
    }
    rep.add("centralizer-lifting-surjective", allSurjective,
            detail.empty() ? ("N(" + std::to_string(V.spec.e) + "," +
                              std::to_string(V.spec.ell) + ") len=" + std::to_string(V.len) +
                              " along " + ext.A1.name + " -> " + ext.A0.name + ", " +
                              std::to_string(classes.size()) + " classes")
                           : detail);
    return rep;
}

} // namespace udr
