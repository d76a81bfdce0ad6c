#include "udr/ext_sequences.hpp"

namespace udr {

FpMat betaVV(const NakayamaSpec& spec, int i, int c, int d, std::uint32_t p) {
    const int e = spec.e;
    const int dimC = c * e + i;
    const int dimD = d * e + i;
    FpMat B(dimD, dimC, p);
    if (dimC == 0 || dimD == 0) return B;
    int thC = thetaOf(1, c, i);
    int thD = thetaOf(1, d, i);
    int j = std::min(thC, thD);
    if (j == 0) return B;
    // image of the top element: the (theta - j + 1)-th occurrence of S_1
    int q0 = (thD - j) * e + 1;
    for (int dpos = 1; dpos <= dimC; ++dpos) {
        int q = q0 + dpos - 1;
        if (q > dimD) break;
        B.set(positionToCoord(q, e, d, i) - 1, positionToCoord(dpos, e, c, i) - 1, 1);
    }
    return B;
}

namespace {

FpRep blockDiagRep(const NakayamaSpec& spec, int nTop, int nBot, int i, std::uint32_t p) {
    // V_{nTop,i} + V_{nBot,i} acting block-diagonally; nBot may give the
    // zero module (dim 0).
    const int e = spec.e;
    int dTop = nTop * e + i;
    int dBot = nBot * e + i;
    FpRep top = buildRho(spec, nTop, i, p);
    FpRep rep;
    rep.spec = spec;
    rep.p = p;
    rep.dim = dTop + dBot;
    FpRep bot;
    if (dBot > 0) bot = buildRho(spec, nBot, i, p);
    auto embed = [&](const FpMat& a, const FpMat* b) {
        FpMat m(rep.dim, rep.dim, p);
        for (int r = 0; r < dTop; ++r)
            for (int c = 0; c < dTop; ++c)
                if (a.at(r, c)) m.set(r, c, a.at(r, c));
        if (b)
            for (int r = 0; r < dBot; ++r)
                for (int c = 0; c < dBot; ++c)
                    if (b->at(r, c)) m.set(dTop + r, dTop + c, b->at(r, c));
        return m;
    };
    for (int v = 1; v <= e; ++v) {
        rep.vertex.push_back(embed(top.vertexMat(v), dBot ? &bot.vertexMat(v) : nullptr));
        rep.arrow.push_back(embed(top.arrowMat(v), dBot ? &bot.arrowMat(v) : nullptr));
    }
    return rep;
}

} // namespace

ExtSequence buildExtSequence(const NakayamaSpec& spec, int n, int i, int s,
                             std::uint32_t p) {
    if (s < 1 || s > n) throw DomainError("extension index s out of range");
    const int e = spec.e;
    const int dim = n * e + i;
    if ((n + s) * e + i > spec.ell)
        throw DomainError("V_{n+s,i} does not exist over this algebra");
    ExtSequence seq;
    seq.s = s;
    seq.dimMid = 2 * dim;
    FpMat up = betaVV(spec, i, n, n + s, p);    // inclusion
    FpMat down = betaVV(spec, i, n, n - s, p);  // projection
    FpMat negDown(down.rows(), down.cols(), p);
    for (int r = 0; r < down.rows(); ++r)
        for (int c = 0; c < down.cols(); ++c)
            if (down.at(r, c)) negDown.set(r, c, p - down.at(r, c));
    seq.iota = FpMat::vstack(up, negDown);
    seq.pi = FpMat::hstack(betaVV(spec, i, n + s, n, p), betaVV(spec, i, n - s, n, p));
    seq.eps = seq.iota * seq.pi;
    seq.midRep = blockDiagRep(spec, n + s, n - s, i, p);
    return seq;
}

Report verifyExtSequence(const ExtSequence& seq, const NakayamaSpec& spec, int n, int i) {
    Report rep;
    const int dim = n * spec.e + i;
    rep.add("iota-injective", seq.iota.rank() == dim);
    rep.add("pi-surjective", seq.pi.rank() == dim);
    rep.add("pi-iota-zero", (seq.pi * seq.iota).isZero());
    rep.add("middle-dimension", seq.iota.rows() == 2 * dim && seq.pi.cols() == 2 * dim);
    rep.add("eps-squares-to-zero", (seq.eps * seq.eps).isZero());
    rep.add("eps-rank", seq.eps.rank() == dim,
            "rank " + std::to_string(seq.eps.rank()) + ", free rank over k[eps] needs " +
                std::to_string(dim));
    // iota and pi are module maps: they intertwine the actions.
    bool intertwine = true;
    FpRep base = buildRho(spec, n, i, seq.midRep.p);
    for (int v = 1; v <= spec.e && intertwine; ++v) {
        intertwine = intertwine &&
                     (seq.iota * base.vertexMat(v) == seq.midRep.vertexMat(v) * seq.iota) &&
                     (seq.iota * base.arrowMat(v) == seq.midRep.arrowMat(v) * seq.iota) &&
                     (base.vertexMat(v) * seq.pi == seq.pi * seq.midRep.vertexMat(v)) &&
                     (base.arrowMat(v) * seq.pi == seq.pi * seq.midRep.arrowMat(v));
    }
    rep.add("maps-are-module-homomorphisms", intertwine);
    return rep;
}

DualNumberLift buildDualNumberLift(const NakayamaSpec& spec, int n, int i, int s,
                                   std::uint32_t p) {
    if (s < 1 || s > n) throw DomainError("dual-number lift index s out of range");
    DualNumberLift lift;
    lift.spec = spec;
    lift.n = n;
    lift.i = i;
    lift.s = s;
    lift.p = p;
    FpRep base = buildRho(spec, n, i, p);
    lift.dim = base.dim;
    lift.vertexBase = base.vertex;
    lift.arrowBase = base.arrow;
    lift.arrowEps.assign(static_cast<std::size_t>(spec.e), FpMat(base.dim, base.dim, p));

    // T_s lives in the block (i+1, b) of the arrow with index = i mod e,
    // where b = i for i >= 1 and b = e for i = 0; its only nonzero entry is
    // t_s at row n-s+1 of the last block column.
    const int e = spec.e;
    int vStar = (i == 0) ? e : i;
    int blockRow = i + 1;          // top of the syzygy direction, theta = n
    int blockCol = (i == 0) ? e : i;
    auto off = blockOffsets(e, n, i);
    int r = off[static_cast<std::size_t>(blockRow - 1)] + (n - s + 1) - 1;
    int c = off[static_cast<std::size_t>(blockCol - 1)] + thetaOf(blockCol, n, i) - 1;
    lift.arrowEps[static_cast<std::size_t>(vStar - 1)].set(r, c, 1);
    return lift;
}

namespace {

/// Realification of a dual-number matrix A + eps*B on the ordered basis
/// (u_1..u_m, eps u_1..eps u_m): [[A, 0], [B, A]].
FpMat realify(const FpMat& A, const FpMat& B) {
    int m = A.rows();
    FpMat out(2 * m, 2 * m, A.prime());
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            if (A.at(r, c)) {
                out.set(r, c, A.at(r, c));
                out.set(m + r, m + c, A.at(r, c));
            }
            if (B.at(r, c)) out.set(m + r, c, B.at(r, c));
        }
    return out;
}

/// Dual-number product (A + eps B)(A' + eps B') = AA' + eps(AB' + BA').
std::pair<FpMat, FpMat> dualMul(const std::pair<FpMat, FpMat>& x,
                                const std::pair<FpMat, FpMat>& y) {
    return {x.first * y.first, x.first * y.second + x.second * y.first};
}

} // namespace

Report verifyDualNumberLift(const DualNumberLift& lift) {
    Report rep;
    const NakayamaSpec& spec = lift.spec;
    const int e = spec.e;
    const std::uint32_t p = lift.p;
    const int m = lift.dim;

    // Reduction mod eps is rho_{n,i} and only the expected arrow deviates.
    FpRep base = buildRho(spec, lift.n, lift.i, p);
    bool reduces = true;
    int deviating = -1;
    for (int v = 1; v <= e; ++v) {
        reduces = reduces && lift.arrowBase[static_cast<std::size_t>(v - 1)] == base.arrowMat(v) &&
                  lift.vertexBase[static_cast<std::size_t>(v - 1)] == base.vertexMat(v);
        if (!lift.arrowEps[static_cast<std::size_t>(v - 1)].isZero()) {
            if (deviating != -1) reduces = false;
            deviating = v;
        }
    }
    rep.add("reduces-to-rho", reduces);
    int vStar = (lift.i == 0) ? e : lift.i;
    rep.add("perturbed-arrow", deviating == vStar,
            "arrow alpha_" + std::to_string(deviating));

    // Algebra relations over k[eps]: all ell-fold arrow products vanish.
    bool relations = true;
    for (int v = 1; v <= e && relations; ++v) {
        std::pair<FpMat, FpMat> prod{FpMat::identity(m, p), FpMat(m, m, p)};
        for (int k = 0; k < spec.ell; ++k) {
            int idx = spec.vertex(v - k);
            prod = dualMul(prod, {lift.arrowBase[static_cast<std::size_t>(idx - 1)],
                                  lift.arrowEps[static_cast<std::size_t>(idx - 1)]});
        }
        relations = prod.first.isZero() && prod.second.isZero();
    }
    rep.add("relations-over-dual-numbers", relations);

    // Change of basis from the middle module of E_s: columns u_j (the
    // basis B_{n+s,i} vectors with w <= theta(v,n,i)) then eps_s u_j.
    ExtSequence seq = buildExtSequence(spec, lift.n, lift.i, lift.s, p);
    const int eDim = seq.dimMid;
    if (eDim != 2 * m) {
        rep.add("middle-module-dimension", false);
        return rep;
    }
    FpMat Q(eDim, eDim, p);
    auto offMid = blockOffsets(e, lift.n + lift.s, lift.i);
    int col = 0;
    std::vector<int> uCoords;
    for (int v = 1; v <= e; ++v)
        for (int w = 1; w <= thetaOf(v, lift.n, lift.i); ++w)
            uCoords.push_back(offMid[static_cast<std::size_t>(v - 1)] + w - 1);
    for (int j = 0; j < m; ++j, ++col) Q.set(uCoords[static_cast<std::size_t>(j)], col, 1);
    for (int j = 0; j < m; ++j, ++col) {
        // eps_s * u_j
        for (int r = 0; r < eDim; ++r)
            if (seq.eps.at(r, uCoords[static_cast<std::size_t>(j)]))
                Q.set(r, col, seq.eps.at(r, uCoords[static_cast<std::size_t>(j)]));
    }
    rep.add("dual-basis-invertible", Q.rank() == eDim);

    bool match = true;
    for (int v = 1; v <= e && match; ++v) {
        FpMat lhsV = seq.midRep.vertexMat(v) * Q;
        FpMat rhsV = Q * realify(lift.vertexBase[static_cast<std::size_t>(v - 1)],
                                 FpMat(m, m, p));
        FpMat lhsA = seq.midRep.arrowMat(v) * Q;
        FpMat rhsA = Q * realify(lift.arrowBase[static_cast<std::size_t>(v - 1)],
                                 lift.arrowEps[static_cast<std::size_t>(v - 1)]);
        match = lhsV == rhsV && lhsA == rhsA;
    }
    rep.add("matches-extension-module-action", match);
    return rep;
}

bool strictEquivDual(const DualNumberLift& a, const DualNumberLift& b) {
    if (a.dim != b.dim || a.p != b.p || !(a.spec == b.spec))
        throw MismatchError("strictEquivDual shape mismatch");
    const int m = a.dim;
    const std::uint32_t p = a.p;
    for (int v = 1; v <= a.spec.e; ++v)
        if (a.arrowBase[static_cast<std::size_t>(v - 1)] !=
                b.arrowBase[static_cast<std::size_t>(v - 1)] ||
            a.vertexBase[static_cast<std::size_t>(v - 1)] !=
                b.vertexBase[static_cast<std::size_t>(v - 1)])
            return false;
    // (I + eps X) a = b (I + eps X): X rho(g) - rho(g) X = Beps_b(g) - Beps_a(g)
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> rhs;
    auto addEq = [&](const FpMat& base, const FpMat& da, const FpMat& db) {
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                std::vector<std::uint32_t> row(static_cast<std::size_t>(m) * m, 0);
                for (int k = 0; k < m; ++k) {
                    // X * base contribution: X_{r,k} base_{k,c}
                    std::uint32_t v1 = base.at(k, c);
                    if (v1) {
                        auto& cell = row[static_cast<std::size_t>(r) * m + static_cast<std::size_t>(k)];
                        cell = (cell + v1) % p;
                    }
                    // -base * X contribution: -base_{r,k} X_{k,c}
                    std::uint32_t v2 = base.at(r, k);
                    if (v2) {
                        auto& cell = row[static_cast<std::size_t>(k) * m + static_cast<std::size_t>(c)];
                        cell = (cell + p - v2) % p;
                    }
                }
                rows.push_back(std::move(row));
                rhs.push_back((db.at(r, c) + p - da.at(r, c)) % p);
            }
    };
    FpMat zero(m, m, p);
    for (int v = 1; v <= a.spec.e; ++v) {
        addEq(a.vertexBase[static_cast<std::size_t>(v - 1)], zero, zero);
        addEq(a.arrowBase[static_cast<std::size_t>(v - 1)],
              a.arrowEps[static_cast<std::size_t>(v - 1)],
              b.arrowEps[static_cast<std::size_t>(v - 1)]);
    }
    FpMat sys(static_cast<int>(rows.size()), m * m, p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < m * m; ++c)
            sys.set(static_cast<int>(r), c, rows[r][static_cast<std::size_t>(c)]);
    std::vector<std::uint32_t> x;
    return sys.solve(rhs, x);
}

Report verifyDualLiftsIndependent(const NakayamaSpec& spec, int n, int i, std::uint32_t p) {
    Report rep;
    std::vector<DualNumberLift> lifts;
    for (int s = 1; s <= n; ++s) lifts.push_back(buildDualNumberLift(spec, n, i, s, p));
    // trivial lift: eps part zero
    DualNumberLift trivial = lifts.front();
    for (auto& mEps : trivial.arrowEps) mEps = FpMat(trivial.dim, trivial.dim, p);
    bool independent = true;
    std::string detail;
    for (int s = 0; s < n && independent; ++s) {
        if (strictEquivDual(lifts[static_cast<std::size_t>(s)], trivial)) {
            independent = false;
            detail = "rho_{n,i," + std::to_string(s + 1) + "} is trivial";
        }
        for (int t = s + 1; t < n && independent; ++t)
            if (strictEquivDual(lifts[static_cast<std::size_t>(s)],
                                lifts[static_cast<std::size_t>(t)])) {
                independent = false;
                detail = "s=" + std::to_string(s + 1) + " equals s=" + std::to_string(t + 1);
            }
    }
    rep.add("dual-number-lifts-independent", independent, detail);
    return rep;
}

} // namespace udr
