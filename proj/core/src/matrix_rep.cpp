#include "udr/matrix_rep.hpp"

namespace udr {

FpMat idRank(int x, int y, int r, std::uint32_t p) {
    if (r < 0 || r > std::min(x, y)) throw DomainError("idRank rank out of range");
    FpMat m(x, y, p);
    for (int a = 1; a <= r; ++a) m.set(x - r + a - 1, a - 1, 1);
    return m;
}

std::vector<int> blockOffsets(int e, int n, int i) {
    std::vector<int> off(static_cast<std::size_t>(e) + 1, 0);
    for (int v = 1; v <= e; ++v)
        off[static_cast<std::size_t>(v)] = off[static_cast<std::size_t>(v - 1)] + thetaOf(v, n, i);
    return off;
}

int positionToCoord(int q, int e, int n, int i) {
    // position q (1-based depth) holds the w-th occurrence of S_v
    int v = (q - 1) % e + 1;
    int w = (q - 1) / e + 1;
    auto off = blockOffsets(e, n, i);
    if (w > thetaOf(v, n, i)) throw DomainError("position beyond the module");
    return off[static_cast<std::size_t>(v - 1)] + w;
}

FpRep buildRho(const NakayamaSpec& spec, int n, int i, std::uint32_t p) {
    const int e = spec.e;
    const int dim = n * e + i;
    if (dim < 1) throw DomainError("buildRho: zero module");
    if (dim > spec.ell) throw DomainError("buildRho: length exceeds the Loewy length");
    if (i < 0 || i >= e) throw DomainError("buildRho: i out of range");
    FpRep rep;
    rep.spec = spec;
    rep.dim = dim;
    rep.p = p;
    rep.vertex.assign(static_cast<std::size_t>(e), FpMat(dim, dim, p));
    rep.arrow.assign(static_cast<std::size_t>(e), FpMat(dim, dim, p));

    if (n == 0) {
        // dim = i < e: diagonal idempotents and a plain subdiagonal.
        for (int v = 1; v <= i; ++v)
            rep.vertex[static_cast<std::size_t>(v - 1)].set(v - 1, v - 1, 1);
        for (int v = 1; v <= i - 1; ++v)
            rep.arrow[static_cast<std::size_t>(v - 1)].set(v, v - 1, 1);
        return rep;
    }

    auto off = blockOffsets(e, n, i);
    auto setBlock = [&](FpMat& dst, int blockRow, int blockCol, const FpMat& src) {
        int r0 = off[static_cast<std::size_t>(blockRow - 1)];
        int c0 = off[static_cast<std::size_t>(blockCol - 1)];
        for (int a = 0; a < src.rows(); ++a)
            for (int b = 0; b < src.cols(); ++b)
                if (src.at(a, b)) dst.set(r0 + a, c0 + b, src.at(a, b));
    };

    for (int v = 1; v <= e; ++v) {
        int th = thetaOf(v, n, i);
        setBlock(rep.vertex[static_cast<std::size_t>(v - 1)], v, v, FpMat::identity(th, p));
    }
    for (int v = 1; v <= e - 1; ++v) {
        int rows = thetaOf(v + 1, n, i), cols = thetaOf(v, n, i);
        setBlock(rep.arrow[static_cast<std::size_t>(v - 1)], v + 1, v,
                 idRank(rows, cols, std::min(rows, cols), p));
    }
    {
        int rows = thetaOf(1, n, i), cols = thetaOf(e, n, i);
        setBlock(rep.arrow[static_cast<std::size_t>(e - 1)], 1, e,
                 idRank(rows, cols, thetaOf(1, n, i) - 1, p));
    }
    return rep;
}

FpRep buildRhoTop(const UniserialModule& V, std::uint32_t p) {
    const NakayamaSpec& spec = V.spec;
    const int len = V.len;
    FpRep base = buildRho(spec, len / spec.e, len % spec.e, p);
    if (V.top == 1) return base;
    FpRep rep;
    rep.spec = spec;
    rep.dim = base.dim;
    rep.p = p;
    rep.vertex.resize(static_cast<std::size_t>(spec.e), FpMat(base.dim, base.dim, p));
    rep.arrow.resize(static_cast<std::size_t>(spec.e), FpMat(base.dim, base.dim, p));
    for (int v = 1; v <= spec.e; ++v) {
        int src = spec.vertex(v - (V.top - 1));
        rep.vertex[static_cast<std::size_t>(v - 1)] = base.vertexMat(src);
        rep.arrow[static_cast<std::size_t>(v - 1)] = base.arrowMat(src);
    }
    return rep;
}

FpMat arrowPathProduct(const FpRep& rep, int v, int length) {
    FpMat prod = FpMat::identity(rep.dim, rep.p);
    int idx = v;
    for (int k = 0; k < length; ++k) {
        prod = prod * rep.arrowMat(rep.spec.vertex(idx - k));
    }
    // The loop above multiplies rho(a_v) * rho(a_{v-1}) * ... on the right.
    return prod;
}

Report verifyRep(const FpRep& rep) {
    Report out;
    const int e = rep.spec.e;
    const std::uint32_t p = rep.p;
    FpMat sum(rep.dim, rep.dim, p);
    bool idem = true, orth = true;
    for (int v = 1; v <= e; ++v) {
        const FpMat& ev = rep.vertexMat(v);
        if (ev * ev != ev) idem = false;
        for (int w = 1; w <= e; ++w) {
            if (w == v) continue;
            if (!(ev * rep.vertexMat(w)).isZero()) orth = false;
        }
        sum = sum + ev;
    }
    out.add("vertex-idempotents", idem);
    out.add("vertex-orthogonality", orth);
    out.add("vertex-sum-identity", sum == FpMat::identity(rep.dim, p));

    bool compat = true;
    std::string compatDetail;
    for (int v = 1; v <= e; ++v) {
        const FpMat& av = rep.arrowMat(v);
        FpMat lhs = rep.vertexMat(rep.spec.vertex(v + 1)) * av * rep.vertexMat(v);
        if (lhs != av) {
            compat = false;
            compatDetail = "arrow alpha_" + std::to_string(v);
            break;
        }
    }
    out.add("arrow-compatibility", compat, compatDetail);

    bool nilp = true;
    std::string nilpDetail;
    for (int v = 1; v <= e; ++v) {
        if (!arrowPathProduct(rep, v, rep.spec.ell).isZero()) {
            nilp = false;
            nilpDetail = "path of length " + std::to_string(rep.spec.ell) +
                         " ending with alpha_" + std::to_string(v);
            break;
        }
    }
    out.add("paths-of-length-ell-vanish", nilp, nilpDetail);
    return out;
}

} // namespace udr
