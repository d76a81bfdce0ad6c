#include "udr/artin_ring.hpp"

#include <algorithm>

namespace udr {

long long ArtinTestRing::size() const {
    long long s = 1;
    for (int i = 0; i < dim; ++i) s *= p;
    return s;
}

long long ArtinTestRing::radicalSize() const {
    long long s = 1;
    for (int i = 1; i < dim; ++i) s *= p;
    return s;
}

RVec ArtinTestRing::unit() const {
    RVec v = zero();
    v[0] = 1;
    return v;
}

RVec ArtinTestRing::scalar(std::uint32_t c) const {
    RVec v = zero();
    v[0] = c % p;
    return v;
}

RVec ArtinTestRing::add(const RVec& a, const RVec& b) const {
    RVec v(a);
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] =
        (a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]) % p;
    return v;
}

RVec ArtinTestRing::sub(const RVec& a, const RVec& b) const {
    RVec v(a);
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] =
        (a[static_cast<std::size_t>(i)] + p - b[static_cast<std::size_t>(i)]) % p;
    return v;
}

RVec ArtinTestRing::neg(const RVec& a) const { return sub(zero(), a); }

RVec ArtinTestRing::mulElem(const RVec& a, const RVec& b) const {
    RVec v = zero();
    for (int i = 0; i < dim; ++i) {
        std::uint32_t ai = a[static_cast<std::size_t>(i)];
        if (!ai) continue;
        for (int j = 0; j < dim; ++j) {
            std::uint32_t bj = b[static_cast<std::size_t>(j)];
            if (!bj) continue;
            std::uint32_t f = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(ai) * bj) % p);
            const RVec& sc = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < dim; ++k)
                v[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(
                    (v[static_cast<std::size_t>(k)] +
                     static_cast<std::uint64_t>(f) * sc[static_cast<std::size_t>(k)]) %
                    p);
        }
    }
    return v;
}

RVec ArtinTestRing::scale(std::uint32_t c, const RVec& a) const {
    RVec v(a);
    c %= p;
    for (int i = 0; i < dim; ++i)
        v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]) * c) % p);
    return v;
}

RVec ArtinTestRing::power(const RVec& a, int k) const {
    RVec v = unit();
    for (int i = 0; i < k; ++i) v = mulElem(v, a);
    return v;
}

bool ArtinTestRing::isZero(const RVec& a) const {
    for (auto x : a)
        if (x) return false;
    return true;
}

std::string ArtinTestRing::elemText(const RVec& a) const {
    std::string s;
    for (int i = 0; i < dim; ++i) {
        std::uint32_t c = a[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!s.empty()) s += " + ";
        if (c != 1 || i == 0) s += std::to_string(c);
        if (i > 0) {
            if (c != 1) s += "*";
            s += basisNames[static_cast<std::size_t>(i)];
        }
    }
    return s.empty() ? "0" : s;
}

Report ArtinTestRing::verify() {
    Report rep;
    bool shapes = static_cast<int>(mult.size()) == dim;
    for (const auto& row : mult) {
        shapes = shapes && static_cast<int>(row.size()) == dim;
        for (const auto& v : row) shapes = shapes && static_cast<int>(v.size()) == dim;
    }
    rep.add("structure-constants-shape", shapes, name);
    if (!shapes) return rep;

    bool unital = true;
    for (int j = 0; j < dim; ++j) {
        RVec ej = zero();
        ej[static_cast<std::size_t>(j)] = 1;
        unital = unital && mult[0][static_cast<std::size_t>(j)] == ej &&
                 mult[static_cast<std::size_t>(j)][0] == ej;
    }
    rep.add("unital", unital, name);

    bool comm = true;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            comm = comm && mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                               mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    rep.add("commutative", comm, name);

    bool assoc = true;
    for (int i = 0; i < dim && assoc; ++i)
        for (int j = 0; j < dim && assoc; ++j)
            for (int k = 0; k < dim && assoc; ++k) {
                RVec ei = zero(), ej = zero(), ek = zero();
                ei[static_cast<std::size_t>(i)] = 1;
                ej[static_cast<std::size_t>(j)] = 1;
                ek[static_cast<std::size_t>(k)] = 1;
                assoc = mulElem(mulElem(ei, ej), ek) == mulElem(ei, mulElem(ej, ek));
            }
    rep.add("associative", assoc, name);

    // Radical = span(basis 1..dim-1); closure under multiplication means no
    // product of radical elements has a unit coordinate.
    bool radicalIdeal = true;
    for (int i = 1; i < dim; ++i)
        for (int j = 1; j < dim; ++j)
            radicalIdeal = radicalIdeal &&
                           mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][0] == 0;
    rep.add("radical-closed", radicalIdeal, name + ": F_p quotient well defined");

    // Nilpotency by powering the radical subspace.
    std::vector<std::vector<std::uint32_t>> cur;  // spanning set of m^s
    for (int i = 1; i < dim; ++i) {
        RVec ei = zero();
        ei[static_cast<std::size_t>(i)] = 1;
        cur.push_back(ei);
    }
    nilpotency = 1;
    bool nilp = false;
    for (int s = 1; s <= dim + 1; ++s) {
        bool allZero = true;
        for (const auto& v : cur)
            if (!isZero(v)) allZero = false;
        if (cur.empty() || allZero) {
            nilp = true;
            nilpotency = s;
            break;
        }
        // next power: products with the radical basis
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& v : cur)
            for (int i = 1; i < dim; ++i) {
                RVec ei = zero();
                ei[static_cast<std::size_t>(i)] = 1;
                next.push_back(mulElem(v, ei));
            }
        next = fpSpanBasis(std::move(next), p);
        cur = std::move(next);
    }
    rep.add("radical-nilpotent", nilp,
            name + ": m^" + std::to_string(nilpotency) + " = 0");
    return rep;
}

namespace {

ArtinTestRing ringFp(std::uint32_t p) {
    ArtinTestRing R;
    R.name = "Fp";
    R.p = p;
    R.dim = 1;
    R.basisNames = {"1"};
    R.mult = {{R.unit()}};
    return R;
}

ArtinTestRing ringDual(std::uint32_t p, const std::string& name, const std::string& var) {
    ArtinTestRing R;
    R.name = name;
    R.p = p;
    R.dim = 2;
    R.basisNames = {"1", var};
    RVec one{1, 0}, e{0, 1}, z{0, 0};
    R.mult = {{one, e}, {e, z}};
    return R;
}

ArtinTestRing ringU3(std::uint32_t p) {
    ArtinTestRing R;
    R.name = "u3";
    R.p = p;
    R.dim = 3;
    R.basisNames = {"1", "u", "u^2"};
    RVec one{1, 0, 0}, u{0, 1, 0}, u2{0, 0, 1}, z{0, 0, 0};
    R.mult = {{one, u, u2}, {u, u2, z}, {u2, z, z}};
    return R;
}

ArtinTestRing ringXY2(std::uint32_t p) {
    ArtinTestRing R;
    R.name = "xy2";
    R.p = p;
    R.dim = 3;
    R.basisNames = {"1", "x", "y"};
    RVec one{1, 0, 0}, x{0, 1, 0}, y{0, 0, 1}, z{0, 0, 0};
    R.mult = {{one, x, y}, {x, z, z}, {y, z, z}};
    return R;
}

} // namespace

ArtinTestRing makeTestRing(const std::string& name, std::uint32_t p) {
    ArtinTestRing R;
    if (name == "Fp" || name == "trivial")
        R = ringFp(p);
    else if (name == "dual" || name == "dual-numbers" || name == "eps")
        R = ringDual(p, "dual", "e");
    else if (name == "u2")
        R = ringDual(p, "u2", "u");
    else if (name == "u3")
        R = ringU3(p);
    // F_p[x,y]/(x,y)^2 and F_p[x,y]/(x^2,xy,y^2) present the same ring.
    else if (name == "xy2" || name == "x2xyy2")
        R = ringXY2(p);
    else
        throw DomainError("unknown test ring '" + name + "'");
    Report rep = R.verify();
    if (!rep.allPass())
        throw InternalError("test ring catalog entry failed verification: " + name);
    return R;
}

std::vector<std::string> testRingCatalog() {
    return {"Fp", "dual", "u3", "xy2"};
}

RVec SmallExtension::apply(const RVec& a) const {
    RVec out(static_cast<std::size_t>(A0.dim), 0);
    for (int j = 0; j < A1.dim; ++j) {
        std::uint32_t c = a[static_cast<std::size_t>(j)];
        if (!c) continue;
        const RVec& img = proj[static_cast<std::size_t>(j)];
        for (int k = 0; k < A0.dim; ++k)
            out[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(
                (out[static_cast<std::size_t>(k)] +
                 static_cast<std::uint64_t>(c) * img[static_cast<std::size_t>(k)]) %
                A0.p);
    }
    return out;
}

Report SmallExtension::verify() const {
    Report rep;
    rep.add("same-characteristic", A1.p == A0.p);
    // ring homomorphism, unit to unit
    bool hom = apply(A1.unit()) == A0.unit();
    for (int i = 0; i < A1.dim && hom; ++i)
        for (int j = 0; j < A1.dim && hom; ++j) {
            RVec ei(static_cast<std::size_t>(A1.dim), 0), ej(static_cast<std::size_t>(A1.dim), 0);
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            hom = apply(A1.mulElem(ei, ej)) == A0.mulElem(apply(ei), apply(ej));
        }
    rep.add("ring-homomorphism", hom, A1.name + " -> " + A0.name);

    std::vector<std::vector<std::uint32_t>> img;
    for (int j = 0; j < A1.dim; ++j) img.push_back(proj[static_cast<std::size_t>(j)]);
    int rank = fpSpanRank(img, A0.p);
    rep.add("surjective", rank == A0.dim);
    rep.add("kernel-dimension-one", A1.dim - rank == 1);
    rep.add("kernel-generator-in-kernel", A0.isZero(apply(kernelGen)) && !A1.isZero(kernelGen));
    // m_{A1} * t = 0
    bool killed = true;
    for (int i = 1; i < A1.dim; ++i) {
        RVec ei(static_cast<std::size_t>(A1.dim), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        killed = killed && A1.isZero(A1.mulElem(ei, kernelGen));
    }
    rep.add("radical-kills-kernel", killed);
    return rep;
}

SmallExtension makeSmallExtension(const std::string& a1, const std::string& a0,
                                  std::uint32_t p) {
    SmallExtension ext;
    ext.A1 = makeTestRing(a1, p);
    ext.A0 = makeTestRing(a0, p);
    auto set = [&](std::initializer_list<std::initializer_list<std::uint32_t>> rows,
                   std::initializer_list<std::uint32_t> ker) {
        ext.proj.clear();
        for (auto& r : rows) ext.proj.push_back(RVec(r));
        ext.kernelGen = RVec(ker);
    };
    if (a1 == "dual" && a0 == "Fp") {
        set({{1}, {0}}, {0, 1});
    } else if (a1 == "u3" && a0 == "u2") {
        set({{1, 0}, {0, 1}, {0, 0}}, {0, 0, 1});
    } else if (a1 == "xy2" && a0 == "u2") {
        // kill y, send x to u
        set({{1, 0}, {0, 1}, {0, 0}}, {0, 0, 1});
    } else if (a1 == "xy2" && a0 == "dual") {
        set({{1, 0}, {0, 1}, {0, 0}}, {0, 0, 1});
    } else {
        throw DomainError("no catalog small extension " + a1 + " -> " + a0);
    }
    Report rep = ext.verify();
    if (!rep.allPass())
        throw InternalError("catalog small extension failed verification: " + a1 + " -> " + a0 +
                            " (" + rep.firstFailure() + ")");
    return ext;
}

std::vector<SmallExtension> smallExtensionCatalog(std::uint32_t p) {
    std::vector<SmallExtension> out;
    out.push_back(makeSmallExtension("dual", "Fp", p));
    out.push_back(makeSmallExtension("u3", "u2", p));
    out.push_back(makeSmallExtension("xy2", "dual", p));
    return out;
}

RMatrix::RMatrix(int rows, int cols, const ArtinTestRing* R)
    : rows_(rows), cols_(cols), R_(R) {
    if (!R) throw DomainError("RMatrix needs a ring");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) *
                  static_cast<std::size_t>(R->dim),
              0);
}

RMatrix RMatrix::identity(int size, const ArtinTestRing* R) {
    RMatrix m(size, size, R);
    for (int i = 0; i < size; ++i) m.set(i, i, R->unit());
    return m;
}

RMatrix RMatrix::fromFp(const FpMat& src, const ArtinTestRing* R) {
    if (src.prime() != R->p) throw MismatchError("characteristic mismatch");
    RMatrix m(src.rows(), src.cols(), R);
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            if (src.at(i, j)) m.set(i, j, R->scalar(src.at(i, j)));
    return m;
}

RVec RMatrix::at(int r, int c) const {
    RVec v(static_cast<std::size_t>(R_->dim));
    std::copy_n(a_.begin() + static_cast<long>(base(r, c)), R_->dim, v.begin());
    return v;
}

void RMatrix::set(int r, int c, const RVec& v) {
    std::copy_n(v.begin(), R_->dim, a_.begin() + static_cast<long>(base(r, c)));
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || R_ != o.R_)
        throw MismatchError("RMatrix addition mismatch");
    RMatrix m(rows_, cols_, R_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = (a_[k] + o.a_[k]) % R_->p;
    return m;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || R_ != o.R_)
        throw MismatchError("RMatrix subtraction mismatch");
    RMatrix m(rows_, cols_, R_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = (a_[k] + R_->p - o.a_[k]) % R_->p;
    return m;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    if (cols_ != o.rows_ || R_ != o.R_) throw MismatchError("RMatrix product mismatch");
    RMatrix m(rows_, o.cols_, R_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            RVec aik = at(i, k);
            if (R_->isZero(aik)) continue;
            for (int j = 0; j < o.cols_; ++j) {
                RVec prod = R_->mulElem(aik, o.at(k, j));
                if (R_->isZero(prod)) continue;
                m.set(i, j, R_->add(m.at(i, j), prod));
            }
        }
    return m;
}

bool RMatrix::isZero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

FpMat RMatrix::residue() const {
    FpMat m(rows_, cols_, R_->p);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, a_[base(i, j)]);
    return m;
}

bool RMatrix::isCongruentToIdentity() const {
    return residue() == FpMat::identity(rows_, R_->p);
}

RMatrix RMatrix::inverseUnipotent() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    RMatrix I = identity(rows_, R_);
    RMatrix M = *this - I;
    if (!M.residue().isZero())
        throw DomainError("inverseUnipotent needs a matrix congruent to the identity");
    RMatrix inv = I;
    RMatrix term = I;
    for (int s = 1; s < R_->nilpotency + 1; ++s) {
        term = term * M;
        if (term.isZero()) break;
        if (s % 2 == 1)
            inv = inv - term;
        else
            inv = inv + term;
    }
    return inv;
}

void RMatrix::appendKey(std::string& out) const {
    for (auto x : a_) out.push_back(static_cast<char>('0' + x));
}

RVec evalPoly(const Poly& f, const std::vector<RVec>& values, const ArtinTestRing& R) {
    if (static_cast<int>(values.size()) != f.vars())
        throw MismatchError("evalPoly needs one value per variable");
    RVec acc = R.zero();
    // power cache per variable
    std::vector<std::vector<RVec>> pows(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) pows[j].push_back(R.unit());
    auto powerOf = [&](std::size_t j, int e) -> const RVec& {
        auto& table = pows[j];
        while (static_cast<int>(table.size()) <= e)
            table.push_back(R.mulElem(table.back(), values[j]));
        return table[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : f.terms()) {
        RVec term = R.scalar(c.reduceMod(R.p));
        for (int j = 1; j <= f.vars(); ++j) {
            int e = m.exp(j);
            if (e) term = R.mulElem(term, powerOf(static_cast<std::size_t>(j - 1), e));
        }
        acc = R.add(acc, term);
    }
    return acc;
}

long long countHoms(const std::vector<Poly>& gens, int n, const ArtinTestRing& R,
                    long long cap) {
    if (n == 0) return 1;  // only the structure map k -> R
    long long total = 1;
    for (int j = 0; j < n; ++j) {
        total *= R.radicalSize();
        if (total > cap)
            throw ResourceCapError("countHoms assignment space exceeds cap", total, cap);
    }
    // odometer over radical coordinates of the n assigned values
    const int k = R.radicalDim();
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(n) * k, 0);
    long long count = 0;
    for (long long it = 0;; ++it) {
        std::vector<RVec> values;
        values.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            RVec v = R.zero();
            for (int c = 0; c < k; ++c)
                v[static_cast<std::size_t>(c + 1)] =
                    digits[static_cast<std::size_t>(j) * k + static_cast<std::size_t>(c)];
            values.push_back(std::move(v));
        }
        bool killsAll = true;
        for (const auto& g : gens)
            if (!R.isZero(evalPoly(g, values, R))) {
                killsAll = false;
                break;
            }
        if (killsAll) ++count;
        // advance
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < R.p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
    }
    return count;
}

} // namespace udr
