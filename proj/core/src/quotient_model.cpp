#include "udr/quotient_model.hpp"

#include <algorithm>

namespace udr {

IdealBasis IdealBasis::zeroIdealOverK() {
    IdealBasis J;
    J.n = 0;
    J.D = 1;
    J.mode = CoeffMode::ExactInt;
    J.p = 0;
    return J;
}

IdealBasis IdealBasis::make(std::vector<Poly> gens) {
    if (gens.empty()) throw DomainError("IdealBasis::make needs at least one generator");
    IdealBasis J;
    J.n = gens.front().vars();
    J.D = gens.front().truncation();
    J.mode = gens.front().mode();
    J.p = gens.front().prime();
    for (const auto& g : gens) {
        if (g.isZero()) throw DomainError("ideal generators must be nonzero");
        if (g.vars() != J.n || g.truncation() != J.D || g.mode() != J.mode ||
            g.prime() != J.p)
            throw MismatchError("ideal generators disagree on (n, D, mode)");
    }
    J.generators = std::move(gens);
    return J;
}

IdealBasis IdealBasis::convertTo(int D, CoeffMode mode, std::uint32_t p) const {
    IdealBasis J;
    J.n = n;
    J.D = D;
    J.mode = mode;
    J.p = (mode == CoeffMode::PrimeField) ? p : 0;
    // Generators may vanish under a low truncation or a characteristic
    // change; they then contribute nothing to the truncated span.
    for (const auto& g : generators) {
        Poly h = g.convertTo(D, mode, p);
        if (!h.isZero()) J.generators.push_back(std::move(h));
    }
    return J;
}

QuotientModel::QuotientModel(const IdealBasis& J, int D)
    : n_(J.n), D_(D), mode_(J.mode), p_(J.p) {
    if (D < 1) throw DomainError("truncation degree must be >= 1");
    if (J.n > 0 && mode_ == CoeffMode::ExactInt)
        throw UnsupportedModeError(
            "quotient model row reduction needs a field mode (rational or prime-field)");

    cols_ = monomialsBelowDegree(n_, D_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
        colIndex_.emplace(cols_[c], static_cast<int>(c));

    const std::size_t ncols = cols_.size();
    // Rows: every multiple monomial*generator that stays below the
    // truncation (the product itself computed in the truncated ring).
    std::vector<std::vector<Coeff>> rows;
    const Coeff zero = Coeff::zero(mode_, p_);
    for (const auto& g : J.generators) {
        auto gMin = g.minDegree();
        if (!gMin) continue;
        for (const auto& m : cols_) {
            if (m.degree() + *gMin >= D_) continue;
            Poly prod = Poly::monomial(m, Coeff::one(mode_, p_), D_).convertTo(D_, mode_, p_) *
                        g.convertTo(D_, mode_, p_);
            if (prod.isZero()) continue;
            std::vector<Coeff> row(ncols, zero);
            for (const auto& [mm, cc] : prod.terms())
                row[static_cast<std::size_t>(colIndex_.at(mm))] = cc;
            rows.push_back(std::move(row));
        }
    }

    // Gaussian elimination, pivoting on the smallest monomial of each row.
    std::vector<int> pivotOfRow;
    std::vector<std::size_t> rowOfPivotCol(ncols, SIZE_MAX);
    std::size_t nextRow = 0;
    for (std::size_t c = 0; c < ncols && nextRow < rows.size(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = nextRow; r < rows.size(); ++r)
            if (!rows[r][c].isZero()) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[nextRow], rows[sel]);
        Coeff inv = rows[nextRow][c].inverse();
        for (std::size_t j = c; j < ncols; ++j)
            if (!rows[nextRow][j].isZero()) rows[nextRow][j] = rows[nextRow][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == nextRow || rows[r][c].isZero()) continue;
            Coeff f = rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) {
                if (rows[nextRow][j].isZero()) continue;
                rows[r][j] = rows[r][j] - f * rows[nextRow][j];
            }
        }
        pivotOfRow.push_back(static_cast<int>(c));
        rowOfPivotCol[c] = nextRow;
        ++nextRow;
    }
    rows.resize(pivotOfRow.size());

    nf_.assign(ncols, NF{});
    std::vector<int> standardIndexOfCol(ncols, -1);
    for (std::size_t c = 0; c < ncols; ++c) {
        if (rowOfPivotCol[c] == SIZE_MAX) {
            nf_[c].standard = true;
            standardIndexOfCol[c] = static_cast<int>(standard_.size());
            standard_.push_back(cols_[c]);
        }
    }
    for (std::size_t c = 0; c < ncols; ++c) {
        if (nf_[c].standard) continue;
        const auto& row = rows[rowOfPivotCol[c]];
        for (std::size_t j = c + 1; j < ncols; ++j) {
            if (row[j].isZero()) continue;
            // RREF means every later nonzero entry sits on a standard column.
            if (standardIndexOfCol[j] < 0)
                throw InternalError("non-reduced echelon row in quotient model");
            nf_[c].combo.emplace_back(standardIndexOfCol[j], -row[j]);
        }
    }
}

Poly QuotientModel::normalForm(const Monomial& m) const {
    Poly r(n_, D_, mode_, p_);
    if (m.degree() >= D_) return r;
    auto it = colIndex_.find(m);
    if (it == colIndex_.end()) throw InternalError("monomial missing from model columns");
    const NF& nf = nf_[static_cast<std::size_t>(it->second)];
    if (nf.standard) {
        r.addTerm(m, Coeff::one(mode_, p_));
        return r;
    }
    for (const auto& [sidx, coef] : nf.combo)
        r.addTerm(standard_[static_cast<std::size_t>(sidx)], coef);
    return r;
}

Poly QuotientModel::normalForm(const Poly& f) const {
    if (f.vars() != n_) throw MismatchError("normal form: variable count mismatch");
    Poly r(n_, D_, mode_, p_);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() >= D_) continue;
        Poly nfm = normalForm(m);
        r = r + nfm.scaled(c.convertTo(mode_, p_));
    }
    return r;
}

bool idealMembership(const Poly& f, const QuotientModel& model) {
    return model.contains(f);
}

bool idealEqual(const IdealBasis& a, const IdealBasis& b, int D) {
    if (a.n != b.n) throw MismatchError("idealEqual: variable count mismatch");
    if (a.isZeroIdealOverK() && b.isZeroIdealOverK()) return true;
    if (a.isZeroIdealOverK() || b.isZeroIdealOverK()) return false;
    CoeffMode mode = a.mode == CoeffMode::ExactInt ? CoeffMode::Rational : a.mode;
    std::uint32_t p = a.p;
    QuotientModel ma(a.convertTo(D, mode, p), D);
    QuotientModel mb(b.convertTo(D, mode, p), D);
    for (const auto& g : a.generators)
        if (!mb.contains(g.convertTo(D, mode, p))) return false;
    for (const auto& g : b.generators)
        if (!ma.contains(g.convertTo(D, mode, p))) return false;
    return true;
}

StabilizedDimension quotientDimensionStabilized(const IdealBasis& J, int D0, int Dmax) {
    if (D0 >= Dmax) throw DomainError("quotientDimensionStabilized needs D0 < Dmax");
    if (J.isZeroIdealOverK()) return {1, D0};
    long prev = -1;
    for (int D = D0; D <= Dmax; ++D) {
        CoeffMode mode = J.mode == CoeffMode::ExactInt ? CoeffMode::Rational : J.mode;
        QuotientModel model(J.convertTo(D, mode, J.p), D);
        long dim = model.dimension();
        if (prev >= 0 && dim == prev) return {dim, D};
        prev = dim;
    }
    throw NotArtinianError("quotient dimension did not stabilize by D = " +
                           std::to_string(Dmax));
}

} // namespace udr
