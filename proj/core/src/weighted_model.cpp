#include "udr/weighted_model.hpp"

#include <algorithm>
#include <unordered_map>

namespace udr {

namespace {

// Generic dense RREF used for the odd-prime and rational blocks.  Pivots
// ascend through the columns; rows end fully reduced.
template <class Elem, class Ops>
void rrefGeneric(std::vector<std::vector<Elem>>& rows, std::vector<int>& pivotCols,
                 const Ops& ops) {
    pivotCols.clear();
    if (rows.empty()) return;
    const std::size_t ncols = rows[0].size();
    std::size_t next = 0;
    for (std::size_t c = 0; c < ncols && next < rows.size(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = next; r < rows.size(); ++r)
            if (!ops.isZero(rows[r][c])) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[next], rows[sel]);
        Elem inv = ops.inverse(rows[next][c]);
        for (std::size_t j = c; j < ncols; ++j)
            if (!ops.isZero(rows[next][j])) rows[next][j] = ops.mul(rows[next][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || ops.isZero(rows[r][c])) continue;
            Elem f = rows[r][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!ops.isZero(rows[next][j]))
                    rows[r][j] = ops.sub(rows[r][j], ops.mul(f, rows[next][j]));
        }
        pivotCols.push_back(static_cast<int>(c));
        ++next;
    }
    rows.resize(pivotCols.size());
}

struct QOps {
    using Elem = mpq_class;
    bool isZero(const Elem& x) const { return x == 0; }
    Elem inverse(const Elem& x) const { return 1 / x; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
};

struct FpOps {
    std::uint32_t p;
    using Elem = std::uint32_t;
    bool isZero(Elem x) const { return x == 0; }
    Elem inverse(Elem x) const {
        long long t = 0, nt = 1, r = p, nr = x % p;
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
};

// Packed F2 RREF for the default prime.
void rrefF2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t ncols,
            std::vector<int>& pivotCols) {
    pivotCols.clear();
    std::size_t next = 0;
    for (std::size_t c = 0; c < ncols && next < rows.size(); ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = 1ULL << (c & 63);
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r][w] & bit) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[next], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || !(rows[r][w] & bit)) continue;
            auto& dst = rows[r];
            const auto& src = rows[next];
            for (std::size_t k = w; k < src.size(); ++k) dst[k] ^= src[k];
        }
        pivotCols.push_back(static_cast<int>(c));
        ++next;
    }
    rows.resize(pivotCols.size());
}

} // namespace

WeightedModel::WeightedModel(const IdealBasis& J)
    : n_(J.n), mode_(J.mode), p_(J.p) {
    if (J.n > 0 && mode_ == CoeffMode::ExactInt)
        throw UnsupportedModeError(
            "weighted quotient model needs a field mode (rational or prime-field)");
    for (const auto& g : J.generators) {
        auto w = g.homogeneousWeight();
        if (!w)
            throw DomainError(
                "weighted quotient model needs weighted-homogeneous generators");
        if (g.isZero()) continue;
        gens_.push_back(g);
        genWeight_.push_back(*w);
    }
}

WeightedModel::Block WeightedModel::reduceBlock(long W) const {
    Block blk;
    blk.cols = monomialsOfWeight(n_, W);
    if (static_cast<long>(blk.cols.size()) > colCap_)
        throw NotArtinianError("weight block too large at weight " + std::to_string(W));
    std::unordered_map<std::string, int> colIdx;  // keyed by text; small blocks
    colIdx.reserve(blk.cols.size() * 2);
    for (std::size_t c = 0; c < blk.cols.size(); ++c)
        colIdx.emplace(blk.cols[c].text(), static_cast<int>(c));
    auto columnOf = [&](const Monomial& m) {
        auto it = colIdx.find(m.text());
        if (it == colIdx.end()) throw InternalError("monomial outside its weight block");
        return it->second;
    };

    const std::size_t ncols = blk.cols.size();
    std::vector<int> pivotCols;
    std::vector<std::vector<std::pair<int, Coeff>>> nfRows;  // parallel to pivotCols

    // Assemble rows: monomial multiples of the generators landing in weight W.
    if (mode_ == CoeffMode::PrimeField && p_ == 2) {
        const std::size_t words = (ncols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            long rem = W - genWeight_[g];
            if (rem < 0) continue;
            for (const auto& mu : monomialsOfWeight(n_, rem)) {
                std::vector<std::uint64_t> row(words, 0);
                bool nonzero = false;
                for (const auto& [m, c] : gens_[g].terms()) {
                    if (c.reduceMod(2) == 0) continue;
                    int col = columnOf(mu * m);
                    row[static_cast<std::size_t>(col) >> 6] ^= 1ULL << (col & 63);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        rrefF2(rows, ncols, pivotCols);
        nfRows.resize(pivotCols.size());
        for (std::size_t r = 0; r < pivotCols.size(); ++r) {
            for (std::size_t c = static_cast<std::size_t>(pivotCols[r]) + 1; c < ncols; ++c)
                if (rows[r][c >> 6] & (1ULL << (c & 63)))
                    nfRows[r].emplace_back(static_cast<int>(c), Coeff::primeField(1, 2));
        }
    } else if (mode_ == CoeffMode::PrimeField) {
        FpOps ops{p_};
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            long rem = W - genWeight_[g];
            if (rem < 0) continue;
            for (const auto& mu : monomialsOfWeight(n_, rem)) {
                std::vector<std::uint32_t> row(ncols, 0);
                bool nonzero = false;
                for (const auto& [m, c] : gens_[g].terms()) {
                    std::uint32_t v = c.reduceMod(p_);
                    if (v == 0) continue;
                    row[static_cast<std::size_t>(columnOf(mu * m))] = v;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        rrefGeneric(rows, pivotCols, ops);
        nfRows.resize(pivotCols.size());
        for (std::size_t r = 0; r < pivotCols.size(); ++r)
            for (std::size_t c = static_cast<std::size_t>(pivotCols[r]) + 1; c < ncols; ++c)
                if (rows[r][c])
                    nfRows[r].emplace_back(static_cast<int>(c),
                                           Coeff::primeField(rows[r][c], p_));
    } else {
        QOps ops;
        std::vector<std::vector<mpq_class>> rows;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            long rem = W - genWeight_[g];
            if (rem < 0) continue;
            for (const auto& mu : monomialsOfWeight(n_, rem)) {
                std::vector<mpq_class> row(ncols, mpq_class(0));
                bool nonzero = false;
                for (const auto& [m, c] : gens_[g].terms()) {
                    if (c.isZero()) continue;
                    row[static_cast<std::size_t>(columnOf(mu * m))] = c.value();
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        rrefGeneric(rows, pivotCols, ops);
        nfRows.resize(pivotCols.size());
        for (std::size_t r = 0; r < pivotCols.size(); ++r)
            for (std::size_t c = static_cast<std::size_t>(pivotCols[r]) + 1; c < ncols; ++c)
                if (rows[r][c] != 0)
                    nfRows[r].emplace_back(static_cast<int>(c), Coeff::rational(rows[r][c]));
    }

    // Classify columns and translate NF combos onto standard-local indices.
    std::vector<bool> isPivot(ncols, false);
    for (int c : pivotCols) isPivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> standardIndexOfCol(ncols, -1);
    for (std::size_t c = 0; c < ncols; ++c) {
        if (!isPivot[c]) {
            standardIndexOfCol[c] = static_cast<int>(blk.standardLocal.size());
            blk.standardLocal.push_back(static_cast<int>(c));
        }
    }
    for (std::size_t r = 0; r < pivotCols.size(); ++r) {
        std::vector<std::pair<int, Coeff>> combo;
        for (const auto& [col, coef] : nfRows[r]) {
            int sidx = standardIndexOfCol[static_cast<std::size_t>(col)];
            if (sidx < 0) throw InternalError("non-reduced echelon row in weight block");
            combo.emplace_back(sidx, -coef);
        }
        blk.nf.emplace(pivotCols[r], std::move(combo));
    }
    return blk;
}

const WeightedModel::Block& WeightedModel::block(long W) {
    auto it = blocks_.find(W);
    if (it == blocks_.end()) it = blocks_.emplace(W, reduceBlock(W)).first;
    return it->second;
}

long WeightedModel::blockDimension(long W) {
    if (n_ == 0) return W == 0 ? 1 : 0;
    return static_cast<long>(block(W).standardLocal.size());
}

WeightedModel::Stabilized WeightedModel::stabilizedDimension(long Wmax) {
    if (n_ == 0) return {1, 0};
    long total = 0;
    int emptyRun = 0;
    for (long W = 0; W <= Wmax; ++W) {
        long d = blockDimension(W);
        total += d;
        emptyRun = (d == 0) ? emptyRun + 1 : 0;
        if (emptyRun >= n_) return {total, W};
    }
    throw NotArtinianError("weighted quotient dimension did not stabilize by weight " +
                           std::to_string(Wmax));
}

Poly WeightedModel::normalForm(const Poly& f) {
    if (f.vars() != n_) throw MismatchError("normal form: variable count mismatch");
    // A normal form can land on higher-degree monomials of the same weight,
    // so the output ring must be wide enough to hold every weight-W monomial.
    long maxW = f.maxWeight().value_or(0);
    int Dout = static_cast<int>(std::max<long>(f.truncation(), maxW + 2));
    Poly out(n_, Dout, mode_, p_);
    for (const Poly& comp : f.weightComponents()) {
        long W = *comp.homogeneousWeight();
        const Block& blk = block(W);
        std::unordered_map<std::string, int> colIdx;
        for (std::size_t c = 0; c < blk.cols.size(); ++c)
            colIdx.emplace(blk.cols[c].text(), static_cast<int>(c));
        for (const auto& [m, c] : comp.terms()) {
            Coeff cc = c.convertTo(mode_, p_);
            if (cc.isZero()) continue;
            int col = colIdx.at(m.text());
            auto nf = blk.nf.find(col);
            if (nf == blk.nf.end()) {
                out.addTerm(m, cc);
            } else {
                for (const auto& [sidx, coef] : nf->second)
                    out.addTerm(blk.cols[static_cast<std::size_t>(
                                    blk.standardLocal[static_cast<std::size_t>(sidx)])],
                                cc * coef);
            }
        }
    }
    return out;
}

std::vector<Monomial> WeightedModel::standardMonomialsUpTo(long W) {
    std::vector<Monomial> out;
    for (long w = 0; w <= W; ++w) {
        const Block& blk = block(w);
        for (int c : blk.standardLocal) out.push_back(blk.cols[static_cast<std::size_t>(c)]);
    }
    return out;
}

} // namespace udr
