#include "udr/fp_linalg.hpp"

#include <algorithm>

namespace udr {

std::uint32_t fpInverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on small moduli
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw DomainError("non-invertible element mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FpMat::FpMat(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    if (p < 2) throw DomainError("modulus must be >= 2");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FpMat FpMat::identity(int size, std::uint32_t p) {
    FpMat m(size, size, p);
    for (int i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::operator+(const FpMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw MismatchError("FpMat addition shape mismatch");
    FpMat r(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + o.a_[k]) % p_;
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw MismatchError("FpMat subtraction shape mismatch");
    FpMat r(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + p_ - o.a_[k]) % p_;
    return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw MismatchError("FpMat product shape mismatch");
    FpMat r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.a_[r.idx(i, j)] = (r.a_[r.idx(i, j)] + v * o.at(k, j)) % p_;
        }
    return r;
}

FpMat FpMat::transpose() const {
    FpMat r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool FpMat::operator==(const FpMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

bool FpMat::isZero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rrefInPlace(std::vector<std::vector<std::uint32_t>>& rows,
                             std::uint32_t p) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint32_t inv = fpInverse(rows[r][c], p);
        for (std::size_t j = c; j < cols; ++j)
            rows[r][j] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(rows[r][j]) * inv) % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint32_t f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = static_cast<std::uint32_t>(
                    (rows[i][j] + static_cast<std::uint64_t>(p - f) * rows[r][j]) % p);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace

int FpMat::rank() const {
    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        rows[static_cast<std::size_t>(i)].assign(
            a_.begin() + static_cast<long>(idx(i, 0)),
            a_.begin() + static_cast<long>(idx(i, 0)) + cols_);
    }
    return static_cast<int>(rrefInPlace(rows, p_).size());
}

std::vector<std::vector<std::uint32_t>> FpMat::nullspace() const {
    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        rows[static_cast<std::size_t>(i)].assign(
            a_.begin() + static_cast<long>(idx(i, 0)),
            a_.begin() + static_cast<long>(idx(i, 0)) + cols_);
    std::vector<int> pivots = rrefInPlace(rows, p_);
    std::vector<bool> isPivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) isPivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (isPivot[static_cast<std::size_t>(c)]) continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(cols_), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t coef = rows[r][static_cast<std::size_t>(c)];
            if (coef)
                v[static_cast<std::size_t>(pivots[r])] = (p_ - coef) % p_;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool FpMat::solve(const std::vector<std::uint32_t>& b,
                  std::vector<std::uint32_t>& x) const {
    if (static_cast<int>(b.size()) != rows_) throw MismatchError("solve rhs size mismatch");
    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(a_.begin() + static_cast<long>(idx(i, 0)),
                   a_.begin() + static_cast<long>(idx(i, 0)) + cols_);
        row.push_back(b[static_cast<std::size_t>(i)] % p_);
    }
    std::vector<int> pivots = rrefInPlace(rows, p_);
    x.assign(static_cast<std::size_t>(cols_), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return false;  // pivot in the rhs column
        x[static_cast<std::size_t>(pivots[r])] = rows[r][static_cast<std::size_t>(cols_)];
    }
    return true;
}

FpMat FpMat::hstack(const FpMat& a, const FpMat& b) {
    if (a.rows_ != b.rows_ || a.p_ != b.p_) throw MismatchError("hstack shape mismatch");
    FpMat r(a.rows_, a.cols_ + b.cols_, a.p_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

FpMat FpMat::vstack(const FpMat& a, const FpMat& b) {
    if (a.cols_ != b.cols_ || a.p_ != b.p_) throw MismatchError("vstack shape mismatch");
    FpMat r(a.rows_ + b.rows_, a.cols_, a.p_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, j, b.at(i, j));
    return r;
}

std::string FpMat::text() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += std::to_string(at(i, j));
        }
        s += "]\n";
    }
    return s;
}

int fpSpanRank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    return static_cast<int>(rrefInPlace(rows, p).size());
}

std::vector<std::vector<std::uint32_t>> fpSpanBasis(
    std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    rrefInPlace(rows, p);
    return rows;
}

bool fpInSpan(const std::vector<std::vector<std::uint32_t>>& span,
              const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> rows = span;
    int base = fpSpanRank(rows, p);
    rows = span;
    rows.push_back(v);
    return fpSpanRank(rows, p) == base;
}

} // namespace udr
