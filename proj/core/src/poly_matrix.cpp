#include "udr/poly_matrix.hpp"

namespace udr {

PolyMatrix::PolyMatrix(int rows, int cols, int n, int D, CoeffMode mode, std::uint32_t p)
    : rows_(rows), cols_(cols), n_(n), D_(D), mode_(mode),
      p_(mode == CoeffMode::PrimeField ? p : 0) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Poly::zero(n, D, mode, p));
}

PolyMatrix PolyMatrix::identity(int size, int n, int D, CoeffMode mode, std::uint32_t p) {
    PolyMatrix m(size, size, n, D, mode, p);
    for (int i = 0; i < size; ++i) m.at(i, i) = Poly::one(n, D, mode, p);
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw MismatchError("matrix addition shape mismatch");
    PolyMatrix r(rows_, cols_, n_, D_, mode_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw MismatchError("matrix subtraction shape mismatch");
    PolyMatrix r(rows_, cols_, n_, D_, mode_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_, n_, D_, mode_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& aik = at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Poly& bkj = o.at(k, j);
                if (bkj.isZero()) continue;
                r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& f) const {
    PolyMatrix r(rows_, cols_, n_, D_, mode_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * f;
    return r;
}

PolyMatrix PolyMatrix::pow(int k) const {
    if (rows_ != cols_) throw MismatchError("power of a non-square matrix");
    if (k < 0) throw DomainError("negative matrix power");
    PolyMatrix r = identity(rows_, n_, D_, mode_, p_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool PolyMatrix::isZero() const {
    for (const auto& f : a_)
        if (!f.isZero()) return false;
    return true;
}

PolyMatrix PolyMatrix::substitute(const std::vector<Poly>& values) const {
    if (values.empty()) throw DomainError("substitute needs target ring values");
    const Poly& model = values.front();
    PolyMatrix r(rows_, cols_, model.vars(), model.truncation(), model.mode(),
                 model.prime());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).substitute(values);
    return r;
}

} // namespace udr
