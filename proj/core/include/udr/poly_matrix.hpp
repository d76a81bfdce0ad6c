#ifndef UDR_POLY_MATRIX_HPP
#define UDR_POLY_MATRIX_HPP

#include <vector>

#include "udr/poly.hpp"

namespace udr {

/// Rectangular matrix of truncated polynomials sharing (n, D, mode).
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols, int n, int D, CoeffMode mode, std::uint32_t p = 0);

    static PolyMatrix identity(int size, int n, int D, CoeffMode mode, std::uint32_t p = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vars() const { return n_; }
    int truncation() const { return D_; }
    CoeffMode mode() const { return mode_; }
    std::uint32_t prime() const { return p_; }

    const Poly& at(int r, int c) const { return a_[idx(r, c)]; }
    Poly& at(int r, int c) { return a_[idx(r, c)]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Poly& f) const;
    PolyMatrix pow(int k) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool isZero() const;

    /// Substitute tj -> values[j-1] in every entry.
    PolyMatrix substitute(const std::vector<Poly>& values) const;

    std::vector<Poly> entries() const { return a_; }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_, cols_;
    int n_ = 0, D_ = 1;
    CoeffMode mode_ = CoeffMode::ExactInt;
    std::uint32_t p_ = 0;
    std::vector<Poly> a_;
};

} // namespace udr

#endif
