#ifndef UDR_FP_LINALG_HPP
#define UDR_FP_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "udr/errors.hpp"

namespace udr {

/// Dense matrix over F_p for the representation-theoretic solves (hom
/// spaces, exactness ranks, strict-equivalence systems).  Sizes here are
/// small; the quotient-ring engine has its own packed elimination.
class FpMat {
public:
    FpMat() : rows_(0), cols_(0), p_(2) {}
    FpMat(int rows, int cols, std::uint32_t p);

    static FpMat identity(int size, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t at(int r, int c) const { return a_[idx(r, c)]; }
    void set(int r, int c, std::uint32_t v) { a_[idx(r, c)] = v % p_; }
    void add(int r, int c, std::uint32_t v) { a_[idx(r, c)] = (a_[idx(r, c)] + v) % p_; }

    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat operator*(const FpMat& o) const;
    FpMat transpose() const;
    bool operator==(const FpMat& o) const;
    bool operator!=(const FpMat& o) const { return !(*this == o); }
    bool isZero() const;

    int rank() const;
    /// Basis of the right null space, one column vector per element.
    std::vector<std::vector<std::uint32_t>> nullspace() const;
    /// Solve A x = b; empty optional encoded as bool return.
    bool solve(const std::vector<std::uint32_t>& b, std::vector<std::uint32_t>& x) const;

    /// Horizontal / vertical stacking helpers.
    static FpMat hstack(const FpMat& a, const FpMat& b);
    static FpMat vstack(const FpMat& a, const FpMat& b);

    std::string text() const;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

std::uint32_t fpInverse(std::uint32_t a, std::uint32_t p);

/// Rank of the span of a set of row vectors over F_p (destructive Gauss on
/// a copy).
int fpSpanRank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Reduced row echelon basis of the span (canonical).
std::vector<std::vector<std::uint32_t>> fpSpanBasis(
    std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// True when v lies in the span of basis rows (basis need not be reduced).
bool fpInSpan(const std::vector<std::vector<std::uint32_t>>& span,
              const std::vector<std::uint32_t>& v, std::uint32_t p);

} // namespace udr

#endif
