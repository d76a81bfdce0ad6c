#ifndef UDR_ARTIN_RING_HPP
#define UDR_ARTIN_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "udr/fp_linalg.hpp"
#include "udr/poly.hpp"
#include "udr/report.hpp"

namespace udr {

/// Element of an ArtinTestRing: coordinates over the ring basis.
using RVec = std::vector<std::uint32_t>;

/// A finite local commutative F_p-algebra given by structure constants.
/// Basis convention: element 0 is the unit, every other basis element lies
/// in the maximal ideal, so reduction to the residue field F_p reads off
/// coordinate 0.
struct ArtinTestRing {
    std::string name;
    std::uint32_t p = 2;
    int dim = 1;
    std::vector<std::string> basisNames;
    /// mult[i][j] = coordinates of basis_i * basis_j.
    std::vector<std::vector<RVec>> mult;
    int nilpotency = 1;  // smallest s with m^s = 0 (filled in by verify)

    int radicalDim() const { return dim - 1; }
    long long size() const;        // p^dim
    long long radicalSize() const; // p^(dim-1)

    RVec zero() const { return RVec(static_cast<std::size_t>(dim), 0); }
    RVec unit() const;
    RVec scalar(std::uint32_t c) const;
    RVec add(const RVec& a, const RVec& b) const;
    RVec sub(const RVec& a, const RVec& b) const;
    RVec neg(const RVec& a) const;
    RVec mulElem(const RVec& a, const RVec& b) const;
    RVec scale(std::uint32_t c, const RVec& a) const;
    RVec power(const RVec& a, int k) const;
    bool isZero(const RVec& a) const;
    bool inRadical(const RVec& a) const { return a[0] == 0; }
    std::uint32_t residue(const RVec& a) const { return a[0]; }
    std::string elemText(const RVec& a) const;

    /// Checks the stated invariants: commutative, associative, unital,
    /// radical closed under multiplication and nilpotent (verified by
    /// powering), quotient by the radical = F_p.  Fills `nilpotency`.
    Report verify();
};

/// Built-in catalog.  Names: "Fp", "dual" (F_p[e], e^2=0), "u2" (alias of
/// dual presented as F_p[u]/(u^2)), "u3" (F_p[u]/(u^3)), "xy2"
/// (F_p[x,y]/(x,y)^2; the listing F_p[x,y]/(x^2,xy,y^2) names the same
/// ring and is accepted as an alias).
ArtinTestRing makeTestRing(const std::string& name, std::uint32_t p);
std::vector<std::string> testRingCatalog();

/// A surjection A1 -> A0 whose kernel is a principal ideal (t) killed by
/// the maximal ideal.
struct SmallExtension {
    ArtinTestRing A1, A0;
    /// Coordinate matrix of the projection (dim0 x dim1 over F_p).
    std::vector<RVec> proj;  // proj[j] = image coordinates of basis_j of A1
    RVec kernelGen;          // t, in A1 coordinates

    RVec apply(const RVec& a) const;
    Report verify() const;
};

/// Catalog of small extensions used by the centralizer-lifting checks.
std::vector<SmallExtension> smallExtensionCatalog(std::uint32_t p);
SmallExtension makeSmallExtension(const std::string& a1, const std::string& a0,
                                  std::uint32_t p);

/// Matrix over an ArtinTestRing, stored flat as rows*cols coordinate
/// vectors.
class RMatrix {
public:
    RMatrix() : rows_(0), cols_(0), R_(nullptr) {}
    RMatrix(int rows, int cols, const ArtinTestRing* R);

    static RMatrix identity(int size, const ArtinTestRing* R);
    /// Embed an F_p matrix along the unit.
    static RMatrix fromFp(const FpMat& m, const ArtinTestRing* R);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ArtinTestRing* ring() const { return R_; }

    RVec at(int r, int c) const;
    void set(int r, int c, const RVec& v);

    RMatrix operator+(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix operator*(const RMatrix& o) const;
    bool operator==(const RMatrix& o) const { return a_ == o.a_; }
    bool operator!=(const RMatrix& o) const { return a_ != o.a_; }
    bool isZero() const;

    /// Reduction modulo the maximal ideal.
    FpMat residue() const;
    /// True when this = I + M with all M entries in the radical.
    bool isCongruentToIdentity() const;
    /// Inverse of I + M (radical-valued M) via the Neumann series.
    RMatrix inverseUnipotent() const;

    /// Flattened coordinate key; lexicographic comparison of keys orders
    /// matrix tuples canonically.
    void appendKey(std::string& out) const;

private:
    std::size_t base(int r, int c) const {
        return (static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(c)) *
               static_cast<std::size_t>(R_->dim);
    }
    int rows_, cols_;
    const ArtinTestRing* R_;
    std::vector<std::uint32_t> a_;
};

/// Evaluate a polynomial at an assignment t_j -> values[j-1] of ring
/// elements; coefficients reduce along the unit.
RVec evalPoly(const Poly& f, const std::vector<RVec>& values, const ArtinTestRing& R);

/// Exhaustively counts the k-algebra homomorphisms k[[t1..tn]]/(gens) -> R,
/// i.e. assignments of radical elements to the variables killing every
/// generator.  n = 0 (presentation k) counts exactly the structure map.
long long countHoms(const std::vector<Poly>& gens, int n, const ArtinTestRing& R,
                    long long cap);

} // namespace udr

#endif
