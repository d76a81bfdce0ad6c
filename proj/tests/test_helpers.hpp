#ifndef UDR_TEST_HELPERS_HPP
#define UDR_TEST_HELPERS_HPP

// Test-only reference implementations, deliberately independent of the
// library internals: a naive fraction type, a naive dense polynomial on
// exponent vectors, and a naive staircase row reduction.  These provide the
// expected values for the derived test cases.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace testref {

struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den == 0) throw std::runtime_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool zero() const { return num == 0; }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
};

using Expo = std::vector<int>;

inline int degOf(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Own term order: by total degree, then reverse-lexicographic from the
/// highest variable (bigger exponent of a later variable sorts first).
struct ExpoLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = degOf(a), db = degOf(b);
        if (da != db) return da < db;
        for (std::size_t j = a.size(); j-- > 0;)
            if (a[j] != b[j]) return a[j] > b[j];
        return false;
    }
};

using RefPoly = std::map<Expo, Frac, ExpoLess>;

inline RefPoly refMul(const RefPoly& a, const RefPoly& b, int D) {
    RefPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            if (degOf(e) >= D) continue;
            Frac f = out.count(e) ? out[e] + ca * cb : ca * cb;
            if (f.zero())
                out.erase(e);
            else
                out[e] = f;
        }
    return out;
}

inline RefPoly refAdd(const RefPoly& a, const RefPoly& b) {
    RefPoly out = a;
    for (const auto& [e, c] : b) {
        Frac f = out.count(e) ? out[e] + c : c;
        if (f.zero())
            out.erase(e);
        else
            out[e] = f;
    }
    return out;
}

inline void collectBelow(int n, int D, int j, Expo& cur, int used, std::vector<Expo>& out) {
    if (j == n) {
        out.push_back(cur);
        return;
    }
    for (int x = 0; used + x < D; ++x) {
        cur[static_cast<std::size_t>(j)] = x;
        collectBelow(n, D, j + 1, cur, used + x, out);
    }
    cur[static_cast<std::size_t>(j)] = 0;
}

inline std::vector<Expo> allMonosBelow(int n, int D) {
    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(n), 0);
    collectBelow(n, D, 0, cur, 0, out);
    std::sort(out.begin(), out.end(), ExpoLess());
    return out;
}

/// Dimension of k[t]/(gens + m^D) by dense row reduction over the
/// rationals, pivoting on the smallest monomial (staircase convention).
/// Returns the non-pivot monomials (the quotient basis).
inline std::vector<Expo> refQuotientBasis(const std::vector<RefPoly>& gens, int n, int D) {
    std::vector<Expo> cols = allMonosBelow(n, D);
    std::map<Expo, std::size_t, ExpoLess> colIdx;
    for (std::size_t c = 0; c < cols.size(); ++c) colIdx[cols[c]] = c;
    std::vector<std::vector<Frac>> rows;
    for (const auto& g : gens)
        for (const auto& m : cols) {
            RefPoly mono;
            mono[m] = Frac(1);
            RefPoly prod = refMul(mono, g, D);
            if (prod.empty()) continue;
            std::vector<Frac> row(cols.size());
            for (const auto& [e, c] : prod) row[colIdx[e]] = c;
            rows.push_back(std::move(row));
        }
    std::vector<bool> pivotCol(cols.size(), false);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols.size() && next < rows.size(); ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = next; r < rows.size(); ++r)
            if (!rows[r][c].zero()) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[next], rows[sel]);
        Frac inv = Frac(1) / rows[next][c];
        for (std::size_t j = c; j < cols.size(); ++j) rows[next][j] = rows[next][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c].zero()) continue;
            Frac f = rows[r][c];
            for (std::size_t j = c; j < cols.size(); ++j)
                rows[r][j] = rows[r][j] - f * rows[next][j];
        }
        pivotCol[c] = true;
        ++next;
    }
    std::vector<Expo> basis;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!pivotCol[c]) basis.push_back(cols[c]);
    return basis;
}

} // namespace testref

#endif
