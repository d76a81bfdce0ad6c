#include "udr/monomial.hpp"

#include <algorithm>

#include "udr/errors.hpp"

namespace udr {

Monomial Monomial::variable(int j, int n) {
    if (j < 1 || j > n) throw DomainError("variable index out of range");
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    int d = 0;
    for (auto x : e_) d += x;
    return d;
}

long Monomial::weight() const {
    long w = 0;
    for (std::size_t j = 0; j < e_.size(); ++j) w += static_cast<long>(j + 1) * e_[j];
    return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw MismatchError("monomial variable count mismatch");
    std::vector<std::uint8_t> e(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) {
        int s = e_[j] + o.e_[j];
        if (s > 255) throw DomainError("monomial exponent overflow");
        e[j] = static_cast<std::uint8_t>(s);
    }
    return Monomial(std::move(e));
}

bool Monomial::tryDivide(const Monomial& o, Monomial& out) const {
    if (e_.size() != o.e_.size()) throw MismatchError("monomial variable count mismatch");
    std::vector<std::uint8_t> e(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (e_[j] < o.e_[j]) return false;
        e[j] = static_cast<std::uint8_t>(e_[j] - o.e_[j]);
    }
    out = Monomial(std::move(e));
    return true;
}

std::string Monomial::text() const {
    std::string s;
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (e_[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(j + 1);
        if (e_[j] > 1) s += "^" + std::to_string(static_cast<int>(e_[j]));
    }
    return s.empty() ? "1" : s;
}

bool monomialLess(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t j = ea.size(); j-- > 0;) {
        if (ea[j] != eb[j]) return ea[j] > eb[j];
    }
    return false;
}

namespace {

void collectBelowDegree(int n, int D, int j, std::vector<std::uint8_t>& cur, int used,
                        std::vector<Monomial>& out) {
    if (j == n) {
        out.push_back(Monomial(cur));
        return;
    }
    for (int x = 0; used + x < D; ++x) {
        cur[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(x);
        collectBelowDegree(n, D, j + 1, cur, used + x, out);
    }
    cur[static_cast<std::size_t>(j)] = 0;
}

void collectOfWeight(int n, long W, int j, std::vector<std::uint8_t>& cur,
                     std::vector<Monomial>& out) {
    if (j == 0) {
        if (W == 0) out.push_back(Monomial(cur));
        return;
    }
    // exponent of t_j contributes j per power
    long maxExp = W / j;
    if (maxExp > 255) maxExp = 255;
    for (long x = 0; x <= maxExp; ++x) {
        cur[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(x);
        collectOfWeight(n, W - x * j, j - 1, cur, out);
    }
    cur[static_cast<std::size_t>(j - 1)] = 0;
}

} // namespace

std::vector<Monomial> monomialsBelowDegree(int n, int D) {
    std::vector<Monomial> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
    collectBelowDegree(n, D, 0, cur, 0, out);
    std::sort(out.begin(), out.end(), monomialLess);
    return out;
}

std::vector<Monomial> monomialsOfWeight(int n, long W) {
    std::vector<Monomial> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
    collectOfWeight(n, W, n, cur, out);
    std::sort(out.begin(), out.end(), monomialLess);
    return out;
}

} // namespace udr
