#include "udr/structured_matrix.hpp"

namespace udr {

PolyMatrix buildNn(int n, int D, CoeffMode mode, std::uint32_t p) {
    if (n < 1) throw DomainError("buildNn needs n >= 1 (J_0 is handled separately)");
    PolyMatrix N(n, n, n, D, mode, p);
    // first row (0, ..., 0, t_n)
    N.at(0, n - 1) = Poly::variable(n, n, D, mode, p);
    for (int r = 1; r < n; ++r) {
        N.at(r, r - 1) = Poly::one(n, D, mode, p);
        N.at(r, n - 1) = Poly::variable(n - r, n, D, mode, p);
    }
    return N;
}

PolyMatrix buildNnTilde(int n, int D, CoeffMode mode, std::uint32_t p) {
    if (n < 1) throw DomainError("buildNnTilde needs n >= 1");
    PolyMatrix N(n + 1, n + 1, n, D, mode, p);
    for (int r = 1; r <= n; ++r) {
        N.at(r, r - 1) = Poly::one(n, D, mode, p);
        N.at(r, n) = Poly::variable(n - r + 1, n, D, mode, p);
    }
    return N;
}

HPolynomialTable::HPolynomialTable(int n, int maxNu, CoeffMode mode, std::uint32_t p)
    : n_(n), maxNu_(-1), D_(maxNu + 2), mode_(mode), p_(p) {
    if (n < 1) throw DomainError("h-polynomial table needs n >= 1");
    if (maxNu < 0) throw DomainError("h-polynomial table needs maxNu >= 0");
    extendTo(maxNu);
}

void HPolynomialTable::extendTo(int nu) {
    if (nu <= maxNu_) return;
    if (nu + 2 > D_) D_ = nu + 2;  // rebuilt below when the ring must widen
    if (!h_.empty() && h_.front().front().truncation() != D_) {
        // widen every stored polynomial to the new truncation
        for (auto& row : h_)
            for (auto& f : row) f = f.convertTo(D_, mode_, p_);
    }
    for (int v = maxNu_ + 1; v <= nu; ++v) {
        std::vector<Poly> row;
        row.reserve(static_cast<std::size_t>(n_));
        if (v == 0) {
            row.push_back(Poly::one(n_, D_, mode_, p_));
            for (int a = 2; a <= n_; ++a) row.push_back(Poly::zero(n_, D_, mode_, p_));
        } else {
            const auto& prev = h_[static_cast<std::size_t>(v - 1)];
            const Poly& hn = prev[static_cast<std::size_t>(n_ - 1)];
            row.push_back(Poly::variable(n_, n_, D_, mode_, p_) * hn);
            for (int a = 2; a <= n_; ++a) {
                Poly f = prev[static_cast<std::size_t>(a - 2)] +
                         Poly::variable(n_ - a + 1, n_, D_, mode_, p_) * hn;
                row.push_back(std::move(f));
            }
        }
        h_.push_back(std::move(row));
    }
    maxNu_ = nu;
}

const Poly& HPolynomialTable::value(int a, int nu) {
    if (a < 1 || a > n_) throw DomainError("h-polynomial index a out of range");
    if (nu < 0) throw DomainError("h-polynomial index nu out of range");
    extendTo(nu);
    return h_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(a - 1)];
}

bool HPolynomialTable::allCoefficientsNonnegative() const {
    for (const auto& row : h_)
        for (const auto& f : row)
            for (const auto& [m, c] : f.terms())
                if (c.value() < 0) return false;
    return true;
}

Poly hPoly(int n, int a, int nu, int D) {
    HPolynomialTable table(n, nu);
    return table.value(a, nu).convertTo(D, CoeffMode::ExactInt);
}

PolyMatrix matrixPowerClosedForm(HPolynomialTable& table, int nu) {
    if (nu < 1) throw DomainError("matrixPowerClosedForm needs nu >= 1");
    const int n = table.vars();
    table.value(1, nu + n - 1);  // make sure the table is wide enough
    PolyMatrix M(n, n, n, table.truncation(), CoeffMode::ExactInt);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) M.at(a - 1, b - 1) = table.value(a, nu + b - 1);
    return M;
}

PolyMatrix matrixPowerClosedForm(int n, int nu, int D) {
    HPolynomialTable table(n, nu + n - 1);
    PolyMatrix M = matrixPowerClosedForm(table, nu);
    PolyMatrix out(n, n, n, D, CoeffMode::ExactInt);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.at(a, b) = M.at(a, b).convertTo(D, CoeffMode::ExactInt);
    return out;
}

Report verifyPowerLemma(int n, int nuMax) {
    Report rep;
    // Every entry of (N_n)^nu has degree <= nu, so this truncation keeps the
    // whole computation exact.
    const int D = nuMax + n + 2;
    HPolynomialTable table(n, nuMax + n, CoeffMode::ExactInt);
    PolyMatrix N = buildNn(n, D);
    PolyMatrix Nt = buildNnTilde(n, D);

    // (a) closed form vs repeated multiplication
    PolyMatrix power = N;
    for (int nu = 1; nu <= nuMax; ++nu) {
        PolyMatrix closed(n, n, n, D, CoeffMode::ExactInt);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                closed.at(a - 1, b - 1) = table.value(a, nu + b - 1).convertTo(D, CoeffMode::ExactInt);
        bool ok = (power == closed);
        if (!ok) {
            for (int a = 0; a < n && !ok; ++a)
                for (int b = 0; b < n; ++b)
                    if (power.at(a, b) != closed.at(a, b)) {
                        rep.add("power-closed-form", false,
                                "n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                                    " entry (" + std::to_string(a + 1) + "," +
                                    std::to_string(b + 1) + ")");
                        break;
                    }
        }
        if (ok && nu == nuMax)
            rep.add("power-closed-form", true,
                    "n=" + std::to_string(n) + " nu<=" + std::to_string(nuMax));
        if (nu < nuMax) power = power * N;
    }

    // (b) (N_n)^n = sum_{j=1..n} t_{n-j+1} (N_n)^{j-1}
    {
        PolyMatrix lhs = N.pow(n);
        PolyMatrix rhs(n, n, n, D, CoeffMode::ExactInt);
        for (int j = 1; j <= n; ++j)
            rhs = rhs + N.pow(j - 1).scaled(Poly::variable(n - j + 1, n, D, CoeffMode::ExactInt));
        rep.add("recurrence-Nn", lhs == rhs, "n=" + std::to_string(n));
    }

    // (c) (Ntilde_n)^{n+1} = sum_{j=1..n} t_{n-j+1} (Ntilde_n)^j
    {
        PolyMatrix lhs = Nt.pow(n + 1);
        PolyMatrix rhs(n + 1, n + 1, n, D, CoeffMode::ExactInt);
        for (int j = 1; j <= n; ++j)
            rhs = rhs + Nt.pow(j).scaled(Poly::variable(n - j + 1, n, D, CoeffMode::ExactInt));
        rep.add("recurrence-Ntilde", lhs == rhs, "n=" + std::to_string(n));
    }

    // (d) (Ntilde_n)^nu block formula: zero first row, (N_n)^{nu-1} lower
    // left, last column (h_{a,n+nu-1}).
    {
        bool ok = true;
        std::string detail;
        PolyMatrix tp = Nt;
        for (int nu = 1; nu <= nuMax && ok; ++nu) {
            PolyMatrix expect(n + 1, n + 1, n, D, CoeffMode::ExactInt);
            PolyMatrix lower = N.pow(nu - 1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) expect.at(a + 1, b) = lower.at(a, b);
            for (int a = 1; a <= n; ++a)
                expect.at(a, n) = table.value(a, n + nu - 1).convertTo(D, CoeffMode::ExactInt);
            if (tp != expect) {
                ok = false;
                detail = "n=" + std::to_string(n) + " nu=" + std::to_string(nu);
            }
            if (nu < nuMax) tp = tp * Nt;
        }
        rep.add("Ntilde-block-formula", ok,
                ok ? "n=" + std::to_string(n) + " nu<=" + std::to_string(nuMax) : detail);
    }
    return rep;
}

IdealBasis buildJIdeal(int n, int m) {
    if (n == 0) return IdealBasis::zeroIdealOverK();
    if (n < 0 || m < 1) throw DomainError("buildJIdeal needs n >= 0 and m >= 1");
    const int D = m + 2;
    HPolynomialTable table(n, m);
    std::vector<Poly> gens;
    gens.reserve(static_cast<std::size_t>(n));
    // h_{a,m} vanishes identically when m < a - 1; such generators are
    // dropped (they only occur below the emitted range m >= 2n).
    for (int a = 1; a <= n; ++a) {
        Poly g = table.value(a, m).convertTo(D, CoeffMode::ExactInt);
        if (!g.isZero()) gens.push_back(std::move(g));
    }
    return IdealBasis::make(std::move(gens));
}

IdealBasis buildJIdealFromEntries(int n, int m) {
    if (n == 0) return IdealBasis::zeroIdealOverK();
    if (n < 0 || m < 1) throw DomainError("buildJIdealFromEntries needs n >= 0 and m >= 1");
    const int D = m + n + 2;
    PolyMatrix P = buildNn(n, D).pow(m);
    std::vector<Poly> gens;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!P.at(a, b).isZero()) gens.push_back(P.at(a, b));
    return IdealBasis::make(std::move(gens));
}

} // namespace udr
