#include "udr/poly.hpp"

#include <cctype>

namespace udr {

Poly::Poly(int n, int D, CoeffMode mode, std::uint32_t p)
    : n_(n), D_(D), mode_(mode), p_(mode == CoeffMode::PrimeField ? p : 0) {
    if (n < 0) throw DomainError("negative variable count");
    if (D < 1) throw DomainError("truncation degree must be >= 1");
    if (mode == CoeffMode::PrimeField && p < 2)
        throw DomainError("prime-field polynomial needs a modulus");
}

Poly Poly::constant(const Coeff& c, int n, int D) {
    Poly r(n, D, c.mode(), c.prime());
    r.addTerm(Monomial::one(n), c);
    return r;
}

Poly Poly::variable(int j, int n, int D, CoeffMode mode, std::uint32_t p) {
    Poly r(n, D, mode, p);
    r.addTerm(Monomial::variable(j, n), Coeff::one(mode, p));
    return r;
}

Poly Poly::monomial(const Monomial& m, const Coeff& c, int D) {
    Poly r(m.vars(), D, c.mode(), c.prime());
    r.addTerm(m, c);
    return r;
}

void Poly::requireCompatible(const Poly& o) const {
    if (n_ != o.n_ || D_ != o.D_ || mode_ != o.mode_ || p_ != o.p_)
        throw MismatchError("polynomial shape mismatch: (n=" + std::to_string(n_) +
                            ",D=" + std::to_string(D_) + "," + to_string(mode_) +
                            ") vs (n=" + std::to_string(o.n_) + ",D=" +
                            std::to_string(o.D_) + "," + to_string(o.mode_) + ")");
}

std::optional<int> Poly::degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = m.degree();
        if (!d || dm > *d) d = dm;
    }
    return d;
}

std::optional<int> Poly::minDegree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = m.degree();
        if (!d || dm < *d) d = dm;
    }
    return d;
}

std::optional<long> Poly::maxWeight() const {
    std::optional<long> w;
    for (const auto& [m, c] : terms_) {
        long wm = m.weight();
        if (!w || wm > *w) w = wm;
    }
    return w;
}

std::optional<long> Poly::homogeneousWeight() const {
    if (terms_.empty()) return 0;
    long w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

std::vector<Poly> Poly::weightComponents() const {
    std::map<long, Poly> parts;
    for (const auto& [m, c] : terms_) {
        long w = m.weight();
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, Poly(n_, D_, mode_, p_)).first;
        it->second.addTerm(m, c);
    }
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (auto& [w, p] : parts) out.push_back(std::move(p));
    return out;
}

Coeff Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Coeff::zero(mode_, p_);
    return it->second;
}

void Poly::addTerm(const Monomial& m, const Coeff& c) {
    if (m.vars() != n_) throw MismatchError("monomial variable count mismatch");
    if (c.mode() != mode_ || c.prime() != p_)
        throw MismatchError("coefficient mode mismatch in addTerm");
    if (c.isZero() || m.degree() >= D_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Coeff s = it->second + c;
        if (s.isZero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Poly Poly::operator+(const Poly& o) const {
    requireCompatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    requireCompatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_, D_, mode_, p_);
    for (const auto& [m, c] : terms_) r.addTerm(m, -c);
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(n_, D_, mode_, p_);
    if (c.isZero()) return r;
    for (const auto& [m, k] : terms_) r.addTerm(m, k * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    requireCompatible(o);
    Poly r(n_, D_, mode_, p_);
    for (const auto& [ma, ca] : terms_) {
        int da = ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            if (da + mb.degree() >= D_) continue;
            r.addTerm(ma * mb, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return n_ == o.n_ && D_ == o.D_ && mode_ == o.mode_ && p_ == o.p_ &&
           terms_ == o.terms_;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
    if (static_cast<int>(values.size()) != n_)
        throw MismatchError("substitute needs one value per variable");
    if (n_ == 0) throw DomainError("substitute on a constant ring");
    const Poly& model = values.front();
    Poly r(model.vars(), model.truncation(), model.mode(), model.prime());
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c.convertTo(model.mode(), model.prime()),
                                   model.vars(), model.truncation());
        for (int j = 1; j <= n_; ++j)
            for (int k = 0; k < m.exp(j); ++k) term = term * values[static_cast<std::size_t>(j - 1)];
        r = r + term;
    }
    return r;
}

Poly Poly::convertTo(int D, CoeffMode mode, std::uint32_t p) const {
    Poly r(n_, D, mode, p);
    for (const auto& [m, c] : terms_) {
        if (m.degree() >= D) continue;
        r.addTerm(m, c.convertTo(mode, p));
    }
    return r;
}

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class v = c.value();
        bool neg = v < 0;
        mpq_class av = neg ? mpq_class(-v) : v;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string coefTxt = av.get_str();
        if (m.isOne()) {
            s += coefTxt;
        } else if (av == 1) {
            s += m.text();
        } else {
            s += coefTxt + "*" + m.text();
        }
    }
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skipSpace() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skipSpace();
        return pos >= s.size();
    }
    char peek() {
        skipSpace();
        return s[pos];
    }
    long parseNumber() {
        skipSpace();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw DomainError("polynomial parse error: number expected at '" +
                                            s.substr(start) + "'");
        return std::stol(s.substr(start, pos - start));
    }
};

} // namespace

Poly Poly::parse(const std::string& str, int n, int D, CoeffMode mode, std::uint32_t p) {
    Poly r(n, D, mode, p);
    Parser in(str);
    if (in.eof()) throw DomainError("polynomial parse error: empty input");
    bool firstTerm = true;
    while (!in.eof()) {
        long sign = 1;
        if (in.peek() == '+') {
            ++in.pos;
        } else if (in.peek() == '-') {
            sign = -1;
            ++in.pos;
        } else if (!firstTerm) {
            throw DomainError("polynomial parse error: expected '+' or '-'");
        }
        firstTerm = false;
        long num = 1, den = 1;
        bool sawCoef = false;
        std::vector<std::uint8_t> exps(static_cast<std::size_t>(n), 0);
        bool sawFactor = false;
        for (;;) {
            if (in.eof()) break;
            char c = in.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num = in.parseNumber();
                if (!in.eof() && in.peek() == '/') {
                    ++in.pos;
                    den = in.parseNumber();
                }
                sawCoef = true;
            } else if (c == 't') {
                ++in.pos;
                long j = in.parseNumber();
                if (j < 1 || j > n) throw DomainError("polynomial parse error: variable t" +
                                                      std::to_string(j) + " out of range");
                long e = 1;
                if (!in.eof() && in.peek() == '^') {
                    ++in.pos;
                    e = in.parseNumber();
                }
                exps[static_cast<std::size_t>(j - 1)] =
                    static_cast<std::uint8_t>(exps[static_cast<std::size_t>(j - 1)] + e);
                sawFactor = true;
            } else {
                throw DomainError(std::string("polynomial parse error at '") + c + "'");
            }
            if (in.eof() || in.peek() != '*') break;
            ++in.pos;
        }
        if (!sawCoef && !sawFactor)
            throw DomainError("polynomial parse error: empty term");
        Coeff coef = (den == 1) ? Coeff::integer(sign * num).convertTo(mode, p)
                                : Coeff::rational(sign * num, den).convertTo(mode, p);
        r.addTerm(Monomial(exps), coef);
        if (in.eof()) break;
        char c = in.peek();
        if (c != '+' && c != '-')
            throw DomainError(std::string("polynomial parse error: unexpected '") + c + "'");
    }
    return r;
}

} // namespace udr
