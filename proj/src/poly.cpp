#include "yangian/poly.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

Poly::Poly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p(1);
    for (const auto& r : roots) p *= linear(-r);
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    Poly r = *this;
    Rational inv = Rational(1) / c_.back();
    for (auto& c : r.c_) c *= inv;
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::shifted(const Rational& a) const {
    // Horner in the polynomial ring: p(u+a) = (...(c_d (u+a) + c_{d-1})(u+a) ...)
    Poly acc;
    Poly step = linear(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * step;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j].add_mul(a.c_[i], b.c_[j]);
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree() + 1));
    Rational lead_inv = Rational(1) / d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rational f = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = f;
        for (int k = 0; k <= d.degree(); ++k)
            rem.c_[static_cast<size_t>(k + shift)] -= f * d.c_[static_cast<size_t>(k)];
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag;
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class m = n;
    for (mpz_class p = 2; p * p <= m; ++p) {
        if (p > 10000000) throw Error("rational root search: coefficient too large to factor");
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (m > 1) factors.emplace_back(m, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factors) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

RationalRoots poly_rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error("poly_rational_roots: zero polynomial");
    RationalRoots out;
    Poly rest = p.monic();
    // zero roots
    while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
        out.roots.emplace_back(0);
        rest = rest.divmod(Poly::u()).first;
    }
    bool progress = true;
    while (rest.degree() > 0 && progress) {
        progress = false;
        // clear denominators to get an integer polynomial
        mpz_class l = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        mpz_class a0 = (rest.coeff(0) * Rational(l)).num();
        mpz_class an = (rest.leading() * Rational(l)).num();
        auto dp = divisors(a0);
        auto dq = divisors(an);
        std::vector<Rational> cands;
        for (const auto& num : dp)
            for (const auto& den : dq) {
                Rational c(mpq_class(num, den));
                cands.push_back(c);
                cands.push_back(-c);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& c : cands) {
            while (rest.degree() > 0 && rest.eval(c).is_zero()) {
                out.roots.push_back(c);
                rest = rest.divmod(Poly::linear(-c)).first;
                progress = true;
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual_degree = rest.degree() < 0 ? 0 : rest.degree();
    return out;
}

RatFunc ratfunc_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    RatFunc r;
    if (num.is_zero()) {
        r.num_ = Poly();
        r.den_ = Poly(1);
        return r;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rational lead = den.leading();
    r.num_ = num * (Rational(1) / lead);
    r.den_ = den * (Rational(1) / lead);
    return r;
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw Error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::shifted(const Rational& a) const {
    return ratfunc_normalize(num_.shifted(a), den_.shifted(a));
}

bool RatFunc::limit_at_infinity_is(const Rational& c) const {
    if (c.is_zero()) return num_.degree() < den_.degree();
    return num_.degree() == den_.degree() && num_.leading() == c;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return ratfunc_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return ratfunc_normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return ratfunc_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    return ratfunc_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace yangian
