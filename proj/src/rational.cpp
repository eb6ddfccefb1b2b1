#include "yangian/rational.hpp"

#include <limits>
#include <ostream>

namespace yangian {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) throw Error("empty rational literal");
    s = s.substr(start);
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    size_t slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error("malformed rational literal '" + std::string(text) + "'");
    mpz_class d(den);
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    mpq_class q{mpz_class(num), d};
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error("rational " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_mul(const Rational& b, const Rational& c) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(q);
}

}  // namespace yangian
