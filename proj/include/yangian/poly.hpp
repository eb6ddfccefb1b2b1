#pragma once

#include "yangian/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

/// Univariate polynomial in u over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(Rational c);  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    /// u + a
    static Poly linear(const Rational& a) { return Poly({a, Rational(1)}); }
    static Poly u() { return linear(0); }
    static Poly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    Rational coeff(int k) const;
    Rational leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    Poly monic() const;

    Rational eval(const Rational& x) const;
    /// p(u + a)
    Poly shifted(const Rational& a) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct RationalRoots {
    std::vector<Rational> roots;  // sorted ascending, with multiplicity
    int residual_degree = 0;      // degree of the factor without rational roots
};

/// All rational roots of a nonzero polynomial, with multiplicity.
RationalRoots poly_rational_roots(const Poly& p);

/// Reduced rational function num/den with den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const;
    RatFunc shifted(const Rational& a) const;
    /// True iff the function tends to `c` as u -> infinity.
    bool limit_at_infinity_is(const Rational& c) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "u") const;

private:
    friend RatFunc ratfunc_normalize(Poly num, Poly den);
    Poly num_;
    Poly den_;
};

/// Reduces num/den to lowest terms with a monic denominator.
RatFunc ratfunc_normalize(Poly num, Poly den);

}  // namespace yangian
