#include <doctest.h>

#include "yangian/matrix.hpp"
#include "yangian/poly.hpp"

#include <random>

using namespace yangian;

namespace {

Rational rnd(std::mt19937& g, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 7);
    return Rational(num(g), den(g));
}

// Plain Gauss-Jordan over Q, written independently of row_echelon.
int naive_rank(std::vector<Vector> a, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(a.size()); ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[r][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(0, 5).str() == "0");
    CHECK_THROWS_WITH(Rational(1) / Rational(0), "division by zero");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 g(17);
    for (int t = 0; t < 200; ++t) {
        Rational a = rnd(g), b = rnd(g), c = rnd(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("ratfunc_normalize") {
    Poly u = Poly::u();
    RatFunc one = ratfunc_normalize(u + Poly(1), u + Poly(1));
    CHECK(one.num() == Poly(1));
    CHECK(one.den() == Poly(1));

    RatFunc zero = ratfunc_normalize(Poly(), u * u + Poly(3));
    CHECK(zero.is_zero());
    CHECK(zero.den() == Poly(1));

    RatFunc f = ratfunc_normalize(u * u - Poly(1), u - Poly(1));
    CHECK(f.num() == Poly({1, 1}));
    CHECK(f.den() == Poly(1));

    // denominators become monic; signs move to the numerator
    RatFunc h = ratfunc_normalize(Poly(3), Poly({2, -2}));
    CHECK(h.den() == Poly({-1, 1}));
    CHECK(h.num() == Poly(Rational(-3, 2)));

    CHECK_THROWS_WITH(ratfunc_normalize(u, Poly()), "division by zero polynomial");
}

TEST_CASE("ratfunc arithmetic round trip") {
    std::mt19937 g(5);
    auto rpoly = [&](int deg) {
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.push_back(rnd(g));
        c.back() = Rational(1);
        return Poly(c);
    };
    for (int t = 0; t < 40; ++t) {
        RatFunc f = ratfunc_normalize(rpoly(2), rpoly(2));
        RatFunc h = ratfunc_normalize(rpoly(1), rpoly(3));
        CHECK((f + h) - h == f);
        CHECK((f * h) / h == f);
        // pointwise agreement at a point away from the poles
        Rational x(101, 7);
        CHECK((f + h).eval(x) == f.eval(x) + h.eval(x));
    }
}

TEST_CASE("rational roots") {
    Poly u = Poly::u();
    auto r1 = poly_rational_roots(u * u - Poly(1));
    CHECK(r1.roots == std::vector<Rational>{-1, 1});
    CHECK(r1.residual_degree == 0);

    auto r2 = poly_rational_roots(u * u + Poly(1));
    CHECK(r2.roots.empty());
    CHECK(r2.residual_degree == 2);

    // (u - 3/2)^2 (u + 5) expanded by hand: u^3 + 2u^2 - 51/4 u + 45/4
    Poly expanded({Rational(45, 4), Rational(-51, 4), Rational(2), Rational(1)});
    auto r3 = poly_rational_roots(expanded);
    CHECK(r3.roots == std::vector<Rational>{-5, Rational(3, 2), Rational(3, 2)});
    CHECK(r3.residual_degree == 0);

    // non-monic with a residual quadratic: 6 (u - 2/3)(u^2 + u + 1)
    Poly mixed = Poly({Rational(-2, 3), 1}) * Poly({1, 1, 1}) * Poly(6);
    auto r4 = poly_rational_roots(mixed);
    CHECK(r4.roots == std::vector<Rational>{Rational(2, 3)});
    CHECK(r4.residual_degree == 2);
}

TEST_CASE("poly division, gcd and shift") {
    Poly a = Poly::from_roots({1, 2, 3});
    Poly b = Poly::from_roots({2, 5});
    CHECK(gcd(a, b) == Poly::linear(-2));
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK_THROWS_WITH(a.divmod(Poly()), "division by zero polynomial");
    // shifted(a)(x) = p(x + a)
    Poly s = a.shifted(Rational(1, 2));
    for (int x = -3; x <= 3; ++x) CHECK(s.eval(x) == a.eval(Rational(x) + Rational(1, 2)));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(RatMatrix::identity(3)).empty());

    auto z = nullspace(RatMatrix(2, 3));
    REQUIRE(z.size() == 3);
    CHECK(z[0] == Vector{1, 0, 0});
    CHECK(z[2] == Vector{0, 0, 1});

    auto k = nullspace(RatMatrix::from_rows({{1, 1}, {2, 2}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{-1, 1});
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    std::mt19937 g(11);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9), zero(0, 3);
    for (int t = 0; t < 60; ++t) {
        int r = dim(g), c = dim(g);
        std::vector<Vector> rows(r, Vector(c));
        for (auto& row : rows)
            for (auto& x : row) x = zero(g) == 0 ? Rational(0) : Rational(entry(g));
        // make some rows dependent
        if (r > 2) rows[r - 1] = rows[0];
        RatMatrix m = RatMatrix::from_rows(rows, c);
        auto ns = nullspace(m);
        CHECK(rank(m) + static_cast<int>(ns.size()) == c);
        CHECK(rank(m) == naive_rank(rows, c));
        for (const auto& v : ns) {
            for (const auto& row : rows) {
                Rational s;
                for (int j = 0; j < c; ++j) s += row[j] * v[j];
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("sparse and dense products agree") {
    std::mt19937 g(3);
    std::uniform_int_distribution<int> e(-3, 3);
    RatMatrix a(4, 5), b(5, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) a(i, j) = e(g);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = e(g);
    SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK(sa.transpose().to_dense() == a.transpose());
    CHECK(kron(SparseMatrix::identity(2), sb).rows() == 10);
    CHECK(kron(SparseMatrix::identity(2), sb).at(7, 5) == b(2, 2));
    CHECK(kron(SparseMatrix::identity(2), sb).at(7, 2) == 0);
}

TEST_CASE("sparse elimination matches the dense nullspace") {
    std::mt19937 g(23);
    std::uniform_int_distribution<int> dim(1, 9), entry(-5, 5), zero(0, 2);
    for (int t = 0; t < 80; ++t) {
        int r = dim(g) + 3, c = dim(g);
        std::vector<Vector> rows(r, Vector(c));
        for (auto& row : rows)
            for (auto& x : row) x = zero(g) ? Rational(0) : Rational(entry(g), 1 + zero(g));
        if (r > 3) rows[2] = rows[1];
        SparseEliminator el(c);
        for (const auto& row : rows) {
            SparseMatrix::Row sr;
            for (int j = 0; j < c; ++j)
                if (!row[j].is_zero()) sr.emplace_back(j, row[j]);
            el.insert(sr);
        }
        RatMatrix m = RatMatrix::from_rows(rows, c);
        CHECK(el.rank() == rank(m));
        CHECK(el.nullspace() == nullspace(m));
    }
}
