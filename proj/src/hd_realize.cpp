#include "yangian/hd_realize.hpp"

#include <map>
#include <sstream>

namespace yangian {

namespace {

constexpr long kMaxDim = 60000;

long binomial(int n, int k) {
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

std::string var_name(const char* sym, int a, int i) {
    return std::string(sym) + "_" + std::to_string(a + 1) + std::to_string(i + 1);
}

// Equal on every column, recording a witness otherwise.
bool record(IdentityReport& rep, const SparseMatrix& lhs, const SparseMatrix& rhs, const std::string& what) {
    ++rep.checked;
    if (lhs == rhs) return true;
    if (rep.pass) {
        rep.pass = false;
        rep.witness = what;
    }
    return false;
}

// d x - theta x d = delta, x x - theta x x = 0, d d - theta d d = 0 on the columns of w.
void rel_dx(IdentityReport& rep, int theta, const std::vector<SparseMatrix>& xs, const std::vector<SparseMatrix>& ds,
            const SparseMatrix& w, int n, const char* xn, const char* dn) {
    const int vars = static_cast<int>(xs.size());
    const Rational th(theta);
    std::vector<SparseMatrix> xw, dw;
    for (int v = 0; v < vars; ++v) {
        xw.push_back(xs[static_cast<size_t>(v)] * w);
        dw.push_back(ds[static_cast<size_t>(v)] * w);
    }
    const SparseMatrix zero(w.rows(), w.cols());
    for (int u = 0; u < vars; ++u)
        for (int v = 0; v < vars; ++v) {
            const auto su = static_cast<size_t>(u), sv = static_cast<size_t>(v);
            std::string pair = " for (" + var_name(xn, u / n, u % n) + ", " + var_name(xn, v / n, v % n) + ")";
            record(rep, (ds[su] * xw[sv]).combine(1, xs[sv] * dw[su], -th), u == v ? w : zero,
                   std::string(dn) + " " + xn + " relation" + pair);
            record(rep, (xs[su] * xw[sv]).combine(1, xs[sv] * xw[su], -th), zero, std::string(xn) + " " + xn + " relation" + pair);
            record(rep, (ds[su] * dw[sv]).combine(1, ds[sv] * dw[su], -th), zero, std::string(dn) + " " + dn + " relation" + pair);
        }
}

std::string tuple_name(int a, int i, int b, int j) {
    std::ostringstream os;
    os << "(" << a + 1 << i + 1 << "," << b + 1 << j + 1 << ")";
    return os.str();
}

}  // namespace

OperatorRealization::OperatorRealization(int theta, int m, int n, int p, int D)
    : theta_(theta), m_(m), n_(n), p_(p), D_(D) {
    if (theta != 1 && theta != -1) throw Error("theta must be +1 or -1");
    if (m < 1 || n < 1) throw Error("m and n must be positive");
    if (p < 0 || p > m) throw Error("p must lie in 0..m");
    const int vars = m * n;
    if (theta > 0) {
        if (D < 2) throw Error("truncation degree D must be at least 2");
        if (binomial(vars + D, D) > kMaxDim)
            throw Error("realization too large: " + std::to_string(binomial(vars + D, D)) + " basis monomials");
    } else {
        if (vars > 16) throw Error("realization too large: m*n = " + std::to_string(vars) + " exceeds 16");
        D_ = vars;
    }
    for (int N = 0; N <= D_; ++N) {
        const FockBasis part(theta, vars, N);
        for (const auto& mono : part.monomials()) {
            basis_.push_back(mono);
            degree_.push_back(N);
        }
    }
    std::map<Monomial, int> index;
    for (int k = 0; k < dim(); ++k) index[basis_[static_cast<size_t>(k)]] = k;

    for (int v = 0; v < vars; ++v) {
        SparseMatrix xm(dim(), dim()), dm(dim(), dim());
        for (int c = 0; c < dim(); ++c) {
            const Monomial& mono = basis_[static_cast<size_t>(c)];
            if (auto t = mul_x(theta, v, mono)) {
                auto it = index.find(t->mono);
                if (it != index.end()) xm.add(it->second, c, t->coeff);  // beyond D is truncated
            }
            if (auto t = apply_d(theta, v, mono)) dm.add(index.at(t->mono), c, t->coeff);
        }
        xs_.push_back(std::move(xm));
        ds_.push_back(std::move(dm));
    }
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i) {
            const size_t v = idx(a, i);
            if (a < p) {
                ps_.push_back(Rational(-theta) * xs_[v]);
                qs_.push_back(ds_[v]);
            } else {
                ps_.push_back(ds_[v]);
                qs_.push_back(xs_[v]);
            }
        }
    for (int u = 0; u < vars; ++u)
        for (int v = 0; v < vars; ++v) es_.push_back(qs_[static_cast<size_t>(u)] * ps_[static_cast<size_t>(v)]);
}

SparseMatrix OperatorRealization::zeta(int a, int b) const {
    SparseMatrix z = SparseMatrix::identity(dim(), a == b ? Rational(theta_ * n_, 2) : Rational(0));
    for (int k = 0; k < n_; ++k) z = z + ehat(a, k, b, k);
    return z;
}

SparseMatrix OperatorRealization::window(int w) const {
    std::vector<int> cols;
    for (int c = 0; c < dim(); ++c)
        if (theta_ < 0 || degree_[static_cast<size_t>(c)] <= D_ - w) cols.push_back(c);
    if (cols.empty())
        throw Error("safe window is empty: D = " + std::to_string(D_) + " is too small for identities of x-degree " +
                    std::to_string(w));
    SparseMatrix sel(dim(), static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k) sel.add(cols[k], static_cast<int>(k), Rational(1));
    return sel;
}

OperatorRealization realize(int theta, int m, int n, int p, int D) { return OperatorRealization(theta, m, n, p, D); }

IdentityReport check_realization(const OperatorRealization& r) {
    IdentityReport rep;
    SparseMatrix w = r.window(2);
    rep.window = w.cols();
    std::vector<SparseMatrix> xs, ds, ps, qs;
    for (int a = 0; a < r.m(); ++a)
        for (int i = 0; i < r.n(); ++i) {
            xs.push_back(r.x(a, i));
            ds.push_back(r.d(a, i));
            ps.push_back(r.p_op(a, i));
            qs.push_back(r.q_op(a, i));
        }
    rel_dx(rep, r.theta(), xs, ds, w, r.n(), "x", "d");
    rel_dx(rep, r.theta(), qs, ps, w, r.n(), "q", "p");
    return rep;
}

IdentityReport check_automorphism(const OperatorRealization& r) {
    IdentityReport rep;
    SparseMatrix w = r.window(2);
    rep.window = w.cols();
    std::vector<SparseMatrix> xs, ds;
    for (int a = 0; a < r.m(); ++a)
        for (int i = 0; i < r.n(); ++i) {
            xs.push_back(r.q_op(a, i));
            ds.push_back(r.p_op(a, i));
        }
    rel_dx(rep, r.theta(), xs, ds, w, r.n(), "q", "p");
    return rep;
}

IdentityReport check_e_relations(const OperatorRealization& r) {
    IdentityReport rep;
    const SparseMatrix w = r.window(4);
    rep.window = w.cols();
    const int m = r.m(), n = r.n(), vars = m * n;
    const Rational th(r.theta());
    std::vector<SparseMatrix> ew;
    for (int u = 0; u < vars; ++u)
        for (int v = 0; v < vars; ++v) ew.push_back(r.ehat(u / n, u % n, v / n, v % n) * w);
    auto E = [&](int a, int i, int b, int j) -> const SparseMatrix& { return r.ehat(a, i, b, j); };
    auto EW = [&](int a, int i, int b, int j) -> const SparseMatrix& {
        return ew[static_cast<size_t>((a * n + i) * vars + b * n + j)];
    };
    const SparseMatrix zero(w.rows(), w.cols());
    for (int ai = 0; ai < vars; ++ai)
        for (int bj = 0; bj < vars; ++bj)
            for (int ck = 0; ck < vars; ++ck)
                for (int dl = 0; dl < vars; ++dl) {
                    const int a = ai / n, i = ai % n, b = bj / n, j = bj % n;
                    const int c = ck / n, k = ck % n, d = dl / n, l = dl % n;
                    const bool bc = b == c && j == k, ad = a == d && i == l, ab = a == b && i == j;
                    const std::string tag = " at " + tuple_name(a, i, b, j) + "," + tuple_name(c, k, d, l);
                    SparseMatrix p1 = E(a, i, b, j) * EW(c, k, d, l);  // E_aibj E_ckdl
                    SparseMatrix p2 = E(c, k, d, l) * EW(a, i, b, j);  // E_ckdl E_aibj
                    SparseMatrix p3 = E(c, k, b, j) * EW(a, i, d, l);  // E_ckbj E_aidl
                    SparseMatrix rhs1 = zero;
                    if (bc) rhs1 = rhs1 + EW(a, i, d, l);
                    if (ad) rhs1 = rhs1 - EW(c, k, b, j);
                    record(rep, p1 - p2, rhs1, "first relation" + tag);
                    SparseMatrix rhs2 = zero;
                    if (bc) rhs2 = rhs2 + EW(a, i, d, l);
                    if (ab) rhs2 = rhs2.combine(1, EW(c, k, d, l), -th);
                    record(rep, p1.combine(1, p3, -th), rhs2, "second relation" + tag);
                    SparseMatrix rhs3 = zero;
                    if (ad) rhs3 = rhs3 + EW(c, k, b, j);
                    if (ab) rhs3 = rhs3.combine(1, EW(c, k, d, l), -th);
                    record(rep, p2.combine(1, p3, -th), rhs3, "third relation" + tag);
                }
    return rep;
}

IdentityReport check_zeta_homomorphism(const OperatorRealization& r) {
    IdentityReport rep;
    const SparseMatrix w = r.window(4);
    rep.window = w.cols();
    const int m = r.m();
    std::vector<SparseMatrix> z, zw;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            z.push_back(r.zeta(a, b));
            zw.push_back(z.back() * w);
        }
    auto at = [&](const std::vector<SparseMatrix>& v, int a, int b) -> const SparseMatrix& {
        return v[static_cast<size_t>(a * m + b)];
    };
    const SparseMatrix zero(w.rows(), w.cols());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    SparseMatrix lhs = at(z, a, b) * at(zw, c, d) - at(z, c, d) * at(zw, a, b);
                    SparseMatrix rhs = zero;
                    if (b == c) rhs = rhs + at(zw, a, d);
                    if (d == a) rhs = rhs - at(zw, c, b);
                    record(rep, lhs, rhs,
                           "zeta homomorphism at (a,b,c,d)=(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                               std::to_string(c + 1) + "," + std::to_string(d + 1) + ")");
                }
    return rep;
}

GlRepresentation gl_representation(int m, GlRep kind) {
    if (m < 1) throw Error("gl_m representation needs m >= 1");
    GlRepresentation rep;
    rep.m = m;
    rep.dim = kind == GlRep::Defining ? m : m * m;
    const SparseMatrix id = SparseMatrix::identity(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            SparseMatrix e = SparseMatrix::unit(m, m, a, b);
            rep.e.push_back(kind == GlRep::Defining ? e : kron(e, id) + kron(id, e));
        }
    return rep;
}

SparseMatrix XSeries::at(int a, int b, int r) const {
    if (r < 1 || r > order + 2) throw Error("X series coefficient u^-" + std::to_string(r) + " beyond the computed order");
    if (r == 1) return SparseMatrix::identity(rep.dim, a == b ? Rational(1) : Rational(0));
    return coeff[static_cast<size_t>(r - 2)][static_cast<size_t>(a * rep.m + b)];
}

XSeries x_series(int theta, const GlRepresentation& rep, int K) {
    if (K < 0) throw Error("series order must be nonnegative");
    XSeries s;
    s.theta = theta;
    s.order = K;
    s.rep = rep;
    const int m = rep.m;
    const Rational mth(-theta);
    // chain[a*m+c] = sum over c_1..c_{t-1} of E_{c_1 a} E_{c_2 c_1} ... E_{c c_{t-1}}
    std::vector<SparseMatrix> chain;
    Rational sign = mth;
    for (int t = 0; t <= K; ++t) {
        std::vector<SparseMatrix> xs;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (t == 0) {
                    xs.push_back(mth * rep.E(b, a));
                    continue;
                }
                SparseMatrix acc(rep.dim, rep.dim);
                for (int c = 0; c < m; ++c) acc = acc + chain[static_cast<size_t>(a * m + c)] * rep.E(b, c);
                xs.push_back(sign * acc);
            }
        s.coeff.push_back(std::move(xs));
        // extend chains by one more factor
        std::vector<SparseMatrix> next;
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c) {
                if (t == 0) {
                    next.push_back(rep.E(c, a));
                    continue;
                }
                SparseMatrix acc(rep.dim, rep.dim);
                for (int cp = 0; cp < m; ++cp) acc = acc + chain[static_cast<size_t>(a * m + cp)] * rep.E(c, cp);
                next.push_back(std::move(acc));
            }
        chain = std::move(next);
        sign *= mth;
    }
    return s;
}

IdentityReport check_x_identities(const XSeries& s) {
    IdentityReport rep;
    const int m = s.rep.m, K = s.order, R = s.rep.dim;
    const Rational th(s.theta);
    const SparseMatrix zero(R, R);
    // X(r)[a*m+b] = coefficient of u^{-r}; index 0 is zero
    std::vector<std::vector<SparseMatrix>> X(static_cast<size_t>(K + 3));
    for (int r = 0; r <= K + 2; ++r)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) X[static_cast<size_t>(r)].push_back(r == 0 ? zero : s.at(a, b, r));
    auto x = [&](int a, int b, int r) -> const SparseMatrix& {
        return X[static_cast<size_t>(r)][static_cast<size_t>(a * m + b)];
    };
    auto ab_tag = [](int r, int a, int b) {
        return " at u^-" + std::to_string(r) + ", (a,b)=(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    };
    // (u + theta E^t) X(u) = 1
    for (int r = 1; r <= K + 1; ++r)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                SparseMatrix lhs = x(a, b, r + 1);
                for (int c = 0; c < m; ++c) lhs = lhs.combine(1, s.rep.E(c, a) * x(c, b, r), th);
                record(rep, lhs, zero, "inverse identity" + ab_tag(r, a, b));
            }
    // (u - v) X(u) X(v) = X(v) - X(u)
    for (int r = 0; r <= K; ++r)
        for (int t = 0; r + t <= K; ++t)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    SparseMatrix lhs = zero;
                    for (int c = 0; c < m; ++c)
                        lhs = lhs + x(a, c, r + 1) * x(c, b, t) - x(a, c, r) * x(c, b, t + 1);
                    SparseMatrix rhs = zero;
                    if (r == 0) rhs = rhs + x(a, b, t);
                    if (t == 0) rhs = rhs - x(a, b, r);
                    record(rep, lhs, rhs,
                           "product identity at u^-" + std::to_string(r) + " v^-" + std::to_string(t) + ", (a,b)=(" +
                               std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
                }
    // (u - v)[X_ab(u), X_cd(v)] = theta (X_cb(u) X_ad(v) - X_cb(v) X_ad(u))
    for (int r = 1; r <= K; ++r)
        for (int t = 1; r + t <= K + 1; ++t)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c)
                        for (int d = 0; d < m; ++d) {
                            SparseMatrix lhs = commutator(x(a, b, r + 1), x(c, d, t)) - commutator(x(a, b, r), x(c, d, t + 1));
                            SparseMatrix rhs = th * (x(c, b, r) * x(a, d, t) - x(c, b, t) * x(a, d, r));
                            record(rep, lhs, rhs,
                                   "Yangian relation of X at u^-" + std::to_string(r) + " v^-" + std::to_string(t) +
                                       ", (a,b,c,d)=(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                       std::to_string(c + 1) + "," + std::to_string(d + 1) + ")");
                        }
    return rep;
}

SparseMatrix alpha_coefficient(const OperatorRealization& r, const XSeries& s, int i, int j, int k) {
    const int m = r.m();
    if (s.rep.m != m) throw Error("representation is for gl_" + std::to_string(s.rep.m) + ", realization has m = " + std::to_string(m));
    SparseMatrix out(s.rep.dim * r.dim(), s.rep.dim * r.dim());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const SparseMatrix& e = r.ehat(a, i, b, j);
            if (e.is_zero()) continue;
            out = out + kron(s.at(a, b, k), e);
        }
    return out;
}

IdentityReport check_alpha(const OperatorRealization& r, const XSeries& s, int K) {
    if (K < 2) throw Error("check_alpha needs order K >= 2");
    if (s.order + 2 < K + 1) throw Error("X series of order " + std::to_string(s.order) + " is too short for K = " + std::to_string(K));
    IdentityReport rep;
    const int n = r.n(), m = r.m(), R = s.rep.dim;
    const SparseMatrix w = kron(SparseMatrix::identity(R), r.window(4));
    rep.window = w.cols();
    const int big = R * r.dim();
    // T[(i*n+j)*(K+2)+k] = coefficient of u^{-k}; k = 0 is delta_ij
    std::vector<SparseMatrix> T, TW;
    auto slot = [&](int i, int j, int k) { return static_cast<size_t>((i * n + j) * (K + 2) + k); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k <= K + 1; ++k) {
                T.push_back(k == 0 ? SparseMatrix::identity(big, i == j ? Rational(1) : Rational(0))
                                   : alpha_coefficient(r, s, i, j, k));
                TW.push_back(T.back() * w);
            }
    auto prod = [&](int i, int j, int a, int k, int l, int b) { return T[slot(i, j, a)] * TW[slot(k, l, b)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int a = 0; a <= K; ++a)
                        for (int b = 0; a + b <= K; ++b) {
                            SparseMatrix lhs = prod(i, j, a + 1, k, l, b) - prod(k, l, b, i, j, a + 1) -
                                               prod(i, j, a, k, l, b + 1) + prod(k, l, b + 1, i, j, a);
                            SparseMatrix rhs = prod(k, j, a, i, l, b) - prod(k, j, b, i, l, a);
                            record(rep, lhs, rhs,
                                   "Yangian relation of alpha at u^-" + std::to_string(a) + " v^-" + std::to_string(b) +
                                       ", (i,j,k,l)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                       std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
                        }
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
            SparseMatrix g = kron(s.rep.E(c, d), SparseMatrix::identity(r.dim())) + kron(SparseMatrix::identity(R), r.zeta(c, d));
            SparseMatrix gw = g * w;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 1; k <= K; ++k)
                        record(rep, g * TW[slot(i, j, k)] - T[slot(i, j, k)] * gw, SparseMatrix(big, w.cols()),
                               "commutant property at u^-" + std::to_string(k) + ", E_" + std::to_string(c + 1) +
                                   std::to_string(d + 1) + ", (i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    return rep;
}

}  // namespace yangian
