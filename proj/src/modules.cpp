#include "yangian/module.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

namespace {

void trim(MatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SparseMatrix matpoly_eval(const MatPoly& p, const Rational& x, int dim) {
    SparseMatrix acc(dim, dim);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc.combine(x, *it, Rational(1));
    return acc;
}

}  // namespace

MatPoly matpoly_times(const MatPoly& p, const Poly& s, int dim) {
    if (p.empty() || s.is_zero()) return {};
    MatPoly out(p.size() + s.coeffs().size() - 1, SparseMatrix(dim, dim));
    for (size_t a = 0; a < p.size(); ++a) {
        if (p[a].is_zero()) continue;
        for (size_t b = 0; b < s.coeffs().size(); ++b) {
            if (s.coeffs()[b].is_zero()) continue;
            out[a + b] = out[a + b].combine(Rational(1), p[a], s.coeffs()[b]);
        }
    }
    trim(out);
    return out;
}

namespace {

MatPoly add(MatPoly a, const MatPoly& b, int dim) {
    if (a.size() < b.size()) a.resize(b.size(), SparseMatrix(dim, dim));
    for (size_t k = 0; k < b.size(); ++k) a[k] = a[k] + b[k];
    trim(a);
    return a;
}

MatPoly kron_poly(const MatPoly& a, const MatPoly& b, int dim) {
    if (a.empty() || b.empty()) return {};
    MatPoly out(a.size() + b.size() - 1, SparseMatrix(dim, dim));
    for (size_t s = 0; s < a.size(); ++s) {
        if (a[s].is_zero()) continue;
        for (size_t t = 0; t < b.size(); ++t) {
            if (b[t].is_zero()) continue;
            out[s + t] = out[s + t] + kron(a[s], b[t]);
        }
    }
    trim(out);
    return out;
}

Rational binom(int k, int j) {
    Rational r(1);
    for (int t = 0; t < j; ++t) r = r * Rational(k - t) / Rational(t + 1);
    return r;
}

// T_ij(u) = delta_ij + ops[i][j] / (u + c)
YangianModule linear_module(int n, int dim, std::vector<std::string> labels, const Rational& c,
                            const std::vector<SparseMatrix>& ops) {
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatPoly& e = p[static_cast<size_t>(i * n + j)];
            const SparseMatrix& op = ops[static_cast<size_t>(i * n + j)];
            if (i == j)
                e = {SparseMatrix::identity(dim, c) + op, SparseMatrix::identity(dim)};
            else
                e = {op};
        }
    return YangianModule(n, dim, std::move(labels), std::move(p), Poly::linear(c));
}

std::string subscript(int a) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s = std::to_string(a), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

}  // namespace

YangianModule::YangianModule(int n, int dim, std::vector<std::string> basis, std::vector<MatPoly> numerators,
                             Poly den)
    : n_(n), dim_(dim), basis_(std::move(basis)), p_(std::move(numerators)), den_(std::move(den)) {
    if (n < 1) throw Error("module: n must be positive");
    if (dim < 1) throw Error("module: dimension must be positive");
    if (static_cast<int>(basis_.size()) != dim) throw Error("module: basis label count differs from dimension");
    if (static_cast<int>(p_.size()) != n * n) throw Error("module: expected n*n numerators");
    if (!den_.is_monic()) throw Error("module: denominator must be monic");
    const int deg = den_.degree();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatPoly& e = p_[static_cast<size_t>(i * n + j)];
            for (const auto& c : e)
                if (c.rows() != dim || c.cols() != dim) throw Error("module: coefficient shape mismatch");
            trim(e);
            if (static_cast<int>(e.size()) - 1 > deg) throw Error("module: T(u) does not tend to a constant");
            SparseMatrix top = static_cast<int>(e.size()) - 1 == deg ? e.back() : SparseMatrix(dim, dim);
            if (!(top == (i == j ? SparseMatrix::identity(dim) : SparseMatrix(dim, dim))))
                throw Error("module: T_ij(u) must tend to delta_ij at infinity");
        }
}

int YangianModule::numerator_degree() const {
    int d = -1;
    for (const auto& e : p_) d = std::max(d, static_cast<int>(e.size()) - 1);
    return d;
}

SparseMatrix YangianModule::eval_numerator(int i, int j, const Rational& u0) const {
    return matpoly_eval(numerator(i, j), u0, dim_);
}

SparseMatrix YangianModule::eval(int i, int j, const Rational& u0) const {
    Rational dv = den_.eval(u0);
    if (dv.is_zero()) throw Error("module: evaluation at a pole");
    return (Rational(1) / dv) * eval_numerator(i, j, u0);
}

std::vector<SparseMatrix> YangianModule::series(int i, int j, int order) const {
    const int deg = den_.degree();
    const MatPoly& p = numerator(i, j);
    auto c = [&](int k) {
        if (k < 0 || k >= static_cast<int>(p.size())) return SparseMatrix(dim_, dim_);
        return p[static_cast<size_t>(k)];
    };
    std::vector<SparseMatrix> t;
    for (int s = 0; s <= order; ++s) {
        SparseMatrix v = c(deg - s);
        for (int r = 1; r <= s; ++r) {
            Rational a = den_.coeff(deg - r);
            if (!a.is_zero()) v = v.combine(Rational(1), t[static_cast<size_t>(s - r)], -a);
        }
        t.push_back(std::move(v));
    }
    return t;
}

std::vector<std::vector<RatFunc>> YangianModule::entry_functions(int i, int j) const {
    const MatPoly& p = numerator(i, j);
    std::vector<std::vector<RatFunc>> out(static_cast<size_t>(dim_), std::vector<RatFunc>(static_cast<size_t>(dim_)));
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            std::vector<Rational> coeffs;
            for (const auto& m : p) coeffs.push_back(m.at(r, c));
            out[static_cast<size_t>(r)][static_cast<size_t>(c)] = ratfunc_normalize(Poly(coeffs), den_);
        }
    return out;
}

std::vector<SparseMatrix> YangianModule::generator_matrices() const {
    std::vector<SparseMatrix> out;
    for (const auto& e : p_)
        for (const auto& c : e)
            if (!c.is_zero()) out.push_back(c);
    return out;
}

bool same_action(const YangianModule& a, const YangianModule& b) {
    if (a.n() != b.n() || a.dim() != b.dim()) return false;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (matpoly_times(a.numerator(i, j), b.den(), a.dim()) != matpoly_times(b.numerator(i, j), a.den(), a.dim()))
                return false;
    return true;
}

YangianModule make_trivial(int n) {
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i * n + i)] = {SparseMatrix::identity(1)};
    return YangianModule(n, 1, {"1"}, std::move(p), Poly(1));
}

YangianModule make_vector(int n, const Rational& z, bool dual) {
    std::vector<SparseMatrix> ops;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ops.push_back(dual ? Rational(-1) * SparseMatrix::unit(n, n, j, i) : SparseMatrix::unit(n, n, i, j));
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return linear_module(n, n, std::move(labels), z, ops);
}

YangianModule make_omega(int n, const Rational& z, bool dual) {
    std::vector<SparseMatrix> ops;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ops.push_back(i == j ? SparseMatrix::identity(1, dual ? -1 : 1) : SparseMatrix(1, 1));
    return linear_module(n, 1, {"1"}, z, ops);
}

YangianModule make_phi(int theta, int n, int degree, const Rational& z, PhiVariant variant) {
    FockBasis basis(theta, n, degree);
    if (basis.size() == 0) throw Error("empty module: exterior degree exceeds n");
    Rational c = variant == PhiVariant::Prime ? Rational(theta) * (z - Rational(1)) : Rational(theta) * z;
    std::vector<SparseMatrix> ops;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            switch (variant) {
                case PhiVariant::Plain: ops.push_back(operator_matrix(basis, GlKind::XD, i, j)); break;
                case PhiVariant::Tilde: ops.push_back(operator_matrix(basis, GlKind::DX, i, j)); break;
                case PhiVariant::Prime:
                    ops.push_back(Rational(-1) * operator_matrix(basis, GlKind::XDrev, i, j));
                    break;
            }
        }
    return linear_module(n, basis.size(), basis.labels(), c, ops);
}

YangianModule tensor(const YangianModule& a, const YangianModule& b) {
    if (a.n() != b.n()) throw Error("tensor: modules over different n");
    const int n = a.n(), dim = a.dim() * b.dim();
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatPoly acc;
            for (int k = 0; k < n; ++k) acc = add(std::move(acc), kron_poly(a.numerator(i, k), b.numerator(k, j), dim), dim);
            p[static_cast<size_t>(i * n + j)] = std::move(acc);
        }
    std::vector<std::string> labels;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) labels.push_back(x + " ⊗ " + y);
    return YangianModule(n, dim, std::move(labels), std::move(p), a.den() * b.den());
}

YangianModule tensor(const std::vector<YangianModule>& factors) {
    if (factors.empty()) throw Error("tensor: no factors");
    YangianModule acc = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
    return acc;
}

YangianModule shift(const YangianModule& m, const Rational& z) {
    const Rational a = -z;
    const int n = m.n(), dim = m.dim();
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MatPoly& src = m.numerator(i, j);
            MatPoly out(src.size(), SparseMatrix(dim, dim));
            // C_k (u + a)^k contributes binom(k, t) a^(k - t) C_k to u^t
            for (size_t k = 0; k < src.size(); ++k) {
                Rational pw(1);
                for (size_t t = k + 1; t-- > 0;) {
                    Rational coef = binom(static_cast<int>(k), static_cast<int>(t)) * pw;
                    if (!coef.is_zero()) out[t] = out[t].combine(Rational(1), src[k], coef);
                    pw *= a;
                }
            }
            trim(out);
            p[static_cast<size_t>(i * n + j)] = std::move(out);
        }
    return YangianModule(n, dim, m.basis(), std::move(p), m.den().shifted(a));
}

YangianModule twist_similarity(const YangianModule& m, const RatFunc& g) {
    if (!g.limit_at_infinity_is(Rational(1))) throw Error("twist_similarity: g(u) must tend to 1 at infinity");
    const int n = m.n();
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p[static_cast<size_t>(i * n + j)] = matpoly_times(m.numerator(i, j), g.num(), m.dim());
    return YangianModule(n, m.dim(), m.basis(), std::move(p), m.den() * g.den());
}

YangianModule submodule(const YangianModule& m, const std::vector<Vector>& basis) {
    if (basis.empty()) throw Error("submodule: empty basis");
    EchelonForm ef = row_echelon(RatMatrix::from_rows(basis, m.dim()));
    const int k = ef.rank();
    std::vector<Vector> rows;
    for (int r = 0; r < k; ++r) rows.emplace_back(ef.reduced.row(r).begin(), ef.reduced.row(r).end());
    // coordinates of w in the echelon basis: w at the pivot columns
    auto coords = [&](const Vector& w) {
        Vector c(static_cast<size_t>(k));
        Vector rem = w;
        for (int r = 0; r < k; ++r) {
            c[static_cast<size_t>(r)] = w[static_cast<size_t>(ef.pivots[static_cast<size_t>(r)])];
            if (c[static_cast<size_t>(r)].is_zero()) continue;
            for (size_t t = 0; t < rem.size(); ++t) rem[t] -= c[static_cast<size_t>(r)] * rows[static_cast<size_t>(r)][t];
        }
        for (const auto& x : rem)
            if (!x.is_zero()) throw Error("submodule: subspace is not invariant");
        return c;
    };
    const int n = m.n();
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& cm : m.numerator(i, j)) {
                SparseMatrix sub(k, k);
                for (int t = 0; t < k; ++t) {
                    Vector img = cm.apply(rows[static_cast<size_t>(t)]);
                    Vector c = coords(img);
                    for (int r = 0; r < k; ++r)
                        if (!c[static_cast<size_t>(r)].is_zero()) sub.add(r, t, c[static_cast<size_t>(r)]);
                }
                p[static_cast<size_t>(i * n + j)].push_back(std::move(sub));
            }
        }
    std::vector<std::string> labels;
    for (int t = 1; t <= k; ++t) labels.push_back("v" + std::to_string(t));
    return YangianModule(n, k, std::move(labels), std::move(p), m.den());
}

bool weight_shift_holds(const YangianModule& m) {
    const int n = m.n();
    for (int k = 0; k < n; ++k) {
        SparseMatrix h = m.series(k, k, 1)[1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational w = Rational((k == i) - (k == j));
                for (const auto& c : m.numerator(i, j))
                    if (!(commutator(h, c) == w * c)) return false;
            }
    }
    return true;
}

Rational ModuleParams::lambda(int a) const {
    const Rational half_n = Rational(theta * n, 2);
    const Rational& mu_a = mu[static_cast<size_t>(a - 1)];
    const int nu_a = nu[static_cast<size_t>(a - 1)];
    return is_p_type(a) ? mu_a - Rational(nu_a) - half_n : mu_a + Rational(nu_a) + half_n;
}

int ModuleParams::nu_prime(int a) const {
    const int nu_a = nu[static_cast<size_t>(a - 1)];
    return is_p_type(a) ? n - nu_a : nu_a;
}

Rational ModuleParams::mu_star(int a) const {
    return mu[static_cast<size_t>(a - 1)] + rho(a) - Rational(theta * n * delta_prime(a), 2);
}

Rational ModuleParams::lambda_star(int a) const {
    return lambda(a) + rho(a) + Rational(n * delta_prime(a), 2);
}

void ModuleParams::validate(bool require_generic) const {
    if (theta != 1 && theta != -1) throw Error("theta must be +1 or -1");
    if (n < 1) throw Error("n must be positive");
    if (p < 0 || q < 0) throw Error("p and q must be nonnegative");
    if (m() < 1) throw Error("p + q must be positive");
    if (static_cast<int>(mu.size()) != m()) throw Error("mu must have p + q entries");
    if (static_cast<int>(nu.size()) != m()) throw Error("nu must have p + q entries");
    for (int a = 1; a <= m(); ++a) {
        int v = nu[static_cast<size_t>(a - 1)];
        if (v < 0) throw Error("nu entries must be nonnegative");
        if (theta < 0 && v > n) throw Error("theta = -1 requires every nu_a in {0, ..., n}");
    }
    if (!require_generic) return;
    for (int a = 1; a <= m(); ++a)
        for (int b = a + 1; b <= m(); ++b)
            if ((mu[static_cast<size_t>(a - 1)] - mu[static_cast<size_t>(b - 1)]).is_integer())
                throw Error("genericity violated: μ" + subscript(a) + "−μ" + subscript(b) + " ∈ ℤ");
}

Vector factor_hw_vector(const ModuleParams& params, int a) {
    const int nu_a = params.nu[static_cast<size_t>(a - 1)];
    const int n = params.n;
    FockBasis basis(params.theta, n, nu_a);
    Monomial mono(static_cast<size_t>(n), 0);
    const bool p_type = params.is_p_type(a);
    if (params.theta > 0) {
        mono[static_cast<size_t>(p_type ? n - 1 : 0)] = nu_a;
    } else {
        for (int t = 0; t < nu_a; ++t) mono[static_cast<size_t>(p_type ? n - 1 - t : t)] = 1;
    }
    Vector v(static_cast<size_t>(basis.size()));
    v[static_cast<size_t>(basis.index_of(mono))] = 1;
    return v;
}

YangianModule standard_factor(const ModuleParams& params, int a, bool psi_form) {
    PhiVariant variant = params.is_p_type(a) ? (psi_form ? PhiVariant::Tilde : PhiVariant::Prime) : PhiVariant::Plain;
    return make_phi(params.theta, params.n, params.nu[static_cast<size_t>(a - 1)], params.z(a), variant);
}

RatFunc omega_factor(const ModuleParams& params) {
    RatFunc g(Rational(1));
    const Rational th(params.theta);
    for (int a = 1; a <= params.p; ++a) {
        Rational c = th * params.z(a);
        g = g * ratfunc_normalize(Poly::linear(c - th), Poly::linear(c));
    }
    return g;
}

StandardModule build_standard(const ModuleParams& params, bool require_generic) {
    params.validate(require_generic);
    StandardModule s;
    s.params = params;
    for (int a = 1; a <= params.m(); ++a) {
        s.psi_factors.push_back(standard_factor(params, a, true));
        s.phi_factors.push_back(standard_factor(params, a, false));
        s.factor_hw.push_back(factor_hw_vector(params, a));
    }
    s.psi_form = tensor(s.psi_factors);
    s.phi_form = tensor(s.phi_factors);
    s.hw_vector = s.factor_hw.front();
    for (size_t k = 1; k < s.factor_hw.size(); ++k) s.hw_vector = kron(s.hw_vector, s.factor_hw[k]);
    return s;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

}  // namespace yangian
