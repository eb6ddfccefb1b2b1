#include "yangian/intertwine.hpp"

#include "yangian/verify.hpp"

#include <algorithm>
#include <map>

namespace yangian {

namespace {

// Diagonal of every T_kk^{(1)}, or nothing if one of them is not diagonal.
std::optional<std::vector<std::vector<Rational>>> diagonal_weights(const YangianModule& m) {
    const int n = m.n(), dim = m.dim();
    std::vector<std::vector<Rational>> w(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        SparseMatrix h = m.series(k, k, 1)[1];
        for (int r = 0; r < dim; ++r) {
            const auto& row = h.row(r);
            if (row.size() > 1 || (row.size() == 1 && row.front().first != r)) return std::nullopt;
            if (!row.empty()) w[static_cast<size_t>(r)][static_cast<size_t>(k)] = row.front().second;
        }
    }
    return w;
}

SparseMatrix::Row to_row(const Vector& v) {
    SparseMatrix::Row r;
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) r.emplace_back(static_cast<int>(k), v[k]);
    return r;
}

// Scalar c with w = c * t, if w is proportional to the nonzero vector t.
std::optional<Rational> proportionality(const Vector& w, const Vector& t) {
    size_t p = 0;
    while (p < t.size() && t[p].is_zero()) ++p;
    if (p == t.size()) throw Error("proportionality: zero reference vector");
    Rational c = w[p] / t[p];
    for (size_t k = 0; k < t.size(); ++k)
        if (w[k] != c * t[k]) return std::nullopt;
    return c;
}

std::vector<int> identity_order(int m) {
    std::vector<int> o(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) o[static_cast<size_t>(a)] = a + 1;
    return o;
}

int nu_of(const ModuleParams& params, int a) { return params.nu[static_cast<size_t>(a - 1)]; }

int factor_dim(const ModuleParams& params, int a) {
    return FockBasis(params.theta, params.n, nu_of(params, a)).size();
}

// Sign picked up by the odd hw factors when rearranged into `order`.
int koszul_sign(const ModuleParams& params, const std::vector<int>& order) {
    if (params.theta > 0) return 1;
    int parity = 0;
    for (size_t k = 0; k < order.size(); ++k)
        for (size_t l = k + 1; l < order.size(); ++l)
            if (order[k] > order[l]) parity += nu_of(params, order[k]) * nu_of(params, order[l]);
    return parity % 2 ? -1 : 1;
}

struct LocalStep {
    SparseMatrix matrix;  // on the full arrangement
    Rational scalar;
    std::vector<int> order;  // arrangement after the step
};

LocalStep local_step(const ModuleParams& params, const std::vector<int>& order, int a) {
    const int m = static_cast<int>(order.size());
    if (a < 1 || a >= m) throw Error("step position " + std::to_string(a) + " outside 1.." + std::to_string(m - 1));
    const int b = order[static_cast<size_t>(a - 1)], c = order[static_cast<size_t>(a)];
    if (b > c) throw Error("step at position " + std::to_string(a) + " undoes an inversion (word is not reduced)");
    YangianModule fb = standard_factor(params, b, false), fc = standard_factor(params, c, false);
    std::vector<SparseMatrix> hom = hom_space(tensor(fb, fc), tensor(fc, fb));
    if (hom.size() != 1)
        throw Error("step: intertwiner space has dimension " + std::to_string(hom.size()) + ", expected 1");
    SparseMatrix r = hom.front();
    const Vector vb = factor_hw_vector(params, b), vc = factor_hw_vector(params, c);
    Vector swapped = kron(vc, vb);
    if (params.theta < 0 && (nu_of(params, b) * nu_of(params, c)) % 2)
        for (auto& x : swapped) x = -x;
    auto kappa = proportionality(r.apply(kron(vb, vc)), swapped);
    if (!kappa) throw Error("step: highest-weight vector not mapped to the swapped line");
    if (kappa->is_zero()) throw Error("resonant parameters");
    const Rational frac = step_fraction(params, b, c);
    r = (frac / *kappa) * r;

    int left = 1, right = 1;
    for (int k = 0; k < a - 1; ++k) left *= factor_dim(params, order[static_cast<size_t>(k)]);
    for (int k = a + 1; k < m; ++k) right *= factor_dim(params, order[static_cast<size_t>(k)]);
    LocalStep out;
    out.matrix = kron(kron(SparseMatrix::identity(left), r), SparseMatrix::identity(right));
    out.scalar = frac;
    out.order = order;
    std::swap(out.order[static_cast<size_t>(a - 1)], out.order[static_cast<size_t>(a)]);
    return out;
}

}  // namespace

std::vector<SparseMatrix> hom_space(const YangianModule& source, const YangianModule& target) {
    if (source.n() != target.n()) throw Error("hom_space: modules over different n");
    const int n = source.n(), d1 = source.dim(), d2 = target.dim();

    // unknowns: entries (r, c) of A allowed by the weights
    std::vector<int> index(static_cast<size_t>(d2) * d1, -1);
    std::vector<std::pair<int, int>> pos;
    auto w1 = diagonal_weights(source), w2 = diagonal_weights(target);
    for (int r = 0; r < d2; ++r)
        for (int c = 0; c < d1; ++c) {
            if (w1 && w2 && (*w2)[static_cast<size_t>(r)] != (*w1)[static_cast<size_t>(c)]) continue;
            index[static_cast<size_t>(r) * d1 + c] = static_cast<int>(pos.size());
            pos.emplace_back(r, c);
        }
    const int unknowns = static_cast<int>(pos.size());
    if (unknowns == 0) return {};
    auto idx = [&](int r, int c) { return index[static_cast<size_t>(r) * d1 + c]; };

    SparseEliminator el(unknowns);
    // off-diagonal generators constrain the most, so they go first
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);

    for (auto [i, j] : pairs) {
        MatPoly x = matpoly_times(source.numerator(i, j), target.den(), d1);
        MatPoly y = matpoly_times(target.numerator(i, j), source.den(), d2);
        const size_t len = std::max(x.size(), y.size());
        for (size_t t = 0; t < len; ++t) {
            // A X_t - Y_t A = 0
            SparseMatrix xt = t < x.size() ? x[t].transpose() : SparseMatrix(d1, d1);
            const SparseMatrix yt = t < y.size() ? y[t] : SparseMatrix(d2, d2);
            for (int r = 0; r < d2; ++r)
                for (int c = 0; c < d1; ++c) {
                    std::map<int, Rational> eq;
                    for (const auto& [cp, v] : xt.row(c)) {
                        int k = idx(r, cp);
                        if (k >= 0) eq[k] += v;
                    }
                    for (const auto& [rp, v] : yt.row(r)) {
                        int k = idx(rp, c);
                        if (k >= 0) eq[k] -= v;
                    }
                    SparseMatrix::Row row;
                    for (auto& [k, v] : eq)
                        if (!v.is_zero()) row.emplace_back(k, v);
                    if (row.empty()) continue;
                    el.insert(std::move(row));
                    if (el.rank() == unknowns) return {};
                }
        }
    }
    std::vector<SparseMatrix> out;
    for (const auto& v : el.nullspace()) {
        SparseMatrix a(d2, d1);
        for (int k = 0; k < unknowns; ++k)
            if (!v[static_cast<size_t>(k)].is_zero())
                a.add(pos[static_cast<size_t>(k)].first, pos[static_cast<size_t>(k)].second, v[static_cast<size_t>(k)]);
        out.push_back(std::move(a));
    }
    return out;
}

ZetaFactor zeta_factor(const ModuleParams& params, int b, int c) {
    if (!(1 <= b && b < c && c <= params.m())) throw Error("zeta_factor: need 1 <= b < c <= m");
    ZetaFactor z;
    z.b = b;
    z.c = c;
    z.kind = params.is_p_type(c) ? RootCase::PP : (params.is_p_type(b) ? RootCase::PQ : RootCase::QQ);
    const Rational dm = params.mu_star(b) - params.mu_star(c);
    const Rational dl = params.lambda_star(b) - params.lambda_star(c);
    Rational num(1), den(1);
    if (params.theta > 0) {
        switch (z.kind) {
        case RootCase::PP:
            for (int r = 1; r <= nu_of(params, b); ++r) num *= dm - Rational(r), den *= dl + Rational(r);
            break;
        case RootCase::QQ:
            for (int r = 1; r <= nu_of(params, c); ++r) num *= dm - Rational(r), den *= dl + Rational(r);
            break;
        case RootCase::PQ:
            if (params.n == 1)
                for (int r = 1; r <= std::min(nu_of(params, b), nu_of(params, c)); ++r)
                    num *= dm - Rational(r - 1), den *= dl + Rational(r - 1);
            break;
        }
    } else if (params.nu_prime(b) < params.nu_prime(c)) {
        num = dl;
        den = dm;
    }
    if (den.is_zero()) throw Error("resonant parameters");
    z.value = num / den;
    return z;
}

Rational step_fraction(const ModuleParams& params, int b, int c) {
    const Rational h = params.mu_star(c) - params.mu_star(b) - Rational(1);
    const int s = nu_of(params, b), t = nu_of(params, c);
    const bool pb = params.is_p_type(b), pc = params.is_p_type(c);
    Rational num(1), den(1);
    if (params.theta > 0) {
        if (pb && pc) {
            for (int r = 1; r <= s; ++r) num *= h + Rational(r + 1), den *= h + Rational(r - t);
        } else if (!pb && !pc) {
            for (int r = 1; r <= t; ++r) num *= h + Rational(r + 1), den *= h + Rational(r - s);
        } else if (params.n == 1) {
            for (int r = 1; r <= s; ++r) num *= h + Rational(r), den *= h + Rational(r + t);
        }
    } else {
        int shift = 0;
        if (pb && pc && s > t) shift = s - t;
        else if (!pb && !pc && s < t) shift = t - s;
        else if (pb != pc && s + t > params.n) shift = s + t - params.n;
        if (shift > 0) {
            num = h + Rational(shift + 1);
            den = h + Rational(1);
        }
    }
    if (den.is_zero()) throw Error("resonant parameters");
    return num / den;
}

std::vector<std::pair<int, int>> inversion_sequence(int m, const std::vector<int>& word) {
    std::vector<int> arr = identity_order(m);
    std::vector<std::pair<int, int>> out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int a = *it;
        if (a < 1 || a >= m) throw Error("word letter " + std::to_string(a) + " outside 1.." + std::to_string(m - 1));
        int x = arr[static_cast<size_t>(a - 1)], y = arr[static_cast<size_t>(a)];
        out.emplace_back(std::min(x, y), std::max(x, y));
        std::swap(arr[static_cast<size_t>(a - 1)], arr[static_cast<size_t>(a)]);
    }
    return out;
}

bool is_reduced(int m, const std::vector<int>& word) {
    std::vector<int> arr = identity_order(m);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int a = *it;
        if (a < 1 || a >= m) return false;
        if (arr[static_cast<size_t>(a - 1)] > arr[static_cast<size_t>(a)]) return false;
        std::swap(arr[static_cast<size_t>(a - 1)], arr[static_cast<size_t>(a)]);
    }
    return true;
}

YangianModule arranged_module(const ModuleParams& params, const std::vector<int>& order) {
    std::vector<YangianModule> f;
    for (int a : order) f.push_back(standard_factor(params, a, false));
    return tensor(f);
}

Vector arranged_hw_vector(const ModuleParams& params, const std::vector<int>& order) {
    Vector v{Rational(koszul_sign(params, order))};
    for (int a : order) v = kron(v, factor_hw_vector(params, a));
    return v;
}

Intertwiner step(const ModuleParams& params, const std::vector<int>& order, int a) {
    LocalStep s = local_step(params, order, a);
    Intertwiner op;
    op.source = arranged_module(params, order);
    op.target = arranged_module(params, s.order);
    op.matrix = std::move(s.matrix);
    op.hw_scalar = s.scalar;
    op.word = {a};
    op.order = std::move(s.order);
    return op;
}

Intertwiner step(const ModuleParams& params, int a) { return step(params, identity_order(params.m()), a); }

Intertwiner compose_word(const ModuleParams& params, const std::vector<int>& word) {
    const int m = params.m();
    if (!is_reduced(m, word)) throw Error("word is not reduced");
    Intertwiner op;
    op.word = word;
    op.order = identity_order(m);
    op.source = arranged_module(params, op.order);
    int dim = op.source.dim();
    op.matrix = SparseMatrix::identity(dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        LocalStep s = local_step(params, op.order, *it);
        op.matrix = s.matrix * op.matrix;
        op.hw_scalar *= s.scalar;
        op.order = std::move(s.order);
    }
    op.target = arranged_module(params, op.order);
    return op;
}

HwImageReport check_hw_image(const Intertwiner& op, const ModuleParams& params) {
    HwImageReport rep;
    const int m = params.m();
    std::vector<std::pair<int, int>> roots;
    if (!op.word.empty()) {
        roots = inversion_sequence(m, op.word);
    } else {
        for (size_t k = 0; k < op.order.size(); ++k)
            for (size_t l = k + 1; l < op.order.size(); ++l)
                if (op.order[k] > op.order[l]) roots.emplace_back(op.order[l], op.order[k]);
    }
    rep.expected = Rational(1);
    for (auto [b, c] : roots) {
        rep.factors.push_back(zeta_factor(params, b, c));
        rep.expected *= rep.factors.back().value;
    }
    Vector img = op.matrix.apply(arranged_hw_vector(params, identity_order(m)));
    auto c = proportionality(img, arranged_hw_vector(params, op.order));
    rep.proportional = c.has_value();
    if (c) rep.observed = *c;
    rep.pass = rep.proportional && rep.observed == rep.expected;
    return rep;
}

Intertwiner raw_swap(const ModuleParams& params) {
    params.validate(false);
    if (params.m() != 2) throw Error("raw_swap: needs exactly two factors");
    Intertwiner op;
    op.source = arranged_module(params, {1, 2});
    op.target = arranged_module(params, {2, 1});
    std::vector<SparseMatrix> hom = hom_space(op.source, op.target);
    if (hom.size() != 1)
        throw Error("raw_swap: intertwiner space has dimension " + std::to_string(hom.size()) + ", expected 1");
    op.matrix = hom.front();
    op.word = {1};
    op.order = {2, 1};
    auto c = proportionality(op.matrix.apply(arranged_hw_vector(params, {1, 2})), arranged_hw_vector(params, {2, 1}));
    op.hw_scalar = c ? *c : Rational(0);
    return op;
}

YangianModule quotient_module(const YangianModule& m, const std::vector<Vector>& sub) {
    const int dim = m.dim();
    if (sub.empty()) return m;
    EchelonForm ef = row_echelon(RatMatrix::from_rows(sub, dim));
    const int k = ef.rank();
    if (k == dim) throw Error("quotient_module: subspace is the whole module");
    std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
    for (int p : ef.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> keep;
    for (int c = 0; c < dim; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) keep.push_back(c);
    auto reduce = [&](Vector w) {
        for (int r = 0; r < k; ++r) {
            const Rational f = w[static_cast<size_t>(ef.pivots[static_cast<size_t>(r)])];
            if (f.is_zero()) continue;
            auto row = ef.reduced.row(r);
            for (int t = 0; t < dim; ++t)
                if (!row[static_cast<size_t>(t)].is_zero()) w[static_cast<size_t>(t)] -= f * row[static_cast<size_t>(t)];
        }
        return w;
    };
    const int qd = static_cast<int>(keep.size());
    const int n = m.n();
    std::vector<MatPoly> p(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& cm : m.numerator(i, j)) {
                SparseMatrix q(qd, qd);
                for (int t = 0; t < qd; ++t) {
                    Vector e(static_cast<size_t>(dim));
                    e[static_cast<size_t>(keep[static_cast<size_t>(t)])] = 1;
                    Vector img = reduce(cm.apply(e));
                    for (int r = 0; r < qd; ++r)
                        if (!img[static_cast<size_t>(keep[static_cast<size_t>(r)])].is_zero())
                            q.add(r, t, img[static_cast<size_t>(keep[static_cast<size_t>(r)])]);
                }
                p[static_cast<size_t>(i * n + j)].push_back(std::move(q));
            }
    std::vector<std::string> labels;
    for (int c : keep) labels.push_back("[" + m.basis()[static_cast<size_t>(c)] + "]");
    return YangianModule(n, qd, std::move(labels), std::move(p), m.den());
}

YangianModule image_module(const SparseMatrix& a, const YangianModule& target) {
    SparseMatrix at = a.transpose();
    std::vector<Vector> cols;
    for (int c = 0; c < at.rows(); ++c) {
        if (at.row(c).empty()) continue;
        Vector v(static_cast<size_t>(target.dim()));
        for (const auto& [r, x] : at.row(c)) v[static_cast<size_t>(r)] = x;
        cols.push_back(std::move(v));
    }
    return submodule(target, cols);
}

QuotientModule kernel_quotient(const Intertwiner& op) {
    QuotientModule out;
    out.parent = op.source;
    out.kernel_basis = nullspace(op.matrix.to_dense());
    const int k = static_cast<int>(out.kernel_basis.size());
    const int dim = op.source.dim();
    out.kernel_invariant = true;
    if (k > 0) {
        for (const auto& g : op.source.generator_matrices()) {
            SparseEliminator el(dim);
            for (const auto& v : out.kernel_basis) el.insert(to_row(v));
            for (const auto& v : out.kernel_basis)
                if (el.insert(to_row(g.apply(v)))) {
                    out.kernel_invariant = false;
                    break;
                }
            if (!out.kernel_invariant) break;
        }
    }
    if (k < dim && out.kernel_invariant) {
        out.quotient = quotient_module(op.source, out.kernel_basis);
        YangianModule image = image_module(op.matrix, op.target);
        out.quotient_matches_image = modules_isomorphic(out.quotient, image).has_value();
    }
    return out;
}

int cyclic_span_dim(const YangianModule& m, const Vector& v) {
    const std::vector<SparseMatrix> gens = m.generator_matrices();
    SparseEliminator el(m.dim());
    std::vector<Vector> queue;
    if (el.insert(to_row(v))) queue.push_back(v);
    for (size_t h = 0; h < queue.size() && el.rank() < m.dim(); ++h)
        for (const auto& g : gens) {
            Vector w = g.apply(queue[h]);
            if (el.insert(to_row(w))) queue.push_back(std::move(w));
        }
    return el.rank();
}

IrreducibilityVerdict irreducibility_test(const YangianModule& m) {
    IrreducibilityVerdict v;
    v.endomorphism_dim = static_cast<int>(hom_space(m, m).size());
    HighestWeightData hw = highest_weight(m);
    v.highest_weight_dim = static_cast<int>(hw.vectors.size());
    if (v.highest_weight_dim == 1) v.cyclic_span_dim = cyclic_span_dim(m, hw.vectors.front());
    v.irreducible = v.endomorphism_dim == 1 && v.highest_weight_dim == 1 && v.cyclic_span_dim == m.dim();
    return v;
}

}  // namespace yangian
