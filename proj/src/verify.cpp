#include "yangian/verify.hpp"

#include "yangian/intertwine.hpp"

#include <map>
#include <random>
#include <sstream>

namespace yangian {

namespace {

// `count` integer points 10, 11, ... skipping roots of every given polynomial.
std::vector<Rational> grid_points(int count, const std::vector<Poly>& avoid) {
    std::vector<Rational> pts;
    for (long x = 10; static_cast<int>(pts.size()) < count; ++x) {
        bool ok = true;
        for (const auto& p : avoid)
            if (p.eval(Rational(x)).is_zero()) ok = false;
        if (ok) pts.emplace_back(x);
    }
    return pts;
}

std::optional<std::pair<int, int>> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix d = a - b;
    for (int r = 0; r < d.rows(); ++r)
        if (!d.row(r).empty()) return std::make_pair(r, d.row(r).front().first);
    return std::nullopt;
}

}  // namespace

std::string RttWitness::str() const {
    std::ostringstream os;
    os << "(i,j,k,l)=(" << i << "," << j << "," << k << "," << l << ") at (u,v)=(" << u0 << "," << v0
       << "), entry (" << row + 1 << "," << col + 1 << "): lhs=" << lhs << " rhs=" << rhs;
    return os.str();
}

RttReport check_rtt(const YangianModule& m) {
    const int n = m.n();
    const int D = 2 * m.den().degree() + 1;
    RttReport rep;
    rep.grid_size = D + 2;
    std::vector<Rational> pts = grid_points(rep.grid_size, {m.den()});
    const int G = static_cast<int>(pts.size());
    // T[g][i*n+j] = T_ij(pts[g])
    std::vector<std::vector<SparseMatrix>> T(static_cast<size_t>(G));
    for (int g = 0; g < G; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T[static_cast<size_t>(g)].push_back(m.eval(i, j, pts[static_cast<size_t>(g)]));
    const int nn = n * n;

    for (int a = 0; a < G; ++a)
        for (int b = a + 1; b < G; ++b) {
            // prod[x][y] = T_x(pts[a]) T_y(pts[b]); rev[x][y] = T_x(pts[b]) T_y(pts[a])
            std::vector<SparseMatrix> prod(static_cast<size_t>(nn * nn)), rev(static_cast<size_t>(nn * nn));
            for (int x = 0; x < nn; ++x)
                for (int y = 0; y < nn; ++y) {
                    prod[static_cast<size_t>(x * nn + y)] = T[static_cast<size_t>(a)][static_cast<size_t>(x)] * T[static_cast<size_t>(b)][static_cast<size_t>(y)];
                    rev[static_cast<size_t>(x * nn + y)] = T[static_cast<size_t>(b)][static_cast<size_t>(x)] * T[static_cast<size_t>(a)][static_cast<size_t>(y)];
                }
            for (int orient = 0; orient < 2; ++orient) {
                // uv[x][y] = T_x(u) T_y(v), vu[x][y] = T_x(v) T_y(u)
                const auto& uv = orient == 0 ? prod : rev;
                const auto& vu = orient == 0 ? rev : prod;
                const Rational& u0 = pts[static_cast<size_t>(orient == 0 ? a : b)];
                const Rational& v0 = pts[static_cast<size_t>(orient == 0 ? b : a)];
                const Rational diff = u0 - v0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            for (int l = 0; l < n; ++l) {
                                const int ij = i * n + j, kl = k * n + l, kj = k * n + j, il = i * n + l;
                                SparseMatrix lhs = diff * (uv[static_cast<size_t>(ij * nn + kl)] - vu[static_cast<size_t>(kl * nn + ij)]);
                                SparseMatrix rhs = uv[static_cast<size_t>(kj * nn + il)] - vu[static_cast<size_t>(kj * nn + il)];
                                if (lhs == rhs) continue;
                                auto pos = first_difference(lhs, rhs);
                                rep.pass = false;
                                rep.witness = RttWitness{i + 1, j + 1, k + 1, l + 1, u0, v0, pos->first, pos->second,
                                                         lhs.at(pos->first, pos->second), rhs.at(pos->first, pos->second)};
                                return rep;
                            }
            }
        }
    return rep;
}

bool rtt_matrix_form_holds(const YangianModule& m, const Rational& u0, const Rational& v0) {
    if (u0 == v0) throw Error("rtt_matrix_form_holds: u0 must differ from v0");
    const int n = m.n(), dim = m.dim();
    const int big = n * n * dim;
    SparseMatrix t1(big, big), t2(big, big), perm(big, big);
    SparseMatrix In = SparseMatrix::identity(n), Id = SparseMatrix::identity(dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseMatrix e = SparseMatrix::unit(n, n, i, j);
            t1 = t1 + kron(kron(e, In), m.eval(i, j, u0));
            t2 = t2 + kron(kron(In, e), m.eval(i, j, v0));
            perm = perm + kron(kron(e, SparseMatrix::unit(n, n, j, i)), Id);
        }
    SparseMatrix r = SparseMatrix::identity(big).combine(1, perm, Rational(-1) / (u0 - v0));
    return r * t1 * t2 == t2 * t1 * r;
}

std::optional<std::vector<std::vector<int>>> weight_blocks(const YangianModule& m) {
    const int n = m.n(), dim = m.dim();
    std::vector<std::vector<Rational>> w(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        SparseMatrix h = m.series(k, k, 1)[1];
        for (int r = 0; r < dim; ++r) {
            const auto& row = h.row(r);
            if (row.size() > 1 || (row.size() == 1 && row.front().first != r)) return std::nullopt;
            w[static_cast<size_t>(r)][static_cast<size_t>(k)] = row.empty() ? Rational(0) : row.front().second;
        }
    }
    std::map<std::vector<Rational>, std::vector<int>> groups;
    for (int r = 0; r < dim; ++r) groups[w[static_cast<size_t>(r)]].push_back(r);
    std::vector<std::vector<int>> out;
    for (auto& [key, idx] : groups) out.push_back(std::move(idx));
    return out;
}

std::vector<Vector> joint_kernel(const std::vector<SparseMatrix>& ops, int dim,
                                 const std::optional<std::vector<std::vector<int>>>& blocks) {
    std::vector<std::vector<int>> groups;
    if (blocks) {
        groups = *blocks;
    } else {
        groups.emplace_back();
        for (int r = 0; r < dim; ++r) groups.back().push_back(r);
    }
    std::vector<Vector> found;
    for (const auto& g : groups) {
        std::vector<Vector> basis;
        for (int r : g) {
            Vector v(static_cast<size_t>(dim));
            v[static_cast<size_t>(r)] = 1;
            basis.push_back(std::move(v));
        }
        for (const auto& op : ops) {
            if (basis.empty()) break;
            const int k = static_cast<int>(basis.size());
            std::vector<Vector> images;
            bool all_zero = true;
            for (const auto& v : basis) {
                images.push_back(op.apply(v));
                for (const auto& x : images.back())
                    if (!x.is_zero()) all_zero = false;
            }
            if (all_zero) continue;
            SparseEliminator el(k);
            for (int r = 0; r < dim; ++r) {
                SparseMatrix::Row row;
                for (int c = 0; c < k; ++c) {
                    const Rational& x = images[static_cast<size_t>(c)][static_cast<size_t>(r)];
                    if (!x.is_zero()) row.emplace_back(c, x);
                }
                if (!row.empty()) el.insert(std::move(row));
                if (el.rank() == k) break;
            }
            std::vector<Vector> next;
            for (const auto& coef : el.nullspace()) {
                Vector v(static_cast<size_t>(dim));
                for (int c = 0; c < k; ++c)
                    if (!coef[static_cast<size_t>(c)].is_zero())
                        for (int t = 0; t < dim; ++t) v[static_cast<size_t>(t)] += coef[static_cast<size_t>(c)] * basis[static_cast<size_t>(c)][static_cast<size_t>(t)];
                next.push_back(std::move(v));
            }
            basis = std::move(next);
        }
        for (auto& v : basis) found.push_back(std::move(v));
    }
    return span_basis(found, dim);
}

std::optional<std::vector<RatFunc>> eigen_series(const YangianModule& m, const Vector& v) {
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return std::nullopt;
    std::vector<RatFunc> out;
    for (int i = 0; i < m.n(); ++i) {
        std::vector<Rational> c;
        for (const auto& cm : m.numerator(i, i)) {
            Vector w = cm.apply(v);
            Rational s = w[p] / v[p];
            for (size_t t = 0; t < v.size(); ++t)
                if (w[t] != s * v[t]) return std::nullopt;
            c.push_back(s);
        }
        out.push_back(ratfunc_normalize(Poly(c), m.den()));
    }
    return out;
}

HighestWeightData highest_weight(const YangianModule& m) {
    std::vector<SparseMatrix> ops;
    for (int i = 0; i < m.n(); ++i)
        for (int j = i + 1; j < m.n(); ++j)
            for (const auto& c : m.numerator(i, j))
                if (!c.is_zero()) ops.push_back(c);
    HighestWeightData hw;
    hw.vectors = joint_kernel(ops, m.dim(), weight_blocks(m));
    for (const auto& v : hw.vectors) hw.eigen.push_back(eigen_series(m, v));
    return hw;
}

std::vector<RatFunc> standard_hw_eigenvalues(const ModuleParams& params, bool corrected) {
    auto ratio = [](const Rational& a, const Rational& b) { return ratfunc_normalize(Poly::linear(a), Poly::linear(b)); };
    std::vector<RatFunc> out;
    for (int i = 1; i <= params.n; ++i) {
        RatFunc f(Rational(1));
        for (int a = 1; a <= params.m(); ++a) {
            const Rational z = params.z(a);
            const int nu = params.nu[static_cast<size_t>(a - 1)];
            if (params.theta > 0) {
                if (i == 1 && !params.is_p_type(a)) f = f * ratio(z + Rational(nu), z);
                if (i == params.n && params.is_p_type(a)) f = f * ratio(z - Rational(nu + 1), z);
                if (corrected && i < params.n && params.is_p_type(a)) f = f * ratio(z - Rational(1), z);
            } else if (params.nu_prime(a) >= i) {
                f = f * ratio(Rational(1) - z, -z);
            }
        }
        out.push_back(f);
    }
    return out;
}

Poly drinfeld_from_ratio(const RatFunc& ratio) {
    const std::string what = "not extractable: ratio " + ratio.str();
    if (!ratio.limit_at_infinity_is(Rational(1))) throw Error(what);
    RationalRoots nr = poly_rational_roots(ratio.num()), dr = poly_rational_roots(ratio.den());
    if (nr.residual_degree || dr.residual_degree) throw Error(what);
    // multiplicity of root a + 1/2 of P = sum over a' <= a in the class of a of (#num roots - #den roots)
    std::map<Rational, std::map<Rational, int>> classes;
    for (const auto& a : nr.roots) classes[a - floor_of(a)][a] += 1;
    for (const auto& b : dr.roots) classes[b - floor_of(b)][b] -= 1;
    std::vector<Rational> roots;
    const Rational half(1, 2);
    for (const auto& [cls, ev] : classes) {
        const Rational lo = ev.begin()->first, hi = ev.rbegin()->first;
        int running = 0;
        for (Rational a = lo; a <= hi; a += Rational(1)) {
            auto it = ev.find(a);
            if (it != ev.end()) running += it->second;
            if (running < 0) throw Error(what);
            for (int t = 0; t < running; ++t) roots.push_back(a + half);
        }
        if (running != 0) throw Error(what);
    }
    std::sort(roots.begin(), roots.end());
    Poly p = Poly::from_roots(roots);
    if (!(ratfunc_normalize(p.shifted(half), p.shifted(-half)) == ratio)) throw Error(what);
    return p;
}

DrinfeldData drinfeld(const YangianModule& m, const Vector& v) {
    auto lam = eigen_series(m, v);
    if (!lam) throw Error("drinfeld: vector is not a common eigenvector of the T_ii(u)");
    DrinfeldData out;
    for (int i = 0; i + 1 < m.n(); ++i)
        out.polys.push_back(drinfeld_from_ratio((*lam)[static_cast<size_t>(i)] / (*lam)[static_cast<size_t>(i + 1)]));
    out.lambda_n = lam->back();
    return out;
}

bool intertwines(const SparseMatrix& a, const YangianModule& source, const YangianModule& target) {
    if (source.n() != target.n()) return false;
    if (a.rows() != target.dim() || a.cols() != source.dim()) return false;
    for (int i = 0; i < source.n(); ++i)
        for (int j = 0; j < source.n(); ++j) {
            MatPoly x = matpoly_times(source.numerator(i, j), target.den(), source.dim());
            MatPoly y = matpoly_times(target.numerator(i, j), source.den(), target.dim());
            const size_t len = std::max(x.size(), y.size());
            for (size_t t = 0; t < len; ++t) {
                SparseMatrix l = t < x.size() ? a * x[t] : SparseMatrix(a.rows(), a.cols());
                SparseMatrix r = t < y.size() ? y[t] * a : SparseMatrix(a.rows(), a.cols());
                if (!(l == r)) return false;
            }
        }
    return true;
}

bool intertwines_on_grid(const SparseMatrix& a, const YangianModule& source, const YangianModule& target) {
    if (source.n() != target.n()) return false;
    if (a.rows() != target.dim() || a.cols() != source.dim()) return false;
    const int count = source.den().degree() + target.den().degree() + 1;
    for (const auto& x : grid_points(count, {source.den(), target.den()}))
        for (int i = 0; i < source.n(); ++i)
            for (int j = 0; j < source.n(); ++j)
                if (!(a * source.eval(i, j, x) == target.eval(i, j, x) * a)) return false;
    return true;
}

std::optional<SparseMatrix> modules_isomorphic(const YangianModule& source, const YangianModule& target) {
    if (source.n() != target.n() || source.dim() != target.dim()) return std::nullopt;
    std::vector<SparseMatrix> hom = hom_space(source, target);
    if (hom.empty()) return std::nullopt;
    auto invertible = [](const SparseMatrix& a) { return is_invertible(a.to_dense()); };
    if (hom.size() == 1) {
        if (invertible(hom.front())) return hom.front();
        return std::nullopt;
    }
    // a generic element of the hom space is invertible iff some element is
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> coef(-50, 50);
    for (int attempt = 0; attempt < 8; ++attempt) {
        SparseMatrix a(source.dim(), source.dim());
        for (const auto& b : hom) a = a.combine(1, b, Rational(coef(gen)));
        if (invertible(a)) return a;
    }
    return std::nullopt;
}

}  // namespace yangian
