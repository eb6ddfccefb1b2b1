// Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion; with
// arguments, runs only the listed criteria. Exit status 0 iff all selected pass.

#include "yangian/hd_realize.hpp"
#include "yangian/intertwine.hpp"
#include "yangian/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace yangian;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    std::ostringstream failures;
    int failure_count = 0;

    void fail(const std::string& what) {
        pass = false;
        if (failure_count++ < 5) failures << "\n    " << what;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

RatFunc lin(const Rational& num_root_shift, const Rational& den_root_shift) {
    return ratfunc_normalize(Poly::linear(num_root_shift), Poly::linear(den_root_shift));
}

// Spectral parameters with pairwise non-integer differences.
Rational generic_z(int k) {
    static const Rational table[] = {Rational(1, 3),  Rational(2, 7),  Rational(-3, 5), Rational(5, 11),
                                     Rational(-1, 13), Rational(7, 17), Rational(4, 19), Rational(-9, 23)};
    return table[k % 8] + Rational(k / 8);
}

ModuleParams make_params(int theta, int n, int p, int q, std::vector<Rational> mu, std::vector<int> nu) {
    ModuleParams mp;
    mp.theta = theta;
    mp.n = n;
    mp.p = p;
    mp.q = q;
    mp.mu = std::move(mu);
    mp.nu = std::move(nu);
    return mp;
}

// Random mu with pairwise non-integer differences: distinct prime denominators.
std::vector<Rational> random_mu(std::mt19937& rng, int m) {
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    std::vector<Rational> mu;
    std::uniform_int_distribution<int> num(-20, 20);
    for (int a = 0; a < m; ++a) {
        int k = num(rng);
        while (k % primes[a] == 0) k = num(rng);
        mu.emplace_back(k, primes[a]);
    }
    return mu;
}

std::string params_str(const ModuleParams& mp) {
    std::ostringstream s;
    s << "theta=" << mp.theta << " n=" << mp.n << " p=" << mp.p << " q=" << mp.q << " mu=(";
    for (size_t a = 0; a < mp.mu.size(); ++a) s << (a ? "," : "") << mp.mu[a].str();
    s << ") nu=(";
    for (size_t a = 0; a < mp.nu.size(); ++a) s << (a ? "," : "") << mp.nu[a];
    s << ")";
    return s.str();
}

// ---------------------------------------------------------------- criterion 1

struct Named {
    std::string name;
    std::function<YangianModule(const Rational&)> make;
    int dim;
};

std::vector<Named> module_family(int theta, int n) {
    std::vector<Named> out;
    out.push_back({"V", [n](const Rational& z) { return make_vector(n, z, false); }, n});
    out.push_back({"V'", [n](const Rational& z) { return make_vector(n, z, true); }, n});
    out.push_back({"Omega", [n](const Rational& z) { return make_omega(n, z, false); }, 1});
    out.push_back({"Omega'", [n](const Rational& z) { return make_omega(n, z, true); }, 1});
    const int top = theta > 0 ? 3 : std::min(3, n);
    for (int N = 1; N <= top; ++N)
        for (auto [variant, tag] : {std::pair{PhiVariant::Plain, "Phi"}, {PhiVariant::Prime, "Phi'"}, {PhiVariant::Tilde, "TPhi"}}) {
            const int d = make_phi(theta, n, N, 0, variant).dim();
            out.push_back({std::string(tag) + "^" + std::to_string(N),
                           [theta, n, N, variant](const Rational& z) { return make_phi(theta, n, N, z, variant); }, d});
        }
    return out;
}

Verdict criterion1() {
    Verdict v;
    int singles = 0, pairs = 0, triples = 0;
    auto check = [&](const YangianModule& m, const std::string& label) {
        RttReport r = check_rtt(m);
        v.expect(r.pass, label + (r.witness ? ": " + r.witness->str() : ""));
    };
    for (int theta : {1, -1})
        for (int n : {2, 3}) {
            const auto family = module_family(theta, n);
            const std::string tag = " [theta=" + std::to_string(theta) + " n=" + std::to_string(n) + "]";
            const size_t F = family.size();
            for (size_t i = 0; i < F; ++i) {
                check(family[i].make(generic_z(0)), family[i].name + tag);
                ++singles;
            }
            // every ordered pair
            const int pair_cap = n == 2 ? 64 : 36;
            for (size_t i = 0; i < F; ++i)
                for (size_t j = 0; j < F; ++j) {
                    if (family[i].dim * family[j].dim > pair_cap) continue;
                    check(tensor(family[i].make(generic_z(1)), family[j].make(generic_z(2))),
                          family[i].name + "(x)" + family[j].name + tag);
                    ++pairs;
                }
            // unordered triples, size-capped; for n = 3 the largest ones only among degree-one factors
            auto core = [&](size_t i) { return family[i].name.size() < 3 || family[i].name.ends_with("^1"); };
            for (size_t i = 0; i < F; ++i)
                for (size_t j = i; j < F; ++j)
                    for (size_t k = j; k < F; ++k) {
                        const int d = family[i].dim * family[j].dim * family[k].dim;
                        const int cap = n == 2 ? 24 : (core(i) && core(j) && core(k) ? 27 : 9);
                        if (d > cap) continue;
                        check(tensor({family[i].make(generic_z(3)), family[j].make(generic_z(4)), family[k].make(generic_z(5))}),
                              family[i].name + "(x)" + family[j].name + "(x)" + family[k].name + tag);
                        ++triples;
                    }
        }
    v.detail << singles << " modules, " << pairs << " pairs, " << triples << " triples";
    return v;
}

// ---------------------------------------------------------------- criterion 2

Verdict criterion2() {
    Verdict v;
    int isos = 0, flips = 0;
    for (int theta : {1, -1})
        for (int n : {2, 3})
            for (int N = 1; N <= (theta > 0 ? 3 : std::min(3, n)); ++N)
                for (int k = 0; k < 2; ++k) {
                    const Rational z = generic_z(k);
                    YangianModule tilde = make_phi(theta, n, N, z, PhiVariant::Tilde);
                    YangianModule prime = make_phi(theta, n, N, z, PhiVariant::Prime);
                    YangianModule om = theta > 0 ? make_omega(n, z, true) : make_omega(n, -z, false);
                    YangianModule rhs = tensor(om, prime);
                    const std::string label = "theta=" + std::to_string(theta) + " n=" + std::to_string(n) +
                                              " N=" + std::to_string(N) + " z=" + z.str();
                    auto iso = modules_isomorphic(tilde, rhs);
                    if (!iso) {
                        v.fail("no isomorphism " + label);
                        continue;
                    }
                    // entrywise: A T_ij(u) = T'_ij(u) A at every coefficient, A invertible
                    v.expect(intertwines(*iso, tilde, rhs) && is_invertible(iso->to_dense()), "not an isomorphism " + label);
                    ++isos;
                    for (const YangianModule& other : {prime, make_vector(n, generic_z(5), false), make_vector(n, generic_z(6), true)}) {
                        for (bool dual : {false, true}) {
                            YangianModule o = make_omega(n, generic_z(7), dual);
                            v.expect(same_action(tensor(o, other), tensor(other, o)), "Omega flip " + label);
                            ++flips;
                        }
                    }
                }
    v.detail << isos << " isomorphisms, " << flips << " Omega flips";
    return v;
}

// ---------------------------------------------------------------- criterion 3

// The stated closed forms, transcribed independently of the library.
std::vector<RatFunc> stated_eigenvalues(const ModuleParams& mp, bool with_extra_factor) {
    std::vector<RatFunc> lam;
    for (int i = 1; i <= mp.n; ++i) {
        RatFunc f(Rational(1));
        for (int a = 1; a <= mp.m(); ++a) {
            const Rational z = mp.mu[static_cast<size_t>(a - 1)] + Rational(1 - a);
            const int nu = mp.nu[static_cast<size_t>(a - 1)];
            const bool ptype = a <= mp.p;
            if (mp.theta > 0) {
                if (i == 1 && !ptype) f = f * lin(z + nu, z);
                if (i == mp.n && ptype) f = f * lin(z - nu - 1, z);
                if (with_extra_factor && i < mp.n && ptype) f = f * lin(z - 1, z);
            } else {
                const int nu_prime = ptype ? mp.n - nu : nu;
                if (nu_prime >= i) f = f * lin(-z + 1, -z);  // (u - z + 1)/(u - z)
            }
        }
        lam.push_back(f);
    }
    return lam;
}

Verdict criterion3() {
    Verdict v;
    std::mt19937 rng(20240611);
    int total = 0, literal_ok = 0, corrected_ok = 0, mismatch_plus = 0, mismatch_other = 0;
    for (int theta : {1, -1})
        for (int t = 0; t < 15; ++t) {
            std::uniform_int_distribution<int> mdist(1, 4), ndist(1, 3);
            const int m = mdist(rng);
            const int n = ndist(rng);
            std::uniform_int_distribution<int> pdist(0, m);
            const int p = pdist(rng);
            std::vector<int> nu;
            std::uniform_int_distribution<int> nudist(0, theta > 0 ? 2 : n);
            for (int a = 0; a < m; ++a) nu.push_back(nudist(rng));
            ModuleParams mp = make_params(theta, n, p, m - p, random_mu(rng, m), nu);
            StandardModule s = build_standard(mp);
            auto lam = eigen_series(s.psi_form, s.hw_vector);
            ++total;
            if (!lam) {
                v.fail("not an eigenvector: " + params_str(mp));
                continue;
            }
            const bool literal = *lam == stated_eigenvalues(mp, false);
            const bool corrected = *lam == stated_eigenvalues(mp, true);
            literal_ok += literal;
            corrected_ok += corrected;
            if (!literal) {
                if (theta > 0 && p >= 1 && n >= 2) ++mismatch_plus;
                else ++mismatch_other;
                v.fail("stated formula differs: " + params_str(mp));
            }
        }
    v.detail << literal_ok << "/" << total << " configs match the stated formula (mismatches: " << mismatch_plus
             << " with theta=+1, p>=1, n>=2; " << mismatch_other << " elsewhere); with the extra p-type factor for i<n: "
             << corrected_ok
             << "/" << total;
    return v;
}

// ---------------------------------------------------------------- criterion 4

// Lambda_i(u0) read off from T_ii(u0) v = Lambda_i(u0) v.
Rational eigenvalue_at(const YangianModule& m, const Vector& v, int i, const Rational& u0) {
    Vector w = m.eval(i, i, u0).apply(v);
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) return w[k] / v[k];
    throw Error("zero vector");
}

Verdict criterion4() {
    Verdict v;
    std::mt19937 rng(99);
    int modules = 0, twists = 0;
    auto examine = [&](const YangianModule& m, const std::string& label) {
        HighestWeightData hw = highest_weight(m);
        if (hw.vectors.size() != 1) {
            v.fail("highest-weight space is not a line: " + label);
            return;
        }
        const Vector& h = hw.vectors[0];
        DrinfeldData d = drinfeld(m, h);
        ++modules;
        // P(u+1/2)/P(u-1/2) = Lambda_i/Lambda_{i+1}, evaluated on enough points to fix a rational
        // function of the degrees involved
        for (int i = 0; i + 1 < m.n(); ++i) {
            const Poly& P = d.polys[static_cast<size_t>(i)];
            const int points = 2 * (P.degree() + m.den().degree()) + 3;
            for (int k = 0; k < points; ++k) {
                const Rational u0 = Rational(101 + 7 * k, 3);
                const Rational lhs = P.eval(u0 + Rational(1, 2)) / P.eval(u0 - Rational(1, 2));
                const Rational rhs = eigenvalue_at(m, h, i, u0) / eigenvalue_at(m, h, i + 1, u0);
                v.expect(lhs == rhs, "telescoping fails: " + label);
            }
        }
        for (int t = 0; t < 10; ++t) {
            std::uniform_int_distribution<int> dist(-30, 30);
            const Rational a(dist(rng), 7), b(dist(rng), 11);
            const Rational c(dist(rng), 13), e(dist(rng), 5);
            RatFunc g = ratfunc_normalize(Poly::linear(a) * Poly::linear(c), Poly::linear(b) * Poly::linear(e));
            DrinfeldData dt = drinfeld(twist_similarity(m, g), h);
            v.expect(dt.polys == d.polys, "twist changes Drinfeld polynomials: " + label);
            ++twists;
        }
    };
    for (int n : {2, 3}) {
        examine(make_vector(n, generic_z(1), false), "V n=" + std::to_string(n));
        for (int theta : {1, -1})
            for (int N = 1; N <= (theta > 0 ? 3 : n); ++N)
                examine(make_phi(theta, n, N, generic_z(N), PhiVariant::Plain),
                        "Phi theta=" + std::to_string(theta) + " n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
    v.detail << modules << " modules, " << twists << " twists";
    return v;
}

// ---------------------------------------------------------------- criterion 5

// The labels entering z_eta: lambda*_a = lambda_a + rho_a + (n/2) delta'_a and
// mu*_a = mu_a + rho_a - theta (n/2) delta'_a, with lambda_a the weight of the
// distinguished vector.
struct Stars {
    Rational mu_star, lambda_star;
};

Stars stars(const ModuleParams& mp, int a) {
    const Rational mu = mp.mu[static_cast<size_t>(a - 1)];
    const int nu = mp.nu[static_cast<size_t>(a - 1)];
    const bool ptype = a <= mp.p;
    const Rational half_n(mp.n, 2);
    const Rational rho(1 - a);
    const int delta = ptype ? 1 : -1;
    // lambda_a = mu_a -/+ nu_a -/+ theta n/2 (upper sign for p-type)
    const Rational lambda = ptype ? mu - nu - half_n * mp.theta : mu + nu + half_n * mp.theta;
    return {mu + rho - half_n * (mp.theta * delta), lambda + rho + half_n * delta};
}

Rational stated_z(const ModuleParams& mp, int b, int c) {
    const Stars sb = stars(mp, b), sc = stars(mp, c);
    const Rational dm = sb.mu_star - sc.mu_star, dl = sb.lambda_star - sc.lambda_star;
    const bool pb = b <= mp.p, pc = c <= mp.p;
    const int nub = mp.nu[static_cast<size_t>(b - 1)], nuc = mp.nu[static_cast<size_t>(c - 1)];
    Rational z(1);
    if (mp.theta > 0) {
        if (pb && pc) {
            for (int r = 1; r <= nub; ++r) z *= (dm - r) / (dl + r);
        } else if (!pb && !pc) {
            for (int r = 1; r <= nuc; ++r) z *= (dm - r) / (dl + r);
        } else if (mp.n == 1) {
            for (int r = 1; r <= std::min(nub, nuc); ++r) z *= (dm - r + 1) / (dl + r - 1);
        }
    } else {
        const int npb = pb ? mp.n - nub : nub, npc = pc ? mp.n - nuc : nuc;
        if (npb < npc) z = dl / dm;
    }
    return z;
}

// Positive roots inverted by the word, from the permutation itself.
std::vector<std::pair<int, int>> inverted_roots(int m, const std::vector<int>& word, std::vector<int>& order) {
    order.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) order[static_cast<size_t>(k)] = k + 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        std::swap(order[static_cast<size_t>(*it - 1)], order[static_cast<size_t>(*it)]);
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (order[static_cast<size_t>(x)] > order[static_cast<size_t>(y)])
                out.emplace_back(order[static_cast<size_t>(y)], order[static_cast<size_t>(x)]);
    return out;
}

// The image of the distinguished vector must be (product of z_eta) times the
// rearranged distinguished vector; odd factors pick up the reordering sign.
bool scalar_matches(const ModuleParams& mp, const std::vector<int>& word, std::string& note) {
    std::vector<int> order;
    const auto roots = inverted_roots(mp.m(), word, order);
    Rational expected(1);
    int sign_exponent = 0;
    for (auto [b, c] : roots) {
        expected *= stated_z(mp, b, c);
        if (mp.theta < 0) sign_exponent += mp.nu[static_cast<size_t>(b - 1)] * mp.nu[static_cast<size_t>(c - 1)];
    }
    Intertwiner op = compose_word(mp, word);
    StandardModule s = build_standard(mp);
    Vector target{Rational(1)};
    for (int a : order) target = kron(target, factor_hw_vector(mp, a));
    if (sign_exponent % 2) expected = -expected;
    const Vector image = op.matrix.apply(s.hw_vector);
    bool ok = image.size() == target.size();
    for (size_t k = 0; ok && k < image.size(); ++k) ok = image[k] == expected * target[k];
    note = params_str(mp) + " expected " + expected.str();
    return ok && check_hw_image(op, mp).pass;
}

Verdict criterion5() {
    Verdict v;
    int m2 = 0, m3 = 0;
    std::string note;
    const Rational a(1, 3), b(-2, 7);
    // m = 2: pp, qq, mixed n = 1, mixed n > 1 at theta = +1
    const std::vector<ModuleParams> cases = {
        make_params(1, 2, 2, 0, {a, b}, {2, 1}),
        make_params(1, 2, 2, 0, {a, b}, {1, 3}),
        make_params(1, 2, 0, 2, {a, b}, {1, 2}),
        make_params(1, 3, 0, 2, {a, b}, {2, 2}),
        make_params(1, 1, 1, 1, {a, b}, {2, 3}),
        make_params(1, 1, 1, 1, {a, b}, {3, 1}),
        make_params(1, 2, 1, 1, {a, b}, {1, 2}),
        make_params(1, 3, 1, 1, {a, b}, {2, 1}),
        // theta = -1: nu'_b < nu'_c and otherwise
        make_params(-1, 2, 0, 2, {a, b}, {0, 2}),
        make_params(-1, 3, 0, 2, {a, b}, {1, 2}),
        make_params(-1, 2, 1, 1, {a, b}, {2, 1}),
        make_params(-1, 2, 0, 2, {a, b}, {2, 1}),
        make_params(-1, 3, 1, 1, {a, b}, {1, 1}),
        make_params(-1, 2, 2, 0, {a, b}, {1, 1}),
    };
    for (const auto& mp : cases) {
        v.expect(scalar_matches(mp, {1}, note), "m=2 " + note);
        ++m2;
    }
    std::mt19937 rng(31337);
    for (int theta : {1, -1})
        for (int t = 0; t < 10; ++t) {
            std::uniform_int_distribution<int> ndist(1, 2), pdist(0, 3);
            const int n = ndist(rng), p = pdist(rng);
            std::uniform_int_distribution<int> nudist(0, theta > 0 ? 2 : n);
            ModuleParams mp = make_params(theta, n, p, 3 - p, random_mu(rng, 3), {nudist(rng), nudist(rng), nudist(rng)});
            v.expect(scalar_matches(mp, {1, 2, 1}, note), "longest element " + note);
            ++m3;
        }
    v.detail << m2 << " two-factor cases, " << m3 << " three-factor longest-element cases";
    return v;
}

// ---------------------------------------------------------------- criterion 6

Verdict criterion6() {
    Verdict v;
    int count = 0;
    for (int theta : {1, -1})
        for (int n : {1, 2})
            for (int p = 0; p <= 3; ++p) {
                const std::vector<int> nu = theta > 0 ? std::vector<int>{1, 2, 1} : std::vector<int>{1, n, 0};
                ModuleParams mp = make_params(theta, n, p, 3 - p, {generic_z(0), generic_z(1), generic_z(2)}, nu);
                Intertwiner x = compose_word(mp, {1, 2, 1});
                Intertwiner y = compose_word(mp, {2, 1, 2});
                v.expect(x.matrix == y.matrix && x.order == y.order, "braid relation fails: " + params_str(mp));
                ++count;
            }
    v.detail << count << " type patterns";
    return v;
}

// ---------------------------------------------------------------- criterion 7

Verdict criterion7() {
    Verdict v;
    const int K = 6, D = 6;
    int count = 0;
    for (int theta : {1, -1})
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p : {0, m}) {
                    const std::string label = "theta=" + std::to_string(theta) + " m=" + std::to_string(m) +
                                              " n=" + std::to_string(n) + " p=" + std::to_string(p);
                    OperatorRealization r = realize(theta, m, n, p, D);
                    for (auto [name, rep] : {std::pair{"coordinate relations", check_realization(r)},
                                             {"automorphism", check_automorphism(r)},
                                             {"Ehat relations", check_e_relations(r)},
                                             {"zeta homomorphism", check_zeta_homomorphism(r)}}) {
                        v.expect(rep.pass, std::string(name) + " " + label + " " + rep.witness);
                        if (theta > 0) v.expect(rep.window > 0, std::string("empty window ") + label);
                    }
                    XSeries s = x_series(theta, gl_representation(m, GlRep::Defining), K);
                    IdentityReport xr = check_x_identities(s);
                    v.expect(xr.pass, "X identities " + label + " " + xr.witness);
                    IdentityReport ar = check_alpha(r, s, K);
                    v.expect(ar.pass, "alpha " + label + " " + ar.witness);
                    ++count;
                }
    v.detail << count << " (theta, m, n, p) settings through order K=" << K << ", D=" << D;
    return v;
}

// ---------------------------------------------------------------- criterion 8

Verdict criterion8() {
    Verdict v;
    for (int theta : {1, -1}) {
        ModuleParams mp = make_params(theta, 2, 0, 2, {Rational(-5, 3), Rational(1, 3)}, {1, 1});
        const Rational gap = stars(mp, 1).lambda_star - stars(mp, 2).lambda_star;
        v.expect(gap.is_integer() && gap < Rational(0), "weight condition fails for " + params_str(mp));
        Intertwiner op = raw_swap(mp);
        v.expect(intertwines(op.matrix, op.source, op.target), "testbed operator is not an intertwiner");
        QuotientModule q = kernel_quotient(op);
        const int k = static_cast<int>(q.kernel_basis.size());
        v.expect(k > 0 && k < op.source.dim(), "kernel not proper and nonzero: " + params_str(mp));
        // invariance, recomputed: T-coefficients map the kernel into its span
        if (k > 0) {
            const auto kernel_span = span_basis(q.kernel_basis, op.source.dim());
            bool invariant = true;
            for (const auto& g : op.source.generator_matrices())
                for (const auto& w : q.kernel_basis) {
                    auto with = kernel_span;
                    with.push_back(g.apply(w));
                    invariant = invariant && span_basis(with, op.source.dim()).size() == kernel_span.size();
                }
            v.expect(invariant && q.kernel_invariant, "kernel not invariant: " + params_str(mp));
        }
        if (k > 0 && k < op.source.dim()) {
            v.expect(check_rtt(q.quotient).pass, "quotient is not a module");
            v.expect(irreducibility_test(q.quotient).irreducible, "quotient reducible: " + params_str(mp));
        }
        v.detail << "theta=" << theta << ": dim " << op.source.dim() << ", kernel " << k << ", quotient "
                 << op.source.dim() - k << "; ";

        ModuleParams generic = make_params(theta, 2, 0, 2, {Rational(-5, 3), Rational(2, 7)}, {1, 1});
        QuotientModule g = kernel_quotient(compose_word(generic, {1}));
        v.expect(g.kernel_basis.empty(), "generic kernel nonzero: " + params_str(generic));
    }
    v.detail << "generic kernels zero";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"RTT relation on modules and tensor products", criterion1},
        {"tilde modules are Omega* twists of prime modules; Omega flips", criterion2},
        {"highest-weight eigenvalues against the stated products", criterion3},
        {"Drinfeld polynomials telescope and are twist invariant", criterion4},
        {"highest-weight scalars of intertwiners against z_eta", criterion5},
        {"braid relations for m = 3", criterion6},
        {"operator realization, alpha and X(u) identities", criterion7},
        {"kernel testbed and zero generic kernels", criterion8},
    };
    std::set<int> selected;
    for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
    bool all = true;
    for (size_t k = 0; k < criteria.size(); ++k) {
        if (!selected.empty() && !selected.count(static_cast<int>(k + 1))) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %zu: %s (exact) -- %s [%.1fs]%s\n", v.pass ? "PASS" : "FAIL", k + 1,
                    criteria[k].first.c_str(), v.detail.str().c_str(), secs, v.failures.str().c_str());
        if (v.failure_count > 5) std::printf("    ... %d failures in total\n", v.failure_count);
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
