#include "yangian/runner.hpp"

#include "yangian/hd_realize.hpp"
#include "yangian/intertwine.hpp"
#include "yangian/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>

namespace yangian {

using nlohmann::json;

namespace {

json poly_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

json ratfunc_json(const RatFunc& f) { return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

json ints_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

json identity_json(const IdentityReport& r) {
    json j{{"pass", r.pass}, {"identities", r.checked}, {"window_columns", r.window}};
    if (!r.pass) j["witness"] = r.witness;
    return j;
}

const char* kind_name(RootCase k) {
    switch (k) {
    case RootCase::PP: return "pp";
    case RootCase::QQ: return "qq";
    case RootCase::PQ: return "pq";
    }
    return "";
}

struct Outcome {
    bool pass = false;
    json details = json::object();
};

// Data shared by the module-level checks.
struct Context {
    const RunConfig& cfg;
    ModuleParams params;
    std::optional<StandardModule> standard;
    bool nongeneric = false;
};

ModuleParams params_of(const RunConfig& c) {
    ModuleParams mp;
    mp.theta = c.theta;
    mp.n = c.n;
    mp.p = c.p;
    mp.q = c.q;
    mp.mu = c.mu;
    mp.nu = c.nu;
    return mp;
}

const StandardModule& standard(const Context& ctx) {
    if (!ctx.standard) throw Error("standard module unavailable");
    return *ctx.standard;
}

std::vector<int> word_of(const Context& ctx) {
    return ctx.cfg.word.empty() ? longest_word(ctx.params.m()) : ctx.cfg.word;
}

Outcome check_rtt_both(const Context& ctx) {
    Outcome o;
    o.pass = true;
    const auto& s = standard(ctx);
    for (auto [label, mod] : {std::pair<const char*, const YangianModule*>{"psi_form", &s.psi_form}, {"phi_form", &s.phi_form}}) {
        RttReport r = check_rtt(*mod);
        json j{{"pass", r.pass}, {"dim", mod->dim()}, {"grid_size", r.grid_size}};
        if (r.witness) j["witness"] = r.witness->str();
        o.details[label] = j;
        o.pass = o.pass && r.pass;
    }
    return o;
}

Outcome check_weight_shift(const Context& ctx) {
    const auto& s = standard(ctx);
    Outcome o;
    const bool a = weight_shift_holds(s.psi_form), b = weight_shift_holds(s.phi_form);
    o.details = {{"psi_form", a}, {"phi_form", b}};
    o.pass = a && b;
    return o;
}

YangianModule omega_star(int theta, int n, const Rational& z) {
    return theta > 0 ? make_omega(n, z, true) : make_omega(n, -z, false);
}

Outcome check_isomorphism(const Context& ctx) {
    const auto& s = standard(ctx);
    const auto& mp = ctx.params;
    Outcome o;
    o.pass = true;
    json factors = json::array();
    for (int a = 1; a <= mp.p; ++a) {
        const YangianModule& tilde = s.psi_factors[static_cast<size_t>(a - 1)];
        const YangianModule& prime = s.phi_factors[static_cast<size_t>(a - 1)];
        YangianModule om = omega_star(mp.theta, mp.n, mp.z(a));
        YangianModule left = tensor(om, prime), right = tensor(prime, om);
        auto iso = modules_isomorphic(tilde, left);
        const bool exact = iso && intertwines(*iso, tilde, left);
        const bool flip = same_action(left, right);
        factors.push_back({{"factor", a}, {"isomorphic", exact}, {"omega_flip", flip}});
        o.pass = o.pass && exact && flip;
    }
    const bool stripped = same_action(s.psi_form, twist_similarity(s.phi_form, omega_factor(mp)));
    o.details = {{"factors", factors}, {"omega_stripping", stripped}};
    o.pass = o.pass && stripped;
    return o;
}

Outcome check_highest_weight(const Context& ctx) {
    const auto& s = standard(ctx);
    Outcome o;
    HighestWeightData hw = highest_weight(s.psi_form);
    auto lam = eigen_series(s.psi_form, s.hw_vector);
    const auto literal = standard_hw_eigenvalues(ctx.params, false);
    const auto corrected = standard_hw_eigenvalues(ctx.params, true);
    bool singular = false;
    for (const auto& v : hw.vectors)
        if (span_basis({v, s.hw_vector}, s.psi_form.dim()).size() == 1) singular = true;
    o.details["singular_space_dim"] = hw.vectors.size();
    o.details["distinguished_vector_singular"] = singular;
    if (!lam) {
        o.details["eigenvector"] = false;
        return o;
    }
    json computed = json::array(), lit = json::array(), corr = json::array();
    bool match = true, match_corrected = true;
    for (size_t i = 0; i < lam->size(); ++i) {
        computed.push_back(ratfunc_json((*lam)[i]));
        lit.push_back(ratfunc_json(literal[i]));
        corr.push_back(ratfunc_json(corrected[i]));
        match = match && (*lam)[i] == literal[i];
        match_corrected = match_corrected && (*lam)[i] == corrected[i];
    }
    o.details["eigenvector"] = true;
    o.details["computed"] = computed;
    o.details["closed_form"] = lit;
    o.details["closed_form_matches"] = match;
    o.details["corrected_form"] = corr;
    o.details["corrected_form_matches"] = match_corrected;
    o.pass = singular && match;
    return o;
}

Outcome check_drinfeld(const Context& ctx) {
    const auto& s = standard(ctx);
    Outcome o;
    DrinfeldData dd = drinfeld(s.psi_form, s.hw_vector);
    auto lam = eigen_series(s.psi_form, s.hw_vector);
    json polys = json::array();
    o.pass = true;
    for (size_t i = 0; i < dd.polys.size(); ++i) {
        const Poly& p = dd.polys[i];
        const bool tele = ratfunc_normalize(p.shifted(Rational(1, 2)), p.shifted(Rational(-1, 2))) == (*lam)[i] / (*lam)[i + 1];
        polys.push_back({{"i", i + 1}, {"coefficients", poly_json(p)}, {"telescopes", tele}});
        o.pass = o.pass && tele;
    }
    o.details = {{"polynomials", polys}, {"lambda_n", ratfunc_json(dd.lambda_n)}};
    return o;
}

Outcome check_hw_scalar(const Context& ctx) {
    Outcome o;
    const std::vector<int> word = word_of(ctx);
    Intertwiner op = compose_word(ctx.params, word);
    HwImageReport r = check_hw_image(op, ctx.params);
    json factors = json::array();
    for (const auto& f : r.factors)
        factors.push_back({{"root", json::array({f.b, f.c})}, {"case", kind_name(f.kind)}, {"z", f.value.str()}});
    o.details = {{"word", ints_json(word)},
                 {"expected", r.expected.str()},
                 {"proportional", r.proportional},
                 {"factors", factors},
                 {"composed_scalar", op.hw_scalar.str()}};
    if (r.proportional) o.details["observed"] = r.observed.str();
    o.pass = r.pass;
    return o;
}

Outcome check_intertwiner(const Context& ctx) {
    Outcome o;
    const std::vector<int> word = word_of(ctx);
    Intertwiner op = compose_word(ctx.params, word);
    const bool exact = intertwines(op.matrix, op.source, op.target);
    const bool grid = intertwines_on_grid(op.matrix, op.source, op.target);
    o.details = {{"word", ints_json(word)}, {"target_order", ints_json(op.order)}, {"exact", exact}, {"grid", grid},
                 {"dim", op.source.dim()}};
    o.pass = exact && grid;
    return o;
}

Outcome check_braid(const Context& ctx) {
    const int m = ctx.params.m();
    if (m < 3) throw Error("braid relations need at least three factors");
    Outcome o;
    o.pass = true;
    json rels = json::array();
    for (int a = 1; a + 1 < m; ++a) {
        Intertwiner x = compose_word(ctx.params, {a, a + 1, a});
        Intertwiner y = compose_word(ctx.params, {a + 1, a, a + 1});
        const bool eq = x.matrix == y.matrix;
        rels.push_back({{"position", a}, {"equal", eq}});
        o.pass = o.pass && eq;
    }
    o.details = {{"relations", rels}};
    return o;
}

Outcome check_kernel_quotient(const Context& ctx) {
    Outcome o;
    Intertwiner op;
    if (ctx.nongeneric) {
        op = raw_swap(ctx.params);
        o.details["operator"] = "spanning intertwiner of the one-dimensional hom space";
    } else {
        op = compose_word(ctx.params, word_of(ctx));
        o.details["operator"] = "normalized composite intertwiner";
    }
    QuotientModule q = kernel_quotient(op);
    const int k = static_cast<int>(q.kernel_basis.size());
    o.details["source_dim"] = op.source.dim();
    o.details["kernel_dim"] = k;
    o.details["kernel_invariant"] = q.kernel_invariant;
    o.details["hw_scalar"] = op.hw_scalar.str();
    bool ok = q.kernel_invariant;
    if (k < op.source.dim() && q.kernel_invariant) {
        o.details["quotient_dim"] = q.quotient.dim();
        o.details["quotient_matches_image"] = q.quotient_matches_image;
        ok = ok && q.quotient_matches_image;
        if (k > 0) {
            IrreducibilityVerdict v = irreducibility_test(q.quotient);
            o.details["quotient_irreducible"] = v.irreducible;
            ok = ok && v.irreducible;
        }
    }
    o.pass = ok;
    return o;
}

Outcome check_irreducibility(const Context& ctx) {
    Outcome o;
    IrreducibilityVerdict v = irreducibility_test(standard(ctx).psi_form);
    o.details = {{"irreducible", v.irreducible},
                 {"endomorphism_dim", v.endomorphism_dim},
                 {"highest_weight_dim", v.highest_weight_dim},
                 {"cyclic_span_dim", v.cyclic_span_dim},
                 {"dim", standard(ctx).psi_form.dim()}};
    o.pass = v.irreducible;
    return o;
}

OperatorRealization realization_of(const Context& ctx) {
    return realize(ctx.params.theta, ctx.params.m(), ctx.params.n, ctx.params.p, ctx.cfg.truncation);
}

Outcome check_e_rel(const Context& ctx) {
    OperatorRealization r = realization_of(ctx);
    IdentityReport a = check_realization(r), b = check_automorphism(r), c = check_e_relations(r);
    Outcome o;
    o.details = {{"dim", r.dim()}, {"coordinate_relations", identity_json(a)}, {"automorphism", identity_json(b)},
                 {"ehat_relations", identity_json(c)}};
    o.pass = a.pass && b.pass && c.pass;
    return o;
}

Outcome check_zeta(const Context& ctx) {
    OperatorRealization r = realization_of(ctx);
    IdentityReport a = check_zeta_homomorphism(r);
    Outcome o;
    o.details = identity_json(a);
    o.details["dim"] = r.dim();
    o.pass = a.pass;
    return o;
}

Outcome check_alpha_rel(const Context& ctx) {
    OperatorRealization r = realization_of(ctx);
    XSeries s = x_series(ctx.params.theta, gl_representation(ctx.params.m(), GlRep::Defining), ctx.cfg.order);
    IdentityReport a = check_alpha(r, s, ctx.cfg.order);
    Outcome o;
    o.details = identity_json(a);
    o.details["dim"] = r.dim();
    o.details["scope"] = "verified in the defining representation of gl_m";
    o.pass = a.pass;
    return o;
}

Outcome check_x(const Context& ctx) {
    XSeries s = x_series(ctx.params.theta, gl_representation(ctx.params.m(), GlRep::Defining), ctx.cfg.order);
    IdentityReport a = check_x_identities(s);
    Outcome o;
    o.details = identity_json(a);
    o.details["scope"] = "verified in the defining representation of gl_m";
    o.pass = a.pass;
    return o;
}

struct CheckEntry {
    CheckDescriptor desc;
    bool needs_module;
    std::function<Outcome(const Context&)> fn;
};

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> r = {
        {{"rtt", "Yangian defining relation on both forms of the standard module",
          "defining relations and RTT form of Y(gl_n)"}, true, check_rtt_both},
        {{"weight-shift", "[T_kk^(1), T_ij(u)] = (delta_ki - delta_kj) T_ij(u)", "gl_n weights of Y(gl_n)-modules"}, true,
         check_weight_shift},
        {{"isomorphism", "tilde factors are Omega* (x) prime factors; Omega factors commute past every factor",
          "Fock-space modules and their one-dimensional twists"}, true, check_isomorphism},
        {{"highest-weight", "T_ii(u) eigenvalues of the distinguished vector against the closed form",
          "highest-weight vectors of standard modules"}, true, check_highest_weight},
        {{"drinfeld", "Drinfeld polynomials of the distinguished vector, re-telescoped",
          "Drinfeld classification of irreducible modules"}, true, check_drinfeld},
        {{"hw-scalar", "scalar on the highest-weight vector of the composite intertwiner against the z_eta products",
          "normalization of the intertwining operators"}, true, check_hw_scalar},
        {{"intertwiner", "composite intertwiner commutes with T_ij(u), exactly and on a grid",
          "intertwining operators between standard modules"}, true, check_intertwiner},
        {{"braid", "(a, a+1, a) and (a+1, a, a+1) compose to the same operator", "braid relations of the intertwiners"},
         false, check_braid},
        {{"kernel-quotient", "kernel of the intertwiner, its invariance, and the quotient versus the image",
          "irreducible quotients of standard modules"}, false, check_kernel_quotient},
        {{"irreducibility", "End is a line, the singular space is a line, and it generates the module",
          "irreducibility of standard modules"}, true, check_irreducibility},
        {{"e-relations", "coordinate relations, the coordinate automorphism, and the Ehat commutation relations",
          "differential operator realization of the bimodule"}, false, check_e_rel},
        {{"zeta-hom", "zeta_n is a Lie algebra homomorphism", "gl_m action on the Fock space"}, false, check_zeta},
        {{"alpha", "alpha_m respects the Yangian relation and commutes with the diagonal gl_m",
          "Howe duality homomorphism Y(gl_n) -> U(gl_m) (x) HD"}, false, check_alpha_rel},
        {{"appendix-x-identities", "X(u) inverts u + theta E^t, satisfies the product identity and the Yangian relation",
          "matrix X(u) = (u + theta E^t)^{-1}"}, false, check_x},
    };
    return r;
}

const CheckEntry& find_check(const std::string& name) {
    for (const auto& e : registry())
        if (e.desc.name == name) return e;
    throw ConfigError("checks: unknown check \"" + name + "\"");
}

int int_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(std::string("field '") + key + "': expected an integer");
    return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_array()) throw ConfigError(std::string("field '") + key + "': expected a list of integers");
    std::vector<int> out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_number_integer())
            throw ConfigError(std::string("field '") + key + "': entry " + std::to_string(k + 1) + " is not an integer");
        out.push_back(v[k].get<int>());
    }
    return out;
}

}  // namespace

const std::vector<CheckDescriptor>& list_checks() {
    static const std::vector<CheckDescriptor> out = [] {
        std::vector<CheckDescriptor> d;
        for (const auto& e : registry()) d.push_back(e.desc);
        return d;
    }();
    return out;
}

std::vector<int> longest_word(int m) {
    std::vector<int> w;
    for (int top = 1; top < m; ++top)
        for (int a = top; a >= 1; --a) w.push_back(a);
    return w;
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config: expected an object");
    static const std::set<std::string> known = {"theta", "n", "p", "q", "mu", "nu", "word", "checks",
                                                "truncation", "order", "output", "allow_nongeneric"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigError("config: unknown field '" + key + "'");
    for (const char* key : {"theta", "n", "p", "q", "mu", "nu", "checks"})
        if (!j.contains(key)) throw ConfigError(std::string("field '") + key + "' is required");
    RunConfig c;
    c.theta = int_field(j, "theta");
    c.n = int_field(j, "n");
    c.p = int_field(j, "p");
    c.q = int_field(j, "q");
    const json& mu = j.at("mu");
    if (!mu.is_array()) throw ConfigError("field 'mu': expected a list of rational strings");
    for (size_t k = 0; k < mu.size(); ++k) {
        if (mu[k].is_number_integer()) {
            c.mu.emplace_back(mu[k].get<long>());
        } else if (mu[k].is_string()) {
            try {
                c.mu.push_back(Rational::parse(mu[k].get<std::string>()));
            } catch (const Error& e) {
                throw ConfigError("field 'mu': entry " + std::to_string(k + 1) + ": " + e.what());
            }
        } else {
            throw ConfigError("field 'mu': entry " + std::to_string(k + 1) + " must be a string \"a/b\" or an integer");
        }
    }
    c.nu = int_list(j, "nu");
    if (j.contains("word")) c.word = int_list(j, "word");
    const json& checks = j.at("checks");
    if (!checks.is_array()) throw ConfigError("field 'checks': expected a list of check names");
    for (size_t k = 0; k < checks.size(); ++k) {
        if (!checks[k].is_string())
            throw ConfigError("field 'checks': entry " + std::to_string(k + 1) + " is not a string");
        c.checks.push_back(checks[k].get<std::string>());
    }
    if (j.contains("truncation")) c.truncation = int_field(j, "truncation");
    if (j.contains("order")) c.order = int_field(j, "order");
    if (j.contains("output")) {
        if (!j.at("output").is_string()) throw ConfigError("field 'output': expected a path string");
        c.output = j.at("output").get<std::string>();
    }
    if (j.contains("allow_nongeneric")) {
        if (!j.at("allow_nongeneric").is_boolean()) throw ConfigError("field 'allow_nongeneric': expected true or false");
        c.allow_nongeneric = j.at("allow_nongeneric").get<bool>();
    }
    return c;
}

json config_to_json(const RunConfig& c) {
    json mu = json::array();
    for (const auto& x : c.mu) mu.push_back(x.str());
    json checks = json::array();
    for (const auto& s : c.checks) checks.push_back(s);
    json j{{"theta", c.theta}, {"n", c.n}, {"p", c.p}, {"q", c.q}, {"mu", mu}, {"nu", ints_json(c.nu)},
           {"word", ints_json(c.word)}, {"checks", checks}, {"truncation", c.truncation}, {"order", c.order},
           {"allow_nongeneric", c.allow_nongeneric}};
    if (!c.output.empty()) j["output"] = c.output;
    return j;
}

void validate_config(const RunConfig& c) {
    if (c.theta != 1 && c.theta != -1) throw ConfigError("field 'theta': must be 1 or -1");
    if (c.n < 1) throw ConfigError("field 'n': must be positive");
    if (c.p < 0) throw ConfigError("field 'p': must be nonnegative");
    if (c.q < 0) throw ConfigError("field 'q': must be nonnegative");
    const int m = c.p + c.q;
    if (m < 1) throw ConfigError("fields 'p', 'q': p + q must be positive");
    if (static_cast<int>(c.mu.size()) != m)
        throw ConfigError("field 'mu': expected " + std::to_string(m) + " entries, got " + std::to_string(c.mu.size()));
    if (static_cast<int>(c.nu.size()) != m)
        throw ConfigError("field 'nu': expected " + std::to_string(m) + " entries, got " + std::to_string(c.nu.size()));
    for (size_t k = 0; k < c.nu.size(); ++k) {
        if (c.nu[k] < 0) throw ConfigError("field 'nu': entry " + std::to_string(k + 1) + " is negative");
        if (c.theta < 0 && c.nu[k] > c.n)
            throw ConfigError("field 'nu': entry " + std::to_string(k + 1) + " exceeds n (exterior degree)");
    }
    for (size_t k = 0; k < c.word.size(); ++k)
        if (c.word[k] < 1 || c.word[k] >= m)
            throw ConfigError("field 'word': entry " + std::to_string(k + 1) + " is outside 1.." + std::to_string(m - 1));
    if (!c.word.empty() && !is_reduced(m, c.word)) throw ConfigError("field 'word': word is not reduced");
    if (c.checks.empty()) throw ConfigError("field 'checks': at least one check is required");
    for (const auto& name : c.checks) find_check(name);
    if (c.truncation < 2) throw ConfigError("field 'truncation': must be at least 2");
    if (c.order < 2) throw ConfigError("field 'order': must be at least 2");
    try {
        params_of(c).validate(!c.allow_nongeneric);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (r.status != "pass") return false;
    return true;
}

json Report::to_json(bool with_timing) const {
    json checks = json::array();
    int passed = 0, failed = 0, errors = 0;
    for (const auto& r : records) {
        json j{{"name", r.name}, {"status", r.status}, {"details", r.details}};
        if (with_timing) j["timing_ms"] = r.timing_ms;
        checks.push_back(j);
        if (r.status == "pass") ++passed;
        else if (r.status == "fail") ++failed;
        else ++errors;
    }
    return json{{"config", config_to_json(config)},
                {"checks", checks},
                {"summary", {{"passed", passed}, {"failed", failed}, {"errors", errors}, {"status", all_pass() ? "pass" : "fail"}}}};
}

Report run(const RunConfig& config, bool parallel) {
    validate_config(config);
    Context ctx{config, params_of(config), std::nullopt, false};
    for (int a = 1; a <= ctx.params.m() && !ctx.nongeneric; ++a)
        for (int b = a + 1; b <= ctx.params.m(); ++b)
            if ((ctx.params.mu[static_cast<size_t>(a - 1)] - ctx.params.mu[static_cast<size_t>(b - 1)]).is_integer())
                ctx.nongeneric = true;
    bool needs_module = false;
    for (const auto& name : config.checks) needs_module = needs_module || find_check(name).needs_module;
    if (needs_module) ctx.standard = build_standard(ctx.params, !config.allow_nongeneric);

    auto one = [&ctx](const std::string& name) {
        CheckRecord rec;
        rec.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = find_check(name).fn(ctx);
            rec.status = o.pass ? "pass" : "fail";
            rec.details = std::move(o.details);
        } catch (const std::exception& e) {
            rec.status = "error";
            rec.details = {{"message", e.what()}};
        }
        rec.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rec;
    };
    Report rep;
    rep.config = config;
    if (parallel) {
        std::vector<std::future<CheckRecord>> jobs;
        for (const auto& name : config.checks) jobs.push_back(std::async(std::launch::async, one, name));
        for (auto& j : jobs) rep.records.push_back(j.get());
    } else {
        for (const auto& name : config.checks) rep.records.push_back(one(name));
    }
    return rep;
}

}  // namespace yangian
