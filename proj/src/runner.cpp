#include "toralab/runner.hpp"

#include <fstream>
#include <sstream>

#include "toralab/automorphism.hpp"
#include "toralab/forms.hpp"
#include "toralab/induce.hpp"
#include "toralab/lambda.hpp"
#include "toralab/replab.hpp"
#include "toralab/verify_algebra.hpp"

namespace toralab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

const SimpleLieDatum& lie_of(const std::string& name) {
    if (name.rfind("sl", 0) != 0) throw ConfigError("unknown simple algebra: " + name);
    int n = std::stoi(name.substr(2));
    if (n < 2 || n > 6) throw ConfigError("sl_n supported for 2 <= n <= 6");
    return build_sl(n);
}

SpRep fiber_of(int m, const std::string& name) {
    if (name == "trivial") return sp_trivial(m);
    if (name == "defining") return sp_defining(m);
    if (name == "3dim") {
        if (m != 1) throw ConfigError("3dim fiber requires m = 1");
        return sp_sl2_weight(2);
    }
    if (name.rfind("sym", 0) == 0) return sp_sym_power(m, std::stoi(name.substr(3)));
    throw ConfigError("unknown fiber: " + name);
}

std::vector<RatVec> parse_points(const std::string& s, int N) {
    std::vector<RatVec> out;
    std::istringstream is(s);
    std::string tok;
    // one scalar per point when N = 1; semicolon-separated vectors otherwise
    if (s.find(';') == std::string::npos && N == 1) {
        while (std::getline(is, tok, ',')) {
            RatVec v(1);
            v[0] = Rational::from_string(trim(tok));
            out.push_back(v);
        }
        return out;
    }
    std::istringstream groups(s);
    while (std::getline(groups, tok, ';')) {
        std::istringstream gi(tok);
        RatVec v(N);
        int i = 0;
        std::string x;
        while (std::getline(gi, x, ',')) v[i++] = Rational::from_string(trim(x));
        if (i != N) throw ConfigError("point arity mismatch in: " + s);
        out.push_back(v);
    }
    return out;
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    std::string section;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (!section.empty()) key = section + "." + key;
        try {
            cfg.set(key, value);
        } catch (const std::exception& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

void RunConfig::set(const std::string& rawkey, const std::string& value) {
    std::string key = rawkey;
    if (auto dot = key.find('.'); dot != std::string::npos) key = key.substr(dot + 1);
    if (key == "check") check = value;
    else if (key == "family") family = value;
    else if (key == "N") N = std::stoi(value);
    else if (key == "g") g = value;
    else if (key == "radius") radius = std::stoi(value);
    else if (key == "decomposition") decomposition = value;
    else if (key == "threads") threads = std::stoi(value);
    else if (key == "m") m = std::stoi(value);
    else if (key == "fiber") fiber = value;
    else if (key == "calibrate") calibrate = (value == "true" || value == "1");
    else if (key == "lam" || key == "lambda") lam = value;
    else if (key == "mu") mu = value;
    else if (key == "c") c = value;
    else if (key == "shear_a") shear_a = std::stoll(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "points") points = value;
    else if (key == "strict") strict = (value == "true" || value == "1");
    else if (key == "unsafe_large") unsafe_large = (value == "true" || value == "1");
    else throw ConfigError("unknown config key: " + rawkey);
}

void RunConfig::validate() const {
    static const std::vector<std::string> verbs = {"jacobi", "closure",    "form",        "eala",
                                                   "automorphism", "jet", "evaluation", "realization",
                                                   "lambda", "all"};
    if (std::find(verbs.begin(), verbs.end(), check) == verbs.end())
        throw ConfigError("unknown check verb: " + check);
    if (!unsafe_large && (radius > 4 || N > 6))
        throw ConfigError("window cap exceeded (radius <= 4, N <= 6); pass --unsafe-large to override");
    if (radius < 0 || N < 1 || N > kMaxArity) throw ConfigError("invalid window");
    // parity constraints surface early with a clear message
    Family f = parse_family(family);
    if ((f == Family::TauH || f == Family::HN) && N % 2 != 0)
        throw ConfigError(family + " requires even N");
    if ((f == Family::TauD || f == Family::DM) && (N % 2 != 1 || N < 3))
        throw ConfigError(family + " requires odd N >= 3");
}

json RunConfig::echo() const {
    json j;
    j["check"] = check;
    j["family"] = family;
    j["N"] = N;
    j["g"] = g;
    j["radius"] = radius;
    j["decomposition"] = decomposition;
    j["m"] = m;
    j["fiber"] = fiber;
    j["calibrate"] = calibrate;
    j["lambda"] = lam;
    j["mu"] = mu;
    j["c"] = c;
    j["shear_a"] = shear_a;
    j["seed"] = seed;
    j["points"] = points;
    j["strict"] = strict;
    return j;
}

namespace {

void run_jacobi(const RunConfig& cfg, const std::string& family, int N, ReportBundle& out) {
    Family f = parse_family(family);
    AlgebraSpec spec(f, N, AlgebraSpec(f, N, nullptr).has_g() ? &lie_of(cfg.g) : nullptr);
    Window w(cfg.radius, N);
    out.reports.push_back(verify_antisymmetry(spec, w, cfg.threads));
    out.reports.push_back(verify_jacobi(spec, w, cfg.threads));
}

void run_closure(const RunConfig& cfg, ReportBundle& out) {
    AlgebraSpec spec(Family::TauH, cfg.N, &lie_of(cfg.g));
    out.reports.push_back(verify_closure(spec, parse_tri_tag(cfg.decomposition), Window(cfg.radius, cfg.N)));
}

void run_form(const RunConfig& cfg, const std::string& family, int N, ReportBundle& out) {
    FormSpec fs(AlgebraSpec(parse_family(family), N, &lie_of(cfg.g)));
    Window w(cfg.radius, N);
    out.reports.push_back(verify_form_symmetry(fs, w));
    out.reports.push_back(verify_form_gradedness(fs, w));
    out.reports.push_back(verify_invariance(fs, w));
    out.reports.push_back(verify_nondegeneracy(fs, w));
}

void run_eala(const RunConfig& cfg, ReportBundle& out) {
    FormSpec fs(AlgebraSpec(parse_family(cfg.family), cfg.N, &lie_of(cfg.g)));
    out.reports.push_back(verify_ea_axioms(fs, Window(cfg.radius, cfg.N)));
}

void run_automorphism(const RunConfig& cfg, ReportBundle& out) {
    Family f = parse_family(cfg.family);
    AlgebraSpec spec(f, cfg.N, &lie_of(cfg.g));
    Window w(cfg.radius, cfg.N);
    if (cfg.N % 2 == 0) {
        out.reports.push_back(verify_automorphism(spec, shear_matrix(cfg.shear_a, cfg.N / 2, cfg.N), w));
        out.reports.push_back(verify_kspan(cfg.N, shear_matrix(cfg.shear_a, cfg.N / 2, cfg.N), w));
    }
    out.reports.push_back(verify_automorphism(spec, random_unimodular(cfg.N, cfg.seed), w));
}

void run_jet(const RunConfig& cfg, ReportBundle& out) {
    SpRep fiber = fiber_of(cfg.m, cfg.fiber);
    Window w(std::max(cfg.radius, 2), 2 * cfg.m);
    json info;
    SigmaProfile profile = calibrate_jet_coefficients(cfg.m, sp_defining(cfg.m), w, &info);
    VerificationReport cal;
    cal.check = "jet-calibration";
    cal.config["m"] = cfg.m;
    cal.config["window"] = w.radius;
    cal.details = info;
    cal.details["profile"] = profile.to_json();
    out.reports.push_back(cal);
    out.reports.push_back(verify_sp_commutator(fiber, profile, w));
    JetModule J = make_jet(cfg.m, fiber, RatVec(2 * cfg.m), RatVec(2 * cfg.m), profile);
    out.reports.push_back(verify_jet_module(J, w));
}

void run_evaluation(const RunConfig& cfg, ReportBundle& out) {
    const SimpleLieDatum& g = lie_of(cfg.g);
    auto pts = parse_points(cfg.points, 1);
    std::vector<std::vector<long long>> hw(pts.size(), std::vector<long long>(g.rank(), 0));
    for (auto& h : hw) h[0] = 1;  // fundamental weights
    EvaluationModule ev(g, 1, pts, hw, RatVec(1), Window(cfg.radius, 1));
    out.reports.push_back(verify_representation(ev, Window(cfg.radius, 1)));
    out.reports.push_back(verify_integrability(ev, Window(cfg.radius, 1), 2 * static_cast<int>(pts.size()) + 1));
    VerificationReport cert;
    cert.check = "evaluation-irreducibility";
    cert.config["points"] = cfg.points;
    cert.details = ev.irreducibility_certificate(Window(cfg.radius, 1));
    cert.status = cert.details["status"] == "verified on window" ? "partial" : "fail";
    out.reports.push_back(cert);
}

void run_realization(const RunConfig& cfg, ReportBundle& out) {
    const SimpleLieDatum& g = lie_of(cfg.g);
    SpRep fiber = fiber_of(cfg.m, cfg.fiber);
    SigmaProfile profile = calibrate_jet_coefficients(cfg.m, sp_defining(cfg.m), Window(2, 2 * cfg.m));
    std::vector<long long> hw(g.rank(), 0);
    hw[0] = 1;
    int N = 2 * cfg.m;
    auto mod = realization_module(g, hw, fiber, RatVec(N), RatVec(N), profile, Window(cfg.radius, N));
    out.reports.push_back(verify_representation(mod, Window(cfg.radius, N)));
    out.reports.push_back(verify_central_acts_trivially(mod, Window(cfg.radius, N)));
    VerificationReport hwrep;
    hwrep.check = "realization-highest-weight-space";
    GradedSubspace hws = highest_weight_space(mod, TriTag::LevelZero, Window(cfg.radius, N));
    bool ok = true;
    for (const Deg& gr : mod.grades()) ok = ok && hws.dim(gr) == fiber.dim;
    hwrep.config["fiber_dim"] = fiber.dim;
    hwrep.details["per_grade_dim_matches_fiber"] = ok;
    if (!ok) hwrep.status = "fail";
    out.reports.push_back(hwrep);
}

void run_lambda(const RunConfig& cfg, ReportBundle& out) {
    Window w(std::max(cfg.radius, 2), cfg.N);
    out.reports.push_back(verify_thm91_family(Rational::from_string(cfg.lam), Rational::from_string(cfg.mu),
                                              Rational::from_string(cfg.c), w));
    VerificationReport ns;
    ns.check = "lambda-nullspace";
    ns.config["N"] = cfg.N;
    ns.config["window"] = w.radius;
    auto res = lambda_nullspace(w);
    ns.details["unknowns"] = res.layout.size();
    ns.details["equations"] = res.equations;
    ns.details["rank"] = res.rank;
    ns.details["kernel_dim"] = res.basis.size();
    ns.details["family_contained"] = res.family_contained;
    if (!res.family_contained) ns.status = "fail";
    out.reports.push_back(ns);
}

}  // namespace

ReportBundle run(const RunConfig& cfg) {
    cfg.validate();
    ReportBundle out;
    out.config = cfg.echo();
    if (cfg.check == "jacobi") {
        run_jacobi(cfg, cfg.family, cfg.N, out);
    } else if (cfg.check == "closure") {
        run_closure(cfg, out);
    } else if (cfg.check == "form") {
        run_form(cfg, cfg.family, cfg.N, out);
    } else if (cfg.check == "eala") {
        run_eala(cfg, out);
    } else if (cfg.check == "automorphism") {
        run_automorphism(cfg, out);
    } else if (cfg.check == "jet") {
        run_jet(cfg, out);
    } else if (cfg.check == "evaluation") {
        run_evaluation(cfg, out);
    } else if (cfg.check == "realization") {
        run_realization(cfg, out);
    } else if (cfg.check == "lambda") {
        run_lambda(cfg, out);
    } else if (cfg.check == "all") {
        // fixed battery at conservative windows
        RunConfig c1 = cfg;
        c1.radius = std::min(cfg.radius, 1);
        run_jacobi(c1, "tauH", 2, out);
        run_jacobi(c1, "tauD", 3, out);
        run_jacobi(c1, "minimalEALA", 2, out);
        RunConfig c2 = cfg;
        c2.N = 2;
        c2.radius = std::min(cfg.radius, 2);
        c2.decomposition = "N2";
        run_closure(c2, out);
        run_form(c2, "tauH", 2, out);
        RunConfig c3 = cfg;
        c3.family = "tauH";
        c3.N = 2;
        c3.radius = 1;
        run_eala(c3, out);
        RunConfig c4 = cfg;
        c4.family = "fullToroidal";
        c4.N = 2;
        c4.radius = 1;
        run_automorphism(c4, out);
        RunConfig c5 = cfg;
        c5.m = 1;
        c5.fiber = "defining";
        c5.radius = 2;
        run_jet(c5, out);
        RunConfig c6 = cfg;
        c6.radius = 2;
        run_evaluation(c6, out);
        RunConfig c7 = cfg;
        c7.m = 1;
        c7.fiber = "defining";
        c7.radius = 1;
        run_realization(c7, out);
        RunConfig c8 = cfg;
        c8.N = 2;
        c8.radius = 2;
        run_lambda(c8, out);
    }
    return out;
}

int exit_code_for(const ReportBundle& bundle, bool strict) { return bundle.all_passed(strict) ? 0 : 1; }

}  // namespace toralab
