#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "toralab/runner.hpp"

using namespace toralab;

namespace {

int cmd_verify(const RunConfig& cfg, const std::string& out_path, bool strict) {
    ReportBundle bundle = run(cfg);
    json doc = bundle.to_json(true);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << doc.dump(2) << "\n";
    }
    for (const auto& r : bundle.reports) {
        std::cout << (r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : r.status)) << "  "
                  << r.check;
        if (r.config.contains("family")) std::cout << "  [" << r.config["family"].get<std::string>() << "]";
        std::cout << "\n";
        for (const auto& w : r.witnesses) std::cout << "      witness: " << w.dump() << "\n";
    }
    return exit_code_for(bundle, strict);
}

int cmd_diff(const std::string& a, const std::string& b) {
    std::ifstream fa(a), fb(b);
    if (!fa || !fb) {
        std::cerr << "cannot open report file\n";
        return 2;
    }
    json ja, jb;
    try {
        fa >> ja;
        fb >> jb;
    } catch (const std::exception& e) {
        std::cerr << "malformed report: " << e.what() << "\n";
        return 2;
    }
    std::string d = report_diff(ja, jb);
    if (d.empty()) return 0;
    std::cout << d;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toralab: exact verification lab for graded toroidal-type Lie algebras"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run verification checks and emit a JSON report");
    std::string check = "all", config_file, out_path;
    RunConfig cfg;
    verify->add_option("check", check,
                       "jacobi|closure|form|eala|automorphism|jet|evaluation|realization|lambda|all");
    verify->add_option("--config", config_file, "key = value config file");
    verify->add_option("--family", cfg.family, "algebra family");
    verify->add_option("--N", cfg.N, "number of variables");
    verify->add_option("--g", cfg.g, "simple algebra, e.g. sl2");
    verify->add_option("--radius", cfg.radius, "window radius");
    verify->add_option("--decomposition", cfg.decomposition, "N2|generalN|levelzero");
    verify->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    verify->add_option("--m", cfg.m, "symplectic rank for jet checks");
    verify->add_option("--fiber", cfg.fiber, "trivial|defining|3dim|sym<k>");
    verify->add_flag("--calibrate", cfg.calibrate, "publish the calibrated coefficient profile");
    verify->add_option("--lam", cfg.lam, "lambda constant");
    verify->add_option("--mu", cfg.mu, "mu constant");
    verify->add_option("--c", cfg.c, "c constant");
    verify->add_option("--shear-a", cfg.shear_a, "shear parameter (2a-1 > 0)");
    verify->add_option("--seed", cfg.seed, "seed for the random unimodular matrices");
    verify->add_option("--points", cfg.points, "evaluation points, comma separated");
    verify->add_flag("--strict", cfg.strict, "partial/inconclusive also fail the run");
    verify->add_flag("--unsafe-large", cfg.unsafe_large, "override the window hard cap");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* diff = app.add_subcommand("diff", "structural diff of two reports, ignoring timing");
    std::string file_a, file_b;
    diff->add_option("a", file_a, "left report")->required();
    diff->add_option("b", file_b, "right report")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) {
            RunConfig base = cfg;
            if (!config_file.empty()) {
                // file first, explicit flags override
                base = RunConfig::from_file(config_file);
                if (verify->count("--family")) base.family = cfg.family;
                if (verify->count("--N")) base.N = cfg.N;
                if (verify->count("--g")) base.g = cfg.g;
                if (verify->count("--radius")) base.radius = cfg.radius;
                if (verify->count("--decomposition")) base.decomposition = cfg.decomposition;
                if (verify->count("--threads")) base.threads = cfg.threads;
                if (verify->count("--m")) base.m = cfg.m;
                if (verify->count("--fiber")) base.fiber = cfg.fiber;
                if (verify->count("--calibrate")) base.calibrate = cfg.calibrate;
                if (verify->count("--lam")) base.lam = cfg.lam;
                if (verify->count("--mu")) base.mu = cfg.mu;
                if (verify->count("--c")) base.c = cfg.c;
                if (verify->count("--shear-a")) base.shear_a = cfg.shear_a;
                if (verify->count("--seed")) base.seed = cfg.seed;
                if (verify->count("--points")) base.points = cfg.points;
                if (verify->count("--strict")) base.strict = cfg.strict;
                if (verify->count("--unsafe-large")) base.unsafe_large = cfg.unsafe_large;
            }
            if (verify->count("check")) base.check = check;
            return cmd_verify(base, out_path, base.strict);
        }
        if (app.got_subcommand(diff)) return cmd_diff(file_a, file_b);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
