#include "weyllab/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weyllab/config.hpp"
#include "weyllab/errors.hpp"
#include "weyllab/io.hpp"

namespace weyllab {

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_override;
    int order = 0;       // 0 = keep config value
    double step = 0.0;   // 0 = keep config value
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "configuration file")->required();
    cmd->add_option("--out", opt.out_override, "output directory (overrides [output] dir)");
    cmd->add_option("--order", opt.order, "finite-difference order (2 or 4)");
    cmd->add_option("--step", opt.step, "finite-difference step");
}

RunConfig load(const CommonOptions& opt) {
    RunConfig cfg = parse_config(opt.config_path);
    if (!opt.out_override.empty()) cfg.out_dir = opt.out_override;
    if (opt.order != 0) cfg.fd.order = opt.order;
    if (opt.step != 0.0) cfg.fd.step = opt.step;
    cfg.fd.validate();
    return cfg;
}

void warn_non_normalizable(const RunConfig& cfg) {
    if (!cfg.f.normalizable()) {
        std::cerr << "warning: envelope f is not square integrable on the real line "
                     "(plane-wave style verification input)\n";
    }
    if (cfg.family == SolutionFamily::Dirac && !cfg.g.normalizable() &&
        !(cfg.g.kind() == Kind1D::Constant && cfg.g.offset() == 0.0)) {
        std::cerr << "warning: envelope g is not square integrable on the real line\n";
    }
}

int do_verify(const RunConfig& cfg) {
    const VerificationOutcome outcome = run_verification(cfg);
    const auto path = std::filesystem::path(cfg.out_dir) / "report.json";
    write_file_atomic(path, outcome.report_json);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " max_residual="
              << format_double(outcome.max_residual)
              << " mean_residual=" << format_double(outcome.mean_residual) << " report="
              << path.string() << "\n";
    return outcome.pass ? 0 : 1;
}

int do_emit(const RunConfig& cfg, const std::string& filename, const std::string& content) {
    const auto path = std::filesystem::path(cfg.out_dir) / filename;
    write_file_atomic(path, content);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"closed-form localized solutions to the massless Dirac and Weyl equations: "
                 "construction, observables, degenerate potentials/fields, and independent "
                 "numerical verification"};
    app.name("weyllab");
    app.require_subcommand(1);

    CommonOptions verify_opt, fields_opt, observ_opt, wave_opt, sep_opt;
    add_common(app.add_subcommand("verify", "run the residual/degeneracy verification suite"),
               verify_opt);
    add_common(app.add_subcommand("fields", "emit closed-form E/B maps"), fields_opt);
    add_common(app.add_subcommand("observables", "emit density/spin/helicity profiles"),
               observ_opt);
    add_common(app.add_subcommand("waveform", "emit the first-component waveform"), wave_opt);
    add_common(app.add_subcommand("separation", "emit the helicity-separation field map"),
               sep_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("verify")) {
            const RunConfig cfg = load(verify_opt);
            warn_non_normalizable(cfg);
            return do_verify(cfg);
        }
        if (app.got_subcommand("fields")) {
            const RunConfig cfg = load(fields_opt);
            return do_emit(cfg, "fields.csv", fields_csv(cfg));
        }
        if (app.got_subcommand("observables")) {
            const RunConfig cfg = load(observ_opt);
            return do_emit(cfg, "observables.csv", observables_csv(cfg));
        }
        if (app.got_subcommand("waveform")) {
            const RunConfig cfg = load(wave_opt);
            warn_non_normalizable(cfg);
            return do_emit(cfg, "waveform.csv", waveform_csv(cfg));
        }
        if (app.got_subcommand("separation")) {
            const RunConfig cfg = load(sep_opt);
            return do_emit(cfg, "separation.csv", fieldmap_csv(cfg));
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace weyllab
