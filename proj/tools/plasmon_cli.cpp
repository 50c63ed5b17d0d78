#include "plasmon/errors.hpp"
#include "plasmon/io.hpp"
#include "plasmon/runner.hpp"
#include "plasmon/units.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace plasmon;

namespace {

struct Common {
    std::string config, preset, out = "out", route;
    int modes = 0;
    bool no_correction = false, plot = false, serial = false, no_convergence = false;
};

void add_common(CLI::App* app, Common& c) {
    auto* cfg = app->add_option("--config", c.config, "scenario file (INI)")->check(CLI::ExistingFile);
    app->add_option("--preset", c.preset, "embedded scenario preset")->excludes(cfg);
    app->add_option("--out", c.out, "output directory")->capture_default_str();
    app->add_option("--modes", c.modes, "number of multipole orders N")->check(CLI::PositiveNumber);
    app->add_option("--route", c.route, "spectrum route")->check(CLI::IsMember({"effective", "continuous", "ideal"}));
    app->add_flag("--no-correction", c.no_correction, "use the classical kernel only");
    app->add_flag("--plot", c.plot, "also write plot.py next to the CSVs");
    app->add_flag("--serial", c.serial, "disable OpenMP kernels");
    app->add_flag("--no-convergence", c.no_convergence, "skip the 2N convergence re-run");
}

Scenario load(const Common& c) {
    if (!c.config.empty()) return load_scenario(c.config);
    if (!c.preset.empty()) return preset_scenario(c.preset);
    throw ConfigError("--config", "one of --config or --preset is required");
}

int run(const Common& c, const std::string& verb) {
    RunOptions opt;
    opt.out_dir = c.out;
    if (c.modes > 0) opt.modes = c.modes;
    if (!c.route.empty()) opt.route = c.route;
    opt.no_correction = c.no_correction;
    opt.plot = c.plot;
    opt.exec = c.serial ? Exec::Serial : Exec::Parallel;
    opt.convergence_check = !c.no_convergence;

    const Scenario s = apply_overrides(load(c), opt);
    const RunResult r = run_scenario(s, opt, verb);
    std::cout << r.verb << " " << s.name << " config " << r.config_hash << "\n";
    for (const auto& f : r.files) std::cout << "  " << c.out << "/" << f.name << "  " << f.hash << "\n";
    for (const auto& rep : r.rabi) {
        std::cout << "  N_e=" << rep.n_emitters;
        if (rep.found)
            std::cout << "  splitting " << fmt_fixed(rad_s_to_mev(rep.splitting), 1) << " meV at "
                      << fmt_fixed(rad_s_to_ev(rep.omega0), 4) << " eV";
        else
            std::cout << "  no anticrossing";
        if (rep.dipolar_reported) std::cout << "  dipolar " << fmt_fixed(rad_s_to_mev(rep.dipolar.gap), 1) << " meV";
        if (rep.second_gap_present) std::cout << "  second gap";
        if (rep.convergence_flag) std::cout << "  [drift " << fmt_fixed(100 * rep.convergence_drift, 2) << "%]";
        std::cout << "\n";
    }
    if (r.convergence_flag)
        std::cout << "warning: results drift by " << fmt_fixed(100 * r.convergence_drift, 2)
                  << "% when the number of orders is doubled\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum emitters coupled to the plasmon modes of a metal sphere"};
    app.require_subcommand(1);

    Common common;
    std::string verb;
    for (const char* v : {"spectrum", "map", "shifts", "rabi", "dressed"}) {
        auto* sub = app.add_subcommand(v, std::string("run the ") + v + " verb");
        add_common(sub, common);
        sub->callback([&verb, v] { verb = v; });
    }
    auto* runc = app.add_subcommand("run", "run the verb named in the scenario");
    add_common(runc, common);
    runc->callback([&verb] { verb = ""; });

    auto* modes = app.add_subcommand("modes", "plasmon mode tables");
    auto* dump = modes->add_subcommand("dump", "write modes.json");
    add_common(dump, common);
    dump->callback([&verb] { verb = "modes"; });
    modes->require_subcommand(1);

    auto* preset = app.add_subcommand("preset", "embedded scenarios");
    preset->require_subcommand(1);
    auto* list = preset->add_subcommand("list", "list preset names");
    std::string show_name;
    auto* show = preset->add_subcommand("show", "print a preset as a scenario file");
    show->add_option("name", show_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (list->parsed()) {
            for (const auto& n : preset_names()) {
                const Scenario s = preset_scenario(n);
                std::cout << n << "  " << s.verb << "  " << s.description << "\n";
            }
            return 0;
        }
        if (show->parsed()) {
            std::cout << preset_text(show_name);
            return 0;
        }
        return run(common, verb);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
