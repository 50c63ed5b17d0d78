#pragma once

#include "plasmon/exec.hpp"
#include "plasmon/scenario.hpp"
#include "plasmon/sweep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plasmon {

struct RunOptions {
    std::string out_dir = "out";
    std::optional<int> modes;
    std::optional<std::string> route;
    bool no_correction = false;
    bool plot = false;
    bool convergence_check = true;  // re-run with 2N orders and record the drift
    Exec exec = Exec::Parallel;
};

struct OutputFile {
    std::string name;
    std::string hash;
};

struct RunResult {
    std::string verb;
    std::string config_hash;
    std::vector<OutputFile> files;
    double convergence_drift = 0.0;
    bool convergence_flag = false;
    std::vector<RabiReport> rabi;  // filled by the rabi and map verbs
};

// Applies --modes, --route and --no-correction on top of the scenario.
Scenario apply_overrides(Scenario s, const RunOptions& opt);

// Runs `verb` (or the scenario's own verb when empty) and writes CSVs plus manifest.json into opt.out_dir.
RunResult run_scenario(const Scenario& s, const RunOptions& opt, const std::string& verb = "");

// Anticrossing frequency of the scenario's ensemble, used for omega0 = auto (rad/s).
double auto_omega0(const Scenario& s, int count, bool coincident, Exec exec = Exec::Parallel);

RabiOptions rabi_options(const Scenario& s);

}  // namespace plasmon
