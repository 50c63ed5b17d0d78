#pragma once

#include "plasmon/exec.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/model.hpp"
#include "plasmon/units.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plasmon {

// Flat key-value scenario; see README for the schema. Units at the I/O boundary: eV, nm, Debye.
struct Scenario {
    std::string name = "custom";
    std::string description;
    std::string verb = "spectrum";

    DrudeMaterial material = material_preset("silver-drude");
    double radius_nm = 8.0;

    std::string layout = "ring";  // ring | coincident | both (rabi only)
    int count = 1;
    std::vector<int> counts;      // N_e list for rabi sweeps
    double distance_nm = 2.0;
    double dipole_debye = 24.0;
    Orientation orientation = Orientation::Theta;
    std::optional<double> omega0_ev;          // empty -> "auto": anticrossing frequency
    std::optional<double> gamma0_per_s;

    int modes = 30;
    int size_cap = 4000;
    double pv_cutoff_factor = 20.0;

    double sweep_min_ev = 2.3, sweep_max_ev = 3.8, sweep_step_ev = 0.001;  // rabi / shifts / map rows
    std::optional<double> omega_min_ev, omega_max_ev;                      // default omega0 -+ 0.5 eV
    int omega_points = 2000;

    std::string route = "effective";  // effective | continuous | ideal
    bool correction = true;
};

Scenario parse_scenario(const std::string& ini_text, const std::string& source = "<config>");
Scenario load_scenario(const std::string& path);

std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);
Scenario preset_scenario(const std::string& name);

// Canonical key-value rendering; the manifest hashes this text.
std::string canonical_text(const Scenario& s);

std::vector<Emitter> scenario_emitters(const Scenario& s, int count, bool coincident);
SystemModel scenario_model(const Scenario& s, int count, bool coincident, int N);

}  // namespace plasmon
