#pragma once

#include "plasmon/exec.hpp"
#include "plasmon/model.hpp"
#include "plasmon/spectra.hpp"

#include <functional>
#include <vector>

namespace plasmon {

using RateFn = std::function<double(double)>;

struct BranchSample {
    double omega0 = 0.0;
    Eigen::VectorXd Omega, Gamma, weight;  // per dressed state; weight = summed emitter weight
};

// Dressed states of the reduced Hamiltonian at each omega0.
std::vector<BranchSample> sweep_branches(const BrightSector& bs, const std::vector<double>& omega0,
                                         const RateFn& gamma0, Exec exec = Exec::Parallel);

struct Anticrossing {
    double omega0 = 0.0;     // rad/s, interpolated crossing of the emitter-weight balance
    double lower = 0.0;      // rad/s
    double upper = 0.0;      // rad/s
    double gap = 0.0;        // rad/s
    double linewidth = 0.0;  // mean linewidth of the two branches, rad/s
    double weight = 0.0;     // emitter weight of the bright branch at the crossing
    bool resolvable = false; // gap > linewidth and weight >= the bright threshold
};

// The brightest state jumps to another branch between consecutive samples while the emitter weight
// balance of the two branches changes sign.
std::vector<Anticrossing> find_anticrossings(const std::vector<BranchSample>& samples, double min_weight = 0.1);

struct SpectralMap {
    std::vector<double> omega0, omega;  // rad/s
    Eigen::MatrixXd D;                  // rows: omega0, columns: omega; raw D
    Eigen::MatrixXd normalized() const; // each row divided by its maximum
};

SpectralMap spectral_map(const BrightSector& bs, const std::vector<double>& omega0,
                         const std::vector<double>& omega, const RateFn& gamma0, Exec exec = Exec::Parallel);

// Spectrum of the reduced system for a single omega0 (exact for the bright initial state).
Spectrum spectrum_reduced(const BrightSector& bs, double omega0, double gamma0, const std::vector<double>& omega,
                          Exec exec = Exec::Parallel);

struct RabiOptions {
    double omega0_min = 0.0, omega0_max = 0.0, omega0_step = 0.0;  // rad/s; zero -> defaults
    double min_weight = 0.1;
    double merge_linewidths = 3.0;
    bool convergence_check = true;
};

RabiOptions default_rabi_options();

struct RabiReport {
    int n_emitters = 0;
    std::vector<Anticrossing> full;  // every anticrossing of the complete model
    bool high_order_found = false;
    Anticrossing high_order;         // model restricted to orders n >= 2
    bool dipolar_resolvable = false;
    Anticrossing dipolar;            // model restricted to LSP_1
    bool separated = false;          // complete model shows two anticrossings > merge_linewidths apart
    bool merged = false;
    bool second_gap_present = false;
    bool dipolar_reported = false;
    bool found = false;
    double splitting = 0.0;          // headline splitting, rad/s
    double omega0 = 0.0;             // where it occurs, rad/s
    double convergence_drift = 0.0;  // relative change of the headline splitting with 2N orders
    bool convergence_flag = false;
};

RabiReport extract_rabi(const SystemModel& model, const RabiOptions& opt = default_rabi_options(),
                        Exec exec = Exec::Parallel);

// Helper: builds the model for N and 2N orders and reports the drift.
RabiReport extract_rabi_checked(const std::function<SystemModel(int)>& make_model, int N,
                                const RabiOptions& opt = default_rabi_options(), Exec exec = Exec::Parallel);

}  // namespace plasmon
