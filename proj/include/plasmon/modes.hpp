#pragma once

#include "plasmon/greens.hpp"

#include <Eigen/Dense>

#include <vector>

namespace plasmon {

// Drude pole of the order-n response:
//   response_n = c_n + amplitude_n / (omega_n0^2 - omega^2 - i Gamma omega)
struct DrudePole {
    int n = 0;
    double A = 0.0;           // n eps_inf + (n+1) eps_b
    double omega_n0 = 0.0;    // undamped resonance, rad/s
    double omega_n = 0.0;     // Lorentzian centre sqrt(omega_n0^2 - Gamma^2/4)
    double gamma_n = 0.0;     // Lorentzian FWHM
    double amplitude = 0.0;   // (2n+1) eps_b omega_n0^2 / A
    double c_inf = 0.0;       // high-frequency constant
};

DrudePole drude_pole(const DrudeMaterial& m, int n);

// (1/pi) integral_0^inf Im response_n(omega) d omega, in rad/s
double response_weight(const DrudePole& p);

// Max |(1/pi) Im response - Lorentzian| / peak over +-10 linewidths around omega_n.
double lorentzian_residual(const DrudeMaterial& m, int n);

struct ModeSet {
    int N = 0;
    int n_emitters = 0;
    std::vector<double> omega;              // omega_n, rad/s
    std::vector<double> gamma;              // Gamma_n, rad/s
    Eigen::MatrixXd g;                      // N x N_e couplings g_n^(j), rad/s
    std::vector<Eigen::MatrixXd> mu;        // per order, N_e x N_e overlap (real for real dipoles)
    double max_fit_residual = 0.0;
};

ModeSet extract_modes(const EnsembleKernel& kernel, bool validate_fit = true);

// Overlap from its defining ratio Im K^n_ij(omega_n) / (pi kappa_i kappa_j).
double modal_overlap(const EnsembleKernel& kernel, const ModeSet& modes, int i, int j, int n);

struct LowdinModes {
    std::vector<int> n_ind;                  // per order
    std::vector<Eigen::MatrixXd> coupling;   // per order, N_e x N_ind: g_n^(jl)
    std::vector<Eigen::MatrixXd> transform;  // per order, N_e x N_ind: Lowdin mode = sum_j X_jl a_j
    std::vector<Eigen::VectorXd> eigenvalues;
};

LowdinModes lowdin(const ModeSet& modes, double rank_tol = 1e-8);

}  // namespace plasmon
