#pragma once

#include "plasmon/modes.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace plasmon {

struct BasisLabel {
    bool emitter = true;
    int index = 0;  // emitter j, or Lowdin mode l
    int order = 0;  // LSP order n (plasmon states only)
};

struct EffectiveHamiltonian {
    Eigen::MatrixXcd H;  // H / hbar, rad/s
    int n_emitters = 0;
    std::vector<BasisLabel> labels;
    int dim() const { return static_cast<int>(H.rows()); }
};

// Restricts the Hamiltonian to a subset of LSP orders; empty means all.
using OrderSelection = std::vector<int>;
std::vector<int> resolve_orders(const OrderSelection& sel, int N);

EffectiveHamiltonian build_effective(double omega0, double gamma0, const ModeSet& modes, const LowdinModes& lw,
                                     const OrderSelection& orders = {}, int size_cap = 4000);

// Arrow matrix in the basis {|B>, |g,1_n>}: couplings sqrt(N_e) g_n.
EffectiveHamiltonian build_ideal(double omega0, double gamma0, const std::vector<double>& omega_n,
                                 const std::vector<double>& gamma_n, const std::vector<double>& g_n, int n_emitters);

struct DressedStates {
    Eigen::VectorXcd lambda;  // Omega_m - i Gamma_m / 2
    Eigen::MatrixXcd V;       // right eigenvectors, unit-norm columns
    Eigen::VectorXcd eta;     // V eta = psi(0)
    Eigen::VectorXcd overlap; // <psi(0)|Pi_m>
    Eigen::VectorXcd psi0;
    int n_emitters = 0;
    double condition = 1.0;
    bool ill_conditioned = false;               // condition number above 1e8
    std::vector<std::vector<int>> clusters;     // groups of near-degenerate eigenvalues
    double eta_inner_product_deviation = 0.0;   // max |eta_m - <Pi_m|psi0>|

    int size() const { return static_cast<int>(lambda.size()); }
    double Omega(int m) const { return lambda[m].real(); }
    double Gamma(int m) const { return -2.0 * lambda[m].imag(); }
    double emitter_weight(int m) const;
};

DressedStates dressed_states(const Eigen::MatrixXcd& H, const Eigen::VectorXcd& psi0, int n_emitters);

// |B> = sum_j |e_j> / sqrt(N_e) padded with zeros on the plasmon block.
Eigen::VectorXcd bright_initial_state(int n_emitters, int dim);

struct LadderRow {
    int m = 0;
    double omega_ev = 0.0;
    double gamma_ev = 0.0;
    std::vector<double> weights;  // |component|^2, normalized, in basis order
    bool bright = false;
};

std::vector<LadderRow> ladder_export(const DressedStates& ds);

// Exact reduction onto the H-invariant subspace generated from the initial emitter amplitudes.
struct BrightSector {
    Eigen::MatrixXd E;                          // N_e x k orthonormal emitter basis
    std::vector<int> orders;
    std::vector<double> omega, gamma;           // per retained order
    std::vector<Eigen::MatrixXd> coupling;      // per retained order: k x r
    int k() const { return static_cast<int>(E.cols()); }
    int dim() const;
};

BrightSector reduce_bright_sector(const ModeSet& modes, const LowdinModes& lw, const Eigen::VectorXd& amplitudes,
                                  const OrderSelection& orders = {}, double tol = 1e-10);

Eigen::MatrixXcd reduced_hamiltonian(const BrightSector& bs, double omega0, double gamma0);

}  // namespace plasmon
