#pragma once

#include "plasmon/geometry.hpp"
#include "plasmon/units.hpp"

#include <Eigen/Dense>

#include <vector>

namespace plasmon {

// n(eps - eps_b) / (n eps + (n+1) eps_b)
cdouble multipole_response(const DrudeMaterial& m, int n, double omega);

// R^(2n+1) times the dimensionless response, in m^(2n+1)
cdouble multipole_polarizability(const DrudeMaterial& m, const SphereGeometry& g, int n, double omega);

struct LegendreTable {
    std::vector<double> p, dp, ddp;  // index n = 0..nmax
};
LegendreTable legendre(int nmax, double u);

// Dimensionless double gradient dh_i . grad_r grad_r' [P_n(u) / (r r')^(n+1)] . dh_j for n = 1..N,
// positions given in units of the sphere radius. Entry n-1 holds order n.
std::vector<double> double_gradient_orders(const Eigen::Vector3d& ri, const Eigen::Vector3d& di_hat,
                                           const Eigen::Vector3d& rj, const Eigen::Vector3d& dj_hat, int N);

// |d_i||d_j| / (4 pi hbar eps0 eps_b R^3), rad/s
double kernel_prefactor(const Emitter& ei, const Emitter& ej, const SphereGeometry& g, double eps_b);

struct GreenProjection {
    cdouble value;                 // d_i . G_scatt . d_j, with E = (omega^2 / eps0 c^2) G d
    std::vector<cdouble> orders;   // order-resolved terms, n = 1..N
    bool converged = true;         // last term <= 1e-10 of the running sum
    double last_term_ratio = 0.0;
};

GreenProjection green_projection(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m,
                                 const SphereGeometry& g, double omega, int N);

// (omega^2 / hbar eps0 c^2) G_ij in rad/s: M-kernel entry before the quantum correction.
cdouble rate_kernel(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m, const SphereGeometry& g,
                    double omega, int N);

// omega -> 0 limit of rate_kernel (every multipole response -> 1).
double rate_kernel_static(const Emitter& ei, const Emitter& ej, const SphereGeometry& g, double eps_b, int N);

// Gamma_ij = 2 Im K_ij
double cooperative_rate(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m, const SphereGeometry& g,
                        double omega, int N = 30);

// Precomputed geometric factors for a whole ensemble. Every kernel evaluation reduces to
// pref_ij * sum_n response_n(omega) T_n^ij.
class EnsembleKernel {
public:
    EnsembleKernel(const std::vector<Emitter>& emitters, const DrudeMaterial& m, const SphereGeometry& g, int N);

    int orders() const { return N_; }
    int size() const { return static_cast<int>(pref_.rows()); }
    const DrudeMaterial& material() const { return mat_; }
    const SphereGeometry& geometry() const { return geo_; }
    const Eigen::MatrixXd& prefactor() const { return pref_; }
    const Eigen::MatrixXd& geometric(int n) const { return T_[n - 1]; }

    Eigen::MatrixXcd K(double omega) const;
    Eigen::MatrixXcd K_order(int n, double omega) const;
    Eigen::MatrixXd imag_K(double omega) const { return K(omega).imag(); }
    // K at omega -> infinity (responses -> high-frequency constants); zero when eps_b == eps_inf.
    Eigen::MatrixXd K_infinity() const;
    Eigen::MatrixXd K_static() const;

private:
    DrudeMaterial mat_;
    SphereGeometry geo_;
    int N_;
    Eigen::MatrixXd pref_;
    std::vector<Eigen::MatrixXd> T_;
};

}  // namespace plasmon
