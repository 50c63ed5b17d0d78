#pragma once

#include "plasmon/exec.hpp"
#include "plasmon/hamiltonian.hpp"
#include "plasmon/modes.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace plasmon {

struct PVResult {
    double value = 0.0;
    double residual = 0.0;
};

// P integral_lo^hi f(w) / (w - omega0) dw by singularity subtraction:
//   integral (f(w) - f(omega0)) / (w - omega0) dw + f(omega0) ln((hi - omega0) / (omega0 - lo))
// Features much narrower than their segment can be missed entirely by the adaptive rule, with a small
// error estimate; pass breakpoints bracketing them. Throws QuadratureError when the error estimate
// exceeds tol * (|value| + scale).
PVResult pv_transform(const std::function<double(double)>& f, double omega0, double lo, double hi,
                      std::vector<double> breakpoints = {}, double tol = 1e-9, double scale = 0.0);

// Same, for f sampled on an increasing grid (trapezoidal rule, residual from the half-resolution rule).
PVResult pv_transform_sampled(const std::vector<double>& omega, const std::vector<double>& f, double omega0);

enum class KernelRoute {
    ClosedForm,    // Lorentzian mode sum, both parts
    Corrected,     // effective dispersive part + exact Im K (correction on)
    Classical,     // K(omega) itself (correction off)
    PVQuadrature,  // Hilbert transform of the exact Im K + i Im K
};

std::string to_string(KernelRoute r);

// M(omega) = Delta(omega) + i Gamma(omega)/2 for an ensemble.
class ContinuousKernel {
public:
    ContinuousKernel(const EnsembleKernel& kernel, const ModeSet& modes, double cutoff_factor = 20.0);

    Eigen::MatrixXcd M(double omega, KernelRoute route) const;
    Eigen::MatrixXcd M_closed_form(double omega) const;
    // (1/pi) P integral_0^cutoff Im response_n(w) / (w - omega) dw
    double response_hilbert(int n, double omega) const;
    double cutoff() const { return cutoff_; }
    const EnsembleKernel& kernel() const { return *kernel_; }
    const ModeSet& modes() const { return *modes_; }

private:
    const EnsembleKernel* kernel_;
    const ModeSet* modes_;
    double cutoff_;
};

struct Spectrum {
    std::vector<double> omega;  // rad/s
    std::vector<double> D;      // per rad/s
    std::string route;
    std::vector<double> normalized() const;
};

std::vector<double> linear_grid(double lo, double hi, int points);

// (gamma0 / 2 pi) |sum_m eta_m <psi0|Pi_m> / (omega - Lambda_m)|^2
Spectrum spectrum_effective(const DressedStates& ds, double gamma0, const std::vector<double>& omega,
                            Exec exec = Exec::Parallel);

// (gamma0 / 2 pi) |a^H [(omega - omega0 + i gamma0/2) I + M(omega)]^-1 a / a^H a|^2
Spectrum spectrum_continuous(const ContinuousKernel& K, const Eigen::VectorXcd& amplitudes, double omega0,
                             double gamma0, const std::vector<double>& omega, KernelRoute route,
                             Exec exec = Exec::Parallel);

// Coincident emitters: (gamma0 / 2 pi) |1 / (omega - omega0 + i gamma0/2 + N_e M11(omega))|^2
Spectrum spectrum_ideal_closed_form(const std::function<cdouble(double)>& M11, int n_emitters, double omega0,
                                    double gamma0, const std::vector<double>& omega);

// [a I + b P]^-1 with P the all-ones matrix: (1/a) I - b / (a (a + N b)) P
Eigen::MatrixXcd rank_one_inverse(cdouble a, cdouble b, int n);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace plasmon
