#pragma once

#include "plasmon/geometry.hpp"
#include "plasmon/modes.hpp"

namespace plasmon {

// All shifts are the dispersive part Delta of the kernel M = Delta + i Gamma/2, in rad/s.
// The emitter line sits at omega0 - Delta.
struct ShiftResult {
    double effective = 0.0;
    double classical = 0.0;
    double quantum_correction = 0.0;  // effective - classical
    // Kramers-Kronig estimate of the correction, -(1/pi) integral_0^inf Im K(w) / (w + omega0) dw,
    // and the high-frequency constant K(inf) that it omits (zero when eps_b == eps_inf).
    double kk_correction = 0.0;
    double high_frequency_term = 0.0;
    bool kk_exact = false;  // eps_b == eps_inf
};

double lamb_shift_effective(const ModeSet& modes, int j, double omega0);
double lamb_shift_classical(const EnsembleKernel& kernel, int j, double omega0);
double quantum_correction(const ModeSet& modes, const EnsembleKernel& kernel, int j, double omega0);

// -(1/pi) integral_0^inf Im K_ij(w) / (w + omega0) dw
double negative_frequency_term(const EnsembleKernel& kernel, int i, int j, double omega0);

ShiftResult lamb_shift(const ModeSet& modes, const EnsembleKernel& kernel, int j, double omega0,
                       bool with_kk = false);

double static_shift(Orientation o, double d, double radius, double h, double eps_b, int N);

enum class ShiftRoute { Effective, ClassicalPlusCorrection };

// Effective: sum_n g_i g_j mu_ij (omega_n - omega0) / ((omega0 - omega_n)^2 + Gamma_n^2/4).
// ClassicalPlusCorrection: Re K_ij(omega0) plus the Kramers-Kronig correction term.
double dipole_dipole_shift(const ModeSet& modes, const EnsembleKernel& kernel, int i, int j, double omega0,
                           ShiftRoute route);

}  // namespace plasmon
