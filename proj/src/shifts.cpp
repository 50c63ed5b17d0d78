#include "plasmon/shifts.hpp"

#include "plasmon/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace plasmon {

static double lorentz_dispersive(double omega_n, double gamma_n, double omega0) {
    const double d = omega_n - omega0;
    return d / (d * d + 0.25 * gamma_n * gamma_n);
}

double lamb_shift_effective(const ModeSet& modes, int j, double omega0) {
    double s = 0.0;
    for (int n = 1; n <= modes.N; ++n) {
        const double g = modes.g(n - 1, j);
        s += g * g * lorentz_dispersive(modes.omega[n - 1], modes.gamma[n - 1], omega0);
    }
    return s;
}

double lamb_shift_classical(const EnsembleKernel& kernel, int j, double omega0) {
    return kernel.K(omega0)(j, j).real();
}

double quantum_correction(const ModeSet& modes, const EnsembleKernel& kernel, int j, double omega0) {
    return lamb_shift_effective(modes, j, omega0) - lamb_shift_classical(kernel, j, omega0);
}

double negative_frequency_term(const EnsembleKernel& kernel, int i, int j, double omega0) {
    const DrudeMaterial& m = kernel.material();
    const double pref = kernel.prefactor()(i, j);
    const double cutoff = 400.0 * m.omega_p;
    double total = 0.0;
    for (int n = 1; n <= kernel.orders(); ++n) {
        const double T = kernel.geometric(n)(i, j);
        if (T == 0.0) continue;
        const DrudePole p = drude_pole(m, n);
        auto f = [&](double w) { return w > 0.0 ? multipole_response(m, n, w).imag() / (w + omega0) : 0.0; };
        const double G = p.gamma_n;
        const double pts[] = {0.0, p.omega_n - 20 * G, p.omega_n, p.omega_n + 20 * G, 4 * p.omega_n, cutoff};
        double s = 0.0;
        for (int k = 0; k + 1 < 6; ++k)
            s += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, pts[k], pts[k + 1], 20, 1e-12);
        // Im response ~ amplitude Gamma / w^3 beyond the cutoff
        s += p.amplitude * G / (3.0 * cutoff * cutoff * cutoff);
        total += T * s;
    }
    return -pref * total / pi;
}

ShiftResult lamb_shift(const ModeSet& modes, const EnsembleKernel& kernel, int j, double omega0, bool with_kk) {
    ShiftResult r;
    r.effective = lamb_shift_effective(modes, j, omega0);
    r.classical = lamb_shift_classical(kernel, j, omega0);
    r.quantum_correction = r.effective - r.classical;
    const DrudeMaterial& m = kernel.material();
    r.kk_exact = m.eps_inf == m.eps_background;
    r.high_frequency_term = kernel.K_infinity()(j, j);
    if (with_kk) r.kk_correction = negative_frequency_term(kernel, j, j, omega0);
    return r;
}

double static_shift(Orientation o, double d, double radius, double h, double eps_b, int N) {
    using K = PhysicalConstants;
    if (!(h > 0.0)) throw DomainError("static_shift: h must be positive");
    if (o == Orientation::Theta || o == Orientation::Phi) {
        double s = 0.0;
        for (int n = 1; n <= N; ++n) s += n * (n + 1.0) / std::pow(1.0 + h / radius, 2 * n + 4);
        return d * d / (8.0 * pi * K::hbar * K::eps0 * eps_b * radius * radius * radius) * s;
    }
    double s = 0.0;
    for (int n = 1; n <= N; ++n) s += (n + 1.0) * (n + 1.0) / std::pow(1.0 + h / radius, 2 * n + 4);
    return d * d / (4.0 * pi * K::hbar * K::eps0 * eps_b * radius * radius * radius) * s;
}

double dipole_dipole_shift(const ModeSet& modes, const EnsembleKernel& kernel, int i, int j, double omega0,
                           ShiftRoute route) {
    if (i == j) throw DomainError("dipole_dipole_shift needs two distinct emitters");
    if (route == ShiftRoute::Effective) {
        double s = 0.0;
        for (int n = 1; n <= modes.N; ++n)
            s += modes.g(n - 1, i) * modes.g(n - 1, j) * modes.mu[n - 1](i, j) *
                 lorentz_dispersive(modes.omega[n - 1], modes.gamma[n - 1], omega0);
        return s;
    }
    return kernel.K(omega0)(i, j).real() + negative_frequency_term(kernel, i, j, omega0);
}

}  // namespace plasmon
