#pragma once

#include <complex>
#include <string>
#include <vector>

namespace plasmon {

using cdouble = std::complex<double>;

struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;
    static constexpr double eps0 = 8.8541878128e-12;
    static constexpr double c = 299792458.0;
    static constexpr double elementary_charge = 1.602176634e-19;
    static constexpr double debye_to_coulomb_meter = 3.33564095e-30;
    // eV per (rad/s), i.e. hbar / e
    static constexpr double ev_per_rad_s = hbar / elementary_charge;
};

inline constexpr double pi = 3.14159265358979323846;

inline double ev_to_rad_s(double ev) { return ev / PhysicalConstants::ev_per_rad_s; }
inline double rad_s_to_ev(double w) { return w * PhysicalConstants::ev_per_rad_s; }
inline double rad_s_to_mev(double w) { return 1e3 * rad_s_to_ev(w); }
inline double debye_to_cm(double d) { return d * PhysicalConstants::debye_to_coulomb_meter; }
inline double cm_to_debye(double d) { return d / PhysicalConstants::debye_to_coulomb_meter; }
inline double nm_to_m(double x) { return x * 1e-9; }
inline double m_to_nm(double x) { return x * 1e9; }

struct DrudeMaterial {
    std::string name;
    double eps_inf = 1.0;
    double omega_p = 0.0;  // rad/s
    double gamma_p = 0.0;  // rad/s
    double eps_background = 1.0;

    void validate() const;
};

// eps_inf - omega_p^2 / (omega^2 + i gamma_p omega); throws DomainError for omega <= 0
cdouble epsilon(const DrudeMaterial& m, double omega);

// Background-medium spontaneous emission rate in rad/s. d in C·m.
double free_space_rate(double d, double omega0, double eps_b);

DrudeMaterial material_preset(const std::string& name);
std::vector<std::string> material_preset_names();

}  // namespace plasmon
