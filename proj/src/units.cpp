#include "plasmon/units.hpp"

#include "plasmon/errors.hpp"

#include <cmath>

namespace plasmon {

void DrudeMaterial::validate() const {
    if (!(eps_inf >= 1.0)) throw DomainError("eps_inf must be >= 1");
    if (!(eps_background >= 1.0)) throw DomainError("eps_background must be >= 1");
    if (!(omega_p > 0.0)) throw DomainError("omega_p must be > 0");
    if (!(gamma_p > 0.0)) throw DomainError("gamma_p must be > 0");
}

cdouble epsilon(const DrudeMaterial& m, double omega) {
    if (!(omega > 0.0)) throw DomainError("epsilon: omega must be positive");
    return m.eps_inf - m.omega_p * m.omega_p / cdouble(omega * omega, m.gamma_p * omega);
}

double free_space_rate(double d, double omega0, double eps_b) {
    using K = PhysicalConstants;
    if (!(d > 0.0)) throw DomainError("free_space_rate: dipole moment must be positive");
    if (!(omega0 > 0.0)) throw DomainError("free_space_rate: omega0 must be positive");
    if (!(eps_b > 0.0)) throw DomainError("free_space_rate: eps_b must be positive");
    return omega0 * omega0 * omega0 * d * d * std::sqrt(eps_b) /
           (3.0 * pi * K::eps0 * K::hbar * K::c * K::c * K::c);
}

DrudeMaterial material_preset(const std::string& name) {
    if (name == "gold-drude") return {"gold-drude", 1.0, 1.26e16, 1.41e14, 1.0};
    if (name == "silver-drude") return {"silver-drude", 6.0, 1.20e16, 7.74e13, 1.0};
    throw DomainError("unknown material preset '" + name + "'");
}

std::vector<std::string> material_preset_names() { return {"gold-drude", "silver-drude"}; }

}  // namespace plasmon
