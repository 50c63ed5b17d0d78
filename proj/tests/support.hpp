#pragma once

#include "plasmon/geometry.hpp"
#include "plasmon/model.hpp"
#include "plasmon/units.hpp"

#include <random>
#include <vector>

namespace support {

inline plasmon::DrudeMaterial silver() { return plasmon::material_preset("silver-drude"); }
inline plasmon::DrudeMaterial gold() { return plasmon::material_preset("gold-drude"); }

inline std::vector<plasmon::Emitter> ring(int ne, double R_nm = 8, plasmon::Orientation o = plasmon::Orientation::Theta) {
    return plasmon::ring_emitters(ne, plasmon::nm_to_m(R_nm), plasmon::nm_to_m(2), plasmon::debye_to_cm(24), o);
}

inline std::vector<plasmon::Emitter> coincident(int ne, double R_nm = 8,
                                                plasmon::Orientation o = plasmon::Orientation::Theta) {
    return plasmon::coincident_emitters(ne, plasmon::nm_to_m(R_nm), plasmon::nm_to_m(2), plasmon::debye_to_cm(24), o);
}

inline plasmon::SystemModel model(const std::vector<plasmon::Emitter>& e, int N = 30, double R_nm = 8,
                                  const plasmon::DrudeMaterial& m = silver()) {
    return plasmon::SystemModel(m, plasmon::SphereGeometry{plasmon::nm_to_m(R_nm)}, e, N);
}

// Unit vector and a point outside the unit sphere, for geometry in units of R.
inline Eigen::Vector3d random_unit(std::mt19937& rng) {
    std::normal_distribution<double> n;
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    return v.normalized();
}

inline Eigen::Vector3d random_outside(std::mt19937& rng, double rmin = 1.05, double rmax = 1.6) {
    std::uniform_real_distribution<double> u(rmin, rmax);
    return u(rng) * random_unit(rng);
}

}  // namespace support
