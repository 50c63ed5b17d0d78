#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace plasmon {

struct SphereGeometry {
    double radius = 0.0;  // m, centred at the origin
    void validate() const;
};

struct Emitter {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();  // m
    Eigen::Vector3d dipole = Eigen::Vector3d::Zero();    // C·m
};

// Orientation of a dipole in the local spherical frame of its position.
enum class Orientation { Radial, Theta, Phi };

Orientation parse_orientation(const std::string& s);
std::string to_string(Orientation o);

// Position from spherical coordinates, dipole from local (e_r, e_theta, e_phi) components.
Emitter emitter_from_spherical(double r, double theta, double phi, const Eigen::Vector3d& d_local);

struct EmitterEnsemble {
    std::vector<Emitter> emitters;
    double omega0 = 0.0;  // rad/s
    double gamma0 = 0.0;  // rad/s

    int size() const { return static_cast<int>(emitters.size()); }
};

// N_e emitters at phi_j = 2 pi j / N_e on the equator, distance h from the surface.
std::vector<Emitter> ring_emitters(int count, double radius, double h, double d, Orientation o);

// N_e emitters at the same point on the equator (phi = 0).
std::vector<Emitter> coincident_emitters(int count, double radius, double h, double d, Orientation o);

void check_outside(const SphereGeometry& g, const Emitter& e);

}  // namespace plasmon
