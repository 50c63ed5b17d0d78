#include "plasmon/geometry.hpp"

#include "plasmon/errors.hpp"
#include "plasmon/units.hpp"

#include <cmath>

namespace plasmon {

void SphereGeometry::validate() const {
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
}

Orientation parse_orientation(const std::string& s) {
    if (s == "radial" || s == "perpendicular") return Orientation::Radial;
    if (s == "theta" || s == "orthoradial") return Orientation::Theta;
    if (s == "phi" || s == "azimuthal") return Orientation::Phi;
    throw DomainError("unknown orientation '" + s + "'");
}

std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::Radial: return "radial";
        case Orientation::Theta: return "theta";
        case Orientation::Phi: return "phi";
    }
    return "?";
}

Emitter emitter_from_spherical(double r, double theta, double phi, const Eigen::Vector3d& d_local) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    const Eigen::Vector3d er(st * cp, st * sp, ct);
    const Eigen::Vector3d et(ct * cp, ct * sp, -st);
    const Eigen::Vector3d ep(-sp, cp, 0.0);
    Emitter e;
    e.position = r * er;
    e.dipole = d_local[0] * er + d_local[1] * et + d_local[2] * ep;
    return e;
}

static Eigen::Vector3d local_dipole(double d, Orientation o) {
    switch (o) {
        case Orientation::Radial: return {d, 0.0, 0.0};
        case Orientation::Theta: return {0.0, d, 0.0};
        case Orientation::Phi: return {0.0, 0.0, d};
    }
    return {0.0, 0.0, 0.0};
}

std::vector<Emitter> ring_emitters(int count, double radius, double h, double d, Orientation o) {
    if (count < 1) throw DomainError("emitter count must be >= 1");
    std::vector<Emitter> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j)
        out.push_back(emitter_from_spherical(radius + h, pi / 2, 2.0 * pi * j / count, local_dipole(d, o)));
    return out;
}

std::vector<Emitter> coincident_emitters(int count, double radius, double h, double d, Orientation o) {
    if (count < 1) throw DomainError("emitter count must be >= 1");
    return std::vector<Emitter>(count, emitter_from_spherical(radius + h, pi / 2, 0.0, local_dipole(d, o)));
}

void check_outside(const SphereGeometry& g, const Emitter& e) {
    if (!(e.position.norm() > g.radius)) throw DomainError("emitter overlaps the sphere");
    if (!(e.dipole.norm() > 0.0)) throw DomainError("emitter dipole moment must be non-zero");
}

}  // namespace plasmon
