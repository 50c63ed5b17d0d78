#include "plasmon/model.hpp"

#include <cmath>

namespace plasmon {

SystemModel::SystemModel(const DrudeMaterial& m, const SphereGeometry& g, std::vector<Emitter> emitters, int N,
                         std::optional<double> gamma0_override, bool validate_fit)
    : emitters_(std::move(emitters)),
      kernel_(emitters_, m, g, N),
      modes_(extract_modes(kernel_, validate_fit)),
      lowdin_(lowdin(modes_)),
      gamma0_(gamma0_override) {}

double SystemModel::gamma0(double omega0) const {
    if (gamma0_) return *gamma0_;
    return free_space_rate(emitters_.front().dipole.norm(), omega0, kernel_.material().eps_background);
}

Eigen::VectorXd SystemModel::bright_amplitudes() const {
    return Eigen::VectorXd::Constant(n_emitters(), 1.0 / std::sqrt(double(n_emitters())));
}

BrightSector SystemModel::bright_sector(const OrderSelection& orders) const {
    return reduce_bright_sector(modes_, lowdin_, bright_amplitudes(), orders);
}

}  // namespace plasmon
