#pragma once

#include "plasmon/hamiltonian.hpp"
#include "plasmon/modes.hpp"

#include <optional>
#include <vector>

namespace plasmon {

// Everything derived from one geometry: kernel, modes, Lowdin modes.
class SystemModel {
public:
    SystemModel(const DrudeMaterial& m, const SphereGeometry& g, std::vector<Emitter> emitters, int N,
                std::optional<double> gamma0_override = std::nullopt, bool validate_fit = true);

    const std::vector<Emitter>& emitters() const { return emitters_; }
    const EnsembleKernel& kernel() const { return kernel_; }
    const ModeSet& modes() const { return modes_; }
    const LowdinModes& lowdin_modes() const { return lowdin_; }
    int n_emitters() const { return static_cast<int>(emitters_.size()); }
    int orders() const { return kernel_.orders(); }

    // Free-space rate at omega0 unless overridden.
    double gamma0(double omega0) const;
    Eigen::VectorXd bright_amplitudes() const;
    BrightSector bright_sector(const OrderSelection& orders = {}) const;

private:
    std::vector<Emitter> emitters_;
    EnsembleKernel kernel_;
    ModeSet modes_;
    LowdinModes lowdin_;
    std::optional<double> gamma0_;
};

}  // namespace plasmon
