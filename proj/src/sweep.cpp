#include "plasmon/sweep.hpp"

#include "plasmon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plasmon {

static BranchSample branch_sample(const BrightSector& bs, double omega0, double gamma0) {
    const Eigen::MatrixXcd H = reduced_hamiltonian(bs, omega0, gamma0);
    const int M = static_cast<int>(H.rows()), k = bs.k();
    // With a single emitter vector the eigenvector is (1, c / (lambda - eps)) blockwise, so eigenvalues suffice.
    const bool arrow = k == 1;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(H, !arrow);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    std::vector<int> idx(M);
    std::iota(idx.begin(), idx.end(), 0);
    const Eigen::VectorXcd ev = es.eigenvalues();
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ev[a].real() < ev[b].real(); });
    BranchSample s;
    s.omega0 = omega0;
    s.Omega.resize(M);
    s.Gamma.resize(M);
    s.weight.resize(M);
    for (int m = 0; m < M; ++m) {
        const cdouble lam = ev[idx[m]];
        s.Omega[m] = lam.real();
        s.Gamma[m] = -2.0 * lam.imag();
        if (arrow) {
            double plasmon = 0.0;
            for (std::size_t b = 0; b < bs.coupling.size(); ++b)
                plasmon += bs.coupling[b].squaredNorm() / std::norm(lam - cdouble(bs.omega[b], -0.5 * bs.gamma[b]));
            s.weight[m] = 1.0 / (1.0 + plasmon);
        } else {
            const auto v = es.eigenvectors().col(idx[m]);
            s.weight[m] = v.head(k).squaredNorm() / v.squaredNorm();
        }
    }
    return s;
}

std::vector<BranchSample> sweep_branches(const BrightSector& bs, const std::vector<double>& omega0,
                                         const RateFn& gamma0, Exec exec) {
    const long n = static_cast<long>(omega0.size());
    std::vector<double> rates(n);
    for (long i = 0; i < n; ++i) rates[i] = gamma0(omega0[i]);
    std::vector<BranchSample> out(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) out[i] = branch_sample(bs, omega0[i], rates[i]);
    } else {
        for (long i = 0; i < n; ++i) out[i] = branch_sample(bs, omega0[i], rates[i]);
    }
    return out;
}

static int nearest(const Eigen::VectorXd& v, double x) {
    Eigen::Index i = 0;
    (v.array() - x).abs().minCoeff(&i);
    return static_cast<int>(i);
}

std::vector<Anticrossing> find_anticrossings(const std::vector<BranchSample>& samples, double min_weight) {
    std::vector<Anticrossing> out;
    for (std::size_t s = 0; s + 1 < samples.size(); ++s) {
        const BranchSample& a = samples[s];
        const BranchSample& b = samples[s + 1];
        Eigen::Index ia = 0, ib = 0;
        a.weight.maxCoeff(&ia);
        b.weight.maxCoeff(&ib);
        const int jA = nearest(b.Omega, a.Omega[ia]);  // a's bright branch followed into b
        const int jB = nearest(a.Omega, b.Omega[ib]);  // b's bright branch traced back into a
        if (jA == ib) continue;
        const double ba = a.weight[ia] - a.weight[jB];
        const double bb = b.weight[jA] - b.weight[ib];
        if (!(ba >= 0.0 && bb <= 0.0)) continue;
        const double t = ba != bb ? ba / (ba - bb) : 0.5;
        const double w1 = (1 - t) * a.Omega[ia] + t * b.Omega[jA];
        const double w2 = (1 - t) * a.Omega[jB] + t * b.Omega[ib];
        Anticrossing ac;
        ac.omega0 = (1 - t) * a.omega0 + t * b.omega0;
        ac.lower = std::min(w1, w2);
        ac.upper = std::max(w1, w2);
        ac.gap = ac.upper - ac.lower;
        ac.linewidth = ((1 - t) * (a.Gamma[ia] + a.Gamma[jB]) + t * (b.Gamma[jA] + b.Gamma[ib])) / 2.0;
        ac.weight = (1 - t) * a.weight[ia] + t * b.weight[jA];
        ac.resolvable = ac.gap > ac.linewidth && ac.weight >= min_weight;
        out.push_back(ac);
    }
    return out;
}

Eigen::MatrixXd SpectralMap::normalized() const {
    Eigen::MatrixXd out = D;
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        const double mx = out.row(r).maxCoeff();
        if (mx > 0.0) out.row(r) /= mx;
    }
    return out;
}

Spectrum spectrum_reduced(const BrightSector& bs, double omega0, double gamma0, const std::vector<double>& omega,
                          Exec exec) {
    const Eigen::MatrixXcd H = reduced_hamiltonian(bs, omega0, gamma0);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(H.rows());
    psi[0] = 1.0;  // first emitter basis vector is the normalized initial state
    const DressedStates ds = dressed_states(H, psi, bs.k());
    return spectrum_effective(ds, gamma0, omega, exec);
}

SpectralMap spectral_map(const BrightSector& bs, const std::vector<double>& omega0,
                         const std::vector<double>& omega, const RateFn& gamma0, Exec exec) {
    SpectralMap map;
    map.omega0 = omega0;
    map.omega = omega;
    const long rows = static_cast<long>(omega0.size());
    map.D.resize(rows, omega.size());
    std::vector<double> rates(rows);
    for (long i = 0; i < rows; ++i) rates[i] = gamma0(omega0[i]);
    auto row = [&](long i) {
        const Spectrum s = spectrum_reduced(bs, omega0[i], rates[i], omega, Exec::Serial);
        for (std::size_t j = 0; j < omega.size(); ++j) map.D(i, j) = s.D[j];
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < rows; ++i) row(i);
    } else {
        for (long i = 0; i < rows; ++i) row(i);
    }
    return map;
}

RabiOptions default_rabi_options() {
    RabiOptions o;
    o.omega0_min = ev_to_rad_s(2.3);
    o.omega0_max = ev_to_rad_s(3.8);
    o.omega0_step = ev_to_rad_s(0.001);
    return o;
}

static std::vector<double> omega0_grid(const RabiOptions& opt) {
    const RabiOptions d = default_rabi_options();
    const double lo = opt.omega0_min > 0 ? opt.omega0_min : d.omega0_min;
    const double hi = opt.omega0_max > 0 ? opt.omega0_max : d.omega0_max;
    const double st = opt.omega0_step > 0 ? opt.omega0_step : d.omega0_step;
    if (!(hi > lo)) throw DomainError("omega0 sweep range is empty");
    const int n = static_cast<int>(std::llround((hi - lo) / st)) + 1;
    return linear_grid(lo, hi, std::max(n, 2));
}

static std::vector<Anticrossing> resolvable(const std::vector<Anticrossing>& all) {
    std::vector<Anticrossing> out;
    for (const auto& a : all)
        if (a.resolvable) out.push_back(a);
    return out;
}

RabiReport extract_rabi(const SystemModel& model, const RabiOptions& opt, Exec exec) {
    RabiReport rep;
    rep.n_emitters = model.n_emitters();
    const auto w0s = omega0_grid(opt);
    const RateFn rate = [&](double w) { return model.gamma0(w); };
    const int N = model.orders();
    const double omega1 = model.modes().omega[0];

    rep.full = find_anticrossings(sweep_branches(model.bright_sector(), w0s, rate, exec), opt.min_weight);
    const auto ok = resolvable(rep.full);

    if (N >= 2) {
        OrderSelection high(N - 1);
        std::iota(high.begin(), high.end(), 2);
        const auto hs = resolvable(find_anticrossings(sweep_branches(model.bright_sector(high), w0s, rate, exec),
                                                      opt.min_weight));
        if (!hs.empty()) {
            rep.high_order_found = true;
            rep.high_order = *std::max_element(hs.begin(), hs.end(), [](const auto& a, const auto& b) {
                return a.omega0 < b.omega0;
            });
        }
    }
    const auto ds = resolvable(
        find_anticrossings(sweep_branches(model.bright_sector({1}), w0s, rate, exec), opt.min_weight));
    if (!ds.empty()) {
        rep.dipolar_resolvable = true;
        rep.dipolar = *std::min_element(ds.begin(), ds.end(), [&](const auto& a, const auto& b) {
            return std::abs(a.omega0 - omega1) < std::abs(b.omega0 - omega1);
        });
    }

    // In the complete model: the high-order anticrossing is the one at largest omega0, the dipolar one
    // the remaining anticrossing nearest omega_1.
    const Anticrossing* top = nullptr;
    const Anticrossing* low = nullptr;
    for (const auto& a : ok)
        if (!top || a.omega0 > top->omega0) top = &a;
    for (const auto& a : ok)
        if (&a != top && (!low || std::abs(a.omega0 - omega1) < std::abs(low->omega0 - omega1))) low = &a;
    if (top && low) {
        const double lw = std::max(top->linewidth, low->linewidth);
        rep.separated = std::abs(top->omega0 - low->omega0) > opt.merge_linewidths * lw;
    }
    rep.merged = rep.dipolar_resolvable && !rep.separated;
    rep.second_gap_present = rep.separated || rep.dipolar_resolvable;
    rep.dipolar_reported = rep.separated && rep.dipolar_resolvable;

    if (rep.merged && top) {
        rep.found = true;
        rep.splitting = top->gap;
        rep.omega0 = top->omega0;
    } else if (rep.high_order_found) {
        rep.found = true;
        rep.splitting = rep.high_order.gap;
        rep.omega0 = rep.high_order.omega0;
    } else if (top) {
        rep.found = true;
        rep.splitting = top->gap;
        rep.omega0 = top->omega0;
    }
    return rep;
}

RabiReport extract_rabi_checked(const std::function<SystemModel(int)>& make_model, int N, const RabiOptions& opt,
                                Exec exec) {
    RabiReport rep = extract_rabi(make_model(N), opt, exec);
    if (opt.convergence_check) {
        const RabiReport twice = extract_rabi(make_model(2 * N), opt, exec);
        if (rep.found && twice.found)
            rep.convergence_drift = std::abs(twice.splitting - rep.splitting) / rep.splitting;
        else
            rep.convergence_drift = rep.found == twice.found ? 0.0 : 1.0;
        rep.convergence_flag = rep.convergence_drift > 0.01;
    }
    return rep;
}

}  // namespace plasmon
