#include "plasmon/modes.hpp"

#include "plasmon/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plasmon {

DrudePole drude_pole(const DrudeMaterial& m, int n) {
    if (n < 1) throw DomainError("multipole order must be >= 1");
    DrudePole p;
    p.n = n;
    const double eb = m.eps_background;
    p.A = n * m.eps_inf + (n + 1) * eb;
    const double w02 = n * m.omega_p * m.omega_p / p.A;
    p.omega_n0 = std::sqrt(w02);
    p.gamma_n = m.gamma_p;
    const double wn2 = w02 - 0.25 * m.gamma_p * m.gamma_p;
    if (!(wn2 > 0.0)) throw NonLorentzianError("overdamped Drude pole");
    p.omega_n = std::sqrt(wn2);
    p.amplitude = (2 * n + 1) * eb * w02 / p.A;
    p.c_inf = n * (m.eps_inf - eb) / p.A;
    return p;
}

double response_weight(const DrudePole& p) {
    // integral_0^inf G w / ((w0^2 - w^2)^2 + G^2 w^2) dw = (1 / 2 w_n) [pi/2 + atan(a / (G w_n))]
    const double G = p.gamma_n;
    const double a = p.omega_n0 * p.omega_n0 - 0.5 * G * G;
    const double I = (0.5 * pi + std::atan(a / (G * p.omega_n))) / (2.0 * p.omega_n);
    return p.amplitude * I / pi;
}

double lorentzian_residual(const DrudeMaterial& m, int n) {
    const DrudePole p = drude_pole(m, n);
    const double w = response_weight(p);
    const double G = p.gamma_n;
    double peak = 0.0, worst = 0.0;
    for (int k = -400; k <= 400; ++k) {
        const double om = p.omega_n + 10.0 * G * k / 400.0;
        if (om <= 0.0) continue;
        const double exact = multipole_response(m, n, om).imag() / pi;
        const double dw = om - p.omega_n;
        const double lor = w * (G / (2.0 * pi)) / (dw * dw + 0.25 * G * G);
        peak = std::max(peak, exact);
        worst = std::max(worst, std::abs(exact - lor));
    }
    return worst / peak;
}

ModeSet extract_modes(const EnsembleKernel& kernel, bool validate_fit) {
    const DrudeMaterial& m = kernel.material();
    ModeSet ms;
    ms.N = kernel.orders();
    ms.n_emitters = kernel.size();
    ms.omega.resize(ms.N);
    ms.gamma.resize(ms.N);
    ms.g.resize(ms.N, ms.n_emitters);
    ms.mu.resize(ms.N);
    const Eigen::MatrixXd& pref = kernel.prefactor();
    for (int n = 1; n <= ms.N; ++n) {
        const DrudePole p = drude_pole(m, n);
        ms.omega[n - 1] = p.omega_n;
        ms.gamma[n - 1] = p.gamma_n;
        if (validate_fit) {
            const double r = lorentzian_residual(m, n);
            ms.max_fit_residual = std::max(ms.max_fit_residual, r);
            if (r > 0.05) throw NonLorentzianError("order " + std::to_string(n) + " is not Lorentzian");
        }
        const double weight = response_weight(p);
        const Eigen::MatrixXd& T = kernel.geometric(n);
        Eigen::VectorXd s(ms.n_emitters);
        for (int j = 0; j < ms.n_emitters; ++j) {
            const double self = pref(j, j) * T(j, j);
            if (!(self > 0.0))
                throw DegenerateCouplingError("vanishing coupling of emitter " + std::to_string(j) + " to order " +
                                              std::to_string(n));
            ms.g(n - 1, j) = std::sqrt(self * weight);
            s[j] = std::sqrt(T(j, j));
        }
        ms.mu[n - 1] = T.array() / (s * s.transpose()).array();
        ms.mu[n - 1].diagonal().setOnes();
    }
    return ms;
}

double modal_overlap(const EnsembleKernel& kernel, const ModeSet& modes, int i, int j, int n) {
    const double w = modes.omega[n - 1];
    const Eigen::MatrixXd im = kernel.K_order(n, w).imag();
    if (i == j) return 1.0;
    const double ki = std::sqrt(im(i, i) / pi), kj = std::sqrt(im(j, j) / pi);
    if (!(ki > 0.0 && kj > 0.0)) throw DegenerateCouplingError("vanishing kappa at omega_n");
    return im(i, j) / (pi * ki * kj);
}

LowdinModes lowdin(const ModeSet& modes, double rank_tol) {
    LowdinModes out;
    const int ne = modes.n_emitters;
    for (int n = 1; n <= modes.N; ++n) {
        Eigen::MatrixXd S = 0.5 * (modes.mu[n - 1] + modes.mu[n - 1].transpose());
        // SVD rather than the tridiagonal QR: ring overlaps are rank-deficient with huge null spaces,
        // where the QR iteration can fail to converge. Signs come from the Rayleigh quotients.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeFullU);
        const Eigen::MatrixXd Uall = svd.matrixU();
        Eigen::VectorXd lam(ne);
        for (int k = 0; k < ne; ++k) lam[k] = Uall.col(k).dot(S * Uall.col(k));
        const double lmax = lam.maxCoeff();
        if (lam.minCoeff() < -1e-8 * std::max(1.0, lmax))
            throw InvalidOverlapError("overlap of order " + std::to_string(n) + " is not positive semidefinite");
        std::vector<int> keep;
        for (int k = 0; k < ne; ++k)
            if (lam[k] > rank_tol * lmax) keep.push_back(k);
        std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) { return lam[a] > lam[b]; });
        const int r = static_cast<int>(keep.size());
        Eigen::MatrixXd U(ne, r);
        Eigen::VectorXd L(r);
        for (int c = 0; c < r; ++c) {
            Eigen::VectorXd v = Uall.col(keep[c]);
            Eigen::Index imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            if (v[imax] < 0) v = -v;
            U.col(c) = v;
            L[c] = lam[keep[c]];
        }
        Eigen::MatrixXd C, X;
        if (r == ne) {
            C = U * L.cwiseSqrt().asDiagonal() * U.transpose();
            X = U * L.cwiseSqrt().cwiseInverse().asDiagonal() * U.transpose();
        } else {
            C = U * L.cwiseSqrt().asDiagonal();
            X = U * L.cwiseSqrt().cwiseInverse().asDiagonal();
        }
        out.n_ind.push_back(r);
        out.coupling.push_back(modes.g.row(n - 1).transpose().asDiagonal() * C);
        out.transform.push_back(X);
        out.eigenvalues.push_back(L);
    }
    return out;
}

}  // namespace plasmon
