#include "plasmon/greens.hpp"

#include "plasmon/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plasmon {

cdouble multipole_response(const DrudeMaterial& m, int n, double omega) {
    if (n < 1) throw DomainError("multipole order must be >= 1");
    const cdouble eps = epsilon(m, omega);
    const double eb = m.eps_background;
    return double(n) * (eps - eb) / (double(n) * eps + double(n + 1) * eb);
}

cdouble multipole_polarizability(const DrudeMaterial& m, const SphereGeometry& g, int n, double omega) {
    g.validate();
    return std::pow(g.radius, 2 * n + 1) * multipole_response(m, n, omega);
}

LegendreTable legendre(int nmax, double u) {
    LegendreTable t;
    t.p.assign(nmax + 1, 0.0);
    t.dp.assign(nmax + 1, 0.0);
    t.ddp.assign(nmax + 1, 0.0);
    t.p[0] = 1.0;
    if (nmax >= 1) {
        t.p[1] = u;
        t.dp[1] = 1.0;
    }
    for (int n = 2; n <= nmax; ++n) {
        t.p[n] = ((2 * n - 1) * u * t.p[n - 1] - (n - 1) * t.p[n - 2]) / n;
        t.dp[n] = t.dp[n - 2] + (2 * n - 1) * t.p[n - 1];
        t.ddp[n] = t.ddp[n - 2] + (2 * n - 1) * t.dp[n - 1];
    }
    return t;
}

std::vector<double> double_gradient_orders(const Eigen::Vector3d& ri, const Eigen::Vector3d& di_hat,
                                           const Eigen::Vector3d& rj, const Eigen::Vector3d& dj_hat, int N) {
    const double a = ri.norm(), b = rj.norm();
    const Eigen::Vector3d rh = ri / a, sh = rj / b;
    const double u = std::clamp(rh.dot(sh), -1.0, 1.0);
    const Eigen::Vector3d du = (sh - u * rh) / a;   // d u / d r
    const Eigen::Vector3d dup = (rh - u * sh) / b;  // d u / d r'
    // d'_k (d u / d r_i) = [(delta_ik - sh_i sh_k)/b - rh_i dup_k] / a
    const Eigen::Matrix3d ddu = ((Eigen::Matrix3d::Identity() - sh * sh.transpose()) / b - rh * dup.transpose()) / a;

    // Contract everything with the two dipole directions once.
    const double x_r = di_hat.dot(rh), x_u = di_hat.dot(du);
    const double y_r = dj_hat.dot(sh), y_u = dj_hat.dot(dup);
    const double xy_ddu = di_hat.dot(ddu * dj_hat);

    const LegendreTable L = legendre(N, u);
    std::vector<double> out(N);
    const double ia = 1.0 / a, ib = 1.0 / b;
    double An = ia, Bn = ib;  // a^-(n+1), b^-(n+1), updated per order
    for (int n = 1; n <= N; ++n) {
        An *= ia;
        Bn *= ib;
        const double Ap = -(n + 1) * An * ia, Bp = -(n + 1) * Bn * ib;
        const double P = L.p[n], dP = L.dp[n], ddP = L.ddp[n];
        const double t1 = Ap * x_r * (Bp * y_r * P + Bn * dP * y_u);
        const double t2 = An * (Bp * x_u * y_r * dP + Bn * ddP * x_u * y_u + Bn * dP * xy_ddu);
        out[n - 1] = t1 + t2;
    }
    return out;
}

double kernel_prefactor(const Emitter& ei, const Emitter& ej, const SphereGeometry& g, double eps_b) {
    using K = PhysicalConstants;
    const double R3 = g.radius * g.radius * g.radius;
    return ei.dipole.norm() * ej.dipole.norm() / (4.0 * pi * K::hbar * K::eps0 * eps_b * R3);
}

static std::vector<double> scaled_orders(const Emitter& ei, const Emitter& ej, const SphereGeometry& g, int N) {
    g.validate();
    check_outside(g, ei);
    check_outside(g, ej);
    if (N < 1) throw DomainError("number of orders must be >= 1");
    return double_gradient_orders(ei.position / g.radius, ei.dipole.normalized(), ej.position / g.radius,
                                  ej.dipole.normalized(), N);
}

GreenProjection green_projection(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m,
                                 const SphereGeometry& g, double omega, int N) {
    using K = PhysicalConstants;
    if (!(omega > 0.0)) throw DomainError("green_projection: omega must be positive");
    const auto T = scaled_orders(ei, ej, g, N);
    // K = (omega^2 / hbar eps0 c^2) G  =>  G = K hbar eps0 c^2 / omega^2
    const double to_green = kernel_prefactor(ei, ej, g, m.eps_background) * K::hbar * K::eps0 * K::c * K::c /
                            (omega * omega);
    GreenProjection out;
    out.orders.resize(N);
    cdouble sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        out.orders[n - 1] = to_green * multipole_response(m, n, omega) * T[n - 1];
        sum += out.orders[n - 1];
    }
    out.value = sum;
    out.last_term_ratio = std::abs(sum) > 0.0 ? std::abs(out.orders.back()) / std::abs(sum) : 0.0;
    out.converged = out.last_term_ratio <= 1e-10;
    return out;
}

cdouble rate_kernel(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m, const SphereGeometry& g,
                    double omega, int N) {
    if (!(omega > 0.0)) throw DomainError("rate_kernel: omega must be positive");
    const auto T = scaled_orders(ei, ej, g, N);
    cdouble sum = 0.0;
    for (int n = 1; n <= N; ++n) sum += multipole_response(m, n, omega) * T[n - 1];
    return kernel_prefactor(ei, ej, g, m.eps_background) * sum;
}

double rate_kernel_static(const Emitter& ei, const Emitter& ej, const SphereGeometry& g, double eps_b, int N) {
    const auto T = scaled_orders(ei, ej, g, N);
    double sum = 0.0;
    for (double t : T) sum += t;
    return kernel_prefactor(ei, ej, g, eps_b) * sum;
}

double cooperative_rate(const Emitter& ei, const Emitter& ej, const DrudeMaterial& m, const SphereGeometry& g,
                        double omega, int N) {
    return 2.0 * rate_kernel(ei, ej, m, g, omega, N).imag();
}

EnsembleKernel::EnsembleKernel(const std::vector<Emitter>& emitters, const DrudeMaterial& m,
                               const SphereGeometry& g, int N)
    : mat_(m), geo_(g), N_(N) {
    const int ne = static_cast<int>(emitters.size());
    if (ne < 1) throw DomainError("ensemble must contain at least one emitter");
    pref_.resize(ne, ne);
    T_.assign(N, Eigen::MatrixXd::Zero(ne, ne));
    for (int i = 0; i < ne; ++i) {
        for (int j = i; j < ne; ++j) {
            const auto t = scaled_orders(emitters[i], emitters[j], g, N);
            pref_(i, j) = pref_(j, i) = kernel_prefactor(emitters[i], emitters[j], g, m.eps_background);
            for (int n = 0; n < N; ++n) T_[n](i, j) = T_[n](j, i) = t[n];
        }
    }
}

Eigen::MatrixXcd EnsembleKernel::K(double omega) const {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(size(), size());
    for (int n = 1; n <= N_; ++n) sum += multipole_response(mat_, n, omega) * T_[n - 1].cast<cdouble>();
    return pref_.cast<cdouble>().cwiseProduct(sum);
}

Eigen::MatrixXcd EnsembleKernel::K_order(int n, double omega) const {
    return multipole_response(mat_, n, omega) * pref_.cast<cdouble>().cwiseProduct(T_[n - 1].cast<cdouble>());
}

Eigen::MatrixXd EnsembleKernel::K_infinity() const {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(size(), size());
    const double ei = mat_.eps_inf, eb = mat_.eps_background;
    for (int n = 1; n <= N_; ++n) sum += (n * (ei - eb) / (n * ei + (n + 1) * eb)) * T_[n - 1];
    return pref_.cwiseProduct(sum);
}

Eigen::MatrixXd EnsembleKernel::K_static() const {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(size(), size());
    for (int n = 1; n <= N_; ++n) sum += T_[n - 1];
    return pref_.cwiseProduct(sum);
}

}  // namespace plasmon
