#include "plasmon/spectra.hpp"

#include "plasmon/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace plasmon {

PVResult pv_transform(const std::function<double(double)>& f, double omega0, double lo, double hi,
                      std::vector<double> breakpoints, double tol, double scale) {
    if (!(lo < omega0 && omega0 < hi)) throw DomainError("pv_transform: omega0 must lie inside the interval");
    const double f0 = f(omega0);
    auto g = [&](double w) { return (f(w) - f0) / (w - omega0); };
    breakpoints.push_back(lo);
    breakpoints.push_back(hi);
    breakpoints.push_back(omega0);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::remove_if(breakpoints.begin(), breakpoints.end(),
                                     [&](double x) { return x < lo || x > hi; }),
                      breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    PVResult r;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        double err = 0.0;
        r.value += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, breakpoints[k],
                                                                                 breakpoints[k + 1], 20, 1e-13, &err);
        r.residual += err;
    }
    r.value += f0 * std::log((hi - omega0) / (omega0 - lo));
    if (r.residual > tol * (std::abs(r.value) + scale))
        throw QuadratureError("principal value quadrature did not converge", r.residual);
    return r;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return s;
}

PVResult pv_transform_sampled(const std::vector<double>& omega, const std::vector<double>& f, double omega0) {
    const std::size_t n = omega.size();
    if (n < 5 || f.size() != n) throw DomainError("pv_transform_sampled: need at least 5 matching samples");
    const double lo = omega.front(), hi = omega.back();
    if (!(lo < omega0 && omega0 < hi)) throw DomainError("pv_transform_sampled: omega0 outside grid");
    auto it = std::upper_bound(omega.begin(), omega.end(), omega0);
    std::size_t k = static_cast<std::size_t>(it - omega.begin());
    const double h = omega[k] - omega[k - 1];
    double t = (omega0 - omega[k - 1]) / h;
    // omega0 within rounding of a node: take the node itself, or (f - f0) / d cancels catastrophically
    if (t < 1e-6) t = 0.0;
    if (t > 1.0 - 1e-6) {
        t = 0.0;
        ++k;
    }
    const double f0 = t == 0.0 ? f[k - 1] : (1 - t) * f[k - 1] + t * f[k];
    const std::size_t node = t == 0.0 ? k - 1 : n;

    auto rule = [&](std::size_t stride) {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; i += stride) {
            const double d = omega[i] - omega0;
            x.push_back(omega[i]);
            // The subtracted integrand is finite at omega0; use the local slope there.
            y.push_back(i == node ? (f[std::min(i + 1, n - 1)] - f[i > 0 ? i - 1 : 0]) /
                                       (omega[std::min(i + 1, n - 1)] - omega[i > 0 ? i - 1 : 0])
                                 : (f[i] - f0) / d);
        }
        if (x.back() != omega.back()) {
            x.push_back(omega.back());
            y.push_back((f.back() - f0) / (omega.back() - omega0));
        }
        return trapezoid(x, y);
    };
    PVResult r;
    const double fine = rule(1), coarse = rule(2);
    r.value = fine + f0 * std::log((hi - omega0) / (omega0 - lo));
    r.residual = std::abs(fine - coarse) / 3.0;
    return r;
}

std::string to_string(KernelRoute r) {
    switch (r) {
        case KernelRoute::ClosedForm: return "closed-form";
        case KernelRoute::Corrected: return "corrected";
        case KernelRoute::Classical: return "classical";
        case KernelRoute::PVQuadrature: return "pv-quadrature";
    }
    return "?";
}

ContinuousKernel::ContinuousKernel(const EnsembleKernel& kernel, const ModeSet& modes, double cutoff_factor)
    : kernel_(&kernel), modes_(&modes), cutoff_(cutoff_factor * kernel.material().omega_p) {
    if (cutoff_factor < 10.0) throw DomainError("PV cutoff must be at least 10 omega_p");
}

Eigen::MatrixXcd ContinuousKernel::M_closed_form(double omega) const {
    const int ne = modes_->n_emitters;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(ne, ne);
    for (int n = 1; n <= modes_->N; ++n) {
        const Eigen::VectorXd g = modes_->g.row(n - 1).transpose();
        const cdouble lor = 1.0 / cdouble(modes_->omega[n - 1] - omega, -0.5 * modes_->gamma[n - 1]);
        M += lor * (g * g.transpose()).cwiseProduct(modes_->mu[n - 1]).cast<cdouble>();
    }
    return M;
}

double ContinuousKernel::response_hilbert(int n, double omega) const {
    const DrudeMaterial& m = kernel_->material();
    const DrudePole p = drude_pole(m, n);
    auto f = [&](double w) { return w > 0.0 ? multipole_response(m, n, w).imag() : 0.0; };
    const double G = p.gamma_n;
    std::vector<double> bp{p.omega_n - 40 * G, p.omega_n - 5 * G, p.omega_n, p.omega_n + 5 * G,
                           p.omega_n + 40 * G, omega - 5 * G, omega + 5 * G, 4 * p.omega_n};
    // Peak of Im response is ~ amplitude / (Gamma omega_n); use it as the absolute scale.
    const double scale = p.amplitude / (G * p.omega_n);
    return pv_transform(f, omega, 0.0, cutoff_, bp, 1e-9, scale).value / pi;
}

Eigen::MatrixXcd ContinuousKernel::M(double omega, KernelRoute route) const {
    switch (route) {
        case KernelRoute::ClosedForm: return M_closed_form(omega);
        case KernelRoute::Classical: return kernel_->K(omega);
        case KernelRoute::Corrected: {
            const Eigen::MatrixXd re = M_closed_form(omega).real();
            const Eigen::MatrixXd im = kernel_->K(omega).imag();
            return re.cast<cdouble>() + cdouble(0, 1) * im.cast<cdouble>();
        }
        case KernelRoute::PVQuadrature: {
            const int ne = kernel_->size();
            Eigen::MatrixXd re = Eigen::MatrixXd::Zero(ne, ne);
            for (int n = 1; n <= kernel_->orders(); ++n) re += response_hilbert(n, omega) * kernel_->geometric(n);
            re = kernel_->prefactor().cwiseProduct(re);
            const Eigen::MatrixXd im = kernel_->K(omega).imag();
            return re.cast<cdouble>() + cdouble(0, 1) * im.cast<cdouble>();
        }
    }
    throw DomainError("unknown kernel route");
}

std::vector<double> Spectrum::normalized() const {
    const double mx = D.empty() ? 0.0 : *std::max_element(D.begin(), D.end());
    std::vector<double> out(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) out[i] = mx > 0.0 ? D[i] / mx : 0.0;
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 2) throw DomainError("grid needs at least two points");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

Spectrum spectrum_effective(const DressedStates& ds, double gamma0, const std::vector<double>& omega, Exec exec) {
    Spectrum s;
    s.omega = omega;
    s.D.resize(omega.size());
    s.route = "effective";
    const Eigen::VectorXcd w = ds.eta.cwiseProduct(ds.overlap);
    const double norm = ds.psi0.squaredNorm();
    const long n = static_cast<long>(omega.size());
    auto eval = [&](long i) {
        cdouble acc = 0.0;
        for (int m = 0; m < ds.size(); ++m) acc += w[m] / (omega[i] - ds.lambda[m]);
        s.D[i] = gamma0 / (2.0 * pi) * std::norm(acc) / norm;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) eval(i);
    } else {
        for (long i = 0; i < n; ++i) eval(i);
    }
    return s;
}

Spectrum spectrum_continuous(const ContinuousKernel& K, const Eigen::VectorXcd& a, double omega0, double gamma0,
                             const std::vector<double>& omega, KernelRoute route, Exec exec) {
    const int ne = K.kernel().size();
    if (a.size() != ne) throw DomainError("initial amplitudes size differs from N_e");
    Spectrum s;
    s.omega = omega;
    s.D.resize(omega.size());
    s.route = "continuous/" + to_string(route);
    const double norm = a.squaredNorm();
    const long n = static_cast<long>(omega.size());
    bool singular = false;
    double bad = 0.0;
    auto eval = [&](long i) {
        Eigen::MatrixXcd A = K.M(omega[i], route);
        A.diagonal().array() += cdouble(omega[i] - omega0, 0.5 * gamma0);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
        const double det = std::abs(lu.determinant());
        if (!(det > 0.0) || !std::isfinite(det)) {
#pragma omp critical
            {
                singular = true;
                bad = omega[i];
            }
            return;
        }
        const cdouble amp = a.adjoint() * lu.solve(a);
        s.D[i] = gamma0 / (2.0 * pi) * std::norm(amp / norm);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) eval(i);
    } else {
        for (long i = 0; i < n; ++i) eval(i);
    }
    if (singular) throw NumericalError("singular continuous-model matrix at omega = " + std::to_string(bad));
    return s;
}

Spectrum spectrum_ideal_closed_form(const std::function<cdouble(double)>& M11, int n_emitters, double omega0,
                                    double gamma0, const std::vector<double>& omega) {
    Spectrum s;
    s.omega = omega;
    s.D.resize(omega.size());
    s.route = "ideal";
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const cdouble den = cdouble(omega[i] - omega0, 0.5 * gamma0) + double(n_emitters) * M11(omega[i]);
        s.D[i] = gamma0 / (2.0 * pi) * std::norm(1.0 / den);
    }
    return s;
}

Eigen::MatrixXcd rank_one_inverse(cdouble a, cdouble b, int n) {
    const cdouble c = b / (a * (a + double(n) * b));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(n, n, -c);
    out.diagonal().array() += 1.0 / a;
    return out;
}

}  // namespace plasmon
