#include "plasmon/errors.hpp"
#include "plasmon/modes.hpp"

#include "support.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>

using namespace plasmon;
using boost::math::quadrature::gauss_kronrod;

namespace {

// (1/pi) integral of f over (0, inf), split at the resonance; beyond W the integrand falls like w^-3
template <class F>
double spectral_weight(F f, double centre, double width) {
    const double edges[] = {1e-6 * centre,      centre - 40 * width, centre - 4 * width, centre,
                            centre + 4 * width, centre + 40 * width, 4 * centre,         40 * centre,
                            400 * centre,       4000 * centre};
    double sum = 0.0;
    for (int k = 0; k + 1 < 10; ++k) sum += gauss_kronrod<double, 61>::integrate(f, edges[k], edges[k + 1], 20, 1e-13);
    sum += 0.5 * f(edges[9]) * edges[9];
    return sum / pi;
}

}  // namespace

TEST_SUITE("modes") {

TEST_CASE("pole form reproduces the multipole response") {
    for (const auto& m : {support::silver(), support::gold()})
        for (int n : {1, 2, 5, 20}) {
            const DrudePole p = drude_pole(m, n);
            for (double ev : {0.5, 2.0, 2.9, 4.5}) {
                const double w = ev_to_rad_s(ev);
                const cdouble pole = p.c_inf + p.amplitude / cdouble(p.omega_n0 * p.omega_n0 - w * w, -p.gamma_n * w);
                const cdouble exact = multipole_response(m, n, w);
                CHECK(std::abs(pole - exact) <= 1e-12 * std::abs(exact));
            }
        }
}

TEST_CASE("mode frequencies") {
    const auto ag = support::silver();
    const DrudePole p1 = drude_pole(ag, 1);
    // sqrt(omega_p^2 / (eps_inf + 2)) for the dipole, omega_p / sqrt(eps_inf + 1) for n -> inf
    CHECK(p1.omega_n0 == doctest::Approx(1.2e16 / std::sqrt(8.0)).epsilon(1e-14));
    CHECK(rad_s_to_ev(p1.omega_n) == doctest::Approx(2.7924).epsilon(1e-4));
    CHECK(rad_s_to_ev(drude_pole(ag, 400).omega_n) == doctest::Approx(rad_s_to_ev(1.2e16 / std::sqrt(7.0))).epsilon(1e-3));
    CHECK(p1.gamma_n == ag.gamma_p);
    DrudeMaterial overdamped = ag;
    overdamped.gamma_p = 1e17;
    CHECK_THROWS_AS(drude_pole(overdamped, 1), NonLorentzianError);
}

TEST_CASE("closed-form spectral weight against quadrature") {
    for (const auto& m : {support::silver(), support::gold()})
        for (int n : {1, 3, 10}) {
            const DrudePole p = drude_pole(m, n);
            const double q = spectral_weight([&](double w) { return multipole_response(m, n, w).imag(); }, p.omega_n,
                                             p.gamma_n);
            INFO(m.name, " n=", n, " rel=", (response_weight(p) - q) / q);
            CHECK(response_weight(p) == doctest::Approx(q).epsilon(1e-8));
        }
}

TEST_CASE("lorentzian fit residual stays below the limit") {
    for (const auto& m : {support::silver(), support::gold()})
        for (int n = 1; n <= 60; n += 7) CHECK(lorentzian_residual(m, n) < 0.05);
}

TEST_CASE("coupling strength squared is the spectral weight of the self kernel") {
    const auto e = support::ring(1);
    const EnsembleKernel k(e, support::silver(), SphereGeometry{nm_to_m(8)}, 12);
    const ModeSet ms = extract_modes(k);
    for (int n : {1, 2, 6}) {
        const double q = spectral_weight([&](double w) { return k.K_order(n, w)(0, 0).imag(); }, ms.omega[n - 1],
                                         ms.gamma[n - 1]);
        CHECK(ms.g(n - 1, 0) * ms.g(n - 1, 0) == doctest::Approx(q).epsilon(1e-7));
    }
    // single emitter, silver R = 8 nm, h = 2 nm, 24 D, tangential dipole: about 10 meV for LSP_1
    CHECK(rad_s_to_mev(ms.g(0, 0)) == doctest::Approx(9.789).epsilon(1e-3));
}

TEST_CASE("modal overlap") {
    const auto e = support::ring(4);
    const EnsembleKernel k(e, support::silver(), SphereGeometry{nm_to_m(8)}, 6);
    const ModeSet ms = extract_modes(k);
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < 4; ++i) CHECK(ms.mu[n - 1](i, i) == doctest::Approx(1.0).epsilon(1e-12));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                // ratio of spectral weights of the cross and self kernels
                const double cross = spectral_weight([&](double w) { return k.K_order(n, w)(i, j).imag(); },
                                                     ms.omega[n - 1], ms.gamma[n - 1]);
                const double brute = cross / (ms.g(n - 1, i) * ms.g(n - 1, j));
                CHECK(std::abs(ms.mu[n - 1](i, j) - brute) < 1e-7);
                CHECK(ms.mu[n - 1](i, j) == doctest::Approx(modal_overlap(k, ms, i, j, n)).epsilon(1e-9));
                CHECK(std::abs(ms.mu[n - 1](i, j)) <= 1.0 + 1e-12);
            }
    }
}

TEST_CASE("coincident emitters overlap fully") {
    const auto e = support::coincident(4);
    const ModeSet ms = extract_modes(EnsembleKernel(e, support::silver(), SphereGeometry{nm_to_m(8)}, 10));
    for (const auto& mu : ms.mu) CHECK((mu - Eigen::MatrixXd::Ones(4, 4)).norm() < 1e-12);
}

TEST_CASE("lowdin square root for two emitters") {
    ModeSet ms;
    ms.N = 1;
    ms.n_emitters = 2;
    ms.omega = {1.0};
    ms.gamma = {0.1};
    ms.g = Eigen::MatrixXd(1, 2);
    ms.g << 2.0, 3.0;
    const double m = 0.37;
    Eigen::MatrixXd mu(2, 2);
    mu << 1, m, m, 1;
    ms.mu = {mu};
    const LowdinModes lw = lowdin(ms);
    REQUIRE(lw.n_ind[0] == 2);
    const double a = 0.5 * (std::sqrt(1 + m) + std::sqrt(1 - m)), b = 0.5 * (std::sqrt(1 + m) - std::sqrt(1 - m));
    Eigen::MatrixXd expected(2, 2);
    expected << 2 * a, 2 * b, 3 * b, 3 * a;
    CHECK((lw.coupling[0] - expected).norm() < 1e-12);
    CHECK((lw.transform[0].transpose() * mu * lw.transform[0] - Eigen::Matrix2d::Identity()).norm() < 1e-12);
}

TEST_CASE("lowdin gram matrix and rank") {
    for (int ne : {1, 3, 8, 20}) {
        const auto e = support::ring(ne);
        const ModeSet ms = extract_modes(EnsembleKernel(e, support::silver(), SphereGeometry{nm_to_m(8)}, 12));
        const LowdinModes lw = lowdin(ms);
        for (int n = 1; n <= 12; ++n) {
            const Eigen::MatrixXd& X = lw.transform[n - 1];
            const int r = lw.n_ind[n - 1];
            CHECK(r <= std::min(ne, 2 * n + 1));
            CHECK((X.transpose() * ms.mu[n - 1] * X - Eigen::MatrixXd::Identity(r, r)).norm() < 1e-10);
            // couplings reproduce g_i g_j mu_ij
            const Eigen::MatrixXd& C = lw.coupling[n - 1];
            const Eigen::MatrixXd target = ms.g.row(n - 1).transpose().asDiagonal() * ms.mu[n - 1] *
                                           ms.g.row(n - 1).asDiagonal();
            CHECK((C * C.transpose() - target).norm() < 1e-7 * target.norm());
        }
    }
    const auto c = support::coincident(5);
    const LowdinModes lc = lowdin(extract_modes(EnsembleKernel(c, support::silver(), SphereGeometry{nm_to_m(8)}, 6)));
    for (int r : lc.n_ind) CHECK(r == 1);
}

TEST_CASE("invalid overlap is rejected") {
    ModeSet ms;
    ms.N = 1;
    ms.n_emitters = 2;
    ms.omega = {1.0};
    ms.gamma = {0.1};
    ms.g = Eigen::MatrixXd::Ones(1, 2);
    Eigen::MatrixXd mu(2, 2);
    mu << 1, 1.5, 1.5, 1;
    ms.mu = {mu};
    CHECK_THROWS_AS(lowdin(ms), InvalidOverlapError);
}

}
