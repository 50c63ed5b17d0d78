#include "plasmon/errors.hpp"
#include "plasmon/greens.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace plasmon;

namespace {

// P_n(u) / (|r| |r'|)^(n+1)
double potential_term(int n, const Eigen::Vector3d& r, const Eigen::Vector3d& rp) {
    const double u = r.normalized().dot(rp.normalized());
    return std::legendre(n, u) / std::pow(r.norm() * rp.norm(), n + 1);
}

// Mixed central difference d_i . grad_r grad_r' f . d_j, one Richardson step
double fd_double_gradient(int n, const Eigen::Vector3d& r, const Eigen::Vector3d& di, const Eigen::Vector3d& rp,
                          const Eigen::Vector3d& dj, double h) {
    const auto f = [&](double a, double b) { return potential_term(n, r + a * di, rp + b * dj); };
    const auto D = [&](double s) { return (f(s, s) - f(s, -s) - f(-s, s) + f(-s, -s)) / (4 * s * s); };
    return (4 * D(0.5 * h) - D(h)) / 3;
}

}  // namespace

TEST_SUITE("greens") {

TEST_CASE("legendre table matches the standard library") {
    for (double u : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
        const auto t = legendre(12, u);
        for (int n = 0; n <= 12; ++n) CHECK(t.p[n] == doctest::Approx(std::legendre(n, u)).epsilon(1e-12));
        // derivative by finite differences
        const double h = 1e-6;
        const auto tp = legendre(12, u + h), tm = legendre(12, u - h);
        for (int n = 1; n <= 12; ++n) {
            CHECK(t.dp[n] == doctest::Approx((tp.p[n] - tm.p[n]) / (2 * h)).epsilon(1e-6));
            CHECK(t.ddp[n] == doctest::Approx((tp.dp[n] - tm.dp[n]) / (2 * h)).epsilon(1e-6));
        }
    }
}

TEST_CASE("double gradient against finite differences") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Vector3d r = support::random_outside(rng), rp = support::random_outside(rng);
        const Eigen::Vector3d di = support::random_unit(rng), dj = support::random_unit(rng);
        const auto T = double_gradient_orders(r, di, rp, dj, 8);
        for (int n = 1; n <= 8; ++n) {
            const double fd = fd_double_gradient(n, r, di, rp, dj, 2e-3);
            // absolute floor: terms of order n decay like |r|^-(2n+4)
            CHECK(std::abs(T[n - 1] - fd) <= 1e-6 * std::max(std::abs(fd), 1e-3));
        }
    }
}

TEST_CASE("coincident radial and tangential closed forms") {
    // r = r' = x along z: radial (n+1)^2 x^-(2n+4), tangential n(n+1)/2 x^-(2n+4)
    const double x = 1.25;
    const Eigen::Vector3d r(0, 0, x);
    const auto rad = double_gradient_orders(r, Eigen::Vector3d::UnitZ(), r, Eigen::Vector3d::UnitZ(), 10);
    const auto tan = double_gradient_orders(r, Eigen::Vector3d::UnitX(), r, Eigen::Vector3d::UnitX(), 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(rad[n - 1] == doctest::Approx((n + 1.0) * (n + 1.0) * std::pow(x, -(2 * n + 4))).epsilon(1e-12));
        CHECK(tan[n - 1] == doctest::Approx(0.5 * n * (n + 1.0) * std::pow(x, -(2 * n + 4))).epsilon(1e-12));
    }
}

TEST_CASE("multipole response") {
    const auto ag = support::silver();
    const double w = ev_to_rad_s(3.0);
    const cdouble eps = epsilon(ag, w);
    for (int n : {1, 2, 7}) {
        const cdouble expected = double(n) * (eps - 1.0) / (double(n) * eps + double(n + 1));
        CHECK(std::abs(multipole_response(ag, n, w) - expected) < 1e-14 * std::abs(expected));
        CHECK(multipole_response(ag, n, w).imag() > 0.0);
    }
    CHECK_THROWS_AS(multipole_response(ag, 0, w), DomainError);
    const SphereGeometry g{nm_to_m(8)};
    const cdouble a1 = multipole_polarizability(ag, g, 1, w);
    CHECK(std::abs(a1 - std::pow(g.radius, 3) * multipole_response(ag, 1, w)) < 1e-12 * std::abs(a1));
}

TEST_CASE("reciprocity of the Green projection") {
    std::mt19937 rng(11);
    const auto ag = support::silver();
    const SphereGeometry g{nm_to_m(10)};
    for (int trial = 0; trial < 10; ++trial) {
        Emitter a{nm_to_m(10) * support::random_outside(rng), 1e-29 * support::random_unit(rng)};
        Emitter b{nm_to_m(10) * support::random_outside(rng), 2e-29 * support::random_unit(rng)};
        const double w = ev_to_rad_s(2.6 + 0.1 * trial);
        const cdouble ab = green_projection(a, b, ag, g, w, 40).value;
        const cdouble ba = green_projection(b, a, ag, g, w, 40).value;
        CHECK(std::abs(ab - ba) <= 1e-12 * std::abs(ab));
    }
}

TEST_CASE("rate kernel is the scaled Green projection") {
    using K = PhysicalConstants;
    const auto e = support::ring(2);
    const SphereGeometry g{nm_to_m(8)};
    const double w = ev_to_rad_s(2.9);
    const cdouble G = green_projection(e[0], e[1], support::silver(), g, w, 30).value;
    const cdouble k = rate_kernel(e[0], e[1], support::silver(), g, w, 30);
    CHECK(std::abs(k - w * w / (K::hbar * K::eps0 * K::c * K::c) * G) < 1e-12 * std::abs(k));
    CHECK(cooperative_rate(e[0], e[0], support::silver(), g, w) ==
          doctest::Approx(2 * rate_kernel(e[0], e[0], support::silver(), g, w, 30).imag()));
}

TEST_CASE("self rate is positive") {
    const auto e = support::ring(1);
    const SphereGeometry g{nm_to_m(8)};
    for (double ev = 1.0; ev < 5.0; ev += 0.25)
        CHECK(rate_kernel(e[0], e[0], support::silver(), g, ev_to_rad_s(ev), 30).imag() > 0.0);
}

TEST_CASE("series convergence flag") {
    const auto e = support::ring(1);
    const SphereGeometry g{nm_to_m(8)};
    const auto w = ev_to_rad_s(2.9);
    CHECK(green_projection(e[0], e[0], support::silver(), g, w, 200).converged);
    CHECK_FALSE(green_projection(e[0], e[0], support::silver(), g, w, 3).converged);
}

TEST_CASE("ensemble kernel agrees with pairwise evaluation") {
    const auto e = support::ring(5);
    const SphereGeometry g{nm_to_m(8)};
    const EnsembleKernel k(e, support::silver(), g, 30);
    const double w = ev_to_rad_s(2.85);
    const Eigen::MatrixXcd K = k.K(w);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const cdouble ref = rate_kernel(e[i], e[j], support::silver(), g, w, 30);
            CHECK(std::abs(K(i, j) - ref) <= 1e-12 * std::abs(K(0, 0)));
        }
    CHECK((K - K.transpose()).norm() <= 1e-14 * K.norm());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(5, 5);
    for (int n = 1; n <= 30; ++n) sum += k.K_order(n, w);
    CHECK((sum - K).norm() <= 1e-12 * K.norm());
}

TEST_CASE("static limit of the rate kernel") {
    const auto e = support::ring(1, 8, Orientation::Radial);
    const SphereGeometry g{nm_to_m(8)};
    const double st = rate_kernel_static(e[0], e[0], g, 1.0, 60);
    // far below every resonance the responses tend to one
    CHECK(rate_kernel(e[0], e[0], support::silver(), g, 1e11, 60).real() == doctest::Approx(st).epsilon(1e-3));
}

TEST_CASE("emitters inside the sphere are rejected") {
    const SphereGeometry g{nm_to_m(8)};
    Emitter in{Eigen::Vector3d(nm_to_m(4), 0, 0), Eigen::Vector3d(0, 0, 1e-29)};
    CHECK_THROWS_AS(green_projection(in, in, support::silver(), g, 4e15, 10), DomainError);
}

}
