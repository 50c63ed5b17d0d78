#include "plasmon/errors.hpp"
#include "plasmon/spectra.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace plasmon;

namespace {

double peak(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("rank-one inverse against direct inversion") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const cdouble a(u(rng) + 3.0, u(rng)), b(u(rng), u(rng));
        const int n = size(rng);
        const Eigen::MatrixXcd A = a * Eigen::MatrixXcd::Identity(n, n) + b * Eigen::MatrixXcd::Ones(n, n);
        CHECK((rank_one_inverse(a, b, n) - A.inverse()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("principal value of a lorentzian") {
    const double a = 3.0, G = 0.05;
    const auto L = [&](double w) { return 0.5 * G / ((w - a) * (w - a) + 0.25 * G * G); };
    for (double x : {2.5, 2.97, 3.0, 3.02, 3.6}) {
        const PVResult r = pv_transform(L, x, a - 2000 * G, a + 2000 * G, {a - 20 * G, a, a + 20 * G}, 1e-9, 1.0 / G);
        const double exact = pi * (a - x) / ((x - a) * (x - a) + 0.25 * G * G);
        CHECK(std::abs(r.value - exact) < 1e-3 * (std::abs(exact) + 1.0));
        CHECK(r.residual < 1e-6);
    }
}

TEST_CASE("sampled principal value") {
    const auto f = [](double w) { return std::exp(-w * w); };
    const auto grid = linear_grid(-8, 8, 4001);
    std::vector<double> y;
    for (double w : grid) y.push_back(f(w));
    const PVResult s = pv_transform_sampled(grid, y, 0.3);
    const PVResult q = pv_transform(f, 0.3, -8, 8);
    CHECK(s.value == doctest::Approx(q.value).epsilon(1e-4));
}

TEST_CASE("closed-form kernel against the principal value of its imaginary part") {
    const auto m = support::model(support::ring(1), 30);
    const ContinuousKernel ck(m.kernel(), m.modes());
    for (double ev : {2.5, 2.75, 3.1, 3.4}) {
        const double w = ev_to_rad_s(ev);
        const auto im = [&](double x) { return ck.M_closed_form(x)(0, 0).imag(); };
        const double top = m.modes().omega.back(), G = m.modes().gamma[0];
        std::vector<double> bp;
        for (double c : m.modes().omega)
            for (double k : {-1e4, -1e3, -1e2, -10.0, 0.0, 10.0, 1e2, 1e3, 1e4}) bp.push_back(c + k * G);
        const PVResult r = pv_transform(im, w, -200 * top, 200 * top, bp, 1e-9, std::abs(ck.M_closed_form(w)(0, 0)));
        const double re = ck.M_closed_form(w)(0, 0).real();
        CHECK(std::abs(r.value / pi - re) < 1e-3 * std::abs(ck.M_closed_form(w)(0, 0)));
    }
}

TEST_CASE("continuous routes") {
    const auto m = support::model(support::ring(2), 30);
    const ContinuousKernel ck(m.kernel(), m.modes());
    const double w = ev_to_rad_s(2.9);
    const Eigen::MatrixXcd K = m.kernel().K(w);
    CHECK((ck.M(w, KernelRoute::Classical) - K).norm() < 1e-14 * K.norm());
    const Eigen::MatrixXcd C = ck.M(w, KernelRoute::Corrected);
    CHECK((C.imag() - K.imag()).norm() < 1e-14 * K.norm());
    CHECK((C.real() - ck.M_closed_form(w).real()).norm() < 1e-14 * K.norm());
    CHECK((ck.M(w, KernelRoute::ClosedForm) - ck.M_closed_form(w)).norm() == 0.0);
    CHECK_THROWS_AS(ContinuousKernel(m.kernel(), m.modes(), 5.0), DomainError);
}

TEST_CASE("spectral density is non-negative on every route") {
    const auto m = support::model(support::ring(3), 30);
    const double w0 = ev_to_rad_s(2.9), g0 = m.gamma0(w0);
    const auto omega = linear_grid(ev_to_rad_s(2.2), ev_to_rad_s(3.6), 400);
    const ContinuousKernel ck(m.kernel(), m.modes());
    const Eigen::VectorXcd a = Eigen::VectorXcd::Ones(3);
    for (auto r : {KernelRoute::ClosedForm, KernelRoute::Corrected, KernelRoute::Classical}) {
        const Spectrum s = spectrum_continuous(ck, a, w0, g0, omega, r);
        for (double d : s.D) CHECK(d >= 0.0);
        CHECK(peak(s.normalized()) == doctest::Approx(1.0));
    }
    const auto h = build_effective(w0, g0, m.modes(), m.lowdin_modes());
    const Spectrum e = spectrum_effective(dressed_states(h.H, bright_initial_state(3, h.dim()), 3), g0, omega);
    for (double d : e.D) CHECK(d >= 0.0);
}

TEST_CASE("effective and closed-form continuous spectra coincide") {
    const auto m = support::model(support::ring(1), 30);
    const double w0 = ev_to_rad_s(2.94), g0 = m.gamma0(w0);
    const auto omega = linear_grid(ev_to_rad_s(2.44), ev_to_rad_s(3.44), 1000);
    const auto h = build_effective(w0, g0, m.modes(), m.lowdin_modes());
    const Spectrum e = spectrum_effective(dressed_states(h.H, bright_initial_state(1, 31), 1), g0, omega);
    const ContinuousKernel ck(m.kernel(), m.modes());
    const Spectrum c = spectrum_continuous(ck, Eigen::VectorXcd::Ones(1), w0, g0, omega, KernelRoute::ClosedForm);
    const auto en = e.normalized(), cn = c.normalized();
    for (std::size_t i = 0; i < omega.size(); ++i) CHECK(std::abs(en[i] - cn[i]) < 1e-8);
}

TEST_CASE("ideal closed form equals the matrix route") {
    const int ne = 10;
    const auto m = support::model(support::coincident(ne), 30);
    const auto one = support::model(support::coincident(1), 30);
    const double w0 = ev_to_rad_s(2.9), g0 = m.gamma0(w0);
    const auto omega = linear_grid(ev_to_rad_s(2.4), ev_to_rad_s(3.4), 300);
    const ContinuousKernel ck(m.kernel(), m.modes()), ck1(one.kernel(), one.modes());
    const Spectrum mat = spectrum_continuous(ck, Eigen::VectorXcd::Ones(ne), w0, g0, omega, KernelRoute::Corrected);
    const Spectrum cf = spectrum_ideal_closed_form([&](double w) { return ck1.M(w, KernelRoute::Corrected)(0, 0); }, ne,
                                                   w0, g0, omega);
    for (std::size_t i = 0; i < omega.size(); ++i) CHECK(std::abs(mat.D[i] - cf.D[i]) <= 1e-10 * std::abs(cf.D[i]));
}

TEST_CASE("spectrum of an isolated emitter is normalized") {
    // vanishing coupling: a Lorentzian of width gamma0 with unit area
    auto e = support::ring(1);
    e[0].dipole *= 1e-4;
    const auto m = support::model(e, 5);
    const double w0 = ev_to_rad_s(2.5), g0 = 1e12;
    const auto omega = linear_grid(w0 - 2000 * g0, w0 + 2000 * g0, 200001);
    const auto h = build_effective(w0, g0, m.modes(), m.lowdin_modes());
    const Spectrum s = spectrum_effective(dressed_states(h.H, bright_initial_state(1, h.dim()), 1), g0, omega);
    CHECK(trapezoid(omega, s.D) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("serial and parallel spectra agree") {
    const auto m = support::model(support::ring(4), 30);
    const double w0 = ev_to_rad_s(2.9), g0 = m.gamma0(w0);
    const auto omega = linear_grid(ev_to_rad_s(2.4), ev_to_rad_s(3.4), 200);
    const ContinuousKernel ck(m.kernel(), m.modes());
    const auto a = Eigen::VectorXcd::Ones(4);
    const Spectrum s = spectrum_continuous(ck, a, w0, g0, omega, KernelRoute::Corrected, Exec::Serial);
    const Spectrum p = spectrum_continuous(ck, a, w0, g0, omega, KernelRoute::Corrected, Exec::Parallel);
    CHECK(s.D == p.D);
}

TEST_CASE("grids") {
    const auto g = linear_grid(1.0, 2.0, 11);
    CHECK(g.size() == 11);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 2.0);
    CHECK(trapezoid(g, std::vector<double>(11, 3.0)) == doctest::Approx(3.0));
}

}
