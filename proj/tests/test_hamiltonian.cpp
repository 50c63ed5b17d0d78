#include "plasmon/errors.hpp"
#include "plasmon/hamiltonian.hpp"
#include "plasmon/spectra.hpp"
#include "plasmon/sweep.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace plasmon;

TEST_SUITE("hamiltonian") {

TEST_CASE("two-level closed form") {
    const auto m = support::model(support::ring(1), 1);
    const double w0 = ev_to_rad_s(2.8), g0 = 1e9;
    const auto h = build_effective(w0, g0, m.modes(), m.lowdin_modes());
    REQUIRE(h.dim() == 2);
    const DressedStates ds = dressed_states(h.H, bright_initial_state(1, 2), 1);
    const cdouble a(w0, -g0 / 2), b(m.modes().omega[0], -m.modes().gamma[0] / 2);
    const double g = m.modes().g(0, 0);
    const cdouble root = std::sqrt(0.25 * (a - b) * (a - b) + g * g);
    cdouble lo = 0.5 * (a + b) - root, hi = 0.5 * (a + b) + root;
    if (lo.real() > hi.real()) std::swap(lo, hi);
    CHECK(std::abs(ds.lambda[0] - lo) < 1e-10 * std::abs(lo));
    CHECK(std::abs(ds.lambda[1] - hi) < 1e-10 * std::abs(hi));
}

TEST_CASE("trace and eigenvalue sum") {
    for (int ne : {1, 3, 7}) {
        const auto m = support::model(support::ring(ne), 20);
        const auto h = build_effective(ev_to_rad_s(2.9), 1e9, m.modes(), m.lowdin_modes());
        const DressedStates ds = dressed_states(h.H, bright_initial_state(ne, h.dim()), ne);
        CHECK(std::abs(ds.lambda.sum() - h.H.trace()) <= 1e-10 * std::abs(h.H.trace()));
        // V eta = psi(0)
        CHECK((ds.V * ds.eta - ds.psi0).norm() < 1e-10);
        // Omega ascending
        for (int k = 1; k < ds.size(); ++k) CHECK(ds.Omega(k - 1) <= ds.Omega(k));
        // total emitter weight of a complete eigenbasis is bounded by the emitter count
        double w = 0.0;
        for (int k = 0; k < ds.size(); ++k) {
            CHECK(ds.emitter_weight(k) >= -1e-12);
            CHECK(ds.emitter_weight(k) <= 1.0 + 1e-12);
            w += ds.emitter_weight(k);
        }
        CHECK(w > 0.0);
    }
}

TEST_CASE("ideal arrow matrix matches coincident emitters") {
    const int ne = 6, N = 15;
    const auto m = support::model(support::coincident(ne), N);
    const double w0 = ev_to_rad_s(2.93), g0 = 2e9;
    const auto full = build_effective(w0, g0, m.modes(), m.lowdin_modes());
    const auto ideal = build_ideal(w0, g0, m.modes().omega, m.modes().gamma,
                                   std::vector<double>(m.modes().g.col(0).data(), m.modes().g.col(0).data() + N), ne);
    REQUIRE(ideal.dim() == N + 1);
    REQUIRE(full.dim() == ne + N);
    const DressedStates a = dressed_states(ideal.H, bright_initial_state(1, ideal.dim()), 1);
    const DressedStates b = dressed_states(full.H, bright_initial_state(ne, full.dim()), ne);
    // every eigenvalue of the arrow matrix appears in the full spectrum
    for (int k = 0; k < a.size(); ++k) {
        double best = 1e300;
        for (int l = 0; l < b.size(); ++l) best = std::min(best, std::abs(a.lambda[k] - b.lambda[l]));
        CHECK(best < 1e-9 * std::abs(a.lambda[k]));
    }
    // the remaining ne - 1 states are dark emitter states at omega0 - i gamma0/2
    int dark = 0;
    for (int l = 0; l < b.size(); ++l)
        if (std::abs(b.lambda[l] - cdouble(w0, -g0 / 2)) < 1e-6 * w0) ++dark;
    CHECK(dark == ne - 1);
}

TEST_CASE("bright-sector reduction reproduces the full spectrum") {
    for (int ne : {3, 5}) {
        const auto m = support::model(support::ring(ne), 12);
        const double w0 = ev_to_rad_s(2.9), g0 = m.gamma0(w0);
        const auto h = build_effective(w0, g0, m.modes(), m.lowdin_modes());
        const DressedStates ds = dressed_states(h.H, bright_initial_state(ne, h.dim()), ne);
        const auto omega = linear_grid(ev_to_rad_s(2.5), ev_to_rad_s(3.3), 300);
        const Spectrum full = spectrum_effective(ds, g0, omega);
        const Spectrum red = spectrum_reduced(m.bright_sector(), w0, g0, omega);
        const double peak = *std::max_element(full.D.begin(), full.D.end());
        for (std::size_t i = 0; i < omega.size(); ++i) CHECK(std::abs(full.D[i] - red.D[i]) < 1e-8 * peak);
    }
    // a symmetric ring needs a single emitter vector
    CHECK(support::model(support::ring(9), 12).bright_sector().k() == 1);
}

TEST_CASE("ladder export") {
    const auto m = support::model(support::coincident(5), 30);
    const auto h = build_effective(ev_to_rad_s(2.92), 1e9, m.modes(), m.lowdin_modes());
    const DressedStates ds = dressed_states(h.H, bright_initial_state(5, h.dim()), 5);
    const auto rows = ladder_export(ds);
    CHECK(rows.size() == static_cast<std::size_t>(h.dim()));
    int bright = 0;
    for (const auto& r : rows) {
        double s = 0.0;
        for (double w : r.weights) s += w;
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        bright += r.bright;
    }
    CHECK(bright == 2);
    CHECK_FALSE(ds.ill_conditioned);
}

TEST_CASE("dimension cap") {
    const auto m = support::model(support::ring(20), 30);
    CHECK_THROWS_AS(build_effective(ev_to_rad_s(2.9), 1e9, m.modes(), m.lowdin_modes(), {}, 50), SizeError);
}

TEST_CASE("order selection") {
    CHECK(resolve_orders({}, 3) == std::vector<int>{1, 2, 3});
    CHECK(resolve_orders({2, 3}, 3) == std::vector<int>{2, 3});
    CHECK_THROWS(resolve_orders({4}, 3));
}

}
