#include "plasmon/sweep.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plasmon;

TEST_SUITE("sweep") {

TEST_CASE("decoupled emitter shows no anticrossing") {
    auto e = support::ring(1);
    e[0].dipole *= 1e-3;
    const RabiReport r = extract_rabi(support::model(e, 10));
    CHECK_FALSE(r.found);
    CHECK(r.splitting == 0.0);
    for (const auto& a : r.full) CHECK_FALSE(a.resolvable);
}

TEST_CASE("single emitter splitting") {
    const RabiReport r = extract_rabi(support::model(support::ring(1), 30));
    REQUIRE(r.found);
    CHECK(rad_s_to_mev(r.splitting) == doctest::Approx(79.53).epsilon(2e-3));
    CHECK(rad_s_to_ev(r.omega0) == doctest::Approx(2.9366).epsilon(1e-3));
    CHECK_FALSE(r.merged);
    CHECK(r.splitting > 0.0);
}

TEST_CASE("analytic and eigenvector weights agree") {
    // k = 1 uses the closed-form weight; a duplicate emitter vector forces the eigenvector path
    const auto m = support::model(support::coincident(3), 20);
    const BrightSector bs = m.bright_sector();
    REQUIRE(bs.k() == 1);
    BrightSector two = bs;
    two.E.conservativeResize(Eigen::NoChange, 2);
    two.E.col(1).setZero();
    for (auto& c : two.coupling) {
        c.conservativeResize(2, Eigen::NoChange);
        c.row(1).setZero();
    }
    const std::vector<double> w0s{ev_to_rad_s(2.85), ev_to_rad_s(2.95)};
    const RateFn rate = [](double) { return 1e9; };
    const auto a = sweep_branches(bs, w0s, rate);
    const auto b = sweep_branches(two, w0s, rate);
    for (std::size_t s = 0; s < w0s.size(); ++s)
        for (int i = 0; i < a[s].Omega.size(); ++i) {
            int best = 0;
            for (int j = 1; j < b[s].Omega.size(); ++j)
                if (std::abs(b[s].Omega[j] - a[s].Omega[i]) < std::abs(b[s].Omega[best] - a[s].Omega[i])) best = j;
            CHECK(std::abs(b[s].weight[best] - a[s].weight[i]) < 1e-9);
        }
}

TEST_CASE("ring stays below the coincident configuration") {
    for (int ne : {2, 4, 9}) {
        const RabiReport ring = extract_rabi(support::model(support::ring(ne), 30));
        const RabiReport ideal = extract_rabi(support::model(support::coincident(ne), 30));
        REQUIRE(ring.found);
        REQUIRE(ideal.found);
        CHECK(ring.splitting < ideal.splitting);
    }
}

TEST_CASE("serial and parallel sweeps agree") {
    const auto m = support::model(support::ring(5), 30);
    const auto w0s = linear_grid(ev_to_rad_s(2.7), ev_to_rad_s(3.1), 41);
    const RateFn rate = [&](double w) { return m.gamma0(w); };
    const auto s = sweep_branches(m.bright_sector(), w0s, rate, Exec::Serial);
    const auto p = sweep_branches(m.bright_sector(), w0s, rate, Exec::Parallel);
    for (std::size_t i = 0; i < w0s.size(); ++i) {
        CHECK(s[i].Omega == p[i].Omega);
        CHECK(s[i].weight == p[i].weight);
    }
    const auto omega = linear_grid(ev_to_rad_s(2.5), ev_to_rad_s(3.3), 50);
    const SpectralMap ms = spectral_map(m.bright_sector(), w0s, omega, rate, Exec::Serial);
    const SpectralMap mp = spectral_map(m.bright_sector(), w0s, omega, rate, Exec::Parallel);
    CHECK(ms.D == mp.D);
    for (int i = 0; i < ms.D.rows(); ++i) CHECK(ms.normalized().row(i).maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("convergence drift") {
    const RabiReport r = extract_rabi_checked([](int n) { return support::model(support::ring(1), n); }, 30);
    CHECK(r.convergence_drift < 0.01);
    CHECK_FALSE(r.convergence_flag);
    const RabiReport coarse = extract_rabi_checked([](int n) { return support::model(support::ring(1), n); }, 3);
    CHECK(coarse.convergence_flag);
}

}
