#include "plasmon/hamiltonian.hpp"

#include "plasmon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace plasmon {

std::vector<int> resolve_orders(const OrderSelection& sel, int N) {
    std::vector<int> out;
    if (sel.empty()) {
        out.resize(N);
        std::iota(out.begin(), out.end(), 1);
        return out;
    }
    for (int n : sel) {
        if (n < 1 || n > N) throw DomainError("order " + std::to_string(n) + " outside 1.." + std::to_string(N));
        out.push_back(n);
    }
    return out;
}

EffectiveHamiltonian build_effective(double omega0, double gamma0, const ModeSet& modes, const LowdinModes& lw,
                                     const OrderSelection& orders, int size_cap) {
    const auto ns = resolve_orders(orders, modes.N);
    const int ne = modes.n_emitters;
    int dim = ne;
    for (int n : ns) dim += lw.n_ind[n - 1];
    if (dim > size_cap)
        throw SizeError("Hamiltonian dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(size_cap));

    EffectiveHamiltonian h;
    h.n_emitters = ne;
    h.H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < ne; ++j) {
        h.H(j, j) = cdouble(omega0, -0.5 * gamma0);
        h.labels.push_back({true, j, 0});
    }
    int o = ne;
    for (int n : ns) {
        const Eigen::MatrixXd& C = lw.coupling[n - 1];
        const int r = static_cast<int>(C.cols());
        for (int l = 0; l < r; ++l) {
            h.H(o + l, o + l) = cdouble(modes.omega[n - 1], -0.5 * modes.gamma[n - 1]);
            h.labels.push_back({false, l, n});
        }
        h.H.block(0, o, ne, r) = C.cast<cdouble>();
        h.H.block(o, 0, r, ne) = C.transpose().cast<cdouble>();
        o += r;
    }
    return h;
}

EffectiveHamiltonian build_ideal(double omega0, double gamma0, const std::vector<double>& omega_n,
                                 const std::vector<double>& gamma_n, const std::vector<double>& g_n, int n_emitters) {
    if (n_emitters < 1) throw DomainError("N_e must be >= 1");
    const int N = static_cast<int>(omega_n.size());
    if (gamma_n.size() != omega_n.size() || g_n.size() != omega_n.size())
        throw DomainError("mode parameter lists differ in length");
    EffectiveHamiltonian h;
    h.n_emitters = 1;
    h.H = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    h.H(0, 0) = cdouble(omega0, -0.5 * gamma0);
    h.labels.push_back({true, 0, 0});
    const double s = std::sqrt(double(n_emitters));
    for (int n = 1; n <= N; ++n) {
        h.H(n, n) = cdouble(omega_n[n - 1], -0.5 * gamma_n[n - 1]);
        h.H(0, n) = h.H(n, 0) = s * g_n[n - 1];
        h.labels.push_back({false, 0, n});
    }
    return h;
}

double DressedStates::emitter_weight(int m) const {
    return V.col(m).head(n_emitters).squaredNorm() / V.col(m).squaredNorm();
}

DressedStates dressed_states(const Eigen::MatrixXcd& H, const Eigen::VectorXcd& psi0, int n_emitters) {
    if (H.rows() != H.cols() || psi0.size() != H.rows()) throw DomainError("dressed_states: dimension mismatch");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    DressedStates ds;
    ds.n_emitters = n_emitters;
    const int M = static_cast<int>(H.rows());

    // Deterministic order: ascending Omega, then ascending Gamma.
    std::vector<int> idx(M);
    std::iota(idx.begin(), idx.end(), 0);
    const Eigen::VectorXcd ev = es.eigenvalues();
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (ev[a].real() != ev[b].real()) return ev[a].real() < ev[b].real();
        return ev[a].imag() > ev[b].imag();
    });
    ds.lambda.resize(M);
    ds.V.resize(M, M);
    for (int m = 0; m < M; ++m) {
        ds.lambda[m] = ev[idx[m]];
        Eigen::VectorXcd v = es.eigenvectors().col(idx[m]);
        v.normalize();
        // Fix the phase so the largest component is real and positive.
        Eigen::Index k = 0;
        v.cwiseAbs().maxCoeff(&k);
        v *= std::conj(v[k]) / std::abs(v[k]);
        ds.V.col(m) = v;
    }

    double scale = 0.0;
    for (int m = 0; m < M; ++m) scale = std::max(scale, std::abs(ds.lambda[m]));
    std::vector<bool> seen(M, false);
    for (int a = 0; a < M; ++a) {
        if (seen[a]) continue;
        std::vector<int> cl{a};
        for (int b = a + 1; b < M; ++b)
            if (!seen[b] && std::abs(ds.lambda[a] - ds.lambda[b]) < 1e-9 * std::abs(ds.lambda[a])) {
                cl.push_back(b);
                seen[b] = true;
            }
        if (cl.size() > 1) {
            Eigen::MatrixXcd Vc(M, cl.size());
            for (std::size_t c = 0; c < cl.size(); ++c) Vc.col(c) = ds.V.col(cl[c]);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Vc);
            if (svd.singularValues().minCoeff() < 1e-8)
                throw NearDegeneracyError("defective eigenvalue cluster near " +
                                          std::to_string(ds.lambda[a].real()) + " rad/s");
            ds.clusters.push_back(cl);
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ds.V);
    const auto& sv = svd.singularValues();
    ds.condition = sv[0] / sv[sv.size() - 1];
    ds.ill_conditioned = !(ds.condition < 1e8);

    ds.psi0 = psi0;
    ds.eta = ds.V.partialPivLu().solve(psi0);
    ds.overlap = ds.V.adjoint() * psi0;
    ds.overlap = ds.overlap.conjugate();  // <psi0|Pi_m>
    ds.eta_inner_product_deviation = (ds.eta - ds.V.adjoint() * psi0).cwiseAbs().maxCoeff();
    return ds;
}

Eigen::VectorXcd bright_initial_state(int n_emitters, int dim) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi.head(n_emitters).setConstant(1.0 / std::sqrt(double(n_emitters)));
    return psi;
}

std::vector<LadderRow> ladder_export(const DressedStates& ds) {
    std::vector<LadderRow> rows;
    const int M = ds.size();
    for (int m = 0; m < M; ++m) {
        LadderRow r;
        r.m = m;
        r.omega_ev = rad_s_to_ev(ds.Omega(m));
        r.gamma_ev = rad_s_to_ev(ds.Gamma(m));
        const double norm = ds.V.col(m).squaredNorm();
        r.weights.resize(M);
        for (int k = 0; k < M; ++k) r.weights[k] = std::norm(ds.V(k, m)) / norm;
        rows.push_back(std::move(r));
    }
    // Flag the two states carrying the most emitter weight among those the initial state reaches.
    std::vector<int> cand;
    for (int m = 0; m < M; ++m)
        if (std::norm(ds.overlap[m]) > 1e-12) cand.push_back(m);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return ds.emitter_weight(a) > ds.emitter_weight(b); });
    for (std::size_t c = 0; c < cand.size() && c < 2; ++c) rows[cand[c]].bright = true;
    return rows;
}

int BrightSector::dim() const {
    int d = k();
    for (const auto& c : coupling) d += static_cast<int>(c.cols());
    return d;
}

BrightSector reduce_bright_sector(const ModeSet& modes, const LowdinModes& lw, const Eigen::VectorXd& amplitudes,
                                  const OrderSelection& orders, double tol) {
    const int ne = modes.n_emitters;
    if (amplitudes.size() != ne) throw DomainError("initial amplitudes size differs from N_e");
    if (!(amplitudes.norm() > 0.0)) throw DomainError("initial amplitudes vanish");
    BrightSector bs;
    bs.orders = resolve_orders(orders, modes.N);

    std::vector<Eigen::MatrixXd> Q;
    double scale = 0.0;
    for (int n : bs.orders) {
        const Eigen::MatrixXd& C = lw.coupling[n - 1];
        Q.push_back(C * C.transpose());
        scale = std::max(scale, Q.back().norm());
    }

    // Krylov closure of the initial vector under every Q_n, with twice-applied Gram-Schmidt.
    std::vector<Eigen::VectorXd> basis;
    std::deque<Eigen::VectorXd> queue;
    basis.push_back(amplitudes.normalized());
    queue.push_back(basis.back());
    while (!queue.empty()) {
        const Eigen::VectorXd v = queue.front();
        queue.pop_front();
        for (const auto& q : Q) {
            Eigen::VectorXd x = q * v;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : basis) x -= u.dot(x) * u;
            if (x.norm() > tol * scale) {
                basis.push_back(x.normalized());
                queue.push_back(basis.back());
            }
        }
    }
    bs.E.resize(ne, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) bs.E.col(c) = basis[c];

    // Rank decisions use one scale for all orders, so orders that vanish by symmetry drop out.
    std::vector<Eigen::MatrixXd> Ys;
    double cmax = 0.0;
    for (int n : bs.orders) {
        Ys.push_back(lw.coupling[n - 1].transpose() * bs.E);  // N_ind x k
        cmax = std::max(cmax, Ys.back().norm());
    }
    for (std::size_t o = 0; o < bs.orders.size(); ++o) {
        const int n = bs.orders[o];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(Ys[o], Eigen::ComputeThinU);
        const auto& s = svd.singularValues();
        int r = 0;
        for (int i = 0; i < s.size(); ++i)
            if (s[i] > tol * cmax) ++r;
        if (r == 0) continue;
        const Eigen::MatrixXd Ub = svd.matrixU().leftCols(r);
        bs.omega.push_back(modes.omega[n - 1]);
        bs.gamma.push_back(modes.gamma[n - 1]);
        bs.coupling.push_back(bs.E.transpose() * lw.coupling[n - 1] * Ub);
    }
    return bs;
}

Eigen::MatrixXcd reduced_hamiltonian(const BrightSector& bs, double omega0, double gamma0) {
    const int k = bs.k(), dim = bs.dim();
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < k; ++i) H(i, i) = cdouble(omega0, -0.5 * gamma0);
    int o = k;
    for (std::size_t b = 0; b < bs.coupling.size(); ++b) {
        const int r = static_cast<int>(bs.coupling[b].cols());
        for (int l = 0; l < r; ++l) H(o + l, o + l) = cdouble(bs.omega[b], -0.5 * bs.gamma[b]);
        H.block(0, o, k, r) = bs.coupling[b].cast<cdouble>();
        H.block(o, 0, r, k) = bs.coupling[b].transpose().cast<cdouble>();
        o += r;
    }
    return H;
}

}  // namespace plasmon
