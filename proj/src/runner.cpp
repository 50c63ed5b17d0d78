#include "plasmon/runner.hpp"

#include "plasmon/errors.hpp"
#include "plasmon/io.hpp"
#include "plasmon/shifts.hpp"
#include "plasmon/spectra.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

namespace plasmon {

using json = nlohmann::ordered_json;

namespace {

constexpr double drift_limit = 0.01;

struct Context {
    const Scenario& s;
    const RunOptions& opt;
    RunResult result;
    json diagnostics = json::object();
    std::vector<std::string> notes;

    void write(const std::string& name, const std::string& content) {
        const auto path = std::filesystem::path(opt.out_dir) / name;
        result.files.push_back({name, write_file(path.string(), content)});
    }
    void convergence(double drift) {
        result.convergence_drift = std::max(result.convergence_drift, drift);
        result.convergence_flag = result.convergence_drift > drift_limit;
    }
};

bool is_coincident(const Scenario& s) { return s.layout == "coincident"; }

void require_single_layout(const Scenario& s, const std::string& verb) {
    if (s.layout == "both") throw ConfigError("ensemble.layout", "'both' is only valid for the rabi verb, not " + verb);
}

std::vector<double> sweep_grid(const Scenario& s, double step_ev) {
    const int n = static_cast<int>(std::llround((s.sweep_max_ev - s.sweep_min_ev) / step_ev)) + 1;
    return linear_grid(ev_to_rad_s(s.sweep_min_ev), ev_to_rad_s(s.sweep_max_ev), std::max(n, 2));
}

std::vector<double> omega_grid(const Scenario& s, double centre_ev, double pad_lo_ev, double pad_hi_ev) {
    const double lo = s.omega_min_ev.value_or(centre_ev - pad_lo_ev);
    const double hi = s.omega_max_ev.value_or(centre_ev + pad_hi_ev);
    if (!(lo > 0 && hi > lo)) throw ConfigError("spectrum", "frequency window must be positive and non-empty");
    return linear_grid(ev_to_rad_s(lo), ev_to_rad_s(hi), s.omega_points);
}

double omega0_for(const Scenario& s, const SystemModel& model, Exec exec) {
    if (s.omega0_ev) return ev_to_rad_s(*s.omega0_ev);
    const RabiReport rep = extract_rabi(model, rabi_options(s), exec);
    if (!rep.found)
        throw DomainError("no anticrossing between " + fmt_fixed(s.sweep_min_ev, 3) + " and " +
                          fmt_fixed(s.sweep_max_ev, 3) + " eV; set ensemble.omega0_ev explicitly");
    return rep.omega0;
}

double linf_drift(const std::vector<double>& a, const std::vector<double>& b) {
    const double peak = *std::max_element(a.begin(), a.end());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return peak > 0 ? d / peak : 0.0;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumColumns {
    std::vector<std::string> names;
    std::vector<Spectrum> spectra;
};

SpectrumColumns compute_spectra(const Scenario& s, int N, double w0, const std::vector<double>& omega, Exec exec) {
    const bool coinc = is_coincident(s);
    SpectrumColumns out;
    if (s.route == "effective") {
        const SystemModel model = scenario_model(s, s.count, coinc, N);
        out.names.push_back("effective");
        out.spectra.push_back(spectrum_reduced(model.bright_sector(), w0, model.gamma0(w0), omega, exec));
        return out;
    }
    if (s.route == "ideal") {
        if (!coinc) throw ConfigError("model.route", "the ideal closed form needs ensemble.layout = coincident");
        const SystemModel one = scenario_model(s, 1, true, N);
        const ContinuousKernel ck(one.kernel(), one.modes(), s.pv_cutoff_factor);
        const double g0 = one.gamma0(w0);
        const auto run = [&](KernelRoute r, const std::string& name) {
            out.names.push_back(name);
            out.spectra.push_back(spectrum_ideal_closed_form(
                [&](double w) { return ck.M(w, r)(0, 0); }, s.count, w0, g0, omega));
        };
        if (s.correction) run(KernelRoute::Corrected, "ideal_corrected");
        run(KernelRoute::Classical, "ideal_classical");
        return out;
    }
    const SystemModel model = scenario_model(s, s.count, coinc, N);
    const ContinuousKernel ck(model.kernel(), model.modes(), s.pv_cutoff_factor);
    const Eigen::VectorXcd a = Eigen::VectorXcd::Ones(s.count);
    const double g0 = model.gamma0(w0);
    if (s.correction) {
        out.names.push_back("corrected");
        out.spectra.push_back(spectrum_continuous(ck, a, w0, g0, omega, KernelRoute::Corrected, exec));
    }
    out.names.push_back("classical");
    out.spectra.push_back(spectrum_continuous(ck, a, w0, g0, omega, KernelRoute::Classical, exec));
    return out;
}

void run_spectrum(Context& c) {
    const Scenario& s = c.s;
    require_single_layout(s, "spectrum");
    const SystemModel model = scenario_model(s, s.count, is_coincident(s), s.modes);
    const double w0 = omega0_for(s, model, c.opt.exec);
    const auto omega = omega_grid(s, rad_s_to_ev(w0), 0.5, 0.5);
    const auto cols = compute_spectra(s, s.modes, w0, omega, c.opt.exec);

    std::vector<std::string> header{"omega_ev"};
    for (const auto& n : cols.names) {
        header.push_back(n);
        header.push_back(n + "_norm");
    }
    std::vector<std::vector<double>> norm;
    for (const auto& sp : cols.spectra) norm.push_back(sp.normalized());
    CsvWriter csv(header);
    for (std::size_t i = 0; i < omega.size(); ++i) {
        std::vector<std::string> row{fmt_fixed(rad_s_to_ev(omega[i]), 6)};
        for (std::size_t k = 0; k < cols.spectra.size(); ++k) {
            row.push_back(fmt_sci(cols.spectra[k].D[i]));
            row.push_back(fmt_fixed(norm[k][i], 9));
        }
        csv.row(row);
    }
    c.write("spectrum.csv", csv.text());

    c.diagnostics["omega0_ev"] = rad_s_to_ev(w0);
    c.diagnostics["gamma0_per_s"] = model.gamma0(w0);
    const ShiftResult sh = lamb_shift(model.modes(), model.kernel(), 0, w0);
    c.diagnostics["emitter0_shift_classical_mev"] = rad_s_to_mev(sh.classical);
    c.diagnostics["emitter0_shift_effective_mev"] = rad_s_to_mev(sh.effective);
    c.diagnostics["emitter0_quantum_correction_mev"] = rad_s_to_mev(sh.quantum_correction);

    if (c.opt.convergence_check) {
        const auto twice = compute_spectra(s, 2 * s.modes, w0, omega, c.opt.exec);
        double drift = 0.0;
        for (std::size_t k = 0; k < cols.spectra.size(); ++k)
            drift = std::max(drift, linf_drift(cols.spectra[k].D, twice.spectra[k].D));
        c.convergence(drift);
        c.diagnostics["convergence_metric"] = "peak-normalized max |D_N - D_2N|";
    }
}

// ---------------------------------------------------------------- map

void write_rabi_rows(CsvWriter& csv, CsvWriter& ac, const std::string& layout, const RabiReport& r) {
    const auto opt_mev = [](bool on, double v) { return on ? fmt_fixed(rad_s_to_mev(v), 4) : std::string(); };
    const auto opt_ev = [](bool on, double v) { return on ? fmt_fixed(rad_s_to_ev(v), 6) : std::string(); };
    csv.row({layout, std::to_string(r.n_emitters), r.found ? "1" : "0", opt_mev(r.found, r.splitting),
             opt_ev(r.found, r.omega0), opt_mev(r.high_order_found, r.high_order.gap),
             opt_ev(r.high_order_found, r.high_order.omega0), opt_mev(r.dipolar_reported, r.dipolar.gap),
             opt_ev(r.dipolar_reported, r.dipolar.omega0), r.second_gap_present ? "1" : "0", r.merged ? "1" : "0",
             fmt_sci(r.convergence_drift, 3), r.convergence_flag ? "1" : "0"});
    for (const auto& a : r.full)
        ac.row({layout, std::to_string(r.n_emitters), fmt_fixed(rad_s_to_ev(a.omega0), 6),
                fmt_fixed(rad_s_to_mev(a.gap), 4), fmt_fixed(rad_s_to_mev(a.linewidth), 4), fmt_fixed(a.weight, 6),
                a.resolvable ? "1" : "0"});
}

CsvWriter rabi_csv() {
    return CsvWriter({"layout", "n_emitters", "found", "splitting_mev", "omega0_ev", "high_order_mev",
                      "high_order_omega0_ev", "dipolar_mev", "dipolar_omega0_ev", "second_gap", "merged",
                      "convergence_drift", "convergence_flag"});
}

CsvWriter anticrossing_csv() {
    return CsvWriter({"layout", "n_emitters", "omega0_ev", "gap_mev", "linewidth_mev", "emitter_weight", "resolvable"});
}

void run_map(Context& c) {
    const Scenario& s = c.s;
    require_single_layout(s, "map");
    const bool coinc = is_coincident(s);
    const SystemModel model = scenario_model(s, s.count, coinc, s.modes);
    const RateFn rate = [&](double w) { return model.gamma0(w); };
    const auto w0s = sweep_grid(s, s.sweep_step_ev);
    const auto omega = omega_grid(s, 0.5 * (s.sweep_min_ev + s.sweep_max_ev),
                                  0.5 * (s.sweep_max_ev - s.sweep_min_ev) + 0.2,
                                  0.5 * (s.sweep_max_ev - s.sweep_min_ev) + 0.2);
    const BrightSector bs = model.bright_sector();
    const SpectralMap map = spectral_map(bs, w0s, omega, rate, c.opt.exec);
    const Eigen::MatrixXd Dn = map.normalized();

    CsvWriter mcsv({"omega0_ev", "omega_ev", "D_norm"});
    for (std::size_t i = 0; i < w0s.size(); ++i)
        for (std::size_t j = 0; j < omega.size(); ++j)
            mcsv.row({fmt_fixed(rad_s_to_ev(w0s[i]), 6), fmt_fixed(rad_s_to_ev(omega[j]), 6),
                      fmt_fixed(Dn(i, j), 9)});
    c.write("map.csv", mcsv.text());

    const auto branches = sweep_branches(bs, w0s, rate, c.opt.exec);
    CsvWriter bcsv({"omega0_ev", "state", "Omega_ev", "Gamma_mev", "emitter_weight"});
    for (const auto& b : branches)
        for (int m = 0; m < b.Omega.size(); ++m)
            if (b.weight[m] >= 1e-4)
                bcsv.row({fmt_fixed(rad_s_to_ev(b.omega0), 6), std::to_string(m), fmt_fixed(rad_s_to_ev(b.Omega[m]), 6),
                          fmt_fixed(rad_s_to_mev(b.Gamma[m]), 4), fmt_fixed(b.weight[m], 6)});
    c.write("branches.csv", bcsv.text());

    // Splitting from the branch gaps on a 1 meV grid over the same omega0 window.
    RabiOptions ro = rabi_options(c.s);
    ro.convergence_check = c.opt.convergence_check;
    const RabiReport rep = extract_rabi_checked(
        [&](int n) { return scenario_model(s, s.count, coinc, n); }, s.modes, ro, c.opt.exec);
    auto rcsv = rabi_csv();
    auto acsv = anticrossing_csv();
    write_rabi_rows(rcsv, acsv, s.layout, rep);
    c.write("rabi.csv", rcsv.text());
    c.write("anticrossings.csv", acsv.text());
    c.result.rabi.push_back(rep);
    c.convergence(rep.convergence_drift);
    c.diagnostics["convergence_metric"] = "relative change of the Rabi splitting with 2N orders";
}

// ---------------------------------------------------------------- shifts

std::vector<ShiftResult> shift_series(const Scenario& s, int N, const std::vector<double>& w0s) {
    require_single_layout(s, "shifts");
    const SystemModel model = scenario_model(s, s.count, is_coincident(s), N);
    std::vector<ShiftResult> out;
    for (double w0 : w0s) out.push_back(lamb_shift(model.modes(), model.kernel(), 0, w0, true));
    return out;
}

void run_shifts(Context& c) {
    const Scenario& s = c.s;
    const auto w0s = sweep_grid(s, s.sweep_step_ev);
    const auto sh = shift_series(s, s.modes, w0s);
    CsvWriter csv({"omega0_ev", "classical_mev", "effective_mev", "quantum_correction_mev", "kk_correction_mev",
                   "high_frequency_mev", "correction_ratio"});
    double worst = 0.0;
    for (std::size_t i = 0; i < w0s.size(); ++i) {
        const double ratio = std::abs(sh[i].quantum_correction) / std::abs(sh[i].classical);
        worst = std::max(worst, ratio);
        csv.row({fmt_fixed(rad_s_to_ev(w0s[i]), 6), fmt_fixed(rad_s_to_mev(sh[i].classical), 6),
                 fmt_fixed(rad_s_to_mev(sh[i].effective), 6), fmt_fixed(rad_s_to_mev(sh[i].quantum_correction), 6),
                 fmt_fixed(rad_s_to_mev(sh[i].kk_correction), 6), fmt_fixed(rad_s_to_mev(sh[i].high_frequency_term), 6),
                 fmt_fixed(ratio, 6)});
    }
    c.write("shifts.csv", csv.text());
    c.diagnostics["max_correction_ratio"] = worst;
    if (c.opt.convergence_check) {
        const auto twice = shift_series(s, 2 * s.modes, w0s);
        double drift = 0.0;
        for (std::size_t i = 0; i < w0s.size(); ++i) {
            drift = std::max(drift, std::abs(twice[i].classical - sh[i].classical) / std::abs(sh[i].classical));
            drift = std::max(drift, std::abs(twice[i].effective - sh[i].effective) / std::abs(sh[i].effective));
        }
        c.convergence(drift);
        c.diagnostics["convergence_metric"] = "max relative change of the classical and effective shifts with 2N orders";
    }
}

// ---------------------------------------------------------------- rabi

void run_rabi(Context& c) {
    const Scenario& s = c.s;
    const std::vector<int> counts = s.counts.empty() ? std::vector<int>{s.count} : s.counts;
    std::vector<std::string> layouts;
    if (s.layout == "both")
        layouts = {"ring", "coincident"};
    else
        layouts = {s.layout};

    RabiOptions ro = rabi_options(s);
    ro.convergence_check = c.opt.convergence_check;
    auto rcsv = rabi_csv();
    auto acsv = anticrossing_csv();
    std::vector<std::vector<RabiReport>> per_layout;
    for (const auto& layout : layouts) {
        const bool coinc = layout == "coincident";
        per_layout.emplace_back();
        for (int ne : counts) {
            const RabiReport rep = extract_rabi_checked(
                [&](int n) { return scenario_model(s, ne, coinc, n); }, s.modes, ro, c.opt.exec);
            write_rabi_rows(rcsv, acsv, layout, rep);
            per_layout.back().push_back(rep);
            c.result.rabi.push_back(rep);
            c.convergence(rep.convergence_drift);
        }
    }
    c.write("rabi.csv", rcsv.text());
    c.write("anticrossings.csv", acsv.text());
    c.diagnostics["convergence_metric"] = "max relative change of the Rabi splitting with 2N orders";

    if (per_layout.size() == 2) {
        bool ordered = true;
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] >= 2 && per_layout[0][i].splitting > per_layout[1][i].splitting) ordered = false;
        c.diagnostics["coincident_above_ring"] = ordered;
    }
    int onset = 0;
    for (const auto& r : per_layout[0])
        if (r.second_gap_present) {
            onset = r.n_emitters;
            break;
        }
    c.diagnostics["second_gap_onset"] = onset;
}

// ---------------------------------------------------------------- dressed

struct Ladder {
    DressedStates ds;
    std::vector<LadderRow> rows;
    EffectiveHamiltonian h;
};

Ladder ladder(const Scenario& s, int N, double w0) {
    const SystemModel model = scenario_model(s, s.count, is_coincident(s), N);
    Ladder l;
    l.h = build_effective(w0, model.gamma0(w0), model.modes(), model.lowdin_modes(), {}, s.size_cap);
    l.ds = dressed_states(l.h.H, bright_initial_state(s.count, l.h.dim()), s.count);
    l.rows = ladder_export(l.ds);
    return l;
}

double bright_gap(const std::vector<LadderRow>& rows) {
    std::vector<double> w;
    for (const auto& r : rows)
        if (r.bright) w.push_back(r.omega_ev);
    return w.size() == 2 ? std::abs(w[1] - w[0]) : 0.0;
}

void run_dressed(Context& c) {
    const Scenario& s = c.s;
    require_single_layout(s, "dressed");
    const SystemModel model = scenario_model(s, s.count, is_coincident(s), s.modes);
    const double w0 = omega0_for(s, model, c.opt.exec);
    const Ladder l = ladder(s, s.modes, w0);

    CsvWriter csv({"m", "Omega_ev", "Gamma_mev", "emitter_weight", "dominant_order", "initial_overlap", "bright"});
    for (const auto& r : l.rows) {
        std::vector<double> per_order(s.modes + 1, 0.0);
        double ew = 0.0;
        for (std::size_t b = 0; b < r.weights.size(); ++b) {
            const auto& lab = l.h.labels[b];
            if (lab.emitter)
                ew += r.weights[b];
            else
                per_order[lab.order] += r.weights[b];
        }
        const int dom = static_cast<int>(std::max_element(per_order.begin() + 1, per_order.end()) - per_order.begin());
        csv.row({std::to_string(r.m), fmt_fixed(r.omega_ev, 6), fmt_fixed(1e3 * r.gamma_ev, 4), fmt_fixed(ew, 6),
                 std::to_string(dom), fmt_sci(std::norm(l.ds.overlap[r.m]), 6), r.bright ? "1" : "0"});
    }
    c.write("ladder.csv", csv.text());
    c.diagnostics["omega0_ev"] = rad_s_to_ev(w0);
    c.diagnostics["dimension"] = l.h.dim();
    c.diagnostics["condition_number"] = l.ds.condition;
    c.diagnostics["ill_conditioned"] = l.ds.ill_conditioned;
    c.diagnostics["bright_gap_mev"] = 1e3 * bright_gap(l.rows);
    if (c.opt.convergence_check) {
        const Ladder twice = ladder(s, 2 * s.modes, w0);
        const double a = bright_gap(l.rows), b = bright_gap(twice.rows);
        c.convergence(a > 0 ? std::abs(b - a) / a : 0.0);
        c.diagnostics["convergence_metric"] = "relative change of the gap between the two bright states with 2N orders";
    }
}

// ---------------------------------------------------------------- modes dump

void run_modes_dump(Context& c) {
    const Scenario& s = c.s;
    require_single_layout(s, "modes dump");
    const SystemModel model = scenario_model(s, s.count, is_coincident(s), s.modes);
    const ModeSet& m = model.modes();
    const LowdinModes& lw = model.lowdin_modes();
    json orders = json::array();
    for (int n = 1; n <= m.N; ++n) {
        json g = json::array();
        for (int j = 0; j < m.n_emitters; ++j) g.push_back(rad_s_to_mev(m.g(n - 1, j)));
        orders.push_back({{"n", n},
                          {"omega_ev", rad_s_to_ev(m.omega[n - 1])},
                          {"gamma_ev", rad_s_to_ev(m.gamma[n - 1])},
                          {"g_mev", g},
                          {"independent_modes", lw.n_ind[n - 1]}});
    }
    json doc = {{"n_emitters", m.n_emitters}, {"orders", orders}, {"max_fit_residual", m.max_fit_residual}};
    c.write("modes.json", doc.dump(2) + "\n");
}

const char* plot_script = R"py(import csv
import os
import sys

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))


def load(name):
    path = os.path.join(here, name)
    if not os.path.exists(path):
        return None
    with open(path) as f:
        rows = list(csv.DictReader(f))
    return {k: [r[k] for r in rows] for k in rows[0]} if rows else None


def num(col):
    return [float(v) if v else float("nan") for v in col]


fig = None
data = load("map.csv")
if data:
    x = sorted(set(num(data["omega0_ev"])))
    y = sorted(set(num(data["omega_ev"])))
    z = num(data["D_norm"])
    grid = [z[i * len(y):(i + 1) * len(y)] for i in range(len(x))]
    fig, ax = plt.subplots()
    ax.imshow(list(map(list, zip(*grid))), origin="lower", aspect="auto",
              extent=[x[0], x[-1], y[0], y[-1]], cmap="magma")
    ax.set_xlabel("omega0 (eV)")
    ax.set_ylabel("omega (eV)")
    fig.savefig(os.path.join(here, "map.png"), dpi=150)

data = load("spectrum.csv")
if data:
    fig, ax = plt.subplots()
    w = num(data["omega_ev"])
    for key in data:
        if key.endswith("_norm"):
            ax.plot(w, num(data[key]), label=key[:-5])
    ax.set_xlabel("omega (eV)")
    ax.set_ylabel("D (normalized)")
    ax.legend()
    fig.savefig(os.path.join(here, "spectrum.png"), dpi=150)

data = load("shifts.csv")
if data:
    fig, ax = plt.subplots()
    w = num(data["omega0_ev"])
    for key in ("classical_mev", "effective_mev", "quantum_correction_mev"):
        ax.plot(w, num(data[key]), label=key[:-4])
    ax.set_xlabel("omega0 (eV)")
    ax.set_ylabel("shift (meV)")
    ax.legend()
    fig.savefig(os.path.join(here, "shifts.png"), dpi=150)

data = load("rabi.csv")
if data and len(data["n_emitters"]) > 1:
    fig, ax = plt.subplots()
    for layout in sorted(set(data["layout"])):
        idx = [i for i, l in enumerate(data["layout"]) if l == layout]
        ax.plot([int(data["n_emitters"][i]) for i in idx], [num(data["splitting_mev"])[i] for i in idx],
                "o-", label=layout)
    ax.set_xlabel("N_e")
    ax.set_ylabel("Rabi splitting (meV)")
    ax.legend()
    fig.savefig(os.path.join(here, "rabi.png"), dpi=150)

data = load("ladder.csv")
if data:
    fig, ax = plt.subplots()
    ax.scatter(num(data["Omega_ev"]), num(data["emitter_weight"]))
    ax.set_xlabel("Omega_m (eV)")
    ax.set_ylabel("emitter weight")
    fig.savefig(os.path.join(here, "ladder.png"), dpi=150)

if fig is None:
    sys.exit("no plottable CSV next to this script")
)py";

}  // namespace

RabiOptions rabi_options(const Scenario& s) {
    RabiOptions o;
    o.omega0_min = ev_to_rad_s(s.sweep_min_ev);
    o.omega0_max = ev_to_rad_s(s.sweep_max_ev);
    o.omega0_step = ev_to_rad_s(std::min(s.sweep_step_ev, 0.001));
    return o;
}

double auto_omega0(const Scenario& s, int count, bool coincident, Exec exec) {
    Scenario t = s;
    t.omega0_ev.reset();
    return omega0_for(t, scenario_model(s, count, coincident, s.modes), exec);
}

Scenario apply_overrides(Scenario s, const RunOptions& opt) {
    if (opt.modes) {
        if (*opt.modes < 1) throw ConfigError("--modes", "must be >= 1");
        s.modes = *opt.modes;
    }
    if (opt.route) {
        if (*opt.route != "effective" && *opt.route != "continuous" && *opt.route != "ideal")
            throw ConfigError("--route", "expected effective, continuous or ideal");
        s.route = *opt.route;
    }
    if (opt.no_correction) s.correction = false;
    return s;
}

RunResult run_scenario(const Scenario& s, const RunOptions& opt, const std::string& verb_in) {
    const std::string verb = verb_in.empty() ? s.verb : verb_in;
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + opt.out_dir + ": " + ec.message());

    Context c{s, opt, {}, json::object(), {}};
    c.result.verb = verb;
    const std::string canonical = canonical_text(s);
    c.result.config_hash = hex64(fnv1a(canonical));

    if (verb == "spectrum")
        run_spectrum(c);
    else if (verb == "map")
        run_map(c);
    else if (verb == "shifts")
        run_shifts(c);
    else if (verb == "rabi")
        run_rabi(c);
    else if (verb == "dressed")
        run_dressed(c);
    else if (verb == "modes")
        run_modes_dump(c);
    else
        throw ConfigError("scenario.verb", "unknown verb '" + verb + "'");

    if (opt.plot) c.write("plot.py", plot_script);

    json files = json::array();
    for (const auto& f : c.result.files) files.push_back({{"name", f.name}, {"fnv1a", f.hash}});
    json config = json::array();
    std::istringstream lines(canonical);
    for (std::string line; std::getline(lines, line);) config.push_back(line);
    json manifest = {{"schema", 1},
                     {"verb", verb},
                     {"scenario", s.name},
                     {"description", s.description},
                     {"config_hash", c.result.config_hash},
                     {"config", config},
                     {"files", files},
                     {"convergence",
                      {{"checked", opt.convergence_check},
                       {"orders", s.modes},
                       {"doubled_orders", 2 * s.modes},
                       {"drift", c.result.convergence_drift},
                       {"limit", drift_limit},
                       {"flagged", c.result.convergence_flag}}},
                     {"diagnostics", c.diagnostics},
                     {"notes",
                      {"frequency windows and sweep grids of the presets are read off the published figure axes",
                       "shifts are the dispersive part Delta of M = Delta + i Gamma/2; the emitter line sits at "
                       "omega0 - Delta"}}};
    write_file((std::filesystem::path(opt.out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return c.result;
}

}  // namespace plasmon
