#include "plasmon/scenario.hpp"

#include "plasmon/errors.hpp"
#include "plasmon/io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace plasmon {

namespace pt = boost::property_tree;

static const std::set<std::string> known_keys = {
    "scenario.name", "scenario.description", "scenario.verb", "scenario.schema",
    "material.preset", "material.eps_inf", "material.omega_p", "material.gamma_p", "material.eps_background",
    "geometry.radius_nm",
    "ensemble.layout", "ensemble.count", "ensemble.counts", "ensemble.distance_nm", "ensemble.dipole_debye",
    "ensemble.orientation", "ensemble.omega0_ev", "ensemble.gamma0_per_s",
    "modes.N", "modes.size_cap", "modes.pv_cutoff_factor",
    "sweep.omega0_min_ev", "sweep.omega0_max_ev", "sweep.omega0_step_ev",
    "spectrum.omega_min_ev", "spectrum.omega_max_ev", "spectrum.points",
    "model.route", "model.correction",
};

static double get_double(const pt::ptree& t, const std::string& key) {
    const std::string v = t.get<std::string>(key);
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + v + "'");
    }
}

static int get_int(const pt::ptree& t, const std::string& key) {
    const double d = get_double(t, key);
    if (d != static_cast<int>(d)) throw ConfigError(key, "expected an integer");
    return static_cast<int>(d);
}

static bool get_bool(const pt::ptree& t, const std::string& key) {
    const std::string v = t.get<std::string>(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(key, "expected a boolean, got '" + v + "'");
}

static std::vector<int> get_int_list(const pt::ptree& t, const std::string& key) {
    std::vector<int> out;
    std::stringstream ss(t.get<std::string>(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        // "a-b" expands to every integer in the range
        const auto dash = item.find('-');
        try {
            if (dash != std::string::npos && dash > 0) {
                const int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
                if (hi < lo) throw std::invalid_argument("range");
                for (int i = lo; i <= hi; ++i) out.push_back(i);
            } else {
                out.push_back(std::stoi(item));
            }
        } catch (const std::exception&) {
            throw ConfigError(key, "expected a comma separated list of integers");
        }
    }
    for (int v : out)
        if (v < 1) throw ConfigError(key, "emitter counts must be >= 1");
    return out;
}

Scenario parse_scenario(const std::string& ini_text, const std::string& source) {
    pt::ptree tree;
    try {
        std::istringstream in(ini_text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(source + ":" + std::to_string(e.line()), e.message());
    }
    for (const auto& sec : tree) {
        if (sec.second.empty()) throw ConfigError(sec.first, "keys must live inside a [section]");
        for (const auto& kv : sec.second) {
            const std::string key = sec.first + "." + kv.first;
            if (!known_keys.count(key)) throw ConfigError(key, "unknown key");
        }
    }
    auto has = [&](const std::string& k) { return static_cast<bool>(tree.get_optional<std::string>(k)); };

    Scenario s;
    if (has("scenario.schema") && get_int(tree, "scenario.schema") != 1)
        throw ConfigError("scenario.schema", "only schema 1 is supported");
    if (has("scenario.name")) s.name = tree.get<std::string>("scenario.name");
    if (has("scenario.description")) s.description = tree.get<std::string>("scenario.description");
    if (has("scenario.verb")) s.verb = tree.get<std::string>("scenario.verb");

    if (has("material.preset")) {
        try {
            s.material = material_preset(tree.get<std::string>("material.preset"));
        } catch (const DomainError& e) {
            throw ConfigError("material.preset", e.what());
        }
    }
    if (has("material.eps_inf")) s.material.eps_inf = get_double(tree, "material.eps_inf");
    if (has("material.omega_p")) s.material.omega_p = get_double(tree, "material.omega_p");
    if (has("material.gamma_p")) s.material.gamma_p = get_double(tree, "material.gamma_p");
    if (has("material.eps_background")) s.material.eps_background = get_double(tree, "material.eps_background");
    if (has("material.eps_inf") || has("material.omega_p") || has("material.gamma_p") ||
        has("material.eps_background"))
        if (!has("material.preset")) s.material.name = "custom";
    try {
        s.material.validate();
    } catch (const DomainError& e) {
        throw ConfigError("material", e.what());
    }

    if (has("geometry.radius_nm")) s.radius_nm = get_double(tree, "geometry.radius_nm");
    if (!(s.radius_nm > 0)) throw ConfigError("geometry.radius_nm", "must be positive");

    if (has("ensemble.layout")) s.layout = tree.get<std::string>("ensemble.layout");
    if (s.layout != "ring" && s.layout != "coincident" && s.layout != "both")
        throw ConfigError("ensemble.layout", "expected ring, coincident or both");
    if (has("ensemble.count")) s.count = get_int(tree, "ensemble.count");
    if (s.count < 1) throw ConfigError("ensemble.count", "must be >= 1");
    if (has("ensemble.counts")) s.counts = get_int_list(tree, "ensemble.counts");
    if (has("ensemble.distance_nm")) s.distance_nm = get_double(tree, "ensemble.distance_nm");
    if (!(s.distance_nm > 0)) throw ConfigError("ensemble.distance_nm", "must be positive");
    if (has("ensemble.dipole_debye")) s.dipole_debye = get_double(tree, "ensemble.dipole_debye");
    if (!(s.dipole_debye > 0)) throw ConfigError("ensemble.dipole_debye", "must be positive");
    if (has("ensemble.orientation")) {
        try {
            s.orientation = parse_orientation(tree.get<std::string>("ensemble.orientation"));
        } catch (const DomainError& e) {
            throw ConfigError("ensemble.orientation", e.what());
        }
    }
    if (has("ensemble.omega0_ev")) {
        if (tree.get<std::string>("ensemble.omega0_ev") == "auto")
            s.omega0_ev.reset();
        else
            s.omega0_ev = get_double(tree, "ensemble.omega0_ev");
    } else {
        s.omega0_ev = 2.95;
    }
    if (s.omega0_ev && !(*s.omega0_ev > 0)) throw ConfigError("ensemble.omega0_ev", "must be positive");
    if (has("ensemble.gamma0_per_s")) {
        s.gamma0_per_s = get_double(tree, "ensemble.gamma0_per_s");
        if (!(*s.gamma0_per_s > 0)) throw ConfigError("ensemble.gamma0_per_s", "must be positive");
    }

    if (has("modes.N")) s.modes = get_int(tree, "modes.N");
    if (s.modes < 1) throw ConfigError("modes.N", "must be >= 1");
    if (has("modes.size_cap")) s.size_cap = get_int(tree, "modes.size_cap");
    if (has("modes.pv_cutoff_factor")) s.pv_cutoff_factor = get_double(tree, "modes.pv_cutoff_factor");
    if (s.pv_cutoff_factor < 10) throw ConfigError("modes.pv_cutoff_factor", "must be >= 10");

    if (has("sweep.omega0_min_ev")) s.sweep_min_ev = get_double(tree, "sweep.omega0_min_ev");
    if (has("sweep.omega0_max_ev")) s.sweep_max_ev = get_double(tree, "sweep.omega0_max_ev");
    if (has("sweep.omega0_step_ev")) s.sweep_step_ev = get_double(tree, "sweep.omega0_step_ev");
    if (!(s.sweep_min_ev > 0 && s.sweep_max_ev > s.sweep_min_ev && s.sweep_step_ev > 0))
        throw ConfigError("sweep", "need 0 < omega0_min_ev < omega0_max_ev and a positive step");

    if (has("spectrum.omega_min_ev")) s.omega_min_ev = get_double(tree, "spectrum.omega_min_ev");
    if (has("spectrum.omega_max_ev")) s.omega_max_ev = get_double(tree, "spectrum.omega_max_ev");
    if (has("spectrum.points")) s.omega_points = get_int(tree, "spectrum.points");
    if (s.omega_points < 2) throw ConfigError("spectrum.points", "must be >= 2");
    if (s.omega_min_ev && s.omega_max_ev && !(*s.omega_max_ev > *s.omega_min_ev))
        throw ConfigError("spectrum", "omega_max_ev must exceed omega_min_ev");

    if (has("model.route")) s.route = tree.get<std::string>("model.route");
    if (s.route != "effective" && s.route != "continuous" && s.route != "ideal")
        throw ConfigError("model.route", "expected effective, continuous or ideal");
    if (has("model.correction")) s.correction = get_bool(tree, "model.correction");
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
    return parse_scenario(text, path);
}

static const std::map<std::string, std::string>& presets() {
    static const std::map<std::string, std::string> p = {
        {"fig2a", R"([scenario]
name = fig2a
description = single orthoradial emitter near a silver sphere, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.4
omega_max_ev = 3.4
points = 500
)"},
        {"fig2b", R"([scenario]
name = fig2b
description = ring of 15 emitters, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = ring
count = 15
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.4
omega_max_ev = 3.4
points = 500
)"},
        {"fig2c", R"([scenario]
name = fig2c
description = ring of 50 emitters, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = ring
count = 50
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.4
omega_max_ev = 3.4
points = 500
)"},
        {"fig2d", R"([scenario]
name = fig2d
description = ring of 100 emitters, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = ring
count = 100
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.4
omega_max_ev = 3.4
points = 500
)"},
        {"fig3a", R"([scenario]
name = fig3a
description = 15 coincident emitters, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 15
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.3
omega_max_ev = 3.5
points = 600
)"},
        {"fig3b", R"([scenario]
name = fig3b
description = 50 coincident emitters, spectral map over omega0
verb = map
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 50
distance_nm = 2
dipole_debye = 24
orientation = theta
[sweep]
omega0_min_ev = 2.5
omega0_max_ev = 3.3
omega0_step_ev = 0.005
[spectrum]
omega_min_ev = 2.3
omega_max_ev = 3.6
points = 650
)"},
        {"fig4-ring", R"([scenario]
name = fig4-ring
description = Rabi splitting against emitter count, ring layout
verb = rabi
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = ring
counts = 1-10, 12, 15, 20, 25, 30, 40, 50, 60, 70, 80, 90, 100
distance_nm = 2
dipole_debye = 24
orientation = theta
)"},
        {"fig4-ideal", R"([scenario]
name = fig4-ideal
description = Rabi splitting against emitter count, coincident emitters
verb = rabi
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
counts = 1-10, 12, 15, 20, 25, 30, 40, 50, 60, 70, 80, 90, 100
distance_nm = 2
dipole_debye = 24
orientation = theta
)"},
        {"fig5a", R"([scenario]
name = fig5a
description = Lamb shift, gold sphere, emitter parallel to the surface
verb = shifts
[material]
preset = gold-drude
[geometry]
radius_nm = 15
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = theta
[modes]
N = 60
[sweep]
omega0_min_ev = 1.5
omega0_max_ev = 3.5
omega0_step_ev = 0.01
)"},
        {"fig5b", R"([scenario]
name = fig5b
description = Lamb shift, gold sphere, emitter perpendicular to the surface
verb = shifts
[material]
preset = gold-drude
[geometry]
radius_nm = 15
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = radial
[modes]
N = 60
[sweep]
omega0_min_ev = 1.5
omega0_max_ev = 3.5
omega0_step_ev = 0.01
)"},
        {"fig6a", R"([scenario]
name = fig6a
description = Lamb shift, silver sphere, emitter parallel to the surface
verb = shifts
[material]
preset = silver-drude
[geometry]
radius_nm = 15
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = theta
[modes]
N = 60
[sweep]
omega0_min_ev = 1.5
omega0_max_ev = 3.5
omega0_step_ev = 0.01
)"},
        {"fig6b", R"([scenario]
name = fig6b
description = Lamb shift, silver sphere, emitter perpendicular to the surface
verb = shifts
[material]
preset = silver-drude
[geometry]
radius_nm = 15
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = radial
[modes]
N = 60
[sweep]
omega0_min_ev = 1.5
omega0_max_ev = 3.5
omega0_step_ev = 0.01
)"},
        {"fig7", R"([scenario]
name = fig7
description = continuous-model spectrum of one perpendicular emitter, silver R = 15 nm, at the anticrossing
verb = spectrum
[material]
preset = silver-drude
[geometry]
radius_nm = 15
[ensemble]
layout = ring
count = 1
distance_nm = 2
dipole_debye = 24
orientation = radial
omega0_ev = auto
[modes]
N = 60
[spectrum]
points = 2000
[model]
route = continuous
correction = true
)"},
        {"fig8", R"([scenario]
name = fig8
description = continuous-model spectrum of 10 coincident perpendicular emitters, silver R = 15 nm
verb = spectrum
[material]
preset = silver-drude
[geometry]
radius_nm = 15
[ensemble]
layout = coincident
count = 10
distance_nm = 2
dipole_debye = 24
orientation = radial
omega0_ev = auto
[modes]
N = 60
[spectrum]
points = 2000
[model]
route = continuous
correction = true
)"},
        {"ladder-1", R"([scenario]
name = ladder-1
description = dressed-state ladder, single emitter at the anticrossing
verb = dressed
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 1
distance_nm = 2
dipole_debye = 24
orientation = theta
omega0_ev = auto
)"},
        {"ladder-5", R"([scenario]
name = ladder-5
description = dressed-state ladder, 5 coincident emitters at the high-order anticrossing
verb = dressed
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 5
distance_nm = 2
dipole_debye = 24
orientation = theta
omega0_ev = auto
)"},
        {"ladder-5-lsp1", R"([scenario]
name = ladder-5-lsp1
description = dressed-state ladder, 5 coincident emitters tuned to the dipolar mode
verb = dressed
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 5
distance_nm = 2
dipole_debye = 24
orientation = theta
omega0_ev = 2.7926
)"},
        {"ladder-50", R"([scenario]
name = ladder-50
description = dressed-state ladder, 50 coincident emitters at the anticrossing
verb = dressed
[material]
preset = silver-drude
[geometry]
radius_nm = 8
[ensemble]
layout = coincident
count = 50
distance_nm = 2
dipole_debye = 24
orientation = theta
omega0_ev = auto
)"},
    };
    return p;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& kv : presets()) out.push_back(kv.first);
    return out;
}

std::string preset_text(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) throw ConfigError("preset", "unknown preset '" + name + "'");
    return it->second;
}

Scenario preset_scenario(const std::string& name) { return parse_scenario(preset_text(name), "preset:" + name); }

static std::string num(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string canonical_text(const Scenario& s) {
    std::ostringstream o;
    o << "scenario.name=" << s.name << "\n"
      << "scenario.verb=" << s.verb << "\n"
      << "material.name=" << s.material.name << "\n"
      << "material.eps_inf=" << num(s.material.eps_inf) << "\n"
      << "material.omega_p=" << num(s.material.omega_p) << "\n"
      << "material.gamma_p=" << num(s.material.gamma_p) << "\n"
      << "material.eps_background=" << num(s.material.eps_background) << "\n"
      << "geometry.radius_nm=" << num(s.radius_nm) << "\n"
      << "ensemble.layout=" << s.layout << "\n"
      << "ensemble.count=" << s.count << "\n"
      << "ensemble.counts=";
    for (std::size_t i = 0; i < s.counts.size(); ++i) o << (i ? "," : "") << s.counts[i];
    o << "\n"
      << "ensemble.distance_nm=" << num(s.distance_nm) << "\n"
      << "ensemble.dipole_debye=" << num(s.dipole_debye) << "\n"
      << "ensemble.orientation=" << to_string(s.orientation) << "\n"
      << "ensemble.omega0_ev=";
    if (s.omega0_ev)
        o << num(*s.omega0_ev);
    else
        o << "auto";
    o << "\n" << "ensemble.gamma0_per_s=";
    if (s.gamma0_per_s)
        o << num(*s.gamma0_per_s);
    else
        o << "free-space";
    o << "\n"
      << "modes.N=" << s.modes << "\n"
      << "modes.size_cap=" << s.size_cap << "\n"
      << "modes.pv_cutoff_factor=" << num(s.pv_cutoff_factor) << "\n"
      << "sweep.omega0_min_ev=" << num(s.sweep_min_ev) << "\n"
      << "sweep.omega0_max_ev=" << num(s.sweep_max_ev) << "\n"
      << "sweep.omega0_step_ev=" << num(s.sweep_step_ev) << "\n"
      << "spectrum.omega_min_ev=" << (s.omega_min_ev ? num(*s.omega_min_ev) : "omega0-0.5") << "\n"
      << "spectrum.omega_max_ev=" << (s.omega_max_ev ? num(*s.omega_max_ev) : "omega0+0.5") << "\n"
      << "spectrum.points=" << s.omega_points << "\n"
      << "model.route=" << s.route << "\n"
      << "model.correction=" << (s.correction ? "true" : "false") << "\n";
    return o.str();
}

std::vector<Emitter> scenario_emitters(const Scenario& s, int count, bool coincident) {
    const double R = nm_to_m(s.radius_nm), h = nm_to_m(s.distance_nm), d = debye_to_cm(s.dipole_debye);
    return coincident ? coincident_emitters(count, R, h, d, s.orientation)
                      : ring_emitters(count, R, h, d, s.orientation);
}

SystemModel scenario_model(const Scenario& s, int count, bool coincident, int N) {
    return SystemModel(s.material, SphereGeometry{nm_to_m(s.radius_nm)}, scenario_emitters(s, count, coincident), N,
                       s.gamma0_per_s);
}

}  // namespace plasmon
