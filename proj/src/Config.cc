//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Config.cc
//---------------------------------------------------------------------------//
#include "qgrating/Config.hh"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
using nlohmann::json;

//---------------------------------------------------------------------------//
/*!
 * Strict accessor for one JSON object.
 *
 * Every key read is recorded; \c finish rejects whatever was not read.
 */
class Section
{
  public:
    Section(json const& obj, std::string path)
        : obj_{obj}, path_{std::move(path)}
    {
        if (!obj_.is_object())
            throw ConfigError(where() + "expected an object");
    }

    bool has(char const* key) const { return obj_.contains(key); }

    json const& get(char const* key)
    {
        if (!obj_.contains(key))
            throw ConfigError(name(key) + ": missing required key");
        used_.insert(key);
        return obj_.at(key);
    }

    real_type number(char const* key)
    {
        json const& v = this->get(key);
        if (!v.is_number() || !std::isfinite(v.get<real_type>()))
            throw ConfigError(name(key) + ": expected a finite number");
        return v.get<real_type>();
    }

    int integer(char const* key)
    {
        json const& v = this->get(key);
        if (!v.is_number_integer())
            throw ConfigError(name(key) + ": expected an integer");
        auto i = v.get<long long>();
        if (i < -1000000000LL || i > 1000000000LL)
            throw ConfigError(name(key) + ": integer out of range");
        return static_cast<int>(i);
    }

    size_type count(char const* key)
    {
        int i = this->integer(key);
        if (i < 1)
            throw ConfigError(name(key) + ": expected a positive integer");
        return static_cast<size_type>(i);
    }

    std::string string(char const* key)
    {
        json const& v = this->get(key);
        if (!v.is_string())
            throw ConfigError(name(key) + ": expected a string");
        return v.get<std::string>();
    }

    Section child(char const* key)
    {
        return Section{this->get(key), name(key)};
    }

    std::string name(std::string const& key) const
    {
        return path_.empty() ? key : path_ + "." + key;
    }

    void finish(std::string const& context) const
    {
        for (auto const& item : obj_.items())
        {
            if (!used_.count(item.key()))
            {
                throw ConfigError(name(item.key()) + ": unknown key" + context);
            }
        }
    }

  private:
    json const& obj_;
    std::string path_;
    std::set<std::string> used_;

    std::string where() const { return path_.empty() ? "" : path_ + ": "; }
};

//---------------------------------------------------------------------------//
bool uses_ionization_grid(Mode m)
{
    return m == Mode::ionization || m == Mode::rings || m == Mode::sweep;
}

//---------------------------------------------------------------------------//
struct SpeedKey
{
    SpeedKind kind;
    char const* key;
};

constexpr SpeedKey speed_keys[] = {
    {SpeedKind::velocity_au, "velocity_au"},
    {SpeedKind::f, "f"},
    {SpeedKind::energy_ev, "energy_ev"},
    {SpeedKind::energy_kev_per_u, "energy_kev_per_u"},
};

char const* speed_key(SpeedKind kind)
{
    for (auto const& s : speed_keys)
    {
        if (s.kind == kind)
            return s.key;
    }
    return "";
}

//---------------------------------------------------------------------------//
GratingInput parse_grating(Section s)
{
    GratingInput g;
    g.a_mm = s.number("a_mm");
    g.b_mm = s.number("b_mm");
    g.d_mm = s.number("d_mm");
    g.n_slits = s.integer("n_slits");
    g.distance_mm = s.number("distance_mm");
    s.finish("");
    for (auto [key, value] : {std::pair{"a_mm", g.a_mm},
                              std::pair{"b_mm", g.b_mm},
                              std::pair{"d_mm", g.d_mm},
                              std::pair{"distance_mm", g.distance_mm}})
    {
        if (!(value > 0))
            throw ConfigError(s.name(key) + ": must be positive");
    }
    return g;
}

//---------------------------------------------------------------------------//
BeamInput parse_beam(Section s)
{
    BeamInput b;
    b.momentum = s.number("momentum_au");
    b.binding_energy = s.number("binding_energy_au");
    b.z_nucleus = s.integer("z_nucleus");
    b.n_electrons = s.has("n_electrons") ? s.integer("n_electrons")
                                         : b.z_nucleus;
    b.mass = s.number("mass_au");
    s.finish("");
    return b;
}

//---------------------------------------------------------------------------//
ProjectileInput parse_projectile(Section s, Mode mode)
{
    ProjectileInput p;
    p.species = s.string("species");
    if (p.species == "electron")
    {
        p.charge = -1;
        p.mass = 1;
    }
    else if (p.species == "proton")
    {
        p.charge = 1;
        p.mass = constants::proton_mass_au;
    }
    else if (p.species == "ion")
    {
        p.charge = s.integer("charge");
        p.mass = s.number("mass_au");
        if (p.charge == 0)
            throw ConfigError(s.name("charge") + ": must be nonzero");
        if (!(p.mass > 0))
            throw ConfigError(s.name("mass_au") + ": must be positive");
    }
    else
    {
        throw ConfigError(s.name("species")
                          + ": expected 'electron', 'proton' or 'ion', got '"
                          + p.species + "'");
    }

    // Sweeps set the speed from f_list; elsewhere exactly one speed key
    if (mode != Mode::sweep)
    {
        for (auto const& sk : speed_keys)
        {
            if (!s.has(sk.key))
                continue;
            if (p.speed_kind != SpeedKind::none)
            {
                throw ConfigError(s.name(sk.key) + ": conflicts with "
                                  + s.name(speed_key(p.speed_kind))
                                  + ", give exactly one speed");
            }
            p.speed_kind = sk.kind;
            p.speed = s.number(sk.key);
            if (!(p.speed > 0))
                throw ConfigError(s.name(sk.key) + ": must be positive");
        }
    }
    if (mode == Mode::elastic && p.speed_kind == SpeedKind::f)
    {
        throw ConfigError(s.name("f")
                          + ": the velocity factor is only meaningful for "
                            "ionization");
    }
    s.finish(mode == Mode::sweep ? " (sweep mode takes speeds from f_list)"
                                 : "");
    return p;
}

//---------------------------------------------------------------------------//
RecoilSetting parse_recoil(Section s)
{
    RecoilSetting r;
    r.p_r_z = Momentum{s.number("p_r_z")};
    r.q_x = Momentum{s.number("q_x")};
    r.q_y = Momentum{s.number("q_y")};
    s.finish("");
    return r;
}

//---------------------------------------------------------------------------//
AxisSpec parse_axis(Section& s, std::string const& stem)
{
    AxisSpec a;
    a.min = s.number((stem + "_min").c_str());
    a.max = s.number((stem + "_max").c_str());
    a.samples = s.count((stem + "_samples").c_str());
    // Reuse the axis validation with the key names in the message
    try
    {
        GridAxis::uniform(stem, "", a.min, a.max, a.samples);
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(s.name(stem) + ": " + e.what());
    }
    return a;
}

//---------------------------------------------------------------------------//
void parse_grid(Section s, RunConfig& cfg)
{
    if (cfg.mode == Mode::diffraction)
    {
        real_type x = s.number("x_extent_mm");
        real_type z = s.number("z_extent_mm");
        size_type nx = s.count("x_samples");
        size_type nz = s.count("z_samples");
        if (!(x > 0))
            throw ConfigError(s.name("x_extent_mm") + ": must be positive");
        if (!(z > 0))
            throw ConfigError(s.name("z_extent_mm") + ": must be positive");
        if (nx < 2)
            throw ConfigError(s.name("x_samples") + ": need at least 2");
        if (nz < 2)
            throw ConfigError(s.name("z_samples") + ": need at least 2");
        cfg.axis1 = {-z, z, nz};
        cfg.axis2 = {-x, x, nx};
    }
    else if (cfg.mode == Mode::elastic)
    {
        cfg.axis1 = parse_axis(s, "p_az");
        cfg.axis2 = parse_axis(s, "theta");
        for (real_type t : GridAxis::uniform("theta", "rad", cfg.axis2.min,
                                             cfg.axis2.max, cfg.axis2.samples)
                               .values)
        {
            if (t == 0)
            {
                throw ConfigError(s.name("theta_min")
                                  + ": theta grid hits the forward direction "
                                    "theta = 0 where the cross section "
                                    "diverges");
            }
        }
    }
    else
    {
        cfg.axis1 = parse_axis(s, "k_perp");
        cfg.axis2 = parse_axis(s, "k_z");
        if (cfg.axis1.min < 0)
            throw ConfigError(s.name("k_perp_min") + ": must be nonnegative");
        if (cfg.axis1.min == 0)
        {
            for (real_type kz : GridAxis::uniform("k_z", "a.u.", cfg.axis2.min,
                                                  cfg.axis2.max,
                                                  cfg.axis2.samples)
                                    .values)
            {
                if (kz == 0)
                {
                    throw ConfigError(s.name("k_z_min")
                                      + ": grid contains k = 0 where the "
                                        "emitted electron is undefined");
                }
            }
        }
    }
    s.finish(std::string{" for "} + to_cstring(cfg.mode) + " mode");
}

//---------------------------------------------------------------------------//
AtomModelInput parse_atom_model(Section s)
{
    AtomModelInput m;
    m.model = s.string("model");
    if (m.model == "yukawa")
    {
        json const& terms = s.get("terms");
        if (!terms.is_array())
            throw ConfigError(s.name("terms") + ": expected an array");
        for (size_type i = 0; i < terms.size(); ++i)
        {
            Section t{terms[i], s.name("terms") + "[" + std::to_string(i) + "]"};
            m.terms.push_back({t.number("weight"), t.number("alpha")});
            t.finish("");
        }
    }
    else if (m.model != "moliere")
    {
        throw ConfigError(s.name("model")
                          + ": expected 'moliere' or 'yukawa', got '" + m.model
                          + "'");
    }
    s.finish("");
    return m;
}

//---------------------------------------------------------------------------//
std::vector<real_type> parse_f_list(json const& v, std::string const& key)
{
    if (!v.is_array() || v.empty())
        throw ConfigError(key + ": expected a non-empty array of numbers");
    std::vector<real_type> result;
    for (auto const& item : v)
    {
        if (!item.is_number() || !(item.get<real_type>() > 0)
            || !std::isfinite(item.get<real_type>()))
        {
            throw ConfigError(key + ": entries must be positive numbers");
        }
        real_type f = item.get<real_type>();
        if (std::find(result.begin(), result.end(), f) != result.end())
            throw ConfigError(key + ": duplicate entry");
        result.push_back(f);
    }
    return result;
}

//---------------------------------------------------------------------------//
unsigned parse_workers(json const& v)
{
    if (v.is_string() && v.get<std::string>() == "auto")
        return 0;
    if (v.is_number_integer() && v.get<long long>() >= 1
        && v.get<long long>() <= 4096)
    {
        return static_cast<unsigned>(v.get<long long>());
    }
    throw ConfigError("workers: expected a positive integer or \"auto\"");
}

//---------------------------------------------------------------------------//
void check_name(std::string const& name)
{
    if (name.empty() || name.find_first_of("/\\") != std::string::npos
        || name == "." || name == "..")
    {
        throw ConfigError("name: must be a plain nonempty file stem, got '"
                          + name + "'");
    }
}

//---------------------------------------------------------------------------//
//! Build every physics object once so invariant violations surface now
void revalidate(RunConfig const& cfg)
{
    auto grating = cfg.grating_spec();
    auto beam = cfg.atom_beam();
    check_compatible(beam, grating);
    if (cfg.mode == Mode::diffraction)
        return;
    if (cfg.mode == Mode::elastic)
    {
        cfg.elastic_job();
        return;
    }
    if (beam.binding_energy().value() >= 0)
        throw ConfigError("beam.binding_energy_au: must be negative");
    for (real_type f : cfg.velocity_factors())
        cfg.ionization_job(f);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
char const* to_cstring(Mode m)
{
    switch (m)
    {
        case Mode::diffraction:
            return "diffraction";
        case Mode::elastic:
            return "elastic";
        case Mode::ionization:
            return "ionization";
        case Mode::rings:
            return "rings";
        case Mode::sweep:
            return "sweep";
    }
    return "";
}

//---------------------------------------------------------------------------//
Mode mode_from_string(std::string_view s)
{
    for (Mode m : {Mode::diffraction, Mode::elastic, Mode::ionization,
                   Mode::rings, Mode::sweep})
    {
        if (s == to_cstring(m))
            return m;
    }
    throw ConfigError("mode: unknown mode '" + std::string{s} + "'");
}

//---------------------------------------------------------------------------//
GratingSpec RunConfig::grating_spec() const
{
    try
    {
        return GratingSpec{mm_to_au(grating.a_mm),
                           mm_to_au(grating.b_mm),
                           mm_to_au(grating.d_mm),
                           grating.n_slits,
                           mm_to_au(grating.distance_mm)};
    }
    catch (DomainError const& e)
    {
        throw ConfigError(std::string{"grating: "} + e.what());
    }
}

//---------------------------------------------------------------------------//
AtomBeam RunConfig::atom_beam() const
{
    return AtomBeam{Momentum{beam.momentum},
                    Energy{beam.binding_energy},
                    beam.z_nucleus,
                    beam.n_electrons,
                    beam.mass};
}

//---------------------------------------------------------------------------//
Projectile RunConfig::projectile_at(std::optional<real_type> f) const
{
    if (!projectile)
        throw ConfigError("projectile: missing required key");
    ProjectileInput const& p = *projectile;
    Axis axis = mode == Mode::elastic ? Axis::x : Axis::z;

    real_type v = 0;
    SpeedKind kind = f ? SpeedKind::f : p.speed_kind;
    real_type value = f ? *f : p.speed;
    try
    {
        switch (kind)
        {
            case SpeedKind::none:
                throw ConfigError("projectile: no speed given (use one of "
                                  "velocity_au, f, energy_ev, "
                                  "energy_kev_per_u)");
            case SpeedKind::velocity_au:
                v = value;
                break;
            case SpeedKind::f:
                v = value * confluence_velocity(this->atom_beam());
                break;
            case SpeedKind::energy_ev:
                v = velocity_from_energy(ev_to_au(value), p.mass);
                break;
            case SpeedKind::energy_kev_per_u:
                v = velocity_from_kev_per_u(value);
                break;
        }
    }
    catch (DomainError const& e)
    {
        throw ConfigError(std::string{"projectile: "} + e.what());
    }
    return Projectile{p.charge, p.mass, v, axis};
}

//---------------------------------------------------------------------------//
ScreenedAtom RunConfig::screened_atom() const
{
    AtomModelInput m = atom_model.value_or(AtomModelInput{});
    if (m.model == "yukawa")
        return ScreenedAtom{beam.z_nucleus, m.terms};
    return ScreenedAtom::moliere(beam.z_nucleus);
}

//---------------------------------------------------------------------------//
IonizationJob RunConfig::ionization_job(std::optional<real_type> f) const
{
    return IonizationJob{this->atom_beam(),
                         this->projectile_at(f),
                         this->grating_spec(),
                         recoil,
                         axis2,
                         axis1};
}

//---------------------------------------------------------------------------//
ElasticJob RunConfig::elastic_job() const
{
    return ElasticJob{this->atom_beam(),
                      this->projectile_at(),
                      this->screened_atom(),
                      this->grating_spec(),
                      axis2,
                      axis1};
}

//---------------------------------------------------------------------------//
std::vector<real_type> RunConfig::velocity_factors() const
{
    if (!f_list.empty())
        return f_list;
    real_type v = this->projectile_at().velocity();
    return {v / confluence_velocity(this->atom_beam())};
}

//---------------------------------------------------------------------------//
RunConfig parse_config(std::string_view text, std::optional<Mode> expected_mode)
{
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ConfigError("configuration is not valid JSON");
    return parse_config_document(doc, expected_mode);
}

//---------------------------------------------------------------------------//
/*!
 * Parse and fully validate a run description.
 *
 * Which sections are accepted depends on the mode; a section that the mode
 * does not use is reported as an unknown key.
 */
RunConfig
parse_config_document(json const& doc, std::optional<Mode> expected_mode)
{
    Section top{doc, ""};
    RunConfig cfg;

    if (top.has("mode"))
    {
        cfg.mode = mode_from_string(top.string("mode"));
        if (expected_mode && *expected_mode != cfg.mode)
        {
            throw ConfigError(std::string{"mode: document is for '"}
                              + to_cstring(cfg.mode) + "' but '"
                              + to_cstring(*expected_mode) + "' was requested");
        }
    }
    else if (expected_mode)
    {
        cfg.mode = *expected_mode;
    }
    else
    {
        throw ConfigError("mode: missing required key");
    }

    cfg.name = top.has("name") ? top.string("name") : to_cstring(cfg.mode);
    check_name(cfg.name);

    cfg.grating = parse_grating(top.child("grating"));
    cfg.beam = parse_beam(top.child("beam"));
    if (cfg.mode != Mode::diffraction)
        cfg.projectile = parse_projectile(top.child("projectile"), cfg.mode);
    if (uses_ionization_grid(cfg.mode) && top.has("recoil"))
        cfg.recoil = parse_recoil(top.child("recoil"));
    parse_grid(top.child("grid"), cfg);

    if (cfg.mode == Mode::sweep
        || (cfg.mode == Mode::rings && top.has("f_list")))
    {
        cfg.f_list = parse_f_list(top.get("f_list"), "f_list");
    }
    if (cfg.mode == Mode::rings)
    {
        bool has_speed = cfg.projectile->speed_kind != SpeedKind::none;
        if (has_speed == !cfg.f_list.empty())
        {
            throw ConfigError("f_list: rings mode needs either f_list or a "
                              "projectile speed, not both");
        }
    }
    if (cfg.mode == Mode::elastic && top.has("atom_model"))
        cfg.atom_model = parse_atom_model(top.child("atom_model"));
    if (top.has("workers"))
        cfg.workers = parse_workers(top.get("workers"));

    top.finish(std::string{" for "} + to_cstring(cfg.mode) + " mode");
    revalidate(cfg);
    return cfg;
}

//---------------------------------------------------------------------------//
/*!
 * Canonical echo of a configuration.
 *
 * Defaults are written out explicitly so the echo alone reproduces the run.
 * Parsing the echo and echoing again yields the same document.
 */
nlohmann::json to_json(RunConfig const& cfg)
{
    json out = json::object();
    out["mode"] = to_cstring(cfg.mode);
    out["name"] = cfg.name;
    out["grating"] = {{"a_mm", cfg.grating.a_mm},
                      {"b_mm", cfg.grating.b_mm},
                      {"d_mm", cfg.grating.d_mm},
                      {"n_slits", cfg.grating.n_slits},
                      {"distance_mm", cfg.grating.distance_mm}};
    out["beam"] = {{"momentum_au", cfg.beam.momentum},
                   {"binding_energy_au", cfg.beam.binding_energy},
                   {"z_nucleus", cfg.beam.z_nucleus},
                   {"n_electrons", cfg.beam.n_electrons},
                   {"mass_au", cfg.beam.mass}};

    if (cfg.projectile)
    {
        ProjectileInput const& p = *cfg.projectile;
        json proj = {{"species", p.species}};
        if (p.species == "ion")
        {
            proj["charge"] = p.charge;
            proj["mass_au"] = p.mass;
        }
        if (p.speed_kind != SpeedKind::none)
            proj[speed_key(p.speed_kind)] = p.speed;
        out["projectile"] = proj;
    }
    if (uses_ionization_grid(cfg.mode))
    {
        out["recoil"] = {{"p_r_z", cfg.recoil.p_r_z.value()},
                         {"q_x", cfg.recoil.q_x.value()},
                         {"q_y", cfg.recoil.q_y.value()}};
    }

    auto axis = [](json& g, std::string const& stem, AxisSpec const& a) {
        g[stem + "_min"] = a.min;
        g[stem + "_max"] = a.max;
        g[stem + "_samples"] = a.samples;
    };
    json grid = json::object();
    switch (cfg.mode)
    {
        case Mode::diffraction:
            grid["x_extent_mm"] = cfg.axis2.max;
            grid["z_extent_mm"] = cfg.axis1.max;
            grid["x_samples"] = cfg.axis2.samples;
            grid["z_samples"] = cfg.axis1.samples;
            break;
        case Mode::elastic:
            axis(grid, "p_az", cfg.axis1);
            axis(grid, "theta", cfg.axis2);
            break;
        default:
            axis(grid, "k_perp", cfg.axis1);
            axis(grid, "k_z", cfg.axis2);
    }
    out["grid"] = grid;

    if (!cfg.f_list.empty())
        out["f_list"] = cfg.f_list;
    if (cfg.mode == Mode::elastic)
    {
        AtomModelInput m = cfg.atom_model.value_or(AtomModelInput{});
        json model = {{"model", m.model}};
        if (m.model == "yukawa")
        {
            json terms = json::array();
            for (auto const& t : m.terms)
                terms.push_back({{"weight", t.weight}, {"alpha", t.alpha}});
            model["terms"] = terms;
        }
        out["atom_model"] = model;
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
