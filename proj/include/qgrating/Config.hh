//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Config.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "CrossSections.hh"
#include "DiffractionField.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
enum class Mode
{
    diffraction,
    elastic,
    ionization,
    rings,
    sweep
};

char const* to_cstring(Mode m);
Mode mode_from_string(std::string_view s);

//---------------------------------------------------------------------------//
//! Grating geometry as entered (millimeters)
struct GratingInput
{
    real_type a_mm{0};
    real_type b_mm{0};
    real_type d_mm{0};
    int n_slits{0};
    real_type distance_mm{0};
};

//! Target atom as entered (atomic units)
struct BeamInput
{
    real_type momentum{0};
    real_type binding_energy{0};
    int z_nucleus{0};
    int n_electrons{0};
    real_type mass{0};
};

//! How the projectile speed was specified
enum class SpeedKind
{
    none,
    velocity_au,
    f,
    energy_ev,
    energy_kev_per_u
};

//! Projectile as entered
struct ProjectileInput
{
    std::string species;  //!< electron, proton or ion
    int charge{0};
    real_type mass{0};
    SpeedKind speed_kind{SpeedKind::none};
    real_type speed{0};
};

//! Elastic screening model as entered
struct AtomModelInput
{
    std::string model{"moliere"};
    std::vector<YukawaTerm> terms;
};

//---------------------------------------------------------------------------//
/*!
 * Validated run description.
 *
 * Inputs are stored as entered so that \c to_json reproduces a document that
 * parses back to the same configuration. Physics objects are rebuilt on
 * demand; all of them were constructed once during parsing, so the builders
 * do not throw for a parsed config.
 */
struct RunConfig
{
    Mode mode{Mode::ionization};
    std::string name;
    GratingInput grating;
    BeamInput beam;
    std::optional<ProjectileInput> projectile;
    RecoilSetting recoil;
    AxisSpec axis1;  //!< Rows: z (diffraction), P_az_f, or k_perp
    AxisSpec axis2;  //!< Columns: x (diffraction), theta, or k_z
    std::vector<real_type> f_list;
    std::optional<AtomModelInput> atom_model;
    unsigned workers{0};  //!< Zero requests one worker per hardware thread

    GratingSpec grating_spec() const;
    AtomBeam atom_beam() const;
    // Projectile at the configured speed, or at f * v0 when f is given
    Projectile projectile_at(std::optional<real_type> f = {}) const;
    ScreenedAtom screened_atom() const;
    IonizationJob ionization_job(std::optional<real_type> f = {}) const;
    ElasticJob elastic_job() const;
    //! Velocity factors to run: the sweep list, or the single configured one
    std::vector<real_type> velocity_factors() const;
};

//---------------------------------------------------------------------------//
// Parse and validate a JSON configuration document
RunConfig parse_config(std::string_view text,
                       std::optional<Mode> expected_mode = {});

// Parse an already-decoded document
RunConfig parse_config_document(nlohmann::json const& doc,
                                std::optional<Mode> expected_mode = {});

// Canonical echo of the inputs (worker count excluded)
nlohmann::json to_json(RunConfig const& config);

//---------------------------------------------------------------------------//
}  // namespace qgrating
