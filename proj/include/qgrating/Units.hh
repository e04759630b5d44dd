//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Units.hh
//! Laboratory-unit conversions into Hartree atomic units (CODATA 2018).
//---------------------------------------------------------------------------//
#pragma once

#include <numbers>

#include "Types.hh"

namespace qgrating
{
namespace constants
{
//---------------------------------------------------------------------------//
//!@{
//! \name CODATA 2018 recommended values
inline constexpr real_type bohr_radius_m = 5.29177210903e-11;
inline constexpr real_type hartree_ev = 27.211386245988;
inline constexpr real_type proton_mass_au = 1836.15267343;
inline constexpr real_type atomic_mass_unit_au = 1822.888486209;
//!@}

inline constexpr real_type pi = std::numbers::pi_v<real_type>;

//! Identifier written into output metadata
inline constexpr char const version[] = "CODATA-2018";

//---------------------------------------------------------------------------//
}  // namespace constants

// Convert a nonnegative length in millimeters
Length mm_to_au(real_type mm);

// Convert a length back to millimeters
real_type au_to_mm(Length length);

// Convert an energy in electronvolts
Energy ev_to_au(real_type ev);

// Convert an energy back to electronvolts
real_type au_to_ev(Energy energy);

// Nonrelativistic electron momentum for a kinetic energy
Momentum electron_momentum_from_energy(Energy kinetic);

// Nonrelativistic speed of an ion with a given kinetic energy per nucleon
real_type velocity_from_kev_per_u(real_type kev_per_u);

// Nonrelativistic speed of a particle of given mass and kinetic energy
real_type velocity_from_energy(Energy kinetic, real_type mass);

//---------------------------------------------------------------------------//
}  // namespace qgrating
