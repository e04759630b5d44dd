//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Units.cc
//---------------------------------------------------------------------------//
#include "qgrating/Units.hh"

#include <cmath>
#include <string>

namespace qgrating
{
namespace
{
constexpr real_type meters_per_mm = 1e-3;
}

//---------------------------------------------------------------------------//
Length mm_to_au(real_type mm)
{
    if (!(mm >= 0))
    {
        throw DomainError("length must be nonnegative, got "
                          + std::to_string(mm) + " mm");
    }
    return Length{mm * meters_per_mm / constants::bohr_radius_m};
}

//---------------------------------------------------------------------------//
real_type au_to_mm(Length length)
{
    return length.value() * constants::bohr_radius_m / meters_per_mm;
}

//---------------------------------------------------------------------------//
Energy ev_to_au(real_type ev)
{
    return Energy{ev / constants::hartree_ev};
}

//---------------------------------------------------------------------------//
real_type au_to_ev(Energy energy)
{
    return energy.value() * constants::hartree_ev;
}

//---------------------------------------------------------------------------//
/*!
 * Electron momentum \f$ p = \sqrt{2E} \f$ with \f$ m_e = 1 \f$.
 */
Momentum electron_momentum_from_energy(Energy kinetic)
{
    if (!(kinetic.value() >= 0))
    {
        throw DomainError("kinetic energy must be nonnegative");
    }
    return Momentum{std::sqrt(2 * kinetic.value())};
}

//---------------------------------------------------------------------------//
real_type velocity_from_kev_per_u(real_type kev_per_u)
{
    if (!(kev_per_u >= 0))
    {
        throw DomainError("energy per nucleon must be nonnegative");
    }
    Energy per_u = ev_to_au(kev_per_u * 1e3);
    return std::sqrt(2 * per_u.value() / constants::atomic_mass_unit_au);
}

//---------------------------------------------------------------------------//
real_type velocity_from_energy(Energy kinetic, real_type mass)
{
    if (!(kinetic.value() >= 0) || !(mass > 0))
    {
        throw DomainError("need nonnegative energy and positive mass");
    }
    return std::sqrt(2 * kinetic.value() / mass);
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
