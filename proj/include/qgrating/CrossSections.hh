//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/CrossSections.hh
//---------------------------------------------------------------------------//
#pragma once

#include "AtomicStructure.hh"
#include "Grating.hh"
#include "Grid.hh"
#include "Kinematics.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! Uniform sampling of one grid dimension
struct AxisSpec
{
    real_type min{0};
    real_type max{0};
    size_type samples{0};
};

//---------------------------------------------------------------------------//
/*!
 * Ionization of the diffracted atom by a fast ion moving along z.
 *
 * The spectrum is sampled on (k_perp, k_z) with the recoil and transverse
 * momentum transfer fixed by \c recoil.
 */
struct IonizationJob
{
    AtomBeam beam;
    Projectile proj;
    GratingSpec grating;
    RecoilSetting recoil;
    AxisSpec k_z;
    AxisSpec k_perp;
};

//---------------------------------------------------------------------------//
/*!
 * Elastic electron scattering on the diffracted atom, incident along x.
 *
 * The map is sampled on (P_az_f, theta) where theta is the scattering angle
 * in the x-z plane and P_az_f the final z-momentum of the atom.
 */
struct ElasticJob
{
    AtomBeam beam;
    Projectile proj;
    ScreenedAtom atom;
    GratingSpec grating;
    AxisSpec theta;
    AxisSpec p_az;
};

//---------------------------------------------------------------------------//
// IONIZATION
//---------------------------------------------------------------------------//

// Sum over diffraction orders of the squared window at an emission point
real_type ionization_window_sum(EmissionPoint point, IonizationJob const& job);

// Reduced fully differential ionization cross section (relative units)
real_type ionization_point(EmissionPoint point, IonizationJob const& job);

// Peak-normalized ionization spectrum on (k_perp, k_z)
SpectrumGrid ionization_grid(IonizationJob const& job, unsigned workers = 1);

//---------------------------------------------------------------------------//
// ELASTIC
//---------------------------------------------------------------------------//

// Elastic cross section differential in theta and P_az_f (relative units)
real_type elastic_point(real_type theta, Momentum p_az_f, ElasticJob const& job);

// Peak-normalized elastic map on (P_az_f, theta)
SpectrumGrid elastic_grid(ElasticJob const& job, unsigned workers = 1);

//---------------------------------------------------------------------------//
}  // namespace qgrating
