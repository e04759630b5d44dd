//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Grating.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Types.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
/*!
 * Macroscopic transmission grating in the x-z plane.
 *
 * The grating has \c n_slits rectangular slits stacked along z with period
 * \c period. Each slit is \c slit_height long in z and \c slit_width wide in
 * x. The atom beam crosses the projectile beam at \c distance downstream
 * (along +y).
 *
 * Construction enforces the Fraunhofer regime with a factor of ten margin:
 * \f$ D > 10 \max\{N_0 d, b\} \f$.
 */
class GratingSpec
{
  public:
    // Construct and validate
    GratingSpec(Length slit_height,
                Length slit_width,
                Length period,
                int n_slits,
                Length distance);

    //! Slit dimension along z (a)
    Length slit_height() const { return slit_height_; }
    //! Slit dimension along x (b)
    Length slit_width() const { return slit_width_; }
    //! Grating period along z (d)
    Length period() const { return period_; }
    //! Number of slits (N0)
    int n_slits() const { return n_slits_; }
    //! Distance from grating to the interaction volume (D)
    Length distance() const { return distance_; }

    //! Far-field safety factor applied at construction
    static constexpr real_type far_field_margin = 10;

  private:
    Length slit_height_;
    Length slit_width_;
    Length period_;
    int n_slits_;
    Length distance_;
};

//---------------------------------------------------------------------------//
/*!
 * Target atom incident on the grating along +y.
 *
 * The internal state is a single active electron bound by \c binding_energy
 * (negative). The mass only enters validity checks.
 */
class AtomBeam
{
  public:
    // Construct and validate
    AtomBeam(Momentum momentum,
             Energy binding_energy,
             int z_nucleus,
             int n_electrons,
             real_type mass);

    //! Center-of-mass momentum before the grating
    Momentum momentum() const { return momentum_; }
    //! Bound-state energy of the active electron (< 0)
    Energy binding_energy() const { return binding_; }
    //! Nuclear charge
    int z_nucleus() const { return z_nucleus_; }
    //! Number of bound electrons
    int n_electrons() const { return n_electrons_; }
    //! Atomic mass [m_e]
    real_type mass() const { return mass_; }

  private:
    Momentum momentum_;
    Energy binding_;
    int z_nucleus_;
    int n_electrons_;
    real_type mass_;
};

//---------------------------------------------------------------------------//
//! Momentum acceptance of the grating along x and z
struct MomentumSpread
{
    Momentum x;
    Momentum z;
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// Require the de Broglie wavelength to be well below the slit size
void check_compatible(AtomBeam const& beam, GratingSpec const& grating);

// Half-width P*alpha/(2D) of the momentum window for a slit dimension
Momentum window_half_width(Length slit,
                           AtomBeam const& beam,
                           GratingSpec const& grating);

// Three-valued momentum window (pi, pi/2, 0)
real_type window(Momentum eta,
                 Length slit,
                 AtomBeam const& beam,
                 GratingSpec const& grating);

// Same, with a precomputed half-width
real_type window(real_type eta, real_type half_width);

// Multi-slit interference ratio sin(N u)/sin(u)
real_type grating_factor(real_type u, int n_slits);

// Single-slit envelope sin(u)/u
real_type slit_envelope(real_type u);

// Localization of a single atom along z at the interaction volume
Length spot_size_z(AtomBeam const& beam, GratingSpec const& grating);

// Momentum-balance uncertainties (P b / D, P a / D)
MomentumSpread
momentum_uncertainty(AtomBeam const& beam, GratingSpec const& grating);

//---------------------------------------------------------------------------//
}  // namespace qgrating
