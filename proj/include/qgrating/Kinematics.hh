//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Kinematics.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <vector>

#include "Grating.hh"
#include "Types.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
enum class Axis
{
    x,
    z
};

//---------------------------------------------------------------------------//
/*!
 * Structureless charged projectile moving along a lab axis.
 */
class Projectile
{
  public:
    Projectile(int charge, real_type mass, real_type velocity, Axis incident);

    int charge() const { return charge_; }
    real_type mass() const { return mass_; }
    real_type velocity() const { return velocity_; }
    Axis incident_axis() const { return incident_; }

    //! Magnitude of the initial momentum M v
    Momentum momentum() const { return Momentum{mass_ * velocity_}; }

  private:
    int charge_;
    real_type mass_;
    real_type velocity_;
    Axis incident_;
};

//---------------------------------------------------------------------------//
//! Emitted-electron momentum in cylindrical components about the beam axis
struct EmissionPoint
{
    Momentum k_z;
    Momentum k_perp;
};

//---------------------------------------------------------------------------//
//! Detection settings for the recoil ion and transverse momentum transfer
struct RecoilSetting
{
    Momentum p_r_z{0};
    Momentum q_x{0};
    Momentum q_y{0};
};

//---------------------------------------------------------------------------//
/*!
 * Annulus of diffraction order n in the emitted-electron momentum plane.
 *
 * The region is \f$ B^- \le (k_z - v)^2 + k_\perp^2 \le B^+ \f$ (squared
 * momenta, a.u.). It is empty when \f$ B^+ \le 0 \f$ and a filled disk when
 * \f$ B^- \le 0 < B^+ \f$.
 */
struct RingBounds
{
    int order{0};
    real_type b_minus{0};
    real_type b_plus{0};

    bool empty() const { return !(b_plus > 0); }
    bool is_disk() const { return !empty() && b_minus <= 0; }
    real_type inner_radius() const
    {
        return b_minus > 0 ? std::sqrt(b_minus) : 0;
    }
    real_type outer_radius() const
    {
        return b_plus > 0 ? std::sqrt(b_plus) : 0;
    }
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// Minimum longitudinal momentum transfer (k^2/2 - eps_i)/v
Momentum q_min(Momentum k, AtomBeam const& beam, Projectile const& proj);

// Velocity sqrt(2|eps_i|) at which binary-encounter and ECC emission coincide
real_type confluence_velocity(AtomBeam const& beam);

// Analytic annulus of diffraction order n
RingBounds ring_bounds(int n,
                       AtomBeam const& beam,
                       Projectile const& proj,
                       GratingSpec const& grating);

// Non-empty annuli overlapping the radial band [r_near, r_far]
std::vector<RingBounds> visible_rings(AtomBeam const& beam,
                                      Projectile const& proj,
                                      GratingSpec const& grating,
                                      real_type r_near,
                                      real_type r_far);

// Window argument B_n = q_min - P_Rz - k_z - P d n / D
Momentum window_argument(EmissionPoint point,
                         RecoilSetting const& recoil,
                         int n,
                         AtomBeam const& beam,
                         Projectile const& proj,
                         GratingSpec const& grating);

// Momentum transfer for elastic scattering by theta in the x-z plane
Real3 elastic_q(real_type theta, Projectile const& proj);

//---------------------------------------------------------------------------//
}  // namespace qgrating
