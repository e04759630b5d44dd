//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Kinematics.cc
//---------------------------------------------------------------------------//
#include "qgrating/Kinematics.hh"

#include <cmath>

namespace qgrating
{
namespace
{
//---------------------------------------------------------------------------//
struct RingCoefficients
{
    real_type base;  // v^2 - 2|eps_i|
    real_type step;  // 2 v P d / D
    real_type half_width;  // v P a / D
};

RingCoefficients ring_coefficients(AtomBeam const& beam,
                                   Projectile const& proj,
                                   GratingSpec const& grating)
{
    real_type v = proj.velocity();
    real_type p = beam.momentum().value();
    real_type dist = grating.distance().value();
    real_type abs_eps = -beam.binding_energy().value();
    return {v * v - 2 * abs_eps,
            2 * v * p * grating.period().value() / dist,
            v * p * grating.slit_height().value() / dist};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Projectile::Projectile(int charge, real_type mass, real_type velocity,
                       Axis incident)
    : charge_{charge}, mass_{mass}, velocity_{velocity}, incident_{incident}
{
    if (!(mass_ > 0))
        throw ConfigError("projectile: mass must be positive");
    if (!(velocity_ > 0))
        throw ConfigError("projectile: velocity must be positive");
}

//---------------------------------------------------------------------------//
Momentum q_min(Momentum k, AtomBeam const& beam, Projectile const& proj)
{
    if (!(k.value() >= 0))
        throw DomainError("q_min: electron momentum must be nonnegative");
    real_type k2 = k.value() * k.value();
    return Momentum{(0.5 * k2 - beam.binding_energy().value())
                    / proj.velocity()};
}

//---------------------------------------------------------------------------//
real_type confluence_velocity(AtomBeam const& beam)
{
    return std::sqrt(-2 * beam.binding_energy().value());
}

//---------------------------------------------------------------------------//
/*!
 * Ring bounds
 * \f$ B^\pm = v^2 - 2|\varepsilon_i| + 2 v P (d/D) n \pm v P (a/D) \f$.
 */
RingBounds ring_bounds(int n,
                       AtomBeam const& beam,
                       Projectile const& proj,
                       GratingSpec const& grating)
{
    auto c = ring_coefficients(beam, proj, grating);
    real_type center = c.base + c.step * n;
    return {n, center - c.half_width, center + c.half_width};
}

//---------------------------------------------------------------------------//
/*!
 * All orders whose annulus is non-empty and reaches into the band of radii
 * [r_near, r_far] around the ring center (v, 0).
 */
std::vector<RingBounds> visible_rings(AtomBeam const& beam,
                                      Projectile const& proj,
                                      GratingSpec const& grating,
                                      real_type r_near,
                                      real_type r_far)
{
    auto c = ring_coefficients(beam, proj, grating);
    real_type lo_sq = r_near * r_near;
    real_type hi_sq = r_far * r_far;

    // B+ > max(lo_sq, 0) and B- <= hi_sq
    auto n_lo = static_cast<int>(
        std::floor((lo_sq - c.base - c.half_width) / c.step));
    auto n_hi = static_cast<int>(
        std::ceil((hi_sq - c.base + c.half_width) / c.step));

    std::vector<RingBounds> result;
    for (int n = n_lo - 1; n <= n_hi + 1; ++n)
    {
        RingBounds rb = ring_bounds(n, beam, proj, grating);
        if (rb.empty() || rb.b_plus < lo_sq || rb.b_minus > hi_sq)
            continue;
        result.push_back(rb);
    }
    return result;
}

//---------------------------------------------------------------------------//
Momentum window_argument(EmissionPoint point,
                         RecoilSetting const& recoil,
                         int n,
                         AtomBeam const& beam,
                         Projectile const& proj,
                         GratingSpec const& grating)
{
    if (proj.incident_axis() != Axis::z)
        throw DomainError("window argument requires incidence along z");
    real_type kz = point.k_z.value();
    real_type kp = point.k_perp.value();
    Momentum k{std::sqrt(kz * kz + kp * kp)};
    real_type shift = beam.momentum().value() * grating.period().value() * n
                      / grating.distance().value();
    return Momentum{q_min(k, beam, proj).value() - recoil.p_r_z.value() - kz
                    - shift};
}

//---------------------------------------------------------------------------//
/*!
 * q = p_i - p_f for an elastic deflection by theta in the x-z plane, with
 * incidence along +x and |p_f| = |p_i|.
 */
Real3 elastic_q(real_type theta, Projectile const& proj)
{
    if (proj.incident_axis() != Axis::x)
        throw DomainError("elastic geometry requires incidence along x");
    real_type p = proj.momentum().value();
    real_type half_sin = std::sin(theta / 2);
    return {2 * p * half_sin * half_sin, 0, -p * std::sin(theta)};
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
