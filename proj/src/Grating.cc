//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Grating.cc
//---------------------------------------------------------------------------//
#include "qgrating/Grating.hh"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
//---------------------------------------------------------------------------//
[[noreturn]] void fail(std::string const& what)
{
    throw ConfigError(what);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
GratingSpec::GratingSpec(Length slit_height,
                         Length slit_width,
                         Length period,
                         int n_slits,
                         Length distance)
    : slit_height_{slit_height}
    , slit_width_{slit_width}
    , period_{period}
    , n_slits_{n_slits}
    , distance_{distance}
{
    if (!(slit_height_.value() > 0))
        fail("grating: slit height a must be positive");
    if (!(slit_width_.value() > 0))
        fail("grating: slit width b must be positive");
    if (!(period_ > slit_height_))
        fail("grating: period d must exceed slit height a (slits overlap)");
    if (n_slits_ < 1)
        fail("grating: number of slits must be at least 1");

    real_type extent = std::max(n_slits_ * period_.value(),
                                slit_width_.value());
    if (!(distance_.value() > far_field_margin * extent))
    {
        std::ostringstream os;
        os << "grating: far-field condition violated, need D > "
           << far_field_margin << " * max(N0*d, b) = "
           << au_to_mm(Length{far_field_margin * extent}) << " mm but D = "
           << au_to_mm(distance_) << " mm";
        fail(os.str());
    }
}

//---------------------------------------------------------------------------//
AtomBeam::AtomBeam(Momentum momentum,
                   Energy binding_energy,
                   int z_nucleus,
                   int n_electrons,
                   real_type mass)
    : momentum_{momentum}
    , binding_{binding_energy}
    , z_nucleus_{z_nucleus}
    , n_electrons_{n_electrons}
    , mass_{mass}
{
    if (!(momentum_.value() > 0))
        fail("beam: momentum must be positive");
    if (!(binding_.value() < 0))
        fail("beam: binding energy must be negative");
    if (z_nucleus_ < 1)
        fail("beam: nuclear charge must be positive");
    if (n_electrons_ < 1)
        fail("beam: electron count must be positive");
    if (!(mass_ > 0))
        fail("beam: mass must be positive");
}

//---------------------------------------------------------------------------//
/*!
 * Check that the atom wavelength 1/P is at least ten times smaller than the
 * smallest slit dimension.
 */
void check_compatible(AtomBeam const& beam, GratingSpec const& grating)
{
    real_type wavelength = 1 / beam.momentum().value();
    real_type smallest = std::min(grating.slit_height().value(),
                                  grating.slit_width().value());
    if (!(10 * wavelength < smallest))
    {
        fail("beam: wavelength 1/P is not much smaller than min(a, b)");
    }
}

//---------------------------------------------------------------------------//
Momentum window_half_width(Length slit,
                           AtomBeam const& beam,
                           GratingSpec const& grating)
{
    return Momentum{beam.momentum().value() * slit.value()
                    / (2 * grating.distance().value())};
}

//---------------------------------------------------------------------------//
/*!
 * Momentum window induced by a slit of size alpha.
 *
 * The boundary is tested with exact equality and yields pi/2.
 */
real_type window(real_type eta, real_type half_width)
{
    real_type abs_eta = std::fabs(eta);
    if (abs_eta < half_width)
        return constants::pi;
    if (abs_eta == half_width)
        return constants::pi / 2;
    return 0;
}

//---------------------------------------------------------------------------//
real_type window(Momentum eta,
                 Length slit,
                 AtomBeam const& beam,
                 GratingSpec const& grating)
{
    return window(eta.value(),
                  window_half_width(slit, beam, grating).value());
}

//---------------------------------------------------------------------------//
/*!
 * Evaluate sin(N u) / sin(u).
 *
 * The argument is reduced to u = m pi + delta so that the removable
 * singularities at integer multiples of pi evaluate to their limit
 * \f$ (-1)^{m(N-1)} N \f$. The sign is kept; intensities use the square.
 */
real_type grating_factor(real_type u, int n_slits)
{
    real_type m = std::nearbyint(u / constants::pi);
    real_type delta = u - m * constants::pi;
    bool odd = std::fmod(std::fabs(m) * (n_slits - 1), 2.0) == 1.0;
    real_type sign = odd ? -1 : 1;
    if (delta == 0)
        return sign * n_slits;
    return sign * std::sin(n_slits * delta) / std::sin(delta);
}

//---------------------------------------------------------------------------//
real_type slit_envelope(real_type u)
{
    if (std::fabs(u) < 1e-4)
    {
        real_type u2 = u * u;
        return 1 - u2 / 6 + u2 * u2 / 120;
    }
    return std::sin(u) / u;
}

//---------------------------------------------------------------------------//
//! Spot size \f$ \Delta_z \simeq D / (P a) \f$
Length spot_size_z(AtomBeam const& beam, GratingSpec const& grating)
{
    return Length{grating.distance().value()
                  / (beam.momentum().value() * grating.slit_height().value())};
}

//---------------------------------------------------------------------------//
MomentumSpread
momentum_uncertainty(AtomBeam const& beam, GratingSpec const& grating)
{
    real_type p_over_d = beam.momentum().value() / grating.distance().value();
    return {Momentum{p_over_d * grating.slit_width().value()},
            Momentum{p_over_d * grating.slit_height().value()}};
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
