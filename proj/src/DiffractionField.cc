//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file DiffractionField.cc
//---------------------------------------------------------------------------//
#include "qgrating/DiffractionField.hh"

#include <algorithm>

#include "qgrating/Parallel.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
/*!
 * Squared center-of-mass amplitude of the diffracted atom.
 *
 * The amplitude is the product of the two single-slit envelopes and the
 * N-slit interference ratio, each evaluated at the paraxial phase
 * \f$ P \alpha X / 2D \f$. The internal-state factor and the overall
 * normalization are dropped, so the value at the origin is \f$ N_0^2 \f$.
 */
real_type intensity_at(TransversePoint p,
                       AtomBeam const& beam,
                       GratingSpec const& grating)
{
    real_type scale = beam.momentum().value()
                      / (2 * grating.distance().value());
    real_type env_x = slit_envelope(scale * grating.slit_width().value()
                                    * p.x.value());
    real_type env_z = slit_envelope(scale * grating.slit_height().value()
                                    * p.z.value());
    real_type gf = grating_factor(scale * grating.period().value()
                                      * p.z.value(),
                                  grating.n_slits());
    real_type amp = env_x * env_z * gf;
    return amp * amp;
}

//---------------------------------------------------------------------------//
FieldGrid field_grid(AtomBeam const& beam,
                     GratingSpec const& grating,
                     TransversePoint extent,
                     size_type x_samples,
                     size_type z_samples,
                     unsigned workers)
{
    if (!(extent.x.value() > 0) || !(extent.z.value() > 0))
        throw ConfigError("diffraction grid extent must be positive");

    FieldGrid result;
    result.x_axis = GridAxis::uniform(
        "x", "bohr", -extent.x.value(), extent.x.value(), x_samples);
    result.z_axis = GridAxis::uniform(
        "z", "bohr", -extent.z.value(), extent.z.value(), z_samples);

    auto const& xs = result.x_axis.values;
    auto const& zs = result.z_axis.values;
    result.intensity = evaluate_rows(
        zs.size(), xs.size(), workers, [&](size_type i, auto row) {
            for (size_type j = 0; j < xs.size(); ++j)
            {
                row[j] = intensity_at({Length{xs[j]}, Length{zs[i]}},
                                      beam,
                                      grating);
            }
        });

    auto& data = result.intensity.data();
    real_type peak = *std::max_element(data.begin(), data.end());
    result.peak = peak;
    if (peak > 0)
    {
        for (auto& v : data)
            v /= peak;
        result.normalized = true;
    }
    return result;
}

//---------------------------------------------------------------------------//
SpectrumGrid to_spectrum_grid(FieldGrid const& field)
{
    SpectrumGrid result;
    result.axis1 = field.z_axis;
    result.axis2 = field.x_axis;
    result.values = field.intensity;
    result.normalized = field.normalized;
    result.peak = field.peak;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
