//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/DiffractionField.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Grating.hh"
#include "Grid.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! Point in the transverse plane at the interaction volume
struct TransversePoint
{
    Length x;
    Length z;
};

//---------------------------------------------------------------------------//
//! Center-of-mass probability density sampled on the transverse plane
struct FieldGrid
{
    GridAxis x_axis;
    GridAxis z_axis;
    //! Rows follow z, columns follow x
    Matrix intensity;
    bool normalized{false};
    //! Maximum intensity before normalization
    real_type peak{0};
};

// Relative Fraunhofer intensity of the diffracted atom at a point
real_type intensity_at(TransversePoint p,
                       AtomBeam const& beam,
                       GratingSpec const& grating);

// Peak-normalized intensity on a symmetric uniform grid
FieldGrid field_grid(AtomBeam const& beam,
                     GratingSpec const& grating,
                     TransversePoint extent,
                     size_type x_samples,
                     size_type z_samples,
                     unsigned workers = 1);

// Repackage as a generic spectrum grid for serialization
SpectrumGrid to_spectrum_grid(FieldGrid const& field);

//---------------------------------------------------------------------------//
}  // namespace qgrating
