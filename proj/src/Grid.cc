//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Grid.cc
//---------------------------------------------------------------------------//
#include "qgrating/Grid.hh"

#include <algorithm>

namespace qgrating
{
//---------------------------------------------------------------------------//
GridAxis GridAxis::uniform(std::string label,
                           std::string unit,
                           real_type lo,
                           real_type hi,
                           size_type samples)
{
    if (samples < 2)
        throw ConfigError("grid axis '" + label + "' needs at least 2 samples");
    if (!(hi > lo))
        throw ConfigError("grid axis '" + label + "' has an empty extent");

    GridAxis result{std::move(label), std::move(unit), {}};
    result.values.resize(samples);
    // Offsets from the midpoint are computed from an odd integer ratio so
    // that symmetric extents give exactly antisymmetric samples
    real_type mid = lo / 2 + hi / 2;
    real_type half = hi / 2 - lo / 2;
    auto last = static_cast<real_type>(samples - 1);
    for (size_type i = 0; i < samples; ++i)
    {
        real_type t = (2 * static_cast<real_type>(i) - last) / last;
        result.values[i] = mid + half * t;
    }
    result.values.front() = lo;
    result.values.back() = hi;
    return result;
}

//---------------------------------------------------------------------------//
void normalize_to_peak(SpectrumGrid& grid)
{
    auto& data = grid.values.data();
    real_type peak = data.empty() ? 0
                                  : *std::max_element(data.begin(), data.end());
    grid.peak = peak;
    if (!(peak > 0))
    {
        grid.normalized = false;
        return;
    }
    for (auto& v : data)
    {
        v /= peak;
    }
    grid.normalized = true;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
