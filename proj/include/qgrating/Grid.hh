//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Grid.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "Types.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! Dense row-major matrix of reals
class Matrix
{
  public:
    Matrix() = default;
    Matrix(size_type rows, size_type cols)
        : rows_{rows}, cols_{cols}, data_(rows * cols, real_type{0})
    {
    }

    size_type rows() const { return rows_; }
    size_type cols() const { return cols_; }

    real_type& operator()(size_type i, size_type j)
    {
        return data_[i * cols_ + j];
    }
    real_type operator()(size_type i, size_type j) const
    {
        return data_[i * cols_ + j];
    }

    std::span<real_type> row(size_type i)
    {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<real_type const> row(size_type i) const
    {
        return {data_.data() + i * cols_, cols_};
    }

    std::vector<real_type>& data() { return data_; }
    std::vector<real_type> const& data() const { return data_; }

    bool operator==(Matrix const&) const = default;

  private:
    size_type rows_{0};
    size_type cols_{0};
    std::vector<real_type> data_;
};

//---------------------------------------------------------------------------//
//! Labeled sample positions along one grid dimension
struct GridAxis
{
    std::string label;
    std::string unit;
    std::vector<real_type> values;

    // Uniform samples including both end points
    static GridAxis
    uniform(std::string label, std::string unit, real_type lo, real_type hi,
            size_type samples);

    //! Distance between adjacent samples (uniform axes)
    real_type spacing() const
    {
        return values.size() < 2 ? 0 : values[1] - values[0];
    }
};

//---------------------------------------------------------------------------//
/*!
 * Two-dimensional observable sampled on a rectangular grid.
 *
 * Rows follow \c axis1 and columns follow \c axis2. When \c normalized is
 * set the values were divided by \c peak so that the maximum is one.
 */
struct SpectrumGrid
{
    GridAxis axis1;
    GridAxis axis2;
    Matrix values;
    bool normalized{false};
    //! Maximum value before normalization
    real_type peak{0};
    //! Free-form description of how the grid was produced
    nlohmann::json metadata = nlohmann::json::object();
};

// Divide by the maximum; leaves an all-zero grid unnormalized
void normalize_to_peak(SpectrumGrid& grid);

//---------------------------------------------------------------------------//
}  // namespace qgrating
