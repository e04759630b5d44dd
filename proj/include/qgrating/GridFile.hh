//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/GridFile.hh
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "Grid.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
/*!
 * A grid on disk: a headerless CSV payload plus a JSON sidecar.
 *
 * The pair lives at \c <stem>.csv and \c <stem>.meta.json. Rows of the CSV
 * follow the first axis listed in the sidecar.
 */
struct GridFile
{
    nlohmann::json header;
    Matrix values;
};

//! Locations of one written file pair
struct FilePair
{
    std::filesystem::path csv;
    std::filesystem::path meta;
};

//---------------------------------------------------------------------------//
// Shortest decimal text that parses back to the same double
std::string format_number(real_type value);

// Row-major CSV with LF line endings and no header row
std::string to_csv(Matrix const& values);

// Parse a CSV matrix; all rows must have the same length
Matrix parse_csv(std::string_view text);

// Sidecar for a spectrum grid, embedding the configuration echo
nlohmann::json make_header(SpectrumGrid const& grid,
                           nlohmann::json const& config);

// Paths for a stem inside a directory
FilePair file_pair(std::filesystem::path const& dir, std::string const& stem);

// Write a spectrum grid as a file pair
FilePair write_grid_file(std::filesystem::path const& dir,
                         std::string const& stem,
                         SpectrumGrid const& grid,
                         nlohmann::json const& config);

// Write a table (columns named in the header) as a file pair
FilePair write_table_file(std::filesystem::path const& dir,
                          std::string const& stem,
                          std::vector<std::string> const& columns,
                          Matrix const& rows,
                          nlohmann::json header);

// Read and validate a grid file pair (values finite and nonnegative)
GridFile read_grid_file(std::filesystem::path const& dir,
                        std::string const& stem);

//---------------------------------------------------------------------------//
}  // namespace qgrating
