//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Runner.hh
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "Config.hh"
#include "GridFile.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! A computed grid together with the configuration that reproduces it
struct GridProduct
{
    std::string stem;
    SpectrumGrid grid;
    nlohmann::json config;
};

//! Analytic ring table: one row per (f, n)
struct RingsTable
{
    std::vector<std::string> columns;
    Matrix rows;
};

//---------------------------------------------------------------------------//
// Evaluate the grids of a diffraction, elastic, ionization or sweep config
std::vector<GridProduct> compute_grids(RunConfig const& config,
                                       unsigned workers);

// Visible annuli within the configured momentum window, for every f
RingsTable compute_rings(RunConfig const& config);

// File stem used by a sweep for one velocity factor
std::string sweep_stem(std::string const& name, real_type f);

// Execute a configuration and write its outputs into a directory
std::vector<FilePair> run(RunConfig const& config,
                          std::filesystem::path const& out_dir,
                          unsigned workers);

//---------------------------------------------------------------------------//
}  // namespace qgrating
