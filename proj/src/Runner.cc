//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Runner.cc
//---------------------------------------------------------------------------//
#include "qgrating/Runner.hh"

#include <algorithm>
#include <cmath>

#include "qgrating/Parallel.hh"
#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
//---------------------------------------------------------------------------//
//! Single-velocity ionization config as recorded in each sweep header
RunConfig ionization_at(RunConfig const& sweep, real_type f)
{
    RunConfig single = sweep;
    single.mode = Mode::ionization;
    single.name = sweep_stem(sweep.name, f);
    single.f_list.clear();
    single.projectile->speed_kind = SpeedKind::f;
    single.projectile->speed = f;
    return single;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string sweep_stem(std::string const& name, real_type f)
{
    return name + "_f" + format_number(f);
}

//---------------------------------------------------------------------------//
std::vector<GridProduct>
compute_grids(RunConfig const& cfg, unsigned workers)
{
    workers = resolve_workers(workers);
    std::vector<GridProduct> result;
    switch (cfg.mode)
    {
        case Mode::diffraction: {
            auto field = field_grid(
                cfg.atom_beam(),
                cfg.grating_spec(),
                {mm_to_au(cfg.axis2.max), mm_to_au(cfg.axis1.max)},
                cfg.axis2.samples,
                cfg.axis1.samples,
                workers);
            GridProduct p{cfg.name, to_spectrum_grid(field), to_json(cfg)};
            p.grid.metadata["observable"] = "diffraction";
            p.grid.metadata["support_empty"] = !p.grid.normalized;
            result.push_back(std::move(p));
            break;
        }
        case Mode::elastic:
            result.push_back(
                {cfg.name, elastic_grid(cfg.elastic_job(), workers),
                 to_json(cfg)});
            break;
        case Mode::ionization:
            result.push_back({cfg.name,
                              ionization_grid(cfg.ionization_job(), workers),
                              to_json(cfg)});
            break;
        case Mode::sweep:
            for (real_type f : cfg.f_list)
            {
                RunConfig single = ionization_at(cfg, f);
                result.push_back(
                    {single.name,
                     ionization_grid(single.ionization_job(), workers),
                     to_json(single)});
            }
            break;
        case Mode::rings:
            throw ConfigError("mode: rings produces a table, not grids");
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Tabulate the analytic annuli that intersect the configured window.
 *
 * Radii are measured from the ring center (k_z, k_perp) = (v, 0). The band
 * [r_near, r_far] spans the closest and farthest points of the rectangle.
 */
RingsTable compute_rings(RunConfig const& cfg)
{
    RingsTable table;
    table.columns = {"f", "v", "n", "b_minus", "b_plus", "r_inner", "r_outer"};
    std::vector<real_type> data;

    auto beam = cfg.atom_beam();
    auto grating = cfg.grating_spec();
    real_type v0 = confluence_velocity(beam);
    for (real_type f : cfg.velocity_factors())
    {
        auto proj = cfg.projectile_at(f);
        real_type v = proj.velocity();
        real_type dz_near = std::max(
            {cfg.axis2.min - v, real_type{0}, v - cfg.axis2.max});
        real_type dp_near = std::max(cfg.axis1.min, real_type{0});
        real_type dz_far = std::max(std::abs(cfg.axis2.min - v),
                                    std::abs(cfg.axis2.max - v));
        real_type dp_far = std::max(std::abs(cfg.axis1.min),
                                    std::abs(cfg.axis1.max));
        auto rings = visible_rings(beam, proj, grating,
                                   std::hypot(dz_near, dp_near),
                                   std::hypot(dz_far, dp_far));
        for (auto const& rb : rings)
        {
            data.insert(data.end(),
                        {v / v0, v, static_cast<real_type>(rb.order),
                         rb.b_minus, rb.b_plus, rb.inner_radius(),
                         rb.outer_radius()});
        }
    }
    table.rows = Matrix(data.size() / table.columns.size(),
                        table.columns.size());
    table.rows.data() = std::move(data);
    return table;
}

//---------------------------------------------------------------------------//
std::vector<FilePair> run(RunConfig const& cfg,
                          std::filesystem::path const& out_dir,
                          unsigned workers)
{
    std::vector<FilePair> written;
    if (cfg.mode == Mode::rings)
    {
        RingsTable table = compute_rings(cfg);
        nlohmann::json header;
        header["config"] = to_json(cfg);
        header["center"] = "ring centers at (k_z, k_perp) = (v, 0)";
        written.push_back(write_table_file(
            out_dir, cfg.name, table.columns, table.rows, header));
        return written;
    }

    // Write each grid as soon as it is done so long sweeps leave partial
    // results behind on failure
    if (cfg.mode == Mode::sweep)
    {
        for (real_type f : cfg.f_list)
        {
            RunConfig single = ionization_at(cfg, f);
            for (auto& p : compute_grids(single, workers))
            {
                written.push_back(
                    write_grid_file(out_dir, p.stem, p.grid, p.config));
            }
        }
        return written;
    }
    for (auto& p : compute_grids(cfg, workers))
        written.push_back(write_grid_file(out_dir, p.stem, p.grid, p.config));
    return written;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
