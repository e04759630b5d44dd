//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating.cc
//! \brief Command-line front end
//---------------------------------------------------------------------------//
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgrating/Config.hh"
#include "qgrating/Parallel.hh"
#include "qgrating/Runner.hh"

namespace
{
//---------------------------------------------------------------------------//
enum ExitCode : int
{
    success = 0,
    config_error = 2,
    runtime_error = 3,
    io_error = 4,
};

//---------------------------------------------------------------------------//
unsigned parse_worker_flag(std::string const& text)
{
    if (text == "auto")
        return 0;
    try
    {
        std::size_t used = 0;
        long n = std::stol(text, &used);
        if (used == text.size() && n >= 1 && n <= 4096)
            return static_cast<unsigned>(n);
    }
    catch (std::exception const&)
    {
    }
    throw qgrating::ConfigError("--workers: expected a positive integer or "
                                "'auto', got '"
                                + text + "'");
}

//---------------------------------------------------------------------------//
std::string slurp(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw qgrating::IoError("cannot read config '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

//---------------------------------------------------------------------------//
int execute(qgrating::Mode mode,
            std::string const& config_path,
            std::string const& out_dir,
            std::string const& workers_flag,
            bool quiet)
{
    using namespace qgrating;
    auto cfg = parse_config(slurp(config_path), mode);
    unsigned workers = workers_flag.empty() ? cfg.workers
                                            : parse_worker_flag(workers_flag);
    workers = resolve_workers(workers);

    auto start = std::chrono::steady_clock::now();
    auto files = run(cfg, out_dir, workers);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now()
                                            - start;
    if (!quiet)
    {
        for (auto const& f : files)
            std::cout << f.csv.string() << '\n' << f.meta.string() << '\n';
        std::cerr << "qgrating: " << to_cstring(cfg.mode) << " finished in "
                  << elapsed.count() << " s with " << workers
                  << " worker(s)\n";
    }
    return success;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char* argv[])
{
    using qgrating::Mode;

    CLI::App app{"Collision observables of an atom diffracted by a grating"};
    app.set_version_flag("--version", std::string{QGRATING_VERSION});
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string workers;
    bool quiet = false;

    for (Mode m : {Mode::diffraction, Mode::elastic, Mode::ionization,
                   Mode::rings, Mode::sweep})
    {
        auto* sub = app.add_subcommand(qgrating::to_cstring(m));
        sub->add_option("--config", config_path, "JSON run description")
            ->required();
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--workers", workers, "Worker threads (n or auto)");
        sub->add_flag("--quiet", quiet, "Suppress progress output");
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::Success const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return config_error;
    }

    Mode mode = qgrating::mode_from_string(app.get_subcommands().front()->get_name());
    try
    {
        return execute(mode, config_path, out_dir, workers, quiet);
    }
    catch (qgrating::ConfigError const& e)
    {
        std::cerr << "qgrating: configuration error: " << e.what() << '\n';
        return config_error;
    }
    catch (qgrating::IoError const& e)
    {
        std::cerr << "qgrating: I/O error: " << e.what() << '\n';
        return io_error;
    }
    catch (std::exception const& e)
    {
        std::cerr << "qgrating: error: " << e.what() << '\n';
        return runtime_error;
    }
}
