//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file GridFile.cc
//---------------------------------------------------------------------------//
#include "qgrating/GridFile.hh"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
using nlohmann::json;

constexpr char const format_name[] = "qgrating-grid";
constexpr int format_version = 1;

//---------------------------------------------------------------------------//
void write_text(std::filesystem::path const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

//---------------------------------------------------------------------------//
std::string read_text(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad())
        throw IoError("failed reading '" + path.string() + "'");
    return os.str();
}

//---------------------------------------------------------------------------//
void ensure_directory(std::filesystem::path const& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "'");
}

//---------------------------------------------------------------------------//
json describe(GridAxis const& axis)
{
    return {{"label", axis.label},
            {"unit", axis.unit},
            {"min", axis.values.front()},
            {"max", axis.values.back()},
            {"samples", axis.values.size()}};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string format_number(real_type value)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{})
        throw NumericError("cannot format number");
    return std::string(buf, end);
}

//---------------------------------------------------------------------------//
std::string to_csv(Matrix const& values)
{
    std::string out;
    out.reserve(values.rows() * values.cols() * 12);
    char buf[64];
    for (size_type i = 0; i < values.rows(); ++i)
    {
        auto row = values.row(i);
        for (size_type j = 0; j < row.size(); ++j)
        {
            if (j)
                out.push_back(',');
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), row[j]);
            if (ec != std::errc{})
                throw NumericError("cannot format number");
            out.append(buf, end);
        }
        out.push_back('\n');
    }
    return out;
}

//---------------------------------------------------------------------------//
Matrix parse_csv(std::string_view text)
{
    std::vector<real_type> data;
    size_type rows = 0;
    size_type cols = 0;
    size_type pos = 0;
    while (pos < text.size())
    {
        size_type eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r')
            throw IoError("CSV line " + std::to_string(rows + 1)
                          + ": CR line endings are not allowed");
        if (line.empty())
            throw IoError("CSV line " + std::to_string(rows + 1) + " is empty");

        size_type count = 0;
        char const* p = line.data();
        char const* end = line.data() + line.size();
        while (true)
        {
            real_type v{};
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{})
                throw IoError("CSV line " + std::to_string(rows + 1)
                              + ": malformed number");
            data.push_back(v);
            ++count;
            p = next;
            if (p == end)
                break;
            if (*p != ',')
                throw IoError("CSV line " + std::to_string(rows + 1)
                              + ": expected ','");
            ++p;
        }
        if (rows == 0)
            cols = count;
        else if (count != cols)
            throw IoError("CSV line " + std::to_string(rows + 1) + " has "
                          + std::to_string(count) + " values, expected "
                          + std::to_string(cols));
        ++rows;
    }

    Matrix result(rows, cols);
    result.data() = std::move(data);
    return result;
}

//---------------------------------------------------------------------------//
json make_header(SpectrumGrid const& grid, json const& config)
{
    json header;
    header["format"] = format_name;
    header["format_version"] = format_version;
    header["kind"] = "grid";
    header["tool_version"] = QGRATING_VERSION;
    header["constants_version"] = constants::version;
    header["config"] = config;
    header["axes"] = {describe(grid.axis1), describe(grid.axis2)};
    header["rows"] = grid.values.rows();
    header["cols"] = grid.values.cols();
    header["normalized"] = grid.normalized;
    header["peak"] = grid.peak;
    header["metadata"] = grid.metadata;

    json warnings = json::array();
    if (grid.metadata.contains("warning"))
        warnings.push_back(grid.metadata["warning"]);
    header["warnings"] = warnings;
    return header;
}

//---------------------------------------------------------------------------//
FilePair file_pair(std::filesystem::path const& dir, std::string const& stem)
{
    return {dir / (stem + ".csv"), dir / (stem + ".meta.json")};
}

//---------------------------------------------------------------------------//
FilePair write_grid_file(std::filesystem::path const& dir,
                         std::string const& stem,
                         SpectrumGrid const& grid,
                         json const& config)
{
    ensure_directory(dir);
    FilePair paths = file_pair(dir, stem);
    write_text(paths.csv, to_csv(grid.values));
    write_text(paths.meta, make_header(grid, config).dump(2) + "\n");
    return paths;
}

//---------------------------------------------------------------------------//
FilePair write_table_file(std::filesystem::path const& dir,
                          std::string const& stem,
                          std::vector<std::string> const& columns,
                          Matrix const& rows,
                          json header)
{
    if (!rows.data().empty() && rows.cols() != columns.size())
        throw NumericError("table has a column count mismatch");
    header["format"] = format_name;
    header["format_version"] = format_version;
    header["kind"] = "table";
    header["tool_version"] = QGRATING_VERSION;
    header["constants_version"] = constants::version;
    header["columns"] = columns;
    header["rows"] = rows.rows();

    ensure_directory(dir);
    FilePair paths = file_pair(dir, stem);
    write_text(paths.csv, to_csv(rows));
    write_text(paths.meta, header.dump(2) + "\n");
    return paths;
}

//---------------------------------------------------------------------------//
/*!
 * Read a grid file pair and check it against its sidecar.
 */
GridFile read_grid_file(std::filesystem::path const& dir,
                        std::string const& stem)
{
    FilePair paths = file_pair(dir, stem);
    GridFile result;
    result.header = json::parse(read_text(paths.meta), nullptr, false);
    if (result.header.is_discarded() || !result.header.is_object())
        throw IoError("'" + paths.meta.string() + "' is not a JSON object");
    if (result.header.value("format", "") != format_name
        || result.header.value("kind", "") != "grid")
    {
        throw IoError("'" + paths.meta.string() + "' is not a grid sidecar");
    }

    result.values = parse_csv(read_text(paths.csv));

    auto const& axes = result.header.at("axes");
    if (!axes.is_array() || axes.size() != 2)
        throw IoError("sidecar must list exactly two axes");
    auto n_rows = axes[0].at("samples").get<size_type>();
    auto n_cols = axes[1].at("samples").get<size_type>();
    if (n_rows != result.values.rows() || n_cols != result.values.cols())
    {
        throw IoError("payload is " + std::to_string(result.values.rows())
                      + "x" + std::to_string(result.values.cols())
                      + " but the sidecar declares "
                      + std::to_string(n_rows) + "x" + std::to_string(n_cols));
    }
    for (real_type v : result.values.data())
    {
        if (!std::isfinite(v) || v < 0)
            throw IoError("payload holds a negative or non-finite value");
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
