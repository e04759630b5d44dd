//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Parallel.hh
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "Grid.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! Worker count from a request; zero means one per hardware thread
inline unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

//---------------------------------------------------------------------------//
/*!
 * Fill a matrix row by row using a static partition over worker threads.
 *
 * Each worker owns a contiguous block of rows and writes into a private
 * buffer; blocks are copied into the result in row order after all workers
 * join. Since every row is computed by the same pure function regardless of
 * the partition, the result does not depend on \c workers.
 *
 * The row function has signature <tt>void(size_type, std::span<real_type>)</tt>.
 */
template<class RowFunc>
Matrix evaluate_rows(size_type rows, size_type cols, unsigned workers,
                     RowFunc&& eval_row)
{
    Matrix result(rows, cols);
    workers = std::max(1u, std::min<unsigned>(workers, rows ? rows : 1));

    if (workers == 1)
    {
        for (size_type i = 0; i < rows; ++i)
            eval_row(i, result.row(i));
        return result;
    }

    std::vector<std::vector<real_type>> blocks(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);

    auto block_begin = [rows, workers](unsigned w) {
        return rows * w / workers;
    };

    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back([&, w] {
            try
            {
                size_type first = block_begin(w);
                size_type last = block_begin(w + 1);
                auto& block = blocks[w];
                block.assign((last - first) * cols, real_type{0});
                for (size_type i = first; i < last; ++i)
                {
                    eval_row(i,
                             std::span<real_type>{
                                 block.data() + (i - first) * cols, cols});
                }
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }

    auto out = result.data().begin();
    for (auto const& block : blocks)
        out = std::copy(block.begin(), block.end(), out);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
