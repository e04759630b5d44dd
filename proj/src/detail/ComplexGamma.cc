//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file detail/ComplexGamma.cc
//---------------------------------------------------------------------------//
#include "qgrating/detail/ComplexGamma.hh"

#include <array>
#include <cmath>

namespace qgrating
{
namespace detail
{
namespace
{
constexpr real_type lanczos_g = 7;
constexpr std::array<real_type, 9> lanczos_coeff = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Log-gamma for complex arguments in the right half plane.
 *
 * The imaginary part is only defined modulo 2 pi, which is irrelevant for
 * callers that exponentiate the result.
 */
std::complex<real_type> log_gamma(std::complex<real_type> z)
{
    using cplx = std::complex<real_type>;
    if (z.real() < 0.5)
        throw DomainError("log_gamma requires Re(z) >= 1/2");

    z -= 1;
    cplx sum = lanczos_coeff[0];
    for (std::size_t i = 1; i < lanczos_coeff.size(); ++i)
    {
        sum += lanczos_coeff[i] / (z + static_cast<real_type>(i));
    }
    cplx t = z + lanczos_g + 0.5;
    real_type half_log_2pi = 0.5 * std::log(2 * M_PI);
    return half_log_2pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace qgrating
