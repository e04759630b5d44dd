//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/detail/ComplexGamma.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "../Types.hh"

namespace qgrating
{
namespace detail
{
//---------------------------------------------------------------------------//
// Logarithm of the gamma function for Re(z) >= 1/2 (Lanczos, g = 7)
std::complex<real_type> log_gamma(std::complex<real_type> z);

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace qgrating
