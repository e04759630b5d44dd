//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/Types.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgrating
{
//---------------------------------------------------------------------------//
using real_type = double;
using size_type = std::size_t;

//! Cartesian 3-vector in atomic units
using Real3 = std::array<real_type, 3>;

//---------------------------------------------------------------------------//
/*!
 * Scalar physical quantity stored in Hartree atomic units.
 *
 * The tag distinguishes lengths, energies and momenta at compile time; the
 * stored value is always in atomic units.
 */
template<class Tag>
class Quantity
{
  public:
    constexpr Quantity() = default;
    constexpr explicit Quantity(real_type value) : value_{value} {}

    //! Value in atomic units
    constexpr real_type value() const { return value_; }

    constexpr Quantity operator-() const { return Quantity{-value_}; }
    constexpr Quantity operator+(Quantity o) const
    {
        return Quantity{value_ + o.value_};
    }
    constexpr Quantity operator-(Quantity o) const
    {
        return Quantity{value_ - o.value_};
    }
    constexpr Quantity operator*(real_type s) const
    {
        return Quantity{value_ * s};
    }
    constexpr Quantity operator/(real_type s) const
    {
        return Quantity{value_ / s};
    }
    constexpr auto operator<=>(Quantity const&) const = default;

  private:
    real_type value_{0};
};

struct LengthTag;
struct EnergyTag;
struct MomentumTag;

//! Length in Bohr radii
using Length = Quantity<LengthTag>;
//! Energy in Hartree
using Energy = Quantity<EnergyTag>;
//! Momentum in inverse Bohr radii
using Momentum = Quantity<MomentumTag>;

//---------------------------------------------------------------------------//
// ERRORS
//---------------------------------------------------------------------------//
//! Argument outside the mathematical domain of an operation
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Invalid or inconsistent user configuration
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Numerical failure (non-convergence, non-finite result)
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! File system failure
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
// VECTOR HELPERS
//---------------------------------------------------------------------------//
inline constexpr real_type dot(Real3 const& a, Real3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline real_type norm(Real3 const& a)
{
    return std::sqrt(dot(a, a));
}

inline constexpr Real3 operator-(Real3 const& a, Real3 const& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
