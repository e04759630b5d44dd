//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qgrating/AtomicStructure.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <vector>

#include "Types.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
//! One term of a Yukawa screening function
struct YukawaTerm
{
    real_type weight;
    real_type alpha;  //!< Inverse screening length [1/bohr]
};

//---------------------------------------------------------------------------//
/*!
 * Neutral atom with an electron cloud described by a sum of Yukawa terms.
 *
 * The electron density is
 * \f[
 *   \rho(r) = Z \sum_i A_i \frac{\alpha_i^2}{4\pi r} e^{-\alpha_i r}
 * \f]
 * whose Fourier transform is the elastic form factor
 * \f$ F(q) = Z \sum_i A_i \alpha_i^2 / (\alpha_i^2 + q^2) \f$.
 * Weights must sum to one so that \f$ F(0) = Z \f$.
 */
class ScreenedAtom
{
  public:
    // Construct and validate
    ScreenedAtom(int z_nucleus, std::vector<YukawaTerm> terms);

    // Moliere parametrization with Thomas-Fermi screening length
    static ScreenedAtom moliere(int z_nucleus);

    int z_nucleus() const { return z_nucleus_; }
    std::vector<YukawaTerm> const& terms() const { return terms_; }

  private:
    int z_nucleus_;
    std::vector<YukawaTerm> terms_;
};

//---------------------------------------------------------------------------//
/*!
 * Single active electron in a hydrogenic 1s orbital.
 *
 * The effective charge fixes the binding energy as \f$ -Z_{eff}^2/2 \f$.
 */
class HydrogenicTarget
{
  public:
    explicit HydrogenicTarget(real_type z_eff);

    // Effective charge reproducing a given binding energy
    static HydrogenicTarget from_binding(Energy binding);

    real_type z_eff() const { return z_eff_; }
    Energy binding_energy() const { return Energy{-0.5 * z_eff_ * z_eff_}; }

  private:
    real_type z_eff_;
};

//---------------------------------------------------------------------------//
/*!
 * Emitted electron in a Coulomb continuum state.
 *
 * All continuum states in this library are normalized on the momentum scale,
 * \f$ \langle \phi_{\bf k} | \phi_{\bf k'} \rangle = \delta^3({\bf k}-{\bf
 * k'}) \f$, and satisfy incoming-wave boundary conditions:
 * \f[
 *   \phi^{(-)}_{\bf k}({\bf r}) = (2\pi)^{-3/2} e^{\pi\nu/2}
 *   \Gamma(1 + i\nu) e^{i{\bf k}\cdot{\bf r}}
 *   {}_1F_1(-i\nu, 1, -i(kr + {\bf k}\cdot{\bf r})), \quad \nu = Z/k.
 * \f]
 * With this convention the bound-free matrix element scales as
 * \f$ |M|^2 \propto Z^{-3} \f$ at fixed k/Z and q/Z.
 */
class ContinuumElectron
{
  public:
    explicit ContinuumElectron(Real3 momentum);

    Real3 const& momentum() const { return momentum_; }
    real_type magnitude() const { return norm(momentum_); }

  private:
    Real3 momentum_;
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// Elastic form factor F(q), monotonically decreasing from Z to 0
real_type elastic_form_factor(ScreenedAtom const& atom, Momentum q);

// Screened Coulomb amplitude Z_p (Z - F(q)) / q^2 in relative units
real_type elastic_amplitude(ScreenedAtom const& atom, int z_p, Momentum q);

// Bound 1s to Coulomb continuum matrix element <phi_k| exp(i q.r) |phi_1s>
std::complex<real_type>
ionization_form_factor(HydrogenicTarget const& target,
                       ContinuumElectron const& electron,
                       Real3 const& q);

//---------------------------------------------------------------------------//
}  // namespace qgrating
