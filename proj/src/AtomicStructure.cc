//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file AtomicStructure.cc
//---------------------------------------------------------------------------//
#include "qgrating/AtomicStructure.hh"

#include <cmath>
#include <numbers>
#include <string>

#include "qgrating/detail/ComplexGamma.hh"

namespace qgrating
{
//---------------------------------------------------------------------------//
ScreenedAtom::ScreenedAtom(int z_nucleus, std::vector<YukawaTerm> terms)
    : z_nucleus_{z_nucleus}, terms_{std::move(terms)}
{
    if (z_nucleus_ < 1)
        throw ConfigError("screened atom: nuclear charge must be positive");
    if (terms_.empty())
        throw ConfigError("screened atom: need at least one Yukawa term");
    real_type total = 0;
    for (auto const& t : terms_)
    {
        if (!(t.alpha > 0))
            throw ConfigError("screened atom: Yukawa alpha must be positive");
        total += t.weight;
    }
    if (std::fabs(total - 1) > 1e-12)
    {
        throw ConfigError("screened atom: Yukawa weights sum to "
                          + std::to_string(total) + " instead of 1");
    }
}

//---------------------------------------------------------------------------//
/*!
 * Moliere screening: weights (0.35, 0.55, 0.10) with inverse lengths
 * (0.3, 1.2, 6.0) / a_TF, where \f$ a_{TF} = 0.88534 Z^{-1/3} \f$.
 */
ScreenedAtom ScreenedAtom::moliere(int z_nucleus)
{
    if (z_nucleus < 1)
        throw ConfigError("screened atom: nuclear charge must be positive");
    real_type a_tf = 0.88534 / std::cbrt(static_cast<real_type>(z_nucleus));
    return ScreenedAtom(z_nucleus,
                        {{0.35, 0.3 / a_tf}, {0.55, 1.2 / a_tf},
                         {0.10, 6.0 / a_tf}});
}

//---------------------------------------------------------------------------//
HydrogenicTarget::HydrogenicTarget(real_type z_eff) : z_eff_{z_eff}
{
    if (!(z_eff_ > 0))
        throw ConfigError("hydrogenic target: effective charge must be positive");
}

//---------------------------------------------------------------------------//
HydrogenicTarget HydrogenicTarget::from_binding(Energy binding)
{
    if (!(binding.value() < 0))
        throw ConfigError("hydrogenic target: binding energy must be negative");
    return HydrogenicTarget{std::sqrt(-2 * binding.value())};
}

//---------------------------------------------------------------------------//
ContinuumElectron::ContinuumElectron(Real3 momentum) : momentum_{momentum}
{
    if (!(norm(momentum_) > 0))
        throw DomainError("continuum electron momentum must be nonzero");
}

//---------------------------------------------------------------------------//
/*!
 * Elastic form factor. The q = 0 value is returned as exactly Z.
 */
real_type elastic_form_factor(ScreenedAtom const& atom, Momentum q)
{
    if (!(q.value() >= 0))
        throw DomainError("momentum transfer must be nonnegative");
    if (q.value() == 0)
        return atom.z_nucleus();

    real_type q2 = q.value() * q.value();
    real_type sum = 0;
    for (auto const& t : atom.terms())
    {
        real_type a2 = t.alpha * t.alpha;
        sum += t.weight * a2 / (a2 + q2);
    }
    return atom.z_nucleus() * sum;
}

//---------------------------------------------------------------------------//
/*!
 * Screened elastic amplitude.
 *
 * Uses the identity \f$ Z - F(q) = Z q^2 \sum_i A_i / (\alpha_i^2 + q^2) \f$
 * to avoid cancellation at small q.
 */
real_type elastic_amplitude(ScreenedAtom const& atom, int z_p, Momentum q)
{
    if (!(q.value() > 0))
        throw DomainError("elastic amplitude is singular at q = 0");

    real_type q2 = q.value() * q.value();
    real_type sum = 0;
    for (auto const& t : atom.terms())
    {
        sum += t.weight / (t.alpha * t.alpha + q2);
    }
    return z_p * atom.z_nucleus() * sum;
}

//---------------------------------------------------------------------------//
/*!
 * First-Born bound-free matrix element for a hydrogenic 1s orbital.
 *
 * With \f$ \nu = Z/k \f$, \f$ \alpha = |{\bf q}-{\bf k}|^2 + \lambda^2 \f$
 * and \f$ \gamma = q^2 + (\lambda - ik)^2 \f$, the Nordsieck integral
 * \f[
 *   G(\lambda) = \int d^3r\, \frac{e^{-\lambda r}}{r}
 *   e^{i({\bf q}-{\bf k})\cdot{\bf r}}
 *   {}_1F_1(i\nu, 1, i(kr + {\bf k}\cdot{\bf r}))
 *   = \frac{4\pi}{\alpha} \left(\frac{\alpha}{\gamma}\right)^{i\nu}
 * \f]
 * is differentiated with respect to \f$ \lambda \f$ and evaluated at
 * \f$ \lambda = Z \f$. The result has no singularity for Z > 0: \f$ \alpha
 * \ge Z^2 \f$ and \f$ \mathrm{Im}\,\gamma = -2Zk \ne 0 \f$.
 */
std::complex<real_type>
ionization_form_factor(HydrogenicTarget const& target,
                       ContinuumElectron const& electron,
                       Real3 const& q)
{
    using cplx = std::complex<real_type>;
    constexpr real_type pi = std::numbers::pi_v<real_type>;
    constexpr cplx i{0, 1};

    real_type q_mag = norm(q);
    if (!(q_mag > 0))
        throw DomainError("ionization form factor requires q != 0");

    real_type const z = target.z_eff();
    real_type const k = electron.magnitude();
    real_type const nu = z / k;
    real_type const lambda = z;

    Real3 p = q - electron.momentum();
    real_type alpha = dot(p, p) + lambda * lambda;
    cplx lmk = lambda - i * k;
    cplx gamma = q_mag * q_mag + lmk * lmk;

    real_type log_alpha = std::log(alpha);
    cplx log_g = std::log(4 * pi) - log_alpha
                 + i * nu * (log_alpha - std::log(gamma));
    cplx dlog_g = 2 * lambda * (1.0 - i * nu) / alpha
                  + 2.0 * i * nu * lmk / gamma;

    cplx log_norm = -1.5 * std::log(2 * pi) + 0.5 * pi * nu
                    + detail::log_gamma(cplx{1, -nu})
                    + 0.5 * std::log(z * z * z / pi);

    cplx result = std::exp(log_norm + log_g) * dlog_g;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw NumericError("ionization form factor is not finite");
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
