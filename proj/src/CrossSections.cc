//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file CrossSections.cc
//---------------------------------------------------------------------------//
#include "qgrating/CrossSections.hh"

#include <cmath>
#include <complex>

#include "qgrating/Parallel.hh"
#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
//---------------------------------------------------------------------------//
/*!
 * Sum of squared windows over every order n with nonzero support.
 *
 * The window argument is base - n * step; only orders with
 * |base - n step| <= half_width contribute, which brackets n to a small
 * range. Orders are summed incoherently (no cross-n interference).
 */
real_type window_sum_sq(real_type base, real_type step, real_type half_width)
{
    auto n_lo = static_cast<long>(std::ceil((base - half_width) / step)) - 1;
    auto n_hi = static_cast<long>(std::floor((base + half_width) / step)) + 1;
    real_type total = 0;
    for (long n = n_lo; n <= n_hi; ++n)
    {
        real_type w = window(base - static_cast<real_type>(n) * step,
                             half_width);
        total += w * w;
    }
    return total;
}

//---------------------------------------------------------------------------//
real_type order_step(AtomBeam const& beam, GratingSpec const& grating)
{
    return beam.momentum().value() * grating.period().value()
           / grating.distance().value();
}

//---------------------------------------------------------------------------//
nlohmann::json describe_axis(AxisSpec const& a)
{
    return {{"min", a.min}, {"max", a.max}, {"samples", a.samples}};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
real_type ionization_window_sum(EmissionPoint point, IonizationJob const& job)
{
    if (job.proj.incident_axis() != Axis::z)
        throw DomainError("ionization requires projectile incidence along z");
    real_type kz = point.k_z.value();
    real_type kp = point.k_perp.value();
    Momentum k{std::sqrt(kz * kz + kp * kp)};
    real_type base = q_min(k, job.beam, job.proj).value()
                     - job.recoil.p_r_z.value() - kz;
    real_type hw = window_half_width(
                       job.grating.slit_height(), job.beam, job.grating)
                       .value();
    return window_sum_sq(base, order_step(job.beam, job.grating), hw);
}

//---------------------------------------------------------------------------//
/*!
 * Reduced ionization cross section at an emission point.
 *
 * \f[
 *   \frac{Z_p^2}{v^2}
 *   \frac{|\langle\phi_{\bf k}|e^{i{\bf q}_0\cdot\xi}|\phi_i\rangle|^2}
 *        {q_0^4} \sum_n F_a^2(B_n)
 * \f]
 * with \f$ {\bf q}_0 = (q_x, q_y, q_{min}) \f$ and the emitted electron in
 * the x-z plane, \f$ {\bf k} = (k_\perp, 0, k_z) \f$.
 */
real_type ionization_point(EmissionPoint point, IonizationJob const& job)
{
    real_type kz = point.k_z.value();
    real_type kp = point.k_perp.value();
    if (kp < 0)
        throw DomainError("k_perp must be nonnegative");
    real_type k = std::sqrt(kz * kz + kp * kp);
    if (!(k > 0))
        throw DomainError("ionization point requires k > 0");

    real_type windows = ionization_window_sum(point, job);
    if (windows == 0)
        return 0;

    Real3 q0{job.recoil.q_x.value(),
             job.recoil.q_y.value(),
             q_min(Momentum{k}, job.beam, job.proj).value()};
    real_type q0_sq = dot(q0, q0);
    auto target = HydrogenicTarget::from_binding(job.beam.binding_energy());
    auto m = ionization_form_factor(target, ContinuumElectron{{kp, 0, kz}}, q0);

    real_type v = job.proj.velocity();
    real_type zp = job.proj.charge();
    return zp * zp / (v * v) * std::norm(m) / (q0_sq * q0_sq) * windows;
}

//---------------------------------------------------------------------------//
SpectrumGrid ionization_grid(IonizationJob const& job, unsigned workers)
{
    SpectrumGrid result;
    result.axis1 = GridAxis::uniform("k_perp", "a.u.", job.k_perp.min,
                                     job.k_perp.max, job.k_perp.samples);
    result.axis2 = GridAxis::uniform("k_z", "a.u.", job.k_z.min, job.k_z.max,
                                     job.k_z.samples);
    if (job.k_perp.min < 0)
        throw ConfigError("grid: k_perp must be nonnegative");

    auto const& kp = result.axis1.values;
    auto const& kz = result.axis2.values;
    result.values = evaluate_rows(
        kp.size(), kz.size(), workers, [&](size_type i, auto row) {
            for (size_type j = 0; j < kz.size(); ++j)
            {
                row[j] = ionization_point({Momentum{kz[j]}, Momentum{kp[i]}},
                                          job);
            }
        });
    normalize_to_peak(result);

    real_type v0 = confluence_velocity(job.beam);
    auto& meta = result.metadata;
    meta["observable"] = "ionization";
    meta["velocity"] = job.proj.velocity();
    meta["f"] = job.proj.velocity() / v0;
    meta["confluence_velocity"] = v0;
    meta["k_z"] = describe_axis(job.k_z);
    meta["k_perp"] = describe_axis(job.k_perp);
    meta["support_empty"] = !result.normalized;
    if (!result.normalized)
        meta["warning"] = "cross section vanishes on the whole grid";
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Elastic map value.
 *
 * The x-window is taken at its maximum pi since the final x-momentum of the
 * atom is not resolved.
 */
real_type elastic_point(real_type theta, Momentum p_az_f, ElasticJob const& job)
{
    if (theta == 0)
        throw DomainError("elastic cross section is singular at theta = 0");

    Real3 q = elastic_q(theta, job.proj);
    real_type amp = elastic_amplitude(job.atom, job.proj.charge(),
                                      Momentum{norm(q)});
    real_type hw = window_half_width(
                       job.grating.slit_height(), job.beam, job.grating)
                       .value();
    real_type windows = window_sum_sq(
        q[2] - p_az_f.value(), order_step(job.beam, job.grating), hw);
    constexpr real_type x_window_sq = constants::pi * constants::pi;
    return amp * amp * x_window_sq * windows;
}

//---------------------------------------------------------------------------//
SpectrumGrid elastic_grid(ElasticJob const& job, unsigned workers)
{
    SpectrumGrid result;
    result.axis1 = GridAxis::uniform("p_az_f", "a.u.", job.p_az.min,
                                     job.p_az.max, job.p_az.samples);
    result.axis2 = GridAxis::uniform("theta", "rad", job.theta.min,
                                     job.theta.max, job.theta.samples);
    for (real_type t : result.axis2.values)
    {
        if (t == 0)
            throw DomainError("elastic grid must exclude theta = 0");
    }

    auto const& pz = result.axis1.values;
    auto const& th = result.axis2.values;
    result.values = evaluate_rows(
        pz.size(), th.size(), workers, [&](size_type i, auto row) {
            for (size_type j = 0; j < th.size(); ++j)
                row[j] = elastic_point(th[j], Momentum{pz[i]}, job);
        });
    normalize_to_peak(result);

    auto& meta = result.metadata;
    meta["observable"] = "elastic";
    meta["projectile_momentum"] = job.proj.momentum().value();
    meta["fringe_period"] = order_step(job.beam, job.grating);
    meta["stripe_width"] = 2
                           * window_half_width(job.grating.slit_height(),
                                               job.beam, job.grating)
                                 .value();
    meta["theta"] = describe_axis(job.theta);
    meta["p_az_f"] = describe_axis(job.p_az);
    meta["support_empty"] = !result.normalized;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace qgrating
