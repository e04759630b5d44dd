//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 qgrating developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/KinematicsTest.cc
//---------------------------------------------------------------------------//
#include "qgrating/Kinematics.hh"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qgrating/Units.hh"

namespace qgrating
{
namespace
{
constexpr double pi = std::numbers::pi;

class KinematicsTest : public ::testing::Test
{
  protected:
    AtomBeam he{Momentum{50}, Energy{-0.9}, 2, 2, 7296.3};
    GratingSpec grating{mm_to_au(0.1), mm_to_au(0.1), mm_to_au(0.2), 5,
                        mm_to_au(200)};
    double v0 = std::sqrt(1.8);

    Projectile proton(double f) const
    {
        return {1, constants::proton_mass_au, f * v0, Axis::z};
    }
};

TEST_F(KinematicsTest, projectile_validation)
{
    EXPECT_THROW(Projectile(1, 0, 1, Axis::z), ConfigError);
    EXPECT_THROW(Projectile(1, 1, 0, Axis::z), ConfigError);
    Projectile e(-1, 1, 4.69569, Axis::x);
    EXPECT_NEAR(4.69569, e.momentum().value(), 1e-12);
}

TEST_F(KinematicsTest, q_min_examples)
{
    EXPECT_NEAR(0.67082, q_min(Momentum{0}, he, proton(1)).value(), 5e-6);

    AtomBeam h{Momentum{50}, Energy{-0.5}, 1, 1, 1837};
    Projectile unit(1, constants::proton_mass_au, 1, Axis::z);
    EXPECT_DOUBLE_EQ(1.0, q_min(Momentum{1}, h, unit).value());

    double prev = -1;
    for (double k = 0; k < 5; k += 0.01)
    {
        double q = q_min(Momentum{k}, he, proton(1)).value();
        EXPECT_GT(q, prev);
        prev = q;
        // Energy balance q_min v = k^2/2 - eps
        EXPECT_NEAR(k * k / 2 + 0.9, q * v0, 1e-13 * (k * k + 1));
    }
    EXPECT_THROW(q_min(Momentum{-1}, he, proton(1)), DomainError);
}

TEST_F(KinematicsTest, confluence_velocity)
{
    EXPECT_NEAR(1.341641, confluence_velocity(he), 5e-7);
    AtomBeam h{Momentum{50}, Energy{-0.5}, 1, 1, 1837};
    EXPECT_DOUBLE_EQ(1.0, confluence_velocity(h));
    EXPECT_NEAR(1.475805, 1.1 * confluence_velocity(he), 5e-7);
}

TEST_F(KinematicsTest, central_disk_at_confluence)
{
    auto rb = ring_bounds(0, he, proton(1), grating);
    EXPECT_NEAR(-0.033541, rb.b_minus, 5e-7);
    EXPECT_NEAR(0.033541, rb.b_plus, 5e-7);
    EXPECT_TRUE(rb.is_disk());
    EXPECT_EQ(0.0, rb.inner_radius());
    EXPECT_NEAR(0.18314, rb.outer_radius(), 5e-6);
}

TEST_F(KinematicsTest, first_annulus_at_confluence)
{
    auto rb = ring_bounds(1, he, proton(1), grating);
    EXPECT_NEAR(0.134164 - 0.033541, rb.b_minus, 1e-6);
    EXPECT_NEAR(0.134164 + 0.033541, rb.b_plus, 1e-6);
    EXPECT_FALSE(rb.is_disk());
    EXPECT_NEAR(0.31721, rb.inner_radius(), 5e-6);
    // sqrt(0.1677051) = 0.409518...; quoted elsewhere truncated to 0.40951
    EXPECT_NEAR(0.409518, rb.outer_radius(), 1e-6);
}

TEST_F(KinematicsTest, no_central_disk_below_confluence)
{
    auto p = proton(0.93);
    EXPECT_NEAR(1.24773, p.velocity(), 5e-6);
    auto rb = ring_bounds(0, he, p, grating);
    EXPECT_NEAR(-0.21198, rb.b_plus, 1e-5);
    EXPECT_TRUE(rb.empty());
    EXPECT_EQ(0.0, rb.outer_radius());
}

TEST_F(KinematicsTest, ring_width_constant)
{
    for (double f : {0.93, 1.0, 1.1})
    {
        auto p = proton(f);
        double width = 2 * p.velocity() * 50 * grating.slit_height().value()
                       / grating.distance().value();
        for (int n = -5; n <= 5; ++n)
        {
            auto rb = ring_bounds(n, he, p, grating);
            EXPECT_NEAR(width, rb.b_plus - rb.b_minus, 1e-14);
            EXPECT_GT(rb.b_plus, rb.b_minus);
        }
    }
}

TEST_F(KinematicsTest, window_argument_examples)
{
    auto p = proton(1);
    RecoilSetting zero;
    EmissionPoint center{Momentum{v0}, Momentum{0}};
    EXPECT_NEAR(0.0, window_argument(center, zero, 0, he, p, grating).value(),
                1e-15);

    EmissionPoint pt{Momentum{1.2}, Momentum{0.3}};
    double b0 = window_argument(pt, zero, 0, he, p, grating).value();
    double b1 = window_argument(pt, zero, 1, he, p, grating).value();
    EXPECT_NEAR(-0.05, b1 - b0, 1e-14);

    Projectile sideways(1, 1836, v0, Axis::x);
    EXPECT_THROW(window_argument(pt, zero, 0, he, sideways, grating),
                 DomainError);
}

TEST_F(KinematicsTest, window_support_equals_annulus)
{
    // Window > 0 iff B- <= (k_z - v)^2 + k_perp^2 <= B+, up to the
    // floating-point width of the boundary
    std::mt19937_64 rng(20260415);
    std::uniform_real_distribution<double> fdist(0.9, 1.15);
    std::uniform_real_distribution<double> kzdist(0.5, 2.2);
    std::uniform_real_distribution<double> kpdist(0.0, 0.8);
    std::uniform_int_distribution<int> ndist(-3, 8);
    double hw = window_half_width(grating.slit_height(), he, grating).value();

    int checked = 0;
    int inside = 0;
    for (int trial = 0; trial < 10000; ++trial)
    {
        auto p = proton(fdist(rng));
        EmissionPoint pt{Momentum{kzdist(rng)}, Momentum{kpdist(rng)}};
        int n = ndist(rng);
        double b = window_argument(pt, {}, n, he, p, grating).value();
        auto rb = ring_bounds(n, he, p, grating);
        double dz = pt.k_z.value() - p.velocity();
        double r2 = dz * dz + pt.k_perp.value() * pt.k_perp.value();

        // Skip points within rounding distance of an edge
        double margin = 1e-12 * (1 + std::abs(r2));
        if (std::abs(r2 - rb.b_minus) < margin
            || std::abs(r2 - rb.b_plus) < margin)
        {
            continue;
        }
        ++checked;
        bool in_window = window(b, hw) > 0;
        bool in_annulus = rb.b_minus <= r2 && r2 <= rb.b_plus;
        inside += in_window;
        EXPECT_EQ(in_annulus, in_window) << "trial " << trial;
    }
    EXPECT_GT(checked, 9990);
    EXPECT_GT(inside, 100);
}

TEST_F(KinematicsTest, visible_rings)
{
    // Momentum window k_z in [0.8, 1.9], k_perp in [0, 0.6]
    auto p = proton(1);
    double near = 0;
    double far = std::hypot(0.8 - v0, 0.6);
    auto rings = visible_rings(he, p, grating, near, far);
    ASSERT_FALSE(rings.empty());
    EXPECT_EQ(0, rings.front().order);
    EXPECT_TRUE(rings.front().is_disk());
    for (std::size_t i = 1; i < rings.size(); ++i)
    {
        EXPECT_EQ(rings[i - 1].order + 1, rings[i].order);
        EXPECT_FALSE(rings[i].is_disk());
    }
    EXPECT_LE(rings.back().b_minus, far * far);
    auto next = ring_bounds(rings.back().order + 1, he, p, grating);
    EXPECT_GT(next.b_minus, far * far);

    // Below confluence the low orders are empty
    auto slow = visible_rings(he, proton(0.93), grating, near, far);
    ASSERT_FALSE(slow.empty());
    EXPECT_EQ(2, slow.front().order);
    // Above confluence negative orders appear
    auto fast = visible_rings(he, proton(1.1), grating, near, far);
    ASSERT_FALSE(fast.empty());
    EXPECT_LT(fast.front().order, 0);
}

TEST_F(KinematicsTest, elastic_q_geometry)
{
    Projectile e(-1, 1, 4.69569, Axis::x);
    auto q0 = elastic_q(0, e);
    EXPECT_EQ(0.0, norm(q0));
    auto back = elastic_q(pi, e);
    EXPECT_NEAR(2 * 4.69569, back[0], 1e-12);
    EXPECT_NEAR(0.0, back[2], 1e-12);

    double theta = 0.0213;
    EXPECT_NEAR(-0.1, elastic_q(theta, e)[2], 5e-4);
    // |q| = 2 p sin(theta / 2)
    for (double t : {0.01, 0.3, 1.0, 2.5})
    {
        EXPECT_NEAR(2 * 4.69569 * std::sin(t / 2), norm(elastic_q(t, e)),
                    1e-12);
    }
    EXPECT_THROW(elastic_q(0.1, Projectile(-1, 1, 1, Axis::z)), DomainError);
}

//---------------------------------------------------------------------------//
}  // namespace
}  // namespace qgrating
